#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "tanglekit/io.hpp"

#include "support.hpp"

using namespace tanglekit;
using nlohmann::json;

TEST_CASE("scalar serialization round trip") {
  testing::Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    Scalar s = testing::random_scalar(rng);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  json j = scalar_to_json(Scalar(BigRat(1, 2)) * Scalar::variable(Var::V, -1));
  CHECK(j[0]["num"] == "1");
  CHECK(j[0]["den"] == "2");
  CHECK(j[0]["pows"]["v"] == -1);
}

TEST_CASE("tangle text round trip") {
  testing::Rng rng(73);
  for (int i = 0; i < 60; ++i) {
    DecoratedTangle t = testing::random_raw_tangle(AlgebraKind::blob(4), rng);
    CHECK(tangle_from_text(t.str()) == t);
  }
  CHECK(tangle_from_text("3|3 :: N1-N2,S1-S2,N3-S3 ;loops:-") == generator_e_i(1, 3));
  CHECK_THROWS_AS(tangle_from_text("nonsense"), TangleError);
}

TEST_CASE("kind serialization round trip") {
  for (const AlgebraKind& kind :
       {AlgebraKind::tl(4), AlgebraKind::blob(3), AlgebraKind::type_b(2),
        AlgebraKind::type_d(4), AlgebraKind::d_quotient(5),
        AlgebraKind::blob(3, two_bracket(), Scalar(1))}) {
    CHECK(kind_from_json(kind_to_json(kind)) == kind);
  }
}

TEST_CASE("table persistence") {
  StructureTable t = structure_constants(AlgebraKind::type_b(2));
  const std::string path = "/tmp/tanglekit_test_table.json";
  save_table(t, path);
  StructureTable back = load_table(path);
  CHECK(back == t);
  CHECK(back == structure_constants(AlgebraKind::type_b(2)));

  SUBCASE("edited parameter hash is rejected") {
    json j = table_to_json(t);
    j["param_hash"] = "deadbeef";
    std::ofstream(path) << j.dump();
    try {
      load_table(path);
      FAIL("expected CorruptTable");
    } catch (const TangleError& e) {
      CHECK(e.code() == Errc::CorruptTable);
    }
  }

  SUBCASE("version mismatch is rejected") {
    json j = table_to_json(t);
    j["format_version"] = 999;
    std::ofstream(path) << j.dump();
    try {
      load_table(path);
      FAIL("expected CorruptTable");
    } catch (const TangleError& e) {
      CHECK(e.code() == Errc::CorruptTable);
    }
  }

  SUBCASE("truncated file is rejected") {
    std::ofstream(path) << "{\"kind\": ";
    CHECK_THROWS_AS(load_table(path), TangleError);
  }
  std::remove(path.c_str());
}

TEST_CASE("table export is sorted and sparse") {
  StructureTable t = structure_constants(AlgebraKind::tl(4));
  json j = table_to_json(t);
  CHECK(j["basis"].size() == 14);
  auto& entries = j["entries"];
  for (size_t i = 1; i < entries.size(); ++i) {
    auto a = std::tuple(entries[i - 1]["i"].get<int>(), entries[i - 1]["j"].get<int>());
    auto b = std::tuple(entries[i]["i"].get<int>(), entries[i]["j"].get<int>());
    CHECK(a < b);
  }
  StructureTable dq = structure_constants(AlgebraKind::d_quotient(3));
  CHECK(table_to_json(dq)["entries"].size() == dq.entries.size());
  CHECK(dq.entries.size() < dq.basis.size() * dq.basis.size());
}

TEST_CASE("report serialization") {
  Report r;
  r.suite = "demo";
  r.rank = 3;
  r.add("a", "1", "1");
  r.add("b", "2", "3");
  json j = report_to_json(r);
  CHECK(j["overall"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["pass"] == false);
}
