#include "doctest.h"

#include "tanglekit/tangle.hpp"

#include "support.hpp"

using namespace tanglekit;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TangleError& e) {
    return e.code();
  }
  FAIL("expected a TangleError");
  return Errc::NotAMatching;
}

}  // namespace

TEST_CASE("construction and named tangles") {
  CHECK(identity_tangle(3) ==
        DecoratedTangle::make(3, 3, {{N(1), S(1)}, {N(2), S(2)}, {N(3), S(3)}}));

  // e_bar1 in DT_6: e_1 with both non-propagating arcs decorated.
  std::vector<ArcSpec> arcs{{N(1), N(2), 1}, {S(1), S(2), 1}};
  for (int k = 3; k <= 6; ++k) arcs.push_back({N(k), S(k), 0});
  CHECK(DecoratedTangle::make(6, 6, arcs) == generator_e_bar1(6));

  DecoratedTangle e6 = generator_e(6);
  CHECK(e6.arcs().size() == 6);
  CHECK(e6.decoration_total() == 1);
  CHECK(e6.west_exposed(N(1), S(1)));

  DecoratedTangle e2 = generator_e_i(2, 6);
  // The propagating N1-S1 strand walls off the N2-N3 arc.
  CHECK(!e2.west_exposed(N(2), N(3)));
  CHECK(e2.has_non_propagating_arc());

  CHECK_THROWS_AS(generator_e_i(6, 6), TangleError);
  CHECK_THROWS_AS(generator_e_bar1(1), TangleError);
}

TEST_CASE("validation errors") {
  CHECK(code_of([] {
          DecoratedTangle::make(2, 2, {{N(1), S(1)}, {N(2), S(2), 1}});
        }) == Errc::DecorationNotExposed);
  CHECK(code_of([] { DecoratedTangle::make(2, 2, {{N(1), S(1)}, {N(1), S(2)}}); }) ==
        Errc::NotAMatching);
  CHECK(code_of([] { DecoratedTangle::make(2, 2, {{N(1), S(1)}}); }) == Errc::NotAMatching);
  CHECK(code_of([] {
          DecoratedTangle::make(2, 2, {{N(1), S(2)}, {N(2), S(1)}});
        }) == Errc::Crossing);
  CHECK(code_of([] { DecoratedTangle::make(2, 1, {}); }) == Errc::OddNodeTotal);
}

TEST_CASE("west exposure") {
  CHECK(generator_e(4).west_exposed(N(1), S(1)));
  CHECK(!identity_tangle(2).west_exposed(N(2), S(2)));
  CHECK(generator_e_i(1, 4).west_exposed(N(1), N(2)));
  CHECK_THROWS_AS(identity_tangle(2).west_exposed(N(1), S(2)), TangleError);
  // An arc touching either end of the linearized boundary is always exposed.
  for (const auto& m : enumerate_matchings(3, 3)) {
    CHECK(m.west_exposed(m.arcs()[m.arc_at(1)]));
    CHECK(m.west_exposed(m.arcs()[m.arc_at(m.total_nodes())]));
  }
}

TEST_CASE("noncrossing validator agrees with the pairwise oracle") {
  for (int total = 2; total <= 10; total += 2) {
    std::vector<std::vector<std::pair<int, int>>> ms;
    testing::all_matchings(total, ms);
    int accepted = 0;
    for (const auto& m : ms) {
      std::vector<DecoratedTangle::Arc> arcs;
      for (auto [a, b] : m) arcs.push_back({std::min(a, b), std::max(a, b), 0});
      bool ok = true;
      try {
        DecoratedTangle::from_positions(total / 2, total / 2, arcs, {});
      } catch (const TangleError& e) {
        REQUIRE(e.code() == Errc::Crossing);
        ok = false;
      }
      CHECK(ok == testing::noncrossing_oracle(m));
      accepted += ok;
    }
    CHECK(accepted == static_cast<int>(catalan(total / 2)));
  }
}

TEST_CASE("concatenation traces strands and loops") {
  // e_1 e_1 in DT_2: e_1 again plus one undecorated loop.
  DecoratedTangle e1 = generator_e_i(1, 2);
  DecoratedTangle sq = concatenate(e1, e1);
  CHECK(sq == DecoratedTangle::make(2, 2, {{N(1), N(2)}, {S(1), S(2)}}, {0}));

  // e e_1 in DT_2: the decoration migrates onto the north arc.
  DecoratedTangle prod = concatenate(generator_e(2), e1);
  CHECK(prod == DecoratedTangle::make(2, 2, {{N(1), N(2), 1}, {S(1), S(2), 0}}));

  testing::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    DecoratedTangle t = testing::random_raw_tangle(AlgebraKind::blob(4), rng);
    CHECK(concatenate(identity_tangle(4), t) == t);
    CHECK(concatenate(t, identity_tangle(4)) == t);
  }

  CHECK_THROWS_AS(concatenate(identity_tangle(2), identity_tangle(3)), TangleError);
}

TEST_CASE("concatenation preserves total decoration count") {
  testing::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    DecoratedTangle a = testing::random_raw_tangle(AlgebraKind::blob(4), rng);
    DecoratedTangle b = testing::random_raw_tangle(AlgebraKind::blob(4), rng);
    DecoratedTangle c = concatenate(a, b);
    CHECK(c.decoration_total() == a.decoration_total() + b.decoration_total());
  }
}

TEST_CASE("raw concatenation is associative") {
  testing::Rng rng(29);
  for (int i = 0; i < 120; ++i) {
    DecoratedTangle a = testing::random_raw_tangle(AlgebraKind::blob(3), rng);
    DecoratedTangle b = testing::random_raw_tangle(AlgebraKind::blob(3), rng);
    DecoratedTangle c = testing::random_raw_tangle(AlgebraKind::blob(3), rng);
    CHECK(concatenate(concatenate(a, b), c) == concatenate(a, concatenate(b, c)));
  }
}

TEST_CASE("matching enumeration") {
  CHECK(enumerate_matchings(3, 3).size() == 5);
  CHECK(enumerate_matchings(1, 1).size() == 1);
  CHECK(enumerate_matchings(2, 4).size() == 5);
  auto ms = enumerate_matchings(4, 4);
  CHECK(ms.size() == 14);
  CHECK(std::is_sorted(ms.begin(), ms.end()));
  CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
  CHECK_THROWS_AS(enumerate_matchings(2, 3), TangleError);
}

TEST_CASE("northwest toggle") {
  DecoratedTangle id2 = identity_tangle(2);
  DecoratedTangle t = toggle_nw(id2);
  CHECK(t == DecoratedTangle::make(2, 2, {{N(1), S(1), 1}, {N(2), S(2)}}));
  CHECK(toggle_nw(t) == id2);
  CHECK(toggle_nw(generator_e(2)) == id2);

  testing::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    DecoratedTangle raw = testing::random_raw_tangle(AlgebraKind::blob(4), rng);
    std::vector<DecoratedTangle::Arc> arcs = raw.arcs();
    for (auto& a : arcs) a.dec = std::min(a.dec, 1);
    DecoratedTangle b = DecoratedTangle::from_positions(4, 4, arcs, {});
    DecoratedTangle tb = toggle_nw(b);
    CHECK(toggle_nw(tb) == b);
    CHECK(std::abs(tb.decoration_total() - b.decoration_total()) == 1);
  }

  CHECK_THROWS_AS(toggle_nw(DecoratedTangle::make(2, 2, {{N(1), S(1), 2}, {N(2), S(2)}})),
                  TangleError);
  std::vector<ArcSpec> id_arcs{{N(1), S(1)}, {N(2), S(2)}};
  CHECK_THROWS_AS(toggle_nw(DecoratedTangle::make(2, 2, id_arcs, {0})), TangleError);
}

TEST_CASE("canonical text form is byte-stable") {
  CHECK(identity_tangle(3).str() == "3|3 :: N1-S1,N2-S2,N3-S3 ;loops:-");
  CHECK(generator_e_i(1, 3).str() == "3|3 :: N1-N2,S1-S2,N3-S3 ;loops:-");
  CHECK(generator_e(3).str() == "3|3 :: N1-S1*,N2-S2,N3-S3 ;loops:-");
  CHECK(generator_e_bar1(2).str() == "2|2 :: N1-N2*,S1-S2* ;loops:-");
  CHECK(DecoratedTangle::make(2, 2, {{N(1), N(2)}, {S(1), S(2)}}, {0, 2}).str() ==
        "2|2 :: N1-N2,S1-S2 ;loops:0,2");
  CHECK(enumerate_matchings(2, 4)[0].str() != enumerate_matchings(2, 4)[1].str());
}

TEST_CASE("positions round trip") {
  DecoratedTangle t = identity_tangle(4);
  for (int p = 1; p <= 8; ++p) CHECK(t.position(t.node_at(p)) == p);
  CHECK(t.position(N(1)) == 1);
  CHECK(t.position(S(1)) == 8);
  CHECK_THROWS_AS(t.position(N(5)), TangleError);
}
