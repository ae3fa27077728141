#include "tanglekit/io.hpp"

#include <fstream>
#include <sstream>

namespace tanglekit {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  json terms = json::array();
  for (const auto& [exps, coeff] : s.terms()) {
    json pows = json::object();
    for (int v = 0; v < 4; ++v)
      if (exps[v] != 0) pows[kVarNames[v]] = exps[v];
    terms.push_back({{"num", numerator(coeff).str()},
                     {"den", denominator(coeff).str()},
                     {"pows", pows}});
  }
  return terms;
}

Scalar scalar_from_json(const json& j) {
  Scalar out;
  for (const auto& term : j) {
    BigInt num(term.at("num").get<std::string>());
    BigInt den(term.at("den").get<std::string>());
    ExpVec exps{0, 0, 0, 0};
    for (auto it = term.at("pows").begin(); it != term.at("pows").end(); ++it) {
      int v = -1;
      for (int k = 0; k < 4; ++k)
        if (it.key() == kVarNames[k]) v = k;
      if (v < 0) fail(Errc::CorruptTable, "unknown variable '" + it.key() + "'");
      exps[v] = it.value().get<int>();
    }
    out += Scalar::monomial(BigRat(num, den), exps);
  }
  return out;
}

json kind_to_json(const AlgebraKind& kind) {
  json params{{"delta", scalar_to_json(kind.delta())}};
  if (kind.has_delta_prime()) params["delta_prime"] = scalar_to_json(kind.delta_prime());
  return {{"variant", to_string(kind.variant())}, {"rank", kind.rank()}, {"params", params}};
}

AlgebraKind kind_from_json(const json& j) {
  AlgebraVariant v = variant_from_string(j.at("variant").get<std::string>());
  int rank = j.at("rank").get<int>();
  Scalar delta = scalar_from_json(j.at("params").at("delta"));
  switch (v) {
    case AlgebraVariant::TL: {
      AlgebraKind k = AlgebraKind::tl(rank);
      if (!(k.delta() == delta)) fail(Errc::CorruptTable, "TL delta is fixed");
      return k;
    }
    case AlgebraVariant::Blob:
      return AlgebraKind::blob(rank, delta,
                               scalar_from_json(j.at("params").at("delta_prime")));
    case AlgebraVariant::TypeB:
      return AlgebraKind::type_b(rank, delta,
                                 scalar_from_json(j.at("params").at("delta_prime")));
    case AlgebraVariant::TypeD: {
      AlgebraKind k = AlgebraKind::type_d(rank);
      if (!(k.delta() == delta)) fail(Errc::CorruptTable, "TypeD delta is fixed");
      return k;
    }
    case AlgebraVariant::DQuotient: {
      AlgebraKind k = AlgebraKind::d_quotient(rank);
      if (!(k.delta() == delta)) fail(Errc::CorruptTable, "DQuotient delta is fixed");
      return k;
    }
  }
  fail(Errc::CorruptTable, "bad kind");
}

DecoratedTangle tangle_from_text(const std::string& text) {
  auto bad = [&]() -> void { fail(Errc::CorruptTable, "bad tangle text '" + text + "'"); };
  size_t bar = text.find('|');
  size_t sep = text.find(" :: ");
  size_t loops_at = text.find(" ;loops:");
  if (bar == std::string::npos || sep == std::string::npos || loops_at == std::string::npos)
    bad();
  int n_north = 0, n_south = 0;
  try {
    n_north = std::stoi(text.substr(0, bar));
    n_south = std::stoi(text.substr(bar + 1, sep - bar - 1));
  } catch (const std::exception&) {
    bad();
  }

  auto parse_node = [&](const std::string& tok) -> NodeRef {
    if (tok.size() < 2 || (tok[0] != 'N' && tok[0] != 'S')) bad();
    return {tok[0] == 'N' ? Face::North : Face::South, std::stoi(tok.substr(1))};
  };

  std::vector<ArcSpec> arcs;
  std::string arc_part = text.substr(sep + 4, loops_at - sep - 4);
  std::istringstream as(arc_part);
  std::string tok;
  while (std::getline(as, tok, ',')) {
    if (tok.empty()) continue;
    int dec = 0;
    while (!tok.empty() && tok.back() == '*') {
      ++dec;
      tok.pop_back();
    }
    size_t dash = tok.find('-');
    if (dash == std::string::npos) bad();
    arcs.push_back({parse_node(tok.substr(0, dash)), parse_node(tok.substr(dash + 1)), dec});
  }

  std::vector<int> loops;
  std::string loop_part = text.substr(loops_at + 8);
  if (loop_part != "-") {
    std::istringstream ls(loop_part);
    while (std::getline(ls, tok, ',')) loops.push_back(std::stoi(tok));
  }
  return DecoratedTangle::make(n_north, n_south, arcs, loops);
}

std::string param_hash(const AlgebraKind& kind) {
  std::string payload = std::string(to_string(kind.variant())) + "|" +
                        std::to_string(kind.rank()) + "|" + kind.delta().str() + "|" +
                        (kind.has_delta_prime() ? kind.delta_prime().str() : "-") + "|v" +
                        std::to_string(kTableFormatVersion);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json table_to_json(const StructureTable& t) {
  json basis = json::array();
  for (const auto& d : t.basis) basis.push_back(d.str());
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"coeff", scalar_to_json(e.coeff)}});
  json j = kind_to_json(t.kind);
  j["format_version"] = kTableFormatVersion;
  j["param_hash"] = param_hash(t.kind);
  j["basis"] = basis;
  j["entries"] = entries;
  return j;
}

StructureTable table_from_json(const json& j) {
  if (!j.contains("format_version") ||
      j.at("format_version").get<int>() != kTableFormatVersion)
    fail(Errc::CorruptTable, "format version mismatch");
  AlgebraKind kind = kind_from_json(j);
  if (j.at("param_hash").get<std::string>() != param_hash(kind))
    fail(Errc::CorruptTable, "parameter hash mismatch");

  StructureTable t{kind, {}, {}};
  for (const auto& b : j.at("basis")) t.basis.push_back(tangle_from_text(b.get<std::string>()));
  for (const auto& e : j.at("entries"))
    t.entries.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                         scalar_from_json(e.at("coeff"))});
  return t;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"id", c.id}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  return {{"suite", r.suite}, {"rank", r.rank}, {"checks", checks}, {"overall", r.overall()}};
}

void save_table(const StructureTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::CorruptTable, "cannot write " + path);
  out << table_to_json(t).dump(2) << "\n";
}

StructureTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::CorruptTable, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::CorruptTable, e.what());
  }
  return table_from_json(j);
}

}  // namespace tanglekit
