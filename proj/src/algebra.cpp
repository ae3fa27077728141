#include "tanglekit/algebra.hpp"

#include <algorithm>

namespace tanglekit {

const char* to_string(AlgebraVariant v) {
  switch (v) {
    case AlgebraVariant::TL: return "TL";
    case AlgebraVariant::Blob: return "Blob";
    case AlgebraVariant::TypeB: return "TypeB";
    case AlgebraVariant::TypeD: return "TypeD";
    case AlgebraVariant::DQuotient: return "DQuotient";
  }
  return "?";
}

AlgebraVariant variant_from_string(const std::string& s) {
  if (s == "TL" || s == "tl") return AlgebraVariant::TL;
  if (s == "Blob" || s == "blob") return AlgebraVariant::Blob;
  if (s == "TypeB" || s == "typeB" || s == "typeb") return AlgebraVariant::TypeB;
  if (s == "TypeD" || s == "typeD" || s == "typed") return AlgebraVariant::TypeD;
  if (s == "DQuotient" || s == "dquotient" || s == "dq") return AlgebraVariant::DQuotient;
  fail(Errc::IllegalLetter, "unknown algebra '" + s + "'");
}

const char* to_string(AdmissibilityClass c) {
  switch (c) {
    case AdmissibilityClass::B1: return "B1";
    case AdmissibilityClass::B1prime: return "B1prime";
    case AdmissibilityClass::B2: return "B2";
    case AdmissibilityClass::D1: return "D1";
    case AdmissibilityClass::D2: return "D2";
    case AdmissibilityClass::TLPlain: return "TLPlain";
    case AdmissibilityClass::BlobDiagram: return "BlobDiagram";
    case AdmissibilityClass::NotBasis: return "NotBasis";
  }
  return "?";
}

AlgebraKind::AlgebraKind(AlgebraVariant v, int rank, Scalar delta, Scalar delta_prime)
    : variant_(v), rank_(rank), delta_(std::move(delta)), delta_prime_(std::move(delta_prime)) {
  int min_rank = 1;
  if (v == AlgebraVariant::TypeD || v == AlgebraVariant::DQuotient) min_rank = 2;
  if (rank_ < min_rank) fail(Errc::IndexOutOfRange, "rank " + std::to_string(rank_));
}

AlgebraKind AlgebraKind::tl(int rank) {
  return {AlgebraVariant::TL, rank, Scalar::variable(Var::D), Scalar()};
}

AlgebraKind AlgebraKind::blob(int rank) {
  return {AlgebraVariant::Blob, rank, Scalar::variable(Var::D), Scalar::variable(Var::Dp)};
}

AlgebraKind AlgebraKind::blob(int rank, Scalar delta, Scalar delta_prime) {
  return {AlgebraVariant::Blob, rank, std::move(delta), std::move(delta_prime)};
}

AlgebraKind AlgebraKind::type_b(int rank) {
  Scalar half{BigRat(1, 2)};
  return {AlgebraVariant::TypeB, rank, two_bracket(), half * two_bracket()};
}

AlgebraKind AlgebraKind::type_b(int rank, Scalar delta, Scalar delta_prime) {
  return {AlgebraVariant::TypeB, rank, std::move(delta), std::move(delta_prime)};
}

AlgebraKind AlgebraKind::type_d(int rank) {
  return {AlgebraVariant::TypeD, rank, two_bracket(), Scalar()};
}

AlgebraKind AlgebraKind::d_quotient(int rank) {
  return {AlgebraVariant::DQuotient, rank, two_bracket(), Scalar()};
}

std::string AlgebraKind::str() const {
  std::string s = std::string(to_string(variant_)) + "(" + std::to_string(rank_) + ")";
  return s;
}

Reduction reduce(const DecoratedTangle& raw, const AlgebraKind& kind) {
  const int nodes = kind.node_count();
  if (raw.north_count() != nodes || raw.south_count() != nodes)
    fail(Errc::FaceMismatch, raw.str() + " in " + kind.str());

  std::vector<DecoratedTangle::Arc> arcs = raw.arcs();
  Scalar coeff(1);
  std::vector<int> kept_loops;

  switch (kind.variant()) {
    case AlgebraVariant::TL: {
      for (const auto& a : arcs)
        if (a.dec != 0) fail(Errc::DecoratedInputForTL, raw.str());
      for (int c : raw.loops()) {
        if (c != 0) fail(Errc::DecoratedInputForTL, raw.str());
        coeff *= kind.delta();
      }
      break;
    }
    case AlgebraVariant::Blob:
    case AlgebraVariant::TypeB: {
      for (auto& a : arcs) a.dec = std::min(a.dec, 1);
      for (int c : raw.loops()) coeff *= (c == 0 ? kind.delta() : kind.delta_prime());
      break;
    }
    case AlgebraVariant::TypeD:
    case AlgebraVariant::DQuotient: {
      for (auto& a : arcs) a.dec %= 2;
      int odd = 0;
      for (int c : raw.loops()) {
        if (c % 2 == 0)
          coeff *= kind.delta();
        else
          ++odd;
      }
      if (odd > 0) {
        coeff *= kind.delta().pow(odd - 1);
        for (auto& a : arcs) a.dec = 0;
        if (kind.variant() == AlgebraVariant::DQuotient)
          coeff = Scalar();
        else
          kept_loops.push_back(1);
      }
      break;
    }
  }

  return {std::move(coeff), DecoratedTangle::from_positions(nodes, nodes, std::move(arcs),
                                                            std::move(kept_loops))};
}

AdmissibilityClass classify(const DecoratedTangle& d, const AlgebraKind& kind) {
  const int nodes = kind.node_count();
  if (d.north_count() != nodes || d.south_count() != nodes) return AdmissibilityClass::NotBasis;

  switch (kind.variant()) {
    case AlgebraVariant::TL:
      if (d.loop_free() && d.arcs_undecorated()) return AdmissibilityClass::TLPlain;
      return AdmissibilityClass::NotBasis;

    case AlgebraVariant::Blob:
      if (d.loop_free() && d.max_arc_decoration() <= 1) return AdmissibilityClass::BlobDiagram;
      return AdmissibilityClass::NotBasis;

    case AlgebraVariant::TypeB: {
      if (!d.loop_free() || d.max_arc_decoration() > 1) return AdmissibilityClass::NotBasis;
      const auto& arcs = d.arcs();
      int at_n1 = d.arc_at(1);                   // node 1, north face
      int at_s1 = d.arc_at(d.total_nodes());     // node 1, south face
      if (at_n1 == at_s1) {
        // Node 1 north joined to node 1 south.
        int others = 0;
        for (size_t i = 0; i < arcs.size(); ++i)
          if (arcs[i].dec > 0 && static_cast<int>(i) != at_n1) ++others;
        if (arcs[at_n1].dec == 0)
          return others == 0 ? AdmissibilityClass::B1 : AdmissibilityClass::NotBasis;
        if (others == 0 && d.has_non_propagating_arc()) return AdmissibilityClass::B1prime;
        return AdmissibilityClass::NotBasis;
      }
      if (arcs[at_n1].dec == 1 && arcs[at_s1].dec == 1) return AdmissibilityClass::B2;
      return AdmissibilityClass::NotBasis;
    }

    case AlgebraVariant::TypeD: {
      if (d.max_arc_decoration() > 1) return AdmissibilityClass::NotBasis;
      if (!d.loop_free()) {
        if (d.loops() == std::vector<int>{1} && d.arcs_undecorated() &&
            d.has_non_propagating_arc())
          return AdmissibilityClass::D1;
        return AdmissibilityClass::NotBasis;
      }
      if (d.decoration_total() % 2 == 0) return AdmissibilityClass::D2;
      return AdmissibilityClass::NotBasis;
    }

    case AlgebraVariant::DQuotient: {
      if (d.loop_free() && d.max_arc_decoration() <= 1 && d.decoration_total() % 2 == 0)
        return AdmissibilityClass::D2;
      return AdmissibilityClass::NotBasis;
    }
  }
  return AdmissibilityClass::NotBasis;
}

namespace {

// All 0/1 decoration assignments on the west-exposed arcs of a matching.
void decorated_variants(const DecoratedTangle& m, std::vector<DecoratedTangle>& out) {
  std::vector<int> exposed;
  const auto& arcs = m.arcs();
  for (size_t i = 0; i < arcs.size(); ++i)
    if (m.west_exposed(arcs[i])) exposed.push_back(static_cast<int>(i));
  for (unsigned mask = 0; mask < (1u << exposed.size()); ++mask) {
    std::vector<DecoratedTangle::Arc> arcs2 = arcs;
    for (size_t b = 0; b < exposed.size(); ++b)
      if (mask & (1u << b)) arcs2[exposed[b]].dec = 1;
    out.push_back(DecoratedTangle::from_positions(m.north_count(), m.south_count(),
                                                  std::move(arcs2), {}));
  }
}

std::vector<DecoratedTangle> blob_diagrams(int n) {
  std::vector<DecoratedTangle> out;
  for (const auto& m : enumerate_matchings(n, n)) decorated_variants(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DecoratedTangle> enumerate_basis(const AlgebraKind& kind) {
  const int nodes = kind.node_count();
  std::vector<DecoratedTangle> out;
  switch (kind.variant()) {
    case AlgebraVariant::TL:
      out = enumerate_matchings(nodes, nodes);
      break;
    case AlgebraVariant::Blob:
      out = blob_diagrams(nodes);
      break;
    case AlgebraVariant::TypeB: {
      for (const auto& d : blob_diagrams(nodes))
        if (classify(d, kind) != AdmissibilityClass::NotBasis) out.push_back(d);
      break;
    }
    case AlgebraVariant::TypeD: {
      for (const auto& d : blob_diagrams(nodes))
        if (d.decoration_total() % 2 == 0) out.push_back(d);
      for (const auto& m : enumerate_matchings(nodes, nodes))
        if (m.has_non_propagating_arc())
          out.push_back(
              DecoratedTangle::from_positions(nodes, nodes, m.arcs(), std::vector<int>{1}));
      std::sort(out.begin(), out.end());
      break;
    }
    case AlgebraVariant::DQuotient: {
      for (const auto& d : blob_diagrams(nodes))
        if (d.decoration_total() % 2 == 0) out.push_back(d);
      break;
    }
  }
  return out;
}

std::map<AdmissibilityClass, std::int64_t> count_by_class(const AlgebraKind& kind) {
  std::map<AdmissibilityClass, std::int64_t> counts;
  for (const auto& d : enumerate_basis(kind)) ++counts[classify(d, kind)];
  return counts;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace tanglekit
