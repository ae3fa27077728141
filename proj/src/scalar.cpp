#include "tanglekit/scalar.hpp"

#include <sstream>

namespace tanglekit {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::Crossing: return "Crossing";
    case Errc::DecorationNotExposed: return "DecorationNotExposed";
    case Errc::OddNodeTotal: return "OddNodeTotal";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnknownArc: return "UnknownArc";
    case Errc::FaceMismatch: return "FaceMismatch";
    case Errc::NotBlobLike: return "NotBlobLike";
    case Errc::DecoratedInputForTL: return "DecoratedInputForTL";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::IllegalLetter: return "IllegalLetter";
    case Errc::NotInBasis: return "NotInBasis";
    case Errc::ConditionFailed: return "ConditionFailed";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotPlainTL: return "NotPlainTL";
    case Errc::NotBlobDiagram: return "NotBlobDiagram";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::CorruptTable: return "CorruptTable";
    case Errc::NotInvertible: return "NotInvertible";
  }
  return "UnknownError";
}

Scalar::Scalar(long n) {
  if (n != 0) terms_.emplace(ExpVec{0, 0, 0, 0}, BigRat(n));
}

Scalar::Scalar(const BigRat& q) {
  if (q != 0) terms_.emplace(ExpVec{0, 0, 0, 0}, q);
}

Scalar Scalar::variable(Var v, int exponent) {
  Scalar s;
  ExpVec e{0, 0, 0, 0};
  e[static_cast<int>(v)] = exponent;
  s.terms_.emplace(e, BigRat(1));
  return s;
}

Scalar Scalar::monomial(const BigRat& coeff, const ExpVec& exps) {
  Scalar s;
  if (coeff != 0) s.terms_.emplace(exps, coeff);
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{0, 0, 0, 0} &&
         terms_.begin()->second == 1;
}

void Scalar::insert_term(const ExpVec& e, const BigRat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::map<ExpVec, BigRat> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return Scalar(1);
  if (e < 0) {
    if (!is_monomial())
      fail(Errc::NotInvertible, "negative power of a non-monomial: " + str());
    const auto& [exps, coeff] = *terms_.begin();
    ExpVec inv{-exps[0], -exps[1], -exps[2], -exps[3]};
    return monomial(BigRat(1) / coeff, inv).pow(-e);
  }
  Scalar acc(1);
  Scalar base(*this);
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    if (k > 1) base *= base;
  }
  return acc;
}

Scalar Scalar::substituted(const std::map<Var, Scalar>& bindings) const {
  Scalar out;
  for (const auto& [exps, coeff] : terms_) {
    Scalar term{Scalar(coeff)};
    for (int v = 0; v < 4; ++v) {
      if (exps[v] == 0) continue;
      auto it = bindings.find(static_cast<Var>(v));
      if (it == bindings.end()) {
        ExpVec e{0, 0, 0, 0};
        e[v] = exps[v];
        term *= monomial(BigRat(1), e);
      } else {
        term *= it->second.pow(exps[v]);
      }
    }
    out += term;
  }
  return out;
}

bool Scalar::operator<(const Scalar& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [exps, coeff] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    bool has_var = exps != ExpVec{0, 0, 0, 0};
    bool wrote = false;
    if (!has_var || coeff != 1) {
      os << coeff;
      wrote = true;
    }
    for (int v = 0; v < 4; ++v) {
      if (exps[v] == 0) continue;
      if (wrote) os << ' ';
      os << kVarNames[v];
      if (exps[v] != 1) os << '^' << exps[v];
      wrote = true;
    }
  }
  return os.str();
}

Scalar two_bracket() {
  return Scalar::variable(Var::V, 1) + Scalar::variable(Var::V, -1);
}

}  // namespace tanglekit
