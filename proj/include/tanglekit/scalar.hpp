#ifndef TANGLEKIT_SCALAR_HPP
#define TANGLEKIT_SCALAR_HPP

#include <array>
#include <compare>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tanglekit/error.hpp"

namespace tanglekit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// The four Laurent variables of the coefficient ring, in canonical order.
/// v and w are the deformation parameters (w is the primed one); d and dp are
/// the two loop parameters of the blob family.
enum class Var : int { V = 0, W = 1, D = 2, Dp = 3 };

inline constexpr std::array<const char*, 4> kVarNames{"v", "w", "d", "dp"};

using ExpVec = std::array<int, 4>;

/// Exact multivariate Laurent polynomial over the rationals in v, w, d, dp.
///
/// Canonical form is maintained by construction: terms are keyed by exponent
/// vector in lexicographic order, coefficients are nonzero rationals in lowest
/// terms. Two scalars are equal iff their term maps are identical. Immutable
/// value type; all operations are pure.
class Scalar {
 public:
  Scalar() = default;                       // zero
  Scalar(long n);                           // integer constant
  explicit Scalar(const BigRat& q);         // rational constant

  static Scalar variable(Var v, int exponent = 1);
  static Scalar monomial(const BigRat& coeff, const ExpVec& exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const std::map<ExpVec, BigRat>& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Integer power. Negative exponents require a monomial base (Laurent
  /// inversion of a single term); anything else throws NotInvertible.
  Scalar pow(int e) const;

  /// Simultaneous substitution: every variable present in `bindings` is
  /// replaced by its image in one pass; variables inside the images are not
  /// substituted again. A negative exponent of a bound variable requires the
  /// image to be an invertible monomial.
  Scalar substituted(const std::map<Var, Scalar>& bindings) const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator<(const Scalar& o) const;

  /// Canonical text form: terms joined by " + ", each term an optional
  /// rational coefficient followed by variables with integer exponents,
  /// e.g. "1/2 v^-1 d^2". Zero prints "0".
  std::string str() const;

 private:
  void insert_term(const ExpVec& e, const BigRat& c);
  std::map<ExpVec, BigRat> terms_;
};

inline Scalar substitute(const Scalar& a, const std::map<Var, Scalar>& bindings) {
  return a.substituted(bindings);
}

/// The bracket [2] = v + v^-1.
Scalar two_bracket();

}  // namespace tanglekit

#endif
