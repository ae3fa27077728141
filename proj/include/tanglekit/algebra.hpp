#ifndef TANGLEKIT_ALGEBRA_HPP
#define TANGLEKIT_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tanglekit/scalar.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

enum class AlgebraVariant { TL, Blob, TypeB, TypeD, DQuotient };

const char* to_string(AlgebraVariant v);
AlgebraVariant variant_from_string(const std::string& s);  // IllegalLetter on unknown

/// Which relation system governs reduction, at which rank, with which loop
/// parameters. TypeB diagrams live on rank+1 nodes per face; everything else
/// on rank nodes. delta_prime is carried for Blob and TypeB only.
class AlgebraKind {
 public:
  static AlgebraKind tl(int rank);
  static AlgebraKind blob(int rank);
  static AlgebraKind blob(int rank, Scalar delta, Scalar delta_prime);
  static AlgebraKind type_b(int rank);
  static AlgebraKind type_b(int rank, Scalar delta, Scalar delta_prime);
  static AlgebraKind type_d(int rank);
  static AlgebraKind d_quotient(int rank);

  AlgebraVariant variant() const { return variant_; }
  int rank() const { return rank_; }
  int node_count() const { return variant_ == AlgebraVariant::TypeB ? rank_ + 1 : rank_; }
  const Scalar& delta() const { return delta_; }
  const Scalar& delta_prime() const { return delta_prime_; }
  bool has_delta_prime() const {
    return variant_ == AlgebraVariant::Blob || variant_ == AlgebraVariant::TypeB;
  }

  bool operator==(const AlgebraKind& o) const = default;
  std::string str() const;

 private:
  AlgebraKind(AlgebraVariant v, int rank, Scalar delta, Scalar delta_prime);
  AlgebraVariant variant_;
  int rank_;
  Scalar delta_, delta_prime_;
};

enum class AdmissibilityClass { B1, B1prime, B2, D1, D2, TLPlain, BlobDiagram, NotBasis };

const char* to_string(AdmissibilityClass c);

struct Reduction {
  Scalar coeff;
  DecoratedTangle diagram;
};

/// Normalize a raw tangle to scalar x normal-form diagram under the kind's
/// relation system. The result does not depend on rule application order.
///
/// TL: no decorations allowed; every loop is a delta factor.
/// Blob/TypeB: decorations are idempotent (count >= 2 collapses to 1);
///   a plain loop is a delta factor, a decorated loop a delta' factor.
/// TypeD: decorations cancel in pairs (mod 2 on arcs and loops); even loops
///   are delta factors; of k >= 1 odd loops, k-1 are delta factors and one
///   once-decorated loop is kept, absorbing every arc decoration.
/// DQuotient: as TypeD, but a surviving decorated loop kills the element
///   (zero coefficient).
Reduction reduce(const DecoratedTangle& raw, const AlgebraKind& kind);

/// Basis-membership classification of a reduced diagram. Total: anything
/// out of contract is NotBasis.
AdmissibilityClass classify(const DecoratedTangle& d, const AlgebraKind& kind);

/// All basis diagrams of the kind, canonically ordered.
std::vector<DecoratedTangle> enumerate_basis(const AlgebraKind& kind);

std::map<AdmissibilityClass, std::int64_t> count_by_class(const AlgebraKind& kind);

BigInt binomial(int n, int k);
BigInt catalan(int n);

}  // namespace tanglekit

#endif
