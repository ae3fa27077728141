#ifndef TANGLEKIT_VERIFY_HPP
#define TANGLEKIT_VERIFY_HPP

#include "tanglekit/element.hpp"
#include "tanglekit/report.hpp"

namespace tanglekit {

/// Check every defining relation of the kind's presentation as an exact
/// element identity: the Temperley-Lieb relations for TL, the blob relations
/// for Blob, and the generalized Temperley-Lieb presentations of types B and
/// D with E_1 = 2 e~ (type B, at delta = [2], delta' = [2]/2) and E_s = e_s.
Report verify_presentation(const AlgebraKind& kind);

/// Compare basis enumeration against the closed-form dimension counts, per
/// admissibility class and in total, and against the generated span. For the
/// type-D family also checks the northwest-toggle pairing that halves the
/// blob diagram count.
Report verify_counts(const AlgebraKind& kind);

/// The blob <-> symmetric correspondence at rank n: round-trip bijection,
/// symmetric-diagram count, and multiplicativity of the generator map
/// e_i -> e_{n+i} e_{n-i}, e -> e_n / delta on all generator pairs (blob side
/// specialized to loop parameters delta^2 and 1).
Report verify_symmetric_embedding(int n);

}  // namespace tanglekit

#endif
