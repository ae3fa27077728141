#ifndef TANGLEKIT_SYMMETRIC_HPP
#define TANGLEKIT_SYMMETRIC_HPP

#include "tanglekit/tangle.hpp"

namespace tanglekit {

/// True iff the tangle is fixed by the left-right mirror N_i <-> N_{m+1-i},
/// S_j <-> S_{m+1-j} (decoration counts included).
bool left_right_symmetric(const DecoratedTangle& t);

/// tom Dieck's symmetric representation: a rank-n blob diagram (loop-free,
/// decorations <= 1) becomes a left-right symmetric plain diagram on 2n
/// strands. Original node X_i sits at X_{n+i}, its mirror at X_{n+1-i};
/// undecorated arcs are copied and mirrored, each decorated arc is broken at
/// the wall, every broken end joining its own mirror image.
DecoratedTangle to_symmetric(const DecoratedTangle& blob_diagram);

/// Inverse of to_symmetric on left-right symmetric plain diagrams of even
/// strand count. Throws NotSymmetric.
DecoratedTangle from_symmetric(const DecoratedTangle& sym);

}  // namespace tanglekit

#endif
