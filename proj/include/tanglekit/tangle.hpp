#ifndef TANGLEKIT_TANGLE_HPP
#define TANGLEKIT_TANGLE_HPP

#include <compare>
#include <string>
#include <vector>

#include "tanglekit/error.hpp"

namespace tanglekit {

enum class Face { North, South };

/// A boundary node named by face and 1-based index; node 1 is at the western
/// end of its face.
struct NodeRef {
  Face face;
  int index;
  auto operator<=>(const NodeRef&) const = default;
};

inline NodeRef N(int i) { return {Face::North, i}; }
inline NodeRef S(int i) { return {Face::South, i}; }

struct ArcSpec {
  NodeRef a;
  NodeRef b;
  int decorations = 0;
};

/// A crossing-free decorated tangle: a noncrossing perfect matching of the
/// boundary nodes, a decoration count per arc (nonzero only on west-exposed
/// arcs), and a multiset of closed loops recorded by decoration count alone.
///
/// The boundary is linearized by cutting at the west face:
/// position(N_i) = i, position(S_j) = n_north + n_south + 1 - j. In this
/// order "noncrossing" is the usual nesting condition and "west-exposed"
/// means not nested under any other arc. Canonical form: arcs sorted by
/// smaller endpoint position, loop counts ascending. Immutable value type.
class DecoratedTangle {
 public:
  struct Arc {
    int lo, hi;  // boundary positions, lo < hi
    int dec;
    auto operator<=>(const Arc&) const = default;
  };

  static DecoratedTangle make(int n_north, int n_south, const std::vector<ArcSpec>& arcs,
                              const std::vector<int>& loops = {});

  /// Same validation as make(), arcs given directly in boundary positions.
  static DecoratedTangle from_positions(int n_north, int n_south, std::vector<Arc> arcs,
                                        std::vector<int> loops);

  int north_count() const { return north_; }
  int south_count() const { return south_; }
  int total_nodes() const { return north_ + south_; }

  int position(NodeRef n) const;
  NodeRef node_at(int position) const;

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& loops() const { return loops_; }

  /// Index into arcs() of the arc containing a boundary position.
  int arc_at(int position) const;

  bool propagating(const Arc& a) const { return a.lo <= north_ && a.hi > north_; }
  bool has_non_propagating_arc() const;

  bool west_exposed(const Arc& a) const;
  bool west_exposed(NodeRef a, NodeRef b) const;  // UnknownArc if absent

  bool loop_free() const { return loops_.empty(); }
  bool arcs_undecorated() const;
  int decoration_total() const;  // arcs plus loops
  int max_arc_decoration() const;

  /// Canonical text form, e.g. "3|3 :: N1-N2*,S1-S2,N3-S3 ;loops:-".
  std::string str() const;

  auto operator<=>(const DecoratedTangle&) const = default;

 private:
  DecoratedTangle() = default;
  int north_ = 0, south_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> loops_;
};

DecoratedTangle identity_tangle(int n);
DecoratedTangle generator_e(int n);
DecoratedTangle generator_e_bar1(int n);
DecoratedTangle generator_e_i(int i, int n);

/// Stack tangles, top over bottom, tracing strands through the interface.
/// Decoration counts add along traced strands; closed components formed at
/// the interface become loops; pre-existing loops are carried over.
DecoratedTangle concatenate(const DecoratedTangle& top, const DecoratedTangle& bottom);

/// All undecorated, loop-free crossing-free tangles with the given face
/// counts, in canonical order.
std::vector<DecoratedTangle> enumerate_matchings(int n_north, int n_south);

/// Flip the decoration (0 <-> 1) on the arc attached to node 1 of the north
/// face. Requires a loop-free tangle with all decorations <= 1.
DecoratedTangle toggle_nw(const DecoratedTangle& t);

}  // namespace tanglekit

#endif
