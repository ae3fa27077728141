#include "tanglekit/symmetric.hpp"

#include <algorithm>

namespace tanglekit {

namespace {

NodeRef mirror_node(NodeRef n, int m) { return {n.face, m + 1 - n.index}; }

}  // namespace

bool left_right_symmetric(const DecoratedTangle& t) {
  const int m = t.north_count();
  if (t.south_count() != m) return false;
  struct Key {
    int lo, hi, dec;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> direct, mirrored;
  for (const auto& a : t.arcs()) {
    direct.push_back({a.lo, a.hi, a.dec});
    int p = t.position(mirror_node(t.node_at(a.lo), m));
    int q = t.position(mirror_node(t.node_at(a.hi), m));
    mirrored.push_back({std::min(p, q), std::max(p, q), a.dec});
  }
  std::sort(direct.begin(), direct.end());
  std::sort(mirrored.begin(), mirrored.end());
  return direct == mirrored;
}

DecoratedTangle to_symmetric(const DecoratedTangle& b) {
  const int n = b.north_count();
  if (b.south_count() != n || !b.loop_free() || b.max_arc_decoration() > 1)
    fail(Errc::NotBlobDiagram, b.str());

  auto shift = [&](NodeRef x) { return NodeRef{x.face, n + x.index}; };
  auto mirror = [&](NodeRef x) { return NodeRef{x.face, n + 1 - x.index}; };

  std::vector<ArcSpec> out;
  for (const auto& a : b.arcs()) {
    NodeRef x = b.node_at(a.lo), y = b.node_at(a.hi);
    if (a.dec == 0) {
      out.push_back({shift(x), shift(y), 0});
      out.push_back({mirror(x), mirror(y), 0});
    } else {
      out.push_back({shift(x), mirror(x), 0});
      out.push_back({shift(y), mirror(y), 0});
    }
  }
  return DecoratedTangle::make(2 * n, 2 * n, out);
}

DecoratedTangle from_symmetric(const DecoratedTangle& s) {
  const int m = s.north_count();
  if (s.south_count() != m || m % 2 != 0 || !s.loop_free() || !s.arcs_undecorated() ||
      !left_right_symmetric(s))
    fail(Errc::NotSymmetric, s.str());
  const int n = m / 2;

  std::vector<ArcSpec> arcs;
  std::vector<NodeRef> loose;
  for (const auto& a : s.arcs()) {
    NodeRef x = s.node_at(a.lo), y = s.node_at(a.hi);
    bool x_orig = x.index > n, y_orig = y.index > n;
    if (x_orig && y_orig) {
      arcs.push_back({{x.face, x.index - n}, {y.face, y.index - n}, 0});
    } else if (!x_orig && !y_orig) {
      continue;  // mirror copy of an arc handled above
    } else {
      // Crosses the wall: must join a node to its own mirror image.
      if (x.face != y.face || x.index + y.index != m + 1)
        fail(Errc::NotSymmetric, "wall-crossing arc in " + s.str());
      int orig = std::max(x.index, y.index) - n;
      loose.push_back({x.face, orig});
    }
  }

  // Broken arcs reattach pairwise; non-nesting of decorated arcs makes the
  // pairing consecutive in the boundary order of the small diagram.
  std::sort(loose.begin(), loose.end(), [&](NodeRef a, NodeRef b) {
    auto pos = [&](NodeRef r) { return r.face == Face::North ? r.index : 2 * n + 1 - r.index; };
    return pos(a) < pos(b);
  });
  if (loose.size() % 2 != 0) fail(Errc::NotSymmetric, s.str());
  for (size_t i = 0; i + 1 < loose.size(); i += 2)
    arcs.push_back({loose[i], loose[i + 1], 1});

  return DecoratedTangle::make(n, n, arcs);
}

}  // namespace tanglekit
