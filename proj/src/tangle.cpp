#include "tanglekit/tangle.hpp"

#include <algorithm>
#include <sstream>

namespace tanglekit {

DecoratedTangle DecoratedTangle::make(int n_north, int n_south, const std::vector<ArcSpec>& arcs,
                                      const std::vector<int>& loops) {
  std::vector<Arc> raw;
  raw.reserve(arcs.size());
  DecoratedTangle probe;
  probe.north_ = n_north;
  probe.south_ = n_south;
  for (const auto& s : arcs) {
    int pa = probe.position(s.a);
    int pb = probe.position(s.b);
    raw.push_back({std::min(pa, pb), std::max(pa, pb), s.decorations});
  }
  return from_positions(n_north, n_south, std::move(raw), loops);
}

DecoratedTangle DecoratedTangle::from_positions(int n_north, int n_south, std::vector<Arc> arcs,
                                                std::vector<int> loops) {
  if (n_north < 0 || n_south < 0) fail(Errc::IndexOutOfRange, "negative face size");
  int total = n_north + n_south;
  if (total % 2 != 0) fail(Errc::OddNodeTotal, "node total " + std::to_string(total));

  std::vector<int> seen(total + 1, 0);
  for (auto& a : arcs) {
    if (a.lo >= a.hi || a.lo < 1 || a.hi > total)
      fail(Errc::NotAMatching, "bad arc endpoints " + std::to_string(a.lo) + "," +
                                   std::to_string(a.hi));
    if (a.dec < 0) fail(Errc::IndexOutOfRange, "negative decoration count");
    ++seen[a.lo];
    ++seen[a.hi];
  }
  if (static_cast<int>(arcs.size()) * 2 != total)
    fail(Errc::NotAMatching, "arc count does not cover all nodes");
  for (int p = 1; p <= total; ++p)
    if (seen[p] != 1) fail(Errc::NotAMatching, "node at position " + std::to_string(p));

  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  // Nesting test on the linearized boundary: arcs sorted by lo; interleave
  // a < c < b < d is a crossing.
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[j].lo > arcs[i].hi) break;
      if (arcs[j].hi > arcs[i].hi)
        fail(Errc::Crossing, "arcs " + std::to_string(arcs[i].lo) + "-" +
                                 std::to_string(arcs[i].hi) + " and " +
                                 std::to_string(arcs[j].lo) + "-" + std::to_string(arcs[j].hi));
    }
  }

  for (int c : loops)
    if (c < 0) fail(Errc::IndexOutOfRange, "negative loop decoration count");
  std::sort(loops.begin(), loops.end());

  DecoratedTangle t;
  t.north_ = n_north;
  t.south_ = n_south;
  t.arcs_ = std::move(arcs);
  t.loops_ = std::move(loops);
  for (const auto& a : t.arcs_)
    if (a.dec > 0 && !t.west_exposed(a))
      fail(Errc::DecorationNotExposed, "arc " + std::to_string(a.lo) + "-" +
                                           std::to_string(a.hi));
  return t;
}

int DecoratedTangle::position(NodeRef n) const {
  int limit = n.face == Face::North ? north_ : south_;
  if (n.index < 1 || n.index > limit)
    fail(Errc::IndexOutOfRange, "node index " + std::to_string(n.index));
  return n.face == Face::North ? n.index : north_ + south_ + 1 - n.index;
}

NodeRef DecoratedTangle::node_at(int position) const {
  if (position < 1 || position > total_nodes())
    fail(Errc::IndexOutOfRange, "position " + std::to_string(position));
  if (position <= north_) return {Face::North, position};
  return {Face::South, north_ + south_ + 1 - position};
}

int DecoratedTangle::arc_at(int position) const {
  for (size_t i = 0; i < arcs_.size(); ++i)
    if (arcs_[i].lo == position || arcs_[i].hi == position) return static_cast<int>(i);
  fail(Errc::IndexOutOfRange, "no arc at position " + std::to_string(position));
}

bool DecoratedTangle::has_non_propagating_arc() const {
  for (const auto& a : arcs_)
    if (!propagating(a)) return true;
  return false;
}

bool DecoratedTangle::west_exposed(const Arc& a) const {
  for (const auto& o : arcs_)
    if (o.lo < a.lo && o.hi > a.hi) return false;
  return true;
}

bool DecoratedTangle::west_exposed(NodeRef na, NodeRef nb) const {
  int pa = position(na), pb = position(nb);
  int lo = std::min(pa, pb), hi = std::max(pa, pb);
  for (const auto& a : arcs_)
    if (a.lo == lo && a.hi == hi) return west_exposed(a);
  fail(Errc::UnknownArc, "no arc between the given nodes");
}

bool DecoratedTangle::arcs_undecorated() const {
  for (const auto& a : arcs_)
    if (a.dec != 0) return false;
  return true;
}

int DecoratedTangle::decoration_total() const {
  int n = 0;
  for (const auto& a : arcs_) n += a.dec;
  for (int c : loops_) n += c;
  return n;
}

int DecoratedTangle::max_arc_decoration() const {
  int m = 0;
  for (const auto& a : arcs_) m = std::max(m, a.dec);
  return m;
}

std::string DecoratedTangle::str() const {
  // Arcs print in westernmost-column order (node index, north before south),
  // the reading order of the pictures.
  auto key = [&](const Arc& a) {
    NodeRef x = node_at(a.lo), y = node_at(a.hi);
    auto node_key = [](NodeRef n) { return std::pair(n.index, n.face == Face::South); };
    auto kx = node_key(x), ky = node_key(y);
    if (ky < kx) std::swap(kx, ky);
    return std::tuple(kx, ky);
  };
  std::vector<Arc> shown = arcs_;
  std::sort(shown.begin(), shown.end(),
            [&](const Arc& a, const Arc& b) { return key(a) < key(b); });

  std::ostringstream os;
  os << north_ << '|' << south_ << " :: ";
  bool first = true;
  for (const auto& a : shown) {
    if (!first) os << ',';
    first = false;
    NodeRef x = node_at(a.lo), y = node_at(a.hi);
    // North endpoint first on propagating arcs, west endpoint first otherwise.
    if ((y.face == Face::North && x.face == Face::South) ||
        (x.face == y.face && y.index < x.index))
      std::swap(x, y);
    os << (x.face == Face::North ? 'N' : 'S') << x.index << '-'
       << (y.face == Face::North ? 'N' : 'S') << y.index;
    for (int k = 0; k < a.dec; ++k) os << '*';
  }
  os << " ;loops:";
  if (loops_.empty()) {
    os << '-';
  } else {
    for (size_t i = 0; i < loops_.size(); ++i) {
      if (i) os << ',';
      os << loops_[i];
    }
  }
  return os.str();
}

DecoratedTangle identity_tangle(int n) {
  std::vector<ArcSpec> arcs;
  for (int i = 1; i <= n; ++i) arcs.push_back({N(i), S(i), 0});
  return DecoratedTangle::make(n, n, arcs);
}

DecoratedTangle generator_e(int n) {
  if (n < 1) fail(Errc::IndexOutOfRange, "e needs n >= 1");
  std::vector<ArcSpec> arcs;
  arcs.push_back({N(1), S(1), 1});
  for (int i = 2; i <= n; ++i) arcs.push_back({N(i), S(i), 0});
  return DecoratedTangle::make(n, n, arcs);
}

DecoratedTangle generator_e_i(int i, int n) {
  if (i < 1 || i > n - 1)
    fail(Errc::IndexOutOfRange, "e_" + std::to_string(i) + " not in DT_" + std::to_string(n));
  std::vector<ArcSpec> arcs;
  arcs.push_back({N(i), N(i + 1), 0});
  arcs.push_back({S(i), S(i + 1), 0});
  for (int k = 1; k <= n; ++k)
    if (k != i && k != i + 1) arcs.push_back({N(k), S(k), 0});
  return DecoratedTangle::make(n, n, arcs);
}

DecoratedTangle generator_e_bar1(int n) {
  if (n < 2) fail(Errc::IndexOutOfRange, "e_bar1 needs n >= 2");
  std::vector<ArcSpec> arcs;
  arcs.push_back({N(1), N(2), 1});
  arcs.push_back({S(1), S(2), 1});
  for (int k = 3; k <= n; ++k) arcs.push_back({N(k), S(k), 0});
  return DecoratedTangle::make(n, n, arcs);
}

namespace {

// Endpoint of a strand piece during concatenation tracing.
struct End {
  enum Kind { OutNorth, OutSouth, Iface } kind;
  int index;
};

}  // namespace

DecoratedTangle concatenate(const DecoratedTangle& top, const DecoratedTangle& bottom) {
  if (top.south_count() != bottom.north_count())
    fail(Errc::FaceMismatch, std::to_string(top.south_count()) + " vs " +
                                 std::to_string(bottom.north_count()));
  const int m = top.south_count();
  const int out_north = top.north_count();
  const int out_south = bottom.south_count();

  struct Seg {
    End a, b;
    int dec;
  };
  std::vector<Seg> segs;
  auto top_end = [&](int pos) -> End {
    if (pos <= out_north) return {End::OutNorth, pos};
    return {End::Iface, top.north_count() + top.south_count() + 1 - pos};
  };
  auto bottom_end = [&](int pos) -> End {
    if (pos <= m) return {End::Iface, pos};
    return {End::OutSouth, bottom.north_count() + bottom.south_count() + 1 - pos};
  };
  for (const auto& a : top.arcs()) segs.push_back({top_end(a.lo), top_end(a.hi), a.dec});
  for (const auto& a : bottom.arcs()) segs.push_back({bottom_end(a.lo), bottom_end(a.hi), a.dec});

  // Each interface node touches exactly one top and one bottom segment.
  std::vector<std::vector<int>> at_iface(m + 1);
  for (size_t s = 0; s < segs.size(); ++s) {
    for (End e : {segs[s].a, segs[s].b})
      if (e.kind == End::Iface) at_iface[e.index].push_back(static_cast<int>(s));
  }

  std::vector<bool> used(segs.size(), false);
  std::vector<DecoratedTangle::Arc> out_arcs;
  std::vector<int> out_loops;

  auto other_end = [&](int s, End from) -> End {
    const Seg& g = segs[s];
    if (g.a.kind == from.kind && g.a.index == from.index) return g.b;
    return g.a;
  };
  auto final_pos = [&](End e) -> int {
    if (e.kind == End::OutNorth) return e.index;
    return out_north + out_south + 1 - e.index;
  };

  // Open strands: walk from each out node.
  for (size_t start = 0; start < segs.size(); ++start) {
    for (End head : {segs[start].a, segs[start].b}) {
      if (head.kind == End::Iface || used[start]) continue;
      int dec = 0;
      int s = static_cast<int>(start);
      End cur = head;
      while (true) {
        used[s] = true;
        dec += segs[s].dec;
        End nxt = other_end(s, cur);
        if (nxt.kind != End::Iface) {
          int p = final_pos(head), q = final_pos(nxt);
          out_arcs.push_back({std::min(p, q), std::max(p, q), dec});
          break;
        }
        const auto& pair = at_iface[nxt.index];
        s = pair[0] == s ? pair[1] : pair[0];
        cur = nxt;
      }
    }
  }

  // Remaining segments form closed loops through the interface.
  for (size_t start = 0; start < segs.size(); ++start) {
    if (used[start]) continue;
    int dec = 0;
    int s = static_cast<int>(start);
    End cur = segs[start].a;
    while (!used[s]) {
      used[s] = true;
      dec += segs[s].dec;
      End nxt = other_end(s, cur);
      const auto& pair = at_iface[nxt.index];
      s = pair[0] == s ? pair[1] : pair[0];
      cur = nxt;
    }
    out_loops.push_back(dec);
  }

  for (int c : top.loops()) out_loops.push_back(c);
  for (int c : bottom.loops()) out_loops.push_back(c);

  // from_positions re-validates; in particular the west-exposure rule is
  // checked on every composite.
  return DecoratedTangle::from_positions(out_north, out_south, std::move(out_arcs),
                                         std::move(out_loops));
}

namespace {

void matchings_of_segment(int lo, int hi, std::vector<DecoratedTangle::Arc>& acc,
                          std::vector<std::vector<DecoratedTangle::Arc>>& out) {
  if (lo > hi) {
    out.push_back(acc);
    return;
  }
  for (int b = lo + 1; b <= hi; b += 2) {
    acc.push_back({lo, b, 0});
    std::vector<DecoratedTangle::Arc> inner_acc;
    std::vector<std::vector<DecoratedTangle::Arc>> inners;
    matchings_of_segment(lo + 1, b - 1, inner_acc, inners);
    for (auto& in : inners) {
      size_t mark = acc.size();
      acc.insert(acc.end(), in.begin(), in.end());
      matchings_of_segment(b + 1, hi, acc, out);
      acc.resize(mark);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<DecoratedTangle> enumerate_matchings(int n_north, int n_south) {
  int total = n_north + n_south;
  if (total % 2 != 0) fail(Errc::OddNodeTotal, "node total " + std::to_string(total));
  std::vector<std::vector<DecoratedTangle::Arc>> raw;
  std::vector<DecoratedTangle::Arc> acc;
  matchings_of_segment(1, total, acc, raw);
  std::vector<DecoratedTangle> out;
  out.reserve(raw.size());
  for (auto& arcs : raw)
    out.push_back(DecoratedTangle::from_positions(n_north, n_south, std::move(arcs), {}));
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedTangle toggle_nw(const DecoratedTangle& t) {
  if (!t.loop_free() || t.max_arc_decoration() > 1)
    fail(Errc::NotBlobLike, "toggle needs a loop-free tangle with decorations <= 1");
  std::vector<DecoratedTangle::Arc> arcs = t.arcs();
  int i = t.arc_at(1);
  arcs[i].dec = 1 - arcs[i].dec;
  return DecoratedTangle::from_positions(t.north_count(), t.south_count(), std::move(arcs),
                                         t.loops());
}

}  // namespace tanglekit
