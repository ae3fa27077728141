#ifndef TANGLEKIT_TESTS_SUPPORT_HPP
#define TANGLEKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "tanglekit/algebra.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit::testing {

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Brute-force planarity oracle: a matching of 1..2k (as position pairs) is
// noncrossing iff no two pairs interleave.
inline bool noncrossing_oracle(const std::vector<std::pair<int, int>>& pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = std::minmax(pairs[i].first, pairs[i].second);
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      auto [c, d] = std::minmax(pairs[j].first, pairs[j].second);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

// All perfect matchings of 1..total (crossing or not).
inline void all_matchings(int total, std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<int> free;
  for (int p = 1; p <= total; ++p) free.push_back(p);
  std::vector<std::pair<int, int>> acc;
  std::function<void()> rec = [&]() {
    if (free.empty()) {
      out.push_back(acc);
      return;
    }
    int a = free.front();
    for (size_t i = 1; i < free.size(); ++i) {
      int b = free[i];
      std::vector<int> rest;
      for (size_t j = 1; j < free.size(); ++j)
        if (j != i) rest.push_back(free[j]);
      std::swap(free, rest);
      acc.emplace_back(a, b);
      rec();
      acc.pop_back();
      std::swap(free, rest);
    }
  };
  rec();
}

// ---------------------------------------------------------------------------
// Random tangles.

inline void random_matching_segment(int lo, int hi, Rng& rng,
                                    std::vector<DecoratedTangle::Arc>& out) {
  if (lo > hi) return;
  int slots = (hi - lo + 1) / 2;
  int pick = static_cast<int>(rng() % slots);
  int b = lo + 1 + 2 * pick;
  out.push_back({lo, b, 0});
  random_matching_segment(lo + 1, b - 1, rng, out);
  random_matching_segment(b + 1, hi, rng, out);
}

/// A random raw (pre-reduction) tangle legal as input for the kind: random
/// noncrossing matching, random decorations on west-exposed arcs, random
/// loops. TL inputs stay fully undecorated.
inline DecoratedTangle random_raw_tangle(const AlgebraKind& kind, Rng& rng) {
  const int n = kind.node_count();
  std::vector<DecoratedTangle::Arc> arcs;
  random_matching_segment(1, 2 * n, rng, arcs);
  bool decorated_kind = kind.variant() != AlgebraVariant::TL;
  DecoratedTangle plain = DecoratedTangle::from_positions(n, n, arcs, {});
  arcs = plain.arcs();
  if (decorated_kind) {
    for (auto& a : arcs)
      if (plain.west_exposed(a)) a.dec = static_cast<int>(rng() % 4);
  }
  std::vector<int> loops;
  int n_loops = static_cast<int>(rng() % 3);
  for (int i = 0; i < n_loops; ++i)
    loops.push_back(decorated_kind ? static_cast<int>(rng() % 4) : 0);
  return DecoratedTangle::from_positions(n, n, std::move(arcs), std::move(loops));
}

// ---------------------------------------------------------------------------
// Stepwise relation rewriter: applies one applicable local rule at a time in
// random order until none applies. Independent route against reduce().
inline Reduction reduce_stepwise_random(const DecoratedTangle& raw, const AlgebraKind& kind,
                                        Rng& rng) {
  Scalar coeff(1);
  std::vector<DecoratedTangle::Arc> arcs = raw.arcs();
  std::vector<int> loops = raw.loops();
  const bool pair_cancel = kind.variant() == AlgebraVariant::TypeD ||
                           kind.variant() == AlgebraVariant::DQuotient;

  struct Move {
    int tag;  // 0 arc collapse, 1 loop collapse, 2 loop removal, 3 odd-loop pair, 4 absorb
    int x, y;
  };
  while (true) {
    std::vector<Move> moves;
    for (size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].dec >= 2) moves.push_back({0, static_cast<int>(i), 0});
    for (size_t i = 0; i < loops.size(); ++i)
      if (loops[i] >= 2) moves.push_back({1, static_cast<int>(i), 0});
    if (!pair_cancel) {
      for (size_t i = 0; i < loops.size(); ++i)
        if (loops[i] <= 1) moves.push_back({2, static_cast<int>(i), 0});
    } else {
      std::vector<int> odd;
      for (size_t i = 0; i < loops.size(); ++i) {
        if (loops[i] % 2 == 0) moves.push_back({2, static_cast<int>(i), 0});
        if (loops[i] % 2 == 1) odd.push_back(static_cast<int>(i));
      }
      if (odd.size() >= 2) moves.push_back({3, odd[0], odd[1]});
      if (!odd.empty())
        for (size_t i = 0; i < arcs.size(); ++i)
          if (arcs[i].dec >= 1) moves.push_back({4, static_cast<int>(i), 0});
    }
    if (moves.empty()) break;
    Move m = moves[rng() % moves.size()];
    switch (m.tag) {
      case 0: arcs[m.x].dec -= pair_cancel ? 2 : 1; break;
      case 1: loops[m.x] -= pair_cancel ? 2 : 1; break;
      case 2:
        coeff *= (pair_cancel || loops[m.x] == 0) ? kind.delta() : kind.delta_prime();
        loops.erase(loops.begin() + m.x);
        break;
      case 3:
        coeff *= kind.delta();
        loops.erase(loops.begin() + m.y);
        break;
      case 4: arcs[m.x].dec = 0; break;
    }
  }
  if (pair_cancel && !loops.empty()) {
    // exactly one once-decorated loop can remain
    if (kind.variant() == AlgebraVariant::DQuotient) {
      coeff = Scalar();
      loops.clear();
    }
  }
  return {std::move(coeff),
          DecoratedTangle::from_positions(raw.north_count(), raw.south_count(), std::move(arcs),
                                          std::move(loops))};
}

inline Scalar random_scalar(Rng& rng) {
  Scalar s;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    ExpVec e;
    for (int v = 0; v < 4; ++v) e[v] = static_cast<int>(rng() % 5) - 2;
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 3);
    if (num == 0) num = 1;
    s += Scalar::monomial(BigRat(num, den), e);
  }
  return s;
}

}  // namespace tanglekit::testing

#endif
