#include "tanglekit/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tanglekit {

namespace {

void require_blob_alphabet(const GeneratorWord& w) {
  for (const auto& l : w.letters())
    if (l.kind == Letter::E1Bar)
      fail(Errc::IllegalLetter, "word conditions apply to words over e, e_1, ...");
}

std::vector<int> positions_of_e(const GeneratorWord& w) {
  std::vector<int> out;
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size(); ++i)
    if (ls[i].kind == Letter::E) out.push_back(static_cast<int>(i));
  return out;
}

bool is_e1(const Letter& l) { return l.kind == Letter::EI && l.index == 1; }

}  // namespace

bool b_condition(const GeneratorWord& w) {
  require_blob_alphabet(w);
  auto es = positions_of_e(w);
  bool has_e1 = false;
  for (const auto& l : w.letters()) has_e1 |= is_e1(l);
  if (es.empty()) return !has_e1;
  if (!has_e1) return false;
  const auto& ls = w.letters();
  for (int i = 0; i < es.front(); ++i)
    if (is_e1(ls[i])) return false;
  for (int i = es.back() + 1; i < static_cast<int>(ls.size()); ++i)
    if (is_e1(ls[i])) return false;
  return true;
}

bool d_condition(const GeneratorWord& w) {
  require_blob_alphabet(w);
  return positions_of_e(w).size() % 2 == 0;
}

std::map<Element, int> min_word_lengths(const AlgebraKind& kind, int max_len) {
  std::vector<Element> gens;
  for (const auto& l : standard_alphabet(kind))
    gens.push_back(Element::from_diagram(kind, generator_diagram(l, kind.node_count())));

  std::map<Element, int> dist;
  std::vector<Element> frontier{Element::unit(kind)};
  dist.emplace(frontier[0], 0);
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Element y = x * g;
        if (dist.emplace(y, len).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::map<DecoratedTangle, int> min_diagram_lengths(const AlgebraKind& kind, int max_len) {
  std::vector<DecoratedTangle> gens;
  for (const auto& l : standard_alphabet(kind))
    gens.push_back(generator_diagram(l, kind.node_count()));

  std::map<DecoratedTangle, int> dist;
  std::vector<DecoratedTangle> frontier{identity_tangle(kind.node_count())};
  dist.emplace(frontier[0], 0);
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<DecoratedTangle> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Reduction r = reduce(concatenate(x, g), kind);
        if (r.coeff.is_zero()) continue;
        if (dist.emplace(r.diagram, len).second) next.push_back(std::move(r.diagram));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

namespace {

const DecoratedTangle& diagram_of(const Element& v) {
  if (v.terms().size() != 1)
    fail(Errc::NotReduced, "word evaluation is not a single scaled diagram");
  return v.terms().begin()->first;
}

bool reduced_against(const GeneratorWord& w, const std::map<DecoratedTangle, int>& minlen) {
  auto it = minlen.find(diagram_of(evaluate_word(w)));
  return it != minlen.end() && it->second == static_cast<int>(w.size());
}

GeneratorWord rewrite_b_impl(const GeneratorWord& w,
                             const std::map<DecoratedTangle, int>* minlen) {
  require_blob_alphabet(w);
  if (!b_condition(w)) fail(Errc::ConditionFailed, "B-condition fails for '" + w.str() + "'");
  std::map<DecoratedTangle, int> own;
  if (!minlen) {
    own = min_diagram_lengths(w.kind(), static_cast<int>(w.size()));
    minlen = &own;
  }
  if (!reduced_against(w, *minlen))
    fail(Errc::NotReduced, "'" + w.str() + "' is not of minimal length");

  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.kind == Letter::E) continue;
    out.push_back(is_e1(l) ? letter_e_bar1() : l);
  }
  return {w.kind(), std::move(out), /*extended=*/true};
}

GeneratorWord rewrite_d_impl(const GeneratorWord& w,
                             const std::map<DecoratedTangle, int>* minlen) {
  require_blob_alphabet(w);
  if (!d_condition(w)) fail(Errc::ConditionFailed, "D-condition fails for '" + w.str() + "'");
  std::map<DecoratedTangle, int> own;
  if (!minlen) {
    own = min_diagram_lengths(w.kind(), static_cast<int>(w.size()));
    minlen = &own;
  }
  if (!reduced_against(w, *minlen))
    fail(Errc::NotReduced, "'" + w.str() + "' is not of minimal length");

  const auto& ls = w.letters();
  auto es = positions_of_e(w);
  std::vector<bool> drop(ls.size(), false);
  std::vector<bool> barred(ls.size(), false);
  for (size_t j = 0; j + 1 < es.size(); j += 2) {
    int lo = es[j], hi = es[j + 1];
    int seen = -1;
    for (int i = lo + 1; i < hi; ++i) {
      if (is_e1(ls[i])) {
        if (seen >= 0)
          fail(Errc::ConditionFailed, "two e1 between twinned e in '" + w.str() + "'");
        seen = i;
      }
    }
    if (seen < 0)
      fail(Errc::ConditionFailed, "no e1 between twinned e in '" + w.str() + "'");
    drop[lo] = drop[hi] = true;
    barred[seen] = true;
  }

  std::vector<Letter> out;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (drop[i]) continue;
    out.push_back(barred[i] ? letter_e_bar1() : ls[i]);
  }
  return {w.kind(), std::move(out), /*extended=*/true};
}

}  // namespace

GeneratorWord rewrite_b(const GeneratorWord& w) { return rewrite_b_impl(w, nullptr); }
GeneratorWord rewrite_d(const GeneratorWord& w) { return rewrite_d_impl(w, nullptr); }

bool certified_reduced(const GeneratorWord& w) {
  auto minlen = min_diagram_lengths(w.kind(), static_cast<int>(w.size()));
  return reduced_against(w, minlen);
}

LineCrossing line_crossing_length(const DecoratedTangle& d) {
  const int n = d.north_count();
  if (d.south_count() != n || !d.loop_free() || !d.arcs_undecorated())
    fail(Errc::NotPlainTL, d.str());
  LineCrossing lc{0, std::vector<int>(std::max(0, n - 1), 0)};
  int total = 0;
  for (int i = 1; i <= n - 1; ++i) {
    auto left = [&](int pos) { return pos <= i || pos >= 2 * n + 1 - i; };
    int c = 0;
    for (const auto& a : d.arcs())
      if (left(a.lo) != left(a.hi)) ++c;
    lc.per_line[i - 1] = c;
    total += c;
  }
  lc.length = total / 2;
  return lc;
}

OracleResult shortest_word_oracle(const Element& target, const AlgebraKind& kind, int max_len) {
  auto minlen = min_word_lengths(kind, max_len);
  auto it = minlen.find(target);
  if (it == minlen.end()) return {};

  OracleResult res;
  res.found = true;
  res.length = it->second;

  std::vector<std::pair<Letter, Element>> gens;
  for (const auto& l : standard_alphabet(kind))
    gens.emplace_back(l, Element::from_diagram(kind, generator_diagram(l, kind.node_count())));

  std::vector<Letter> word;
  std::function<void(const Element&, int)> dfs = [&](const Element& cur, int depth) {
    if (depth == res.length) {
      if (cur == target) res.witnesses.emplace_back(kind, word);
      return;
    }
    for (const auto& [l, g] : gens) {
      Element next = cur * g;
      // Prefixes of minimal words are minimal.
      auto jt = minlen.find(next);
      if (jt == minlen.end() || jt->second != depth + 1) continue;
      word.push_back(l);
      dfs(next, depth + 1);
      word.pop_back();
    }
  };
  dfs(Element::unit(kind), 0);
  return res;
}

namespace {

// Depth-first walk over all certified-reduced words up to max_len (a prefix
// of a minimal-length word is itself minimal, so the reduced words form a
// prefix-closed tree). fn receives the word and its exact evaluation.
void for_each_reduced_word(const AlgebraKind& kind, int max_len,
                           const std::map<DecoratedTangle, int>& minlen,
                           const std::function<void(const GeneratorWord&, const Element&)>& fn) {
  std::vector<std::pair<Letter, Element>> gens;
  for (const auto& l : standard_alphabet(kind))
    gens.emplace_back(l, Element::from_diagram(kind, generator_diagram(l, kind.node_count())));

  std::vector<Letter> word;
  std::function<void(const Element&, int)> dfs = [&](const Element& cur, int depth) {
    fn(GeneratorWord(kind, word), cur);
    if (depth == max_len) return;
    for (const auto& [l, g] : gens) {
      Element next = cur * g;
      auto jt = minlen.find(diagram_of(next));
      if (jt == minlen.end() || jt->second != depth + 1) continue;
      word.push_back(l);
      dfs(next, depth + 1);
      word.pop_back();
    }
  };
  dfs(Element::unit(kind), 0);
}

}  // namespace

Report verify_word_properties(const AlgebraKind& kind, int max_len) {
  Report r;
  r.suite = std::string("word-properties-") + to_string(kind.variant());
  r.rank = kind.rank();
  auto minlen = min_diagram_lengths(kind, max_len);

  long long words = 0;
  long long extremal_bad = 0, alternation_bad = 0, decoration_bad = 0;

  for_each_reduced_word(kind, max_len, minlen, [&](const GeneratorWord& w, const Element& val) {
    ++words;
    if (w.size() == 0) return;
    const auto& ls = w.letters();

    if (kind.variant() == AlgebraVariant::TL) {
      int lo = 1 << 30, hi = 0;
      for (const auto& l : ls) {
        lo = std::min(lo, l.index);
        hi = std::max(hi, l.index);
      }
      int nlo = 0, nhi = 0;
      for (const auto& l : ls) {
        nlo += l.index == lo;
        nhi += l.index == hi;
      }
      if (nlo != 1 || nhi != 1) ++extremal_bad;
    }

    if (kind.variant() == AlgebraVariant::Blob) {
      // e and e_1 must alternate strictly within their joint subsequence.
      int prev = 0;  // 0 none, 1 e, 2 e1
      for (const auto& l : ls) {
        int cur = l.kind == Letter::E ? 1 : (is_e1(l) ? 2 : 0);
        if (cur == 0) continue;
        if (cur == prev) {
          ++alternation_bad;
          break;
        }
        prev = cur;
      }
      int e_count = static_cast<int>(positions_of_e(w).size());
      if (val.terms().size() != 1 ||
          val.terms().begin()->first.decoration_total() != e_count)
        ++decoration_bad;
    }
  });

  std::string n_words = std::to_string(words) + " reduced words";
  if (kind.variant() == AlgebraVariant::TL) {
    r.add_check("extremal generator occurs exactly once", "0 violations",
                std::to_string(extremal_bad) + " violations in " + n_words, extremal_bad == 0);

    long long lc_bad = 0, lc_total = 0;
    for (const auto& d : enumerate_basis(kind)) {
      ++lc_total;
      auto it = minlen.find(d);
      if (it == minlen.end() || it->second != line_crossing_length(d).length) ++lc_bad;
    }
    r.add_check("minimal word length equals line-crossing statistic", "0 mismatches",
                std::to_string(lc_bad) + " mismatches over " + std::to_string(lc_total) +
                    " diagrams",
                lc_bad == 0);
  }
  if (kind.variant() == AlgebraVariant::Blob) {
    r.add_check("e and e1 alternate in reduced words", "0 violations",
                std::to_string(alternation_bad) + " violations in " + n_words,
                alternation_bad == 0);
    r.add_check("diagram decoration count equals e count", "0 violations",
                std::to_string(decoration_bad) + " violations in " + n_words,
                decoration_bad == 0);
  }
  return r;
}

Report verify_rewrite_contracts(const AlgebraKind& kind, int max_len) {
  Report r;
  r.suite = "rewrites";
  r.rank = kind.rank();
  auto minlen = min_diagram_lengths(kind, max_len);

  long long b_words = 0, b_bad = 0, b_alpha_bad = 0;
  long long d_words = 0, d_bad = 0, d_alpha_bad = 0;

  for_each_reduced_word(kind, max_len, minlen, [&](const GeneratorWord& w, const Element& val) {
    if (b_condition(w)) {
      ++b_words;
      GeneratorWord out = rewrite_b_impl(w, &minlen);
      if (!(evaluate_word(out) == val)) ++b_bad;
      for (const auto& l : out.letters())
        if (l.kind == Letter::E || is_e1(l)) ++b_alpha_bad;
    }
    if (d_condition(w)) {
      ++d_words;
      GeneratorWord out = rewrite_d_impl(w, &minlen);
      if (!(evaluate_word(out) == val)) ++d_bad;
      for (const auto& l : out.letters())
        if (l.kind == Letter::E) ++d_alpha_bad;
    }
  });

  r.add_check("rewrite_b preserves evaluation", "0 violations",
              std::to_string(b_bad) + " violations in " + std::to_string(b_words) + " words",
              b_bad == 0);
  r.add_check("rewrite_b output avoids e and e1", "0 stray letters",
              std::to_string(b_alpha_bad) + " stray letters", b_alpha_bad == 0);
  r.add_check("rewrite_d preserves evaluation", "0 violations",
              std::to_string(d_bad) + " violations in " + std::to_string(d_words) + " words",
              d_bad == 0);
  r.add_check("rewrite_d output avoids e", "0 stray letters",
              std::to_string(d_alpha_bad) + " stray letters", d_alpha_bad == 0);
  return r;
}

}  // namespace tanglekit
