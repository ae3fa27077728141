#ifndef TANGLEKIT_WORDS_HPP
#define TANGLEKIT_WORDS_HPP

#include <map>

#include "tanglekit/element.hpp"
#include "tanglekit/report.hpp"

namespace tanglekit {

/// Holds iff the word (over the blob alphabet e, e_1, ..., e_{n-1}) either
/// avoids both e and e_1, or contains both with every e_1 between the first
/// and the last e.
bool b_condition(const GeneratorWord& w);

/// Holds iff e occurs an even number of times.
bool d_condition(const GeneratorWord& w);

/// Rewrite a reduced word with the B-condition into the alphabet
/// {e~, e_2, ...}: every e is deleted and every e_1 becomes e~. Evaluation
/// is preserved. Throws ConditionFailed / NotReduced.
GeneratorWord rewrite_b(const GeneratorWord& w);

/// Rewrite a reduced word with the D-condition into the alphabet
/// {e~, e_1, ...}: the occurrences of e are paired off left to right, each
/// pair is deleted and the single e_1 between the pair becomes e~.
/// Evaluation is preserved. Throws ConditionFailed / NotReduced.
GeneratorWord rewrite_d(const GeneratorWord& w);

struct LineCrossing {
  int length;
  std::vector<int> per_line;  // crossings with line i+1/2, i = 1..n-1, halved pairwise
};

/// For a plain Temperley-Lieb basis diagram: per_line[i-1] counts the arcs
/// separated by the vertical line between columns i and i+1; the length is
/// half the total.
LineCrossing line_crossing_length(const DecoratedTangle& d);

/// Minimal word length per reachable element, breadth-first over the standard
/// alphabet up to max_len.
std::map<Element, int> min_word_lengths(const AlgebraKind& kind, int max_len);

/// Minimal word length per reachable basis diagram, loop scalars stripped.
std::map<DecoratedTangle, int> min_diagram_lengths(const AlgebraKind& kind, int max_len);

/// A word is reduced iff no shorter word over the standard alphabet reaches
/// the same diagram (every word is a loop-scalar monomial times a reduced
/// word); searching to the word's own length is exact.
bool certified_reduced(const GeneratorWord& w);

struct OracleResult {
  bool found = false;
  int length = 0;
  std::vector<GeneratorWord> witnesses;
};

/// Exhaustive minimal-length search: the shortest words over the kind's
/// standard alphabet (up to max_len) evaluating exactly to target.
OracleResult shortest_word_oracle(const Element& target, const AlgebraKind& kind, int max_len);

/// Word-diagram statistics over all certified-reduced words up to max_len:
/// extremal generator uniqueness and minimal length = line-crossing statistic
/// for TL; e/e_1 alternation and decoration-count = e-count for Blob.
Report verify_word_properties(const AlgebraKind& kind, int max_len);

/// rewrite_b / rewrite_d preserve evaluation on every certified-reduced word
/// with the respective condition, up to max_len.
Report verify_rewrite_contracts(const AlgebraKind& kind, int max_len);

}  // namespace tanglekit

#endif
