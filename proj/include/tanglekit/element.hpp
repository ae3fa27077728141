#ifndef TANGLEKIT_ELEMENT_HPP
#define TANGLEKIT_ELEMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "tanglekit/algebra.hpp"

namespace tanglekit {

/// One generator symbol: e, e~ (the barred generator), or e_i.
struct Letter {
  enum Kind { E, E1Bar, EI } kind;
  int index = 0;  // meaningful for EI
  auto operator<=>(const Letter&) const = default;
  std::string str() const;
};

inline Letter letter_e() { return {Letter::E, 0}; }
inline Letter letter_e_bar1() { return {Letter::E1Bar, 0}; }
inline Letter letter_e_i(int i) { return {Letter::EI, i}; }

/// A word in the generator symbols of an algebra. Standard alphabets:
/// TL: e_1..e_{n-1}; Blob: e, e_1..e_{n-1}; TypeB: e~, e_2..e_n;
/// TypeD/DQuotient: e~, e_1..e_{n-1}. The extended flag additionally admits
/// e~ in Blob words and e (plus e_1 for TypeB) in TypeB/TypeD/DQuotient
/// words; extended words are word-combinatorics carriers and evaluate in the
/// ambient blob algebra.
class GeneratorWord {
 public:
  GeneratorWord(AlgebraKind kind, std::vector<Letter> letters, bool extended = false);

  /// Whitespace-separated tokens "e", "e~", "e1", "e2", ... (case-sensitive).
  static GeneratorWord parse(const AlgebraKind& kind, const std::string& text,
                             bool extended = false);

  const AlgebraKind& kind() const { return kind_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool extended() const { return extended_; }
  size_t size() const { return letters_.size(); }
  std::string str() const;

 private:
  AlgebraKind kind_;
  std::vector<Letter> letters_;
  bool extended_;
};

/// The diagram a letter names, on the given face size.
DecoratedTangle generator_diagram(const Letter& l, int nodes);

/// The standard generator diagrams of a kind, in alphabet order.
std::vector<Letter> standard_alphabet(const AlgebraKind& kind);

/// Finite linear combination of basis diagrams with Scalar coefficients.
/// Every stored diagram classifies to a basis class of the kind; zero
/// coefficients are never stored. Immutable in spirit: arithmetic returns
/// new values.
class Element {
 public:
  explicit Element(AlgebraKind kind) : kind_(std::move(kind)) {}
  static Element unit(const AlgebraKind& kind);
  static Element from_diagram(const AlgebraKind& kind, const DecoratedTangle& d);

  const AlgebraKind& kind() const { return kind_; }
  const std::map<DecoratedTangle, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  friend Element scale(const Scalar& c, Element x);
  friend Element operator*(const Element& x, const Element& y);

  bool operator==(const Element& o) const;
  bool operator<(const Element& o) const;  // canonical order, same kind assumed

  std::string str() const;

 private:
  void add_term(const DecoratedTangle& d, const Scalar& c);
  AlgebraKind kind_;
  std::map<DecoratedTangle, Scalar> terms_;
};

/// Left-to-right product of the word's generator diagrams, reduced. Extended
/// TypeB/TypeD/DQuotient words evaluate in the ambient blob algebra on the
/// same node count and return a Blob-kind element.
Element evaluate_word(const GeneratorWord& w);

/// Closure of the identity diagram under right multiplication by the standard
/// generators, collecting the basis diagram of each product.
std::vector<DecoratedTangle> span_reachability(const AlgebraKind& kind);

struct StructureTable {
  AlgebraKind kind;
  std::vector<DecoratedTangle> basis;
  struct Entry {
    int i, j, k;
    Scalar coeff;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;  // sorted by (i, j); zero products omitted
  bool operator==(const StructureTable&) const = default;
};

/// Products of all ordered basis pairs. Each product of basis diagrams is a
/// scalar times a single basis diagram, so the table has at most one entry
/// per (i, j).
StructureTable structure_constants(const AlgebraKind& kind);

}  // namespace tanglekit

#endif
