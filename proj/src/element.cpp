#include "tanglekit/element.hpp"

#include <algorithm>
#include <sstream>

namespace tanglekit {

std::string Letter::str() const {
  switch (kind) {
    case E: return "e";
    case E1Bar: return "e~";
    case EI: return "e" + std::to_string(index);
  }
  return "?";
}

namespace {

bool letter_legal(const AlgebraKind& kind, const Letter& l, bool extended) {
  const int n = kind.rank();
  switch (kind.variant()) {
    case AlgebraVariant::TL:
      return l.kind == Letter::EI && l.index >= 1 && l.index <= n - 1;
    case AlgebraVariant::Blob:
      if (l.kind == Letter::E) return true;
      if (l.kind == Letter::EI) return l.index >= 1 && l.index <= n - 1;
      return extended && l.kind == Letter::E1Bar && n >= 2;
    case AlgebraVariant::TypeB:
      if (l.kind == Letter::E1Bar) return true;
      if (l.kind == Letter::EI) {
        if (l.index >= 2 && l.index <= n) return true;
        return extended && l.index == 1;
      }
      return extended && l.kind == Letter::E;
    case AlgebraVariant::TypeD:
    case AlgebraVariant::DQuotient:
      if (l.kind == Letter::E1Bar) return true;
      if (l.kind == Letter::EI) return l.index >= 1 && l.index <= n - 1;
      return extended && l.kind == Letter::E;
  }
  return false;
}

}  // namespace

GeneratorWord::GeneratorWord(AlgebraKind kind, std::vector<Letter> letters, bool extended)
    : kind_(std::move(kind)), letters_(std::move(letters)), extended_(extended) {
  for (const auto& l : letters_)
    if (!letter_legal(kind_, l, extended_))
      fail(Errc::IllegalLetter, l.str() + " in " + kind_.str());
}

GeneratorWord GeneratorWord::parse(const AlgebraKind& kind, const std::string& text,
                                   bool extended) {
  std::vector<Letter> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") {
      letters.push_back(letter_e());
    } else if (tok == "e~") {
      letters.push_back(letter_e_bar1());
    } else if (tok.size() > 1 && tok[0] == 'e' &&
               tok.find_first_not_of("0123456789", 1) == std::string::npos) {
      letters.push_back(letter_e_i(std::stoi(tok.substr(1))));
    } else {
      fail(Errc::IllegalLetter, "token '" + tok + "'");
    }
  }
  return {kind, std::move(letters), extended};
}

std::string GeneratorWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += letters_[i].str();
  }
  return s;
}

DecoratedTangle generator_diagram(const Letter& l, int nodes) {
  switch (l.kind) {
    case Letter::E: return generator_e(nodes);
    case Letter::E1Bar: return generator_e_bar1(nodes);
    case Letter::EI: return generator_e_i(l.index, nodes);
  }
  fail(Errc::IllegalLetter, "bad letter");
}

std::vector<Letter> standard_alphabet(const AlgebraKind& kind) {
  std::vector<Letter> out;
  const int n = kind.rank();
  switch (kind.variant()) {
    case AlgebraVariant::TL:
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter_e_i(i));
      break;
    case AlgebraVariant::Blob:
      out.push_back(letter_e());
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter_e_i(i));
      break;
    case AlgebraVariant::TypeB:
      out.push_back(letter_e_bar1());
      for (int i = 2; i <= n; ++i) out.push_back(letter_e_i(i));
      break;
    case AlgebraVariant::TypeD:
    case AlgebraVariant::DQuotient:
      out.push_back(letter_e_bar1());
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter_e_i(i));
      break;
  }
  return out;
}

Element Element::unit(const AlgebraKind& kind) {
  return from_diagram(kind, identity_tangle(kind.node_count()));
}

Element Element::from_diagram(const AlgebraKind& kind, const DecoratedTangle& d) {
  Element x(kind);
  x.add_term(d, Scalar(1));
  return x;
}

void Element::add_term(const DecoratedTangle& d, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (classify(d, kind_) == AdmissibilityClass::NotBasis)
      fail(Errc::NotInBasis, d.str() + " in " + kind_.str());
    terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  if (!(kind_ == o.kind_)) fail(Errc::KindMismatch, kind_.str() + " vs " + o.kind_.str());
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!(kind_ == o.kind_)) fail(Errc::KindMismatch, kind_.str() + " vs " + o.kind_.str());
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Element scale(const Scalar& c, Element x) {
  if (c.is_zero()) return Element(x.kind_);
  for (auto& [d, coeff] : x.terms_) coeff *= c;
  return x;
}

Element operator*(const Element& x, const Element& y) {
  if (!(x.kind_ == y.kind_)) fail(Errc::KindMismatch, x.kind_.str() + " vs " + y.kind_.str());
  Element out(x.kind_);
  for (const auto& [dx, cx] : x.terms_) {
    for (const auto& [dy, cy] : y.terms_) {
      Reduction r = reduce(concatenate(dx, dy), x.kind_);
      if (r.coeff.is_zero()) continue;
      out.add_term(r.diagram, cx * cy * r.coeff);
    }
  }
  return out;
}

bool Element::operator==(const Element& o) const {
  return kind_ == o.kind_ && terms_ == o.terms_;
}

bool Element::operator<(const Element& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool parens = c.terms().size() > 1;
    if (parens) os << '(';
    os << c.str();
    if (parens) os << ')';
    os << " · {" << d.str() << '}';
  }
  return os.str();
}

Element evaluate_word(const GeneratorWord& w) {
  AlgebraKind carrier = w.kind();
  // Words with letters outside the standard alphabet of a TypeB/TypeD carrier
  // live in the ambient blob algebra on the same node count.
  if (w.extended() && w.kind().variant() != AlgebraVariant::Blob &&
      w.kind().variant() != AlgebraVariant::TL) {
    bool outside = false;
    for (const auto& l : w.letters())
      if (!letter_legal(w.kind(), l, false)) outside = true;
    if (outside)
      carrier = AlgebraKind::blob(w.kind().node_count(), w.kind().delta(),
                                  w.kind().has_delta_prime() ? w.kind().delta_prime()
                                                             : Scalar::variable(Var::Dp));
  }
  Element acc = Element::unit(carrier);
  for (const auto& l : w.letters())
    acc = acc * Element::from_diagram(carrier, generator_diagram(l, carrier.node_count()));
  return acc;
}

std::vector<DecoratedTangle> span_reachability(const AlgebraKind& kind) {
  std::vector<DecoratedTangle> gens;
  for (const auto& l : standard_alphabet(kind))
    gens.push_back(generator_diagram(l, kind.node_count()));

  std::map<DecoratedTangle, bool> seen;
  std::vector<DecoratedTangle> frontier{identity_tangle(kind.node_count())};
  seen[frontier[0]] = true;
  while (!frontier.empty()) {
    std::vector<DecoratedTangle> next;
    for (const auto& d : frontier) {
      for (const auto& g : gens) {
        Reduction r = reduce(concatenate(d, g), kind);
        if (r.coeff.is_zero()) continue;
        if (!seen.emplace(r.diagram, true).second) continue;
        next.push_back(r.diagram);
      }
    }
    frontier = std::move(next);
  }
  std::vector<DecoratedTangle> out;
  out.reserve(seen.size());
  for (const auto& [d, _] : seen) out.push_back(d);
  return out;
}

StructureTable structure_constants(const AlgebraKind& kind) {
  StructureTable t{kind, enumerate_basis(kind), {}};
  std::map<DecoratedTangle, int> index;
  for (size_t k = 0; k < t.basis.size(); ++k) index.emplace(t.basis[k], static_cast<int>(k));
  for (size_t i = 0; i < t.basis.size(); ++i) {
    for (size_t j = 0; j < t.basis.size(); ++j) {
      Reduction r = reduce(concatenate(t.basis[i], t.basis[j]), kind);
      if (r.coeff.is_zero()) continue;
      auto it = index.find(r.diagram);
      if (it == index.end()) fail(Errc::NotInBasis, r.diagram.str() + " in " + kind.str());
      t.entries.push_back(
          {static_cast<int>(i), static_cast<int>(j), it->second, std::move(r.coeff)});
    }
  }
  return t;
}

}  // namespace tanglekit
