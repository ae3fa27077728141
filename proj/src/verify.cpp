#include "tanglekit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tanglekit/symmetric.hpp"

namespace tanglekit {

std::string Report::text() const {
  std::ostringstream os;
  os << suite << " (rank " << rank << ")\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": expected " << c.expected
       << ", observed " << c.observed << "\n";
  os << "  overall: " << (overall() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

void relation(Report& r, const std::string& id, const Element& lhs, const Element& rhs) {
  r.add_check(id, "equal", lhs == rhs ? "equal" : "unequal", lhs == rhs);
}

}  // namespace

Report verify_presentation(const AlgebraKind& kind) {
  Report r;
  r.suite = std::string("presentation-") + to_string(kind.variant());
  r.rank = kind.rank();
  const int n = kind.rank();
  const Scalar br2 = two_bracket();

  auto gen = [&](const Letter& l) {
    return Element::from_diagram(kind, generator_diagram(l, kind.node_count()));
  };

  switch (kind.variant()) {
    case AlgebraVariant::TL: {
      std::vector<Element> e;
      for (int i = 1; i <= n - 1; ++i) e.push_back(gen(letter_e_i(i)));
      auto E = [&](int i) { return e[i - 1]; };
      for (int i = 1; i <= n - 1; ++i)
        relation(r, "e" + std::to_string(i) + "^2 = d e" + std::to_string(i), E(i) * E(i),
                 scale(kind.delta(), E(i)));
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
          if (std::abs(i - j) == 1)
            relation(r, "e" + std::to_string(i) + " e" + std::to_string(j) + " e" +
                            std::to_string(i) + " = e" + std::to_string(i),
                     E(i) * E(j) * E(i), E(i));
          else if (i < j && j - i > 1)
            relation(r, "e" + std::to_string(i) + " e" + std::to_string(j) + " commute",
                     E(i) * E(j), E(j) * E(i));
        }
      break;
    }

    case AlgebraVariant::Blob: {
      Element e0 = gen(letter_e());
      std::vector<Element> e;
      for (int i = 1; i <= n - 1; ++i) e.push_back(gen(letter_e_i(i)));
      auto E = [&](int i) { return e[i - 1]; };
      relation(r, "e^2 = e", e0 * e0, e0);
      for (int i = 1; i <= n - 1; ++i) {
        relation(r, "e" + std::to_string(i) + "^2 = d e" + std::to_string(i), E(i) * E(i),
                 scale(kind.delta(), E(i)));
        if (i == 1)
          relation(r, "e1 e e1 = dp e1", E(1) * e0 * E(1), scale(kind.delta_prime(), E(1)));
        else
          relation(r, "e" + std::to_string(i) + " e commute", E(i) * e0, e0 * E(i));
      }
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
          if (j - i == 1) {
            relation(r, "e" + std::to_string(i) + " e" + std::to_string(j) + " e" +
                            std::to_string(i) + " = e" + std::to_string(i),
                     E(i) * E(j) * E(i), E(i));
            relation(r, "e" + std::to_string(j) + " e" + std::to_string(i) + " e" +
                            std::to_string(j) + " = e" + std::to_string(j),
                     E(j) * E(i) * E(j), E(j));
          } else {
            relation(r, "e" + std::to_string(i) + " e" + std::to_string(j) + " commute",
                     E(i) * E(j), E(j) * E(i));
          }
        }
      break;
    }

    case AlgebraVariant::TypeB: {
      // E_1 = 2 e~, E_i = e_i; relations of the type-B quotient presentation.
      std::vector<Element> E{scale(Scalar(2), gen(letter_e_bar1()))};
      for (int i = 2; i <= n; ++i) E.push_back(gen(letter_e_i(i)));
      auto G = [&](int i) { return E[i - 1]; };
      for (int i = 1; i <= n; ++i)
        relation(r, "E" + std::to_string(i) + "^2 = [2] E" + std::to_string(i), G(i) * G(i),
                 scale(br2, G(i)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (j - i > 1) {
            relation(r, "E" + std::to_string(i) + " E" + std::to_string(j) + " commute",
                     G(i) * G(j), G(j) * G(i));
          } else if (i >= 2) {
            relation(r, "E" + std::to_string(i) + " E" + std::to_string(j) + " E" +
                            std::to_string(i) + " = E" + std::to_string(i),
                     G(i) * G(j) * G(i), G(i));
            relation(r, "E" + std::to_string(j) + " E" + std::to_string(i) + " E" +
                            std::to_string(j) + " = E" + std::to_string(j),
                     G(j) * G(i) * G(j), G(j));
          } else {
            relation(r, "E1 E2 E1 E2 = 2 E1 E2", G(1) * G(2) * G(1) * G(2),
                     scale(Scalar(2), G(1) * G(2)));
            relation(r, "E2 E1 E2 E1 = 2 E2 E1", G(2) * G(1) * G(2) * G(1),
                     scale(Scalar(2), G(2) * G(1)));
          }
        }
      break;
    }

    case AlgebraVariant::TypeD:
    case AlgebraVariant::DQuotient: {
      // Nodes of the D graph: 1bar and 1 both attach to 2; then a chain.
      struct Node {
        std::string name;
        int chain;  // 1bar encoded as 0, e_i as i
        Element elt;
      };
      std::vector<Node> nodes;
      nodes.push_back({"E1bar", 0, gen(letter_e_bar1())});
      for (int i = 1; i <= n - 1; ++i)
        nodes.push_back({"E" + std::to_string(i), i, gen(letter_e_i(i))});
      auto connected = [](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 0) return b == 2;
        return b == a + 1 && a >= 1;
      };
      for (const auto& s : nodes)
        relation(r, s.name + "^2 = [2] " + s.name, s.elt * s.elt, scale(br2, s.elt));
      for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j) {
          const auto& a = nodes[i];
          const auto& b = nodes[j];
          if (connected(a.chain, b.chain)) {
            relation(r, a.name + " " + b.name + " " + a.name + " = " + a.name,
                     a.elt * b.elt * a.elt, a.elt);
            relation(r, b.name + " " + a.name + " " + b.name + " = " + b.name,
                     b.elt * a.elt * b.elt, b.elt);
          } else {
            relation(r, a.name + " " + b.name + " commute", a.elt * b.elt, b.elt * a.elt);
          }
        }
      break;
    }
  }
  return r;
}

Report verify_counts(const AlgebraKind& kind) {
  Report r;
  r.suite = std::string("counts-") + to_string(kind.variant());
  r.rank = kind.rank();
  const int n = kind.rank();

  auto basis = enumerate_basis(kind);
  auto counts = count_by_class(kind);
  auto expect = [&](AdmissibilityClass c, const BigInt& want) {
    std::int64_t got = counts.count(c) ? counts.at(c) : 0;
    r.add(std::string("class ") + to_string(c), want.str(), std::to_string(got));
  };

  BigInt total = 0;
  switch (kind.variant()) {
    case AlgebraVariant::TL:
      total = catalan(n);
      expect(AdmissibilityClass::TLPlain, total);
      break;
    case AlgebraVariant::Blob:
      total = binomial(2 * n, n);
      expect(AdmissibilityClass::BlobDiagram, total);
      break;
    case AlgebraVariant::TypeB:
      expect(AdmissibilityClass::B1, catalan(n));
      expect(AdmissibilityClass::B1prime, catalan(n) - 1);
      expect(AdmissibilityClass::B2, binomial(2 * n, n) - catalan(n));
      total = BigInt(n + 2) * catalan(n) - 1;
      break;
    case AlgebraVariant::TypeD:
      expect(AdmissibilityClass::D1, catalan(n) - 1);
      expect(AdmissibilityClass::D2, binomial(2 * n, n) / 2);
      total = BigInt(n + 3) * catalan(n) / 2 - 1;
      break;
    case AlgebraVariant::DQuotient:
      total = binomial(2 * n, n) / 2;
      expect(AdmissibilityClass::D2, total);
      break;
  }
  r.add("total dimension", total.str(), std::to_string(basis.size()));

  auto span = span_reachability(kind);
  r.add_check("generated span equals basis", std::to_string(basis.size()) + " diagrams",
              std::to_string(span.size()) + " diagrams", span == basis);

  if (kind.variant() == AlgebraVariant::TypeD || kind.variant() == AlgebraVariant::DQuotient) {
    // Toggling the northwest decoration pairs the blob diagrams into orbits
    // of size two with exactly one even member, halving the count.
    auto blobs = enumerate_basis(AlgebraKind::blob(n));
    long long bad = 0, even = 0;
    for (const auto& d : blobs) {
      DecoratedTangle t = toggle_nw(d);
      if (t == d || !(toggle_nw(t) == d)) ++bad;
      if ((t.decoration_total() + d.decoration_total()) % 2 == 0) ++bad;
      if (d.decoration_total() % 2 == 0) ++even;
    }
    r.add_check("northwest toggle is a parity-flipping pairing", "0 violations",
                std::to_string(bad) + " violations", bad == 0);
    r.add("even-decoration blob diagrams", (binomial(2 * n, n) / 2).str(),
          std::to_string(even));
  }
  return r;
}

Report verify_symmetric_embedding(int n) {
  Report r;
  r.suite = "symmetric-embedding";
  r.rank = n;

  auto blobs = enumerate_basis(AlgebraKind::blob(n));
  const AlgebraKind tl2n = AlgebraKind::tl(2 * n);

  long long bad_round = 0;
  std::set<DecoratedTangle> image;
  for (const auto& b : blobs) {
    DecoratedTangle s = to_symmetric(b);
    if (!left_right_symmetric(s) || !s.loop_free() || !s.arcs_undecorated() ||
        !(from_symmetric(s) == b))
      ++bad_round;
    image.insert(s);
  }
  r.add_check("round trip through the symmetric representation", "0 violations",
              std::to_string(bad_round) + " violations over " + std::to_string(blobs.size()) +
                  " blob diagrams",
              bad_round == 0);

  std::set<DecoratedTangle> symmetric;
  for (const auto& d : enumerate_basis(tl2n))
    if (left_right_symmetric(d)) symmetric.insert(d);
  r.add("symmetric diagram count", binomial(2 * n, n).str(),
        std::to_string(symmetric.size()));
  r.add_check("image is exactly the symmetric diagrams",
              std::to_string(symmetric.size()) + " diagrams",
              std::to_string(image.size()) + " diagrams", image == symmetric);

  // Generator map: e_i -> e_{n+i} e_{n-i}, e -> e_n / d.
  const AlgebraKind blob_kind = AlgebraKind::blob(n);
  std::vector<Letter> gens = standard_alphabet(blob_kind);

  bool map_ok = true;
  for (const auto& l : gens) {
    DecoratedTangle g = generator_diagram(l, n);
    DecoratedTangle want =
        l.kind == Letter::E
            ? generator_e_i(n, 2 * n)
            : reduce(concatenate(generator_e_i(n + l.index, 2 * n),
                                 generator_e_i(n - l.index, 2 * n)),
                     tl2n)
                  .diagram;
    if (!(to_symmetric(g) == want)) map_ok = false;
  }
  r.add_check("generator images match e_{n+i} e_{n-i} and e_n", "match",
              map_ok ? "match" : "mismatch", map_ok);

  // phi(x) = d^{-decorations(x)} sym(x), blob products at (d^2, 1), plain
  // products in TL_{2n} with loop factor d.
  const std::map<Var, Scalar> blob_params{{Var::D, Scalar::variable(Var::D, 2)},
                                          {Var::Dp, Scalar(1)}};
  long long bad_mult = 0;
  for (const auto& lg : gens) {
    for (const auto& lh : gens) {
      DecoratedTangle g = generator_diagram(lg, n), h = generator_diagram(lh, n);
      Reduction blob_prod = reduce(concatenate(g, h), blob_kind);
      Scalar target = substitute(blob_prod.coeff, blob_params) *
                      Scalar::variable(Var::D, -blob_prod.diagram.decoration_total());
      Reduction tl_prod = reduce(concatenate(to_symmetric(g), to_symmetric(h)), tl2n);
      Scalar got = tl_prod.coeff *
                   Scalar::variable(Var::D, -(g.decoration_total() + h.decoration_total()));
      if (!(tl_prod.diagram == to_symmetric(blob_prod.diagram)) || !(got == target)) ++bad_mult;
    }
  }
  r.add_check("generator map is multiplicative on generator pairs", "0 violations",
              std::to_string(bad_mult) + " violations over " +
                  std::to_string(gens.size() * gens.size()) + " pairs",
              bad_mult == 0);
  return r;
}

}  // namespace tanglekit
