// Command-line surface for the decorated-tangle algebra library: basis
// enumeration, word evaluation, verification suites, structure-constant
// tables with on-disk caching, and diagram rendering.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "tanglekit/io.hpp"
#include "tanglekit/symmetric.hpp"
#include "tanglekit/verify.hpp"
#include "tanglekit/words.hpp"

namespace fs = std::filesystem;
using namespace tanglekit;
using nlohmann::json;

namespace {

AlgebraKind make_kind(const std::string& algebra, int rank) {
  switch (variant_from_string(algebra)) {
    case AlgebraVariant::TL: return AlgebraKind::tl(rank);
    case AlgebraVariant::Blob: return AlgebraKind::blob(rank);
    case AlgebraVariant::TypeB: return AlgebraKind::type_b(rank);
    case AlgebraVariant::TypeD: return AlgebraKind::type_d(rank);
    case AlgebraVariant::DQuotient: return AlgebraKind::d_quotient(rank);
  }
  fail(Errc::IllegalLetter, algebra);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::CorruptTable, "cannot write " + out_path);
  out << payload;
}

int run_enumerate(const std::string& algebra, int rank, const std::string& format,
                  const std::string& out) {
  AlgebraKind kind = make_kind(algebra, rank);
  auto basis = enumerate_basis(kind);
  if (format == "json") {
    json arr = json::array();
    for (const auto& d : basis)
      arr.push_back({{"diagram", d.str()}, {"class", to_string(classify(d, kind))}});
    emit(arr.dump(2) + "\n", out);
  } else {
    std::string payload;
    for (const auto& d : basis)
      payload += d.str() + "\t" + to_string(classify(d, kind)) + "\n";
    emit(payload, out);
  }
  return 0;
}

int run_eval(const std::string& algebra, int rank, const std::string& word_text, bool extended,
             const std::string& format, const std::string& out) {
  AlgebraKind kind = make_kind(algebra, rank);
  GeneratorWord w = GeneratorWord::parse(kind, word_text, extended);
  Element v = evaluate_word(w);
  if (format == "json") {
    json terms = json::array();
    for (const auto& [d, c] : v.terms())
      terms.push_back({{"coeff", scalar_to_json(c)}, {"diagram", d.str()}});
    json j{{"algebra", to_string(v.kind().variant())},
           {"rank", v.kind().rank()},
           {"word", w.str()},
           {"terms", terms}};
    emit(j.dump(2) + "\n", out);
  } else {
    emit(v.str() + "\n", out);
  }
  return 0;
}

int run_render(const std::string& algebra, int rank,
               const std::optional<std::string>& word_text, const std::string& out) {
  AlgebraKind kind = make_kind(algebra, rank);
  std::string payload;
  if (word_text) {
    GeneratorWord w = GeneratorWord::parse(kind, *word_text, /*extended=*/true);
    for (const auto& [d, c] : evaluate_word(w).terms()) payload += d.str() + "\n";
  } else {
    for (const auto& l : standard_alphabet(kind))
      payload += l.str() + "\t" + generator_diagram(l, kind.node_count()).str() + "\n";
  }
  emit(payload, out);
  return 0;
}

int run_table(const std::string& algebra, int rank, std::string cache_dir,
              const std::string& out) {
  AlgebraKind kind = make_kind(algebra, rank);
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("TANGLEKIT_CACHE"))
      cache_dir = env;
    else
      cache_dir = ".tanglekit-cache";
  }
  fs::create_directories(cache_dir);
  fs::path file = fs::path(cache_dir) / (std::string("table-") + to_string(kind.variant()) +
                                         "-" + std::to_string(rank) + "-" + param_hash(kind) +
                                         ".json");
  StructureTable table{kind, {}, {}};
  bool cached = false;
  if (fs::exists(file)) {
    try {
      table = load_table(file.string());
      cached = true;
    } catch (const TangleError& e) {
      std::cerr << "cache rejected (" << e.what() << "), recomputing\n";
    }
  }
  if (!cached) {
    table = structure_constants(kind);
    save_table(table, file.string());
  }
  emit(table_to_json(table).dump(2) + "\n", out);
  return 0;
}

struct SuiteSelection {
  bool counts, presentation, span, symmetric, words;
};

int run_verify(const SuiteSelection& sel, int max_rank, int max_len, const std::string& format,
               const std::string& out) {
  std::vector<Report> reports;

  auto ranks = [&](int lo) {
    std::vector<int> rs;
    for (int r = lo; r <= max_rank; ++r) rs.push_back(r);
    return rs;
  };

  if (sel.counts) {
    for (int r : ranks(2)) reports.push_back(verify_counts(AlgebraKind::tl(r)));
    for (int r : ranks(2)) reports.push_back(verify_counts(AlgebraKind::blob(r)));
    for (int r : ranks(2)) reports.push_back(verify_counts(AlgebraKind::type_b(r)));
    for (int r : ranks(4)) reports.push_back(verify_counts(AlgebraKind::type_d(r)));
    for (int r : ranks(2)) reports.push_back(verify_counts(AlgebraKind::d_quotient(r)));
  }
  if (sel.presentation) {
    for (int r : ranks(2)) reports.push_back(verify_presentation(AlgebraKind::tl(r)));
    for (int r : ranks(2)) reports.push_back(verify_presentation(AlgebraKind::blob(r)));
    for (int r : ranks(2)) reports.push_back(verify_presentation(AlgebraKind::type_b(r)));
    for (int r : ranks(4)) reports.push_back(verify_presentation(AlgebraKind::type_d(r)));
    for (int r : ranks(4)) reports.push_back(verify_presentation(AlgebraKind::d_quotient(r)));
  }
  if (sel.span) {
    auto span_report = [](const AlgebraKind& kind) {
      Report r;
      r.suite = std::string("span-") + to_string(kind.variant());
      r.rank = kind.rank();
      auto basis = enumerate_basis(kind);
      auto span = span_reachability(kind);
      r.add_check("generators reach the whole basis", std::to_string(basis.size()),
                  std::to_string(span.size()), span == basis);
      return r;
    };
    for (int r : ranks(2)) reports.push_back(span_report(AlgebraKind::tl(r)));
    for (int r : ranks(2)) reports.push_back(span_report(AlgebraKind::type_b(r)));
    for (int r : ranks(4)) reports.push_back(span_report(AlgebraKind::type_d(r)));
  }
  if (sel.symmetric) {
    for (int r : ranks(2)) reports.push_back(verify_symmetric_embedding(r));
  }
  if (sel.words) {
    for (int r : ranks(2)) {
      reports.push_back(verify_word_properties(AlgebraKind::tl(r), max_len));
      reports.push_back(verify_word_properties(AlgebraKind::blob(r), max_len));
      reports.push_back(verify_rewrite_contracts(AlgebraKind::blob(r), max_len));
    }
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass &= r.overall();

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    emit(arr.dump(2) + "\n", out);
  } else {
    std::string payload;
    for (const auto& r : reports) payload += r.text();
    payload += all_pass ? "all suites: PASS\n" : "all suites: FAIL\n";
    emit(payload, out);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact diagram calculi for Temperley-Lieb, blob and type B/D algebras"};
  app.require_subcommand(1);

  std::string algebra = "tl", format = "text", out, word_text, cache_dir, suite = "all";
  int rank = 3, max_rank = 4, max_len = 6;
  bool extended = false;
  std::optional<std::string> render_word;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra, "tl | blob | typeB | typeD | dquotient");
    cmd->add_option("--rank", rank, "algebra rank");
    cmd->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out, "write output to a file instead of stdout");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate", "list the basis diagrams with classes");
  add_common(c_enum);

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a generator word");
  add_common(c_eval);
  c_eval->add_option("--word", word_text, "whitespace-separated letters, e.g. \"e1 e e1\"")
      ->required();
  c_eval->add_flag("--extended", extended, "admit the extended alphabet");

  CLI::App* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify
      ->add_option("--suite", suite, "counts | presentation | span | symmetric | words | all")
      ->check(CLI::IsMember({"counts", "presentation", "span", "symmetric", "words", "all"}));
  c_verify->add_option("--max-rank", max_rank, "largest rank per suite");
  c_verify->add_option("--max-len", max_len, "word length bound for the words suite");
  c_verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  c_verify->add_option("--out", out, "write output to a file instead of stdout");

  CLI::App* c_table = app.add_subcommand("table", "structure constants with caching");
  c_table->add_option("--algebra", algebra, "tl | blob | typeB | typeD | dquotient");
  c_table->add_option("--rank", rank, "algebra rank");
  c_table->add_option("--cache-dir", cache_dir, "cache directory (default .tanglekit-cache)");
  c_table->add_option("--out", out, "write output to a file instead of stdout");

  CLI::App* c_render = app.add_subcommand("render", "canonical text of diagrams");
  c_render->add_option("--algebra", algebra, "tl | blob | typeB | typeD | dquotient");
  c_render->add_option("--rank", rank, "algebra rank");
  c_render->add_option("--word", render_word, "render the diagrams of this word's value");
  c_render->add_option("--out", out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_enum->parsed()) return run_enumerate(algebra, rank, format, out);
    if (c_eval->parsed()) return run_eval(algebra, rank, word_text, extended, format, out);
    if (c_verify->parsed()) {
      SuiteSelection sel{suite == "all" || suite == "counts",
                         suite == "all" || suite == "presentation",
                         suite == "all" || suite == "span",
                         suite == "all" || suite == "symmetric",
                         suite == "all" || suite == "words"};
      return run_verify(sel, max_rank, max_len, format, out);
    }
    if (c_table->parsed()) return run_table(algebra, rank, cache_dir, out);
    if (c_render->parsed()) return run_render(algebra, rank, render_word, out);
  } catch (const TangleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
