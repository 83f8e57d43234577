#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include <latticeforge/errors.hpp>
#include <latticeforge/pipeline.hpp>

#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using latticeforge::InputKind;
using latticeforge::RunConfig;

namespace {

// The suite controls its lexicon through explicit paths only.
const bool kEnvCleared = [] {
  ::unsetenv("WNHOME");
  return true;
}();

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("latticeforge-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const latticeforge::WordNetDb& db() {
  static auto instance = latticeforge::WordNetDb::load(lf_test::wordnet_dir());
  return instance;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("input kinds follow the extension") {
  CHECK(latticeforge::detect_input_kind("a.cex") == InputKind::cex);
  CHECK(latticeforge::detect_input_kind("a.XML") == InputKind::cex);
  CHECK(latticeforge::detect_input_kind("a.tsv") == InputKind::pairs);
  CHECK(latticeforge::detect_input_kind("a.pairs") == InputKind::pairs);
  CHECK(latticeforge::detect_input_kind("a.dep") == InputKind::dependencies);
  CHECK(latticeforge::detect_input_kind("a.txt") == InputKind::dependencies);
  CHECK(latticeforge::detect_input_kind("noext") == InputKind::dependencies);
}

TEST_CASE("missing files raise an error") {
  CHECK_THROWS_AS(latticeforge::read_file("/no/such/file"), latticeforge::Error);
  CHECK_THROWS_AS(latticeforge::load_context("/no/such/file.tsv",
                                             InputKind::auto_detect, nullptr,
                                             false),
                  latticeforge::Error);
}

TEST_CASE("the wordnet directory resolves through flag and environment") {
  auto flagged = latticeforge::resolve_wordnet_dir(fs::path(lf_test::wordnet_dir()));
  REQUIRE(flagged.has_value());
  CHECK(fs::exists(*flagged / "index.noun"));

  // A parent holding dict/ is accepted in place of dict itself.
  auto parent = latticeforge::resolve_wordnet_dir(
      fs::path(lf_test::data_dir()) / "wordnet");
  REQUIRE(parent.has_value());
  CHECK(fs::exists(*parent / "index.noun"));
}

TEST_CASE("contexts load from every input kind") {
  fs::path dir = fresh_dir("load");
  {
    std::ofstream(dir / "pairs.tsv") << "book\thotel\ndrive\tcar\n";
    std::ofstream(dir / "deps.dep")
        << "nsubj(drove-2, man-1)\ndobj(drove-2, car-4)\n";
    std::ofstream(dir / "ctx.cex")
        << latticeforge::write_cex(lf_test::verbs(), true);
  }

  auto pairs_ctx = latticeforge::load_context(dir / "pairs.tsv",
                                              InputKind::auto_detect, nullptr,
                                              false);
  CHECK(pairs_ctx.objects() == std::vector<std::string>{"hotel", "car"});
  CHECK(pairs_ctx.attributes() == std::vector<std::string>{"book", "drive"});

  auto deps_ctx = latticeforge::load_context(dir / "deps.dep",
                                             InputKind::auto_detect, &db(),
                                             false);
  CHECK(deps_ctx.objects() == std::vector<std::string>{"man", "car"});
  CHECK(deps_ctx.attributes() == std::vector<std::string>{"drive"});

  auto cex_ctx = latticeforge::load_context(dir / "ctx.cex",
                                            InputKind::auto_detect, nullptr,
                                            false);
  CHECK(cex_ctx == lf_test::verbs());
}

TEST_CASE("the pipeline writes all artifacts") {
  fs::path dir = fresh_dir("run");
  std::ofstream(dir / "input.tsv")
      << "book\thotel\nbook\ttrip\njoin\ttrip\ndrive\tcar\n";

  RunConfig config;
  config.input = dir / "input.tsv";
  config.out_dir = dir / "out";
  config.technique.order = latticeforge::ReductionOrder::none;
  auto result = latticeforge::run_pipeline(config);

  CHECK(result.context.object_count() == 3);
  CHECK(result.context.attribute_count() == 3);
  CHECK(result.reduced == result.context);
  CHECK(result.reports.empty());
  for (const char* name :
       {"context.cex", "reduced.cex", "lattice.dot", "stats.csv", "report.txt"}) {
    CHECK(fs::exists(dir / "out" / name));
  }

  auto stats_text = latticeforge::read_file(dir / "out" / "stats.csv");
  CHECK(stats_text.substr(0, stats_text.find('\n')) ==
        "concepts,edges,height,width_lo,width_hi");

  auto report = latticeforge::read_file(dir / "out" / "report.txt");
  CHECK(report.find("input: input.tsv") != std::string::npos);
  CHECK(report.find("order: none") != std::string::npos);
  CHECK(report.find("context: 3 objects, 3 attributes") != std::string::npos);
}

TEST_CASE("lexical orders without a database are configuration errors") {
  fs::path dir = fresh_dir("nolex");
  std::ofstream(dir / "input.tsv") << "book\thotel\n";
  RunConfig config;
  config.input = dir / "input.tsv";
  config.out_dir = dir / "out";
  config.technique.order = latticeforge::ReductionOrder::wordnet_only;

  REQUIRE(kEnvCleared);
  CHECK_THROWS_AS(latticeforge::run_pipeline(config), latticeforge::ConfigError);
}

TEST_CASE("runs are reproducible byte for byte") {
  fs::path dir = fresh_dir("repro");
  std::ofstream(dir / "input.tsv")
      << "be\tmuseum\ndedicate\tLondon\noriginate\texistence\nbe\tresult\n"
         "result\tfootprint\nbe\tmuseum\nobject\tobject\nbe\tobject\n"
         "be\tbody\nsponsor\tbody\nSport\tculture\ncharge\tbody\n"
         "fee\tcharge\nbe\tMacGregor\n";

  RunConfig config;
  config.input = dir / "input.tsv";
  config.wordnet_dir = fs::path(lf_test::wordnet_dir());
  config.technique.order = latticeforge::ReductionOrder::wordnet_then_frequency;
  config.technique.hypernym_depth = 4;
  config.technique.threshold = latticeforge::Percent::of(5);

  config.out_dir = dir / "first";
  latticeforge::run_pipeline(config);
  config.out_dir = dir / "second";
  latticeforge::run_pipeline(config);

  for (const char* name :
       {"context.cex", "reduced.cex", "lattice.dot", "stats.csv", "report.txt"}) {
    CHECK(latticeforge::read_file(dir / "first" / name) ==
          latticeforge::read_file(dir / "second" / name));
  }
}

TEST_CASE("corpus evaluation covers five configurations per corpus") {
  latticeforge::TechniqueConfig base;
  base.hypernym_depth = 4;
  base.threshold = latticeforge::Percent::of(2);
  auto outcome = latticeforge::eval_corpus(lf_test::corpus_dir(), base, db());
  CHECK(outcome.failures.empty());
  CHECK(outcome.rows.size() == 100);

  // Every corpus contributes each configuration exactly once.
  std::map<std::string, int> per_corpus;
  for (const auto& row : outcome.rows) per_corpus[row.corpus]++;
  CHECK(per_corpus.size() == 20);
  for (const auto& [corpus, count] : per_corpus) CHECK(count == 5);

  // Header plus 100 data rows plus 5 configs of 8 aggregate rows.
  std::size_t lines = 0;
  for (char c : outcome.csv)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 100 + 5 * 8);
  CHECK(outcome.csv.rfind("corpus,config,", 0) == 0);
}

TEST_CASE("evaluation failures are reported per corpus") {
  fs::path dir = fresh_dir("evalfail");
  std::ofstream(dir / "good.tsv") << "book\thotel\n";
  std::ofstream(dir / "bad.tsv") << "no tab here\n";
  latticeforge::TechniqueConfig base;
  auto outcome = latticeforge::eval_corpus(dir, base, db());
  CHECK(outcome.rows.size() == 5);
  REQUIRE(outcome.failures.size() == 1);
  CHECK(outcome.failures[0].rfind("bad:", 0) == 0);

  CHECK_THROWS_AS(latticeforge::eval_corpus(dir / "missing", base, db()),
                  latticeforge::Error);
}

}  // TEST_SUITE
