#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "latticeforge/cex.hpp"
#include "latticeforge/pipeline.hpp"

namespace lf = latticeforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitPartialFailure = 3;

struct CommonOptions {
  std::string wordnet_dir;
  int depth = 4;
  std::string threshold = "2";
  std::string order = "none";
  bool fold_case = false;
};

void add_wordnet_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--wordnet-dir", opts.wordnet_dir,
                  "WordNet dict directory (fallback: $WNHOME)");
}

void add_technique_options(CLI::App* cmd, CommonOptions& opts) {
  add_wordnet_option(cmd, opts);
  cmd->add_option("--depth", opts.depth, "Hypernym search depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--threshold", opts.threshold, "Frequency threshold in percent")
      ->capture_default_str();
  cmd->add_option("--order", opts.order, "Reduction order")
      ->check(CLI::IsMember({"none", "wn", "freq", "wn-freq", "freq-wn"}))
      ->capture_default_str();
}

lf::TechniqueConfig technique_from(const CommonOptions& opts) {
  lf::TechniqueConfig config;
  auto order = lf::order_from_name(opts.order);
  if (!order) throw lf::ConfigError("unknown order: " + opts.order);
  config.order = *order;
  config.hypernym_depth = opts.depth;
  config.threshold = lf::Percent::parse(opts.threshold);
  return config;
}

std::optional<std::filesystem::path> wordnet_flag(const CommonOptions& opts) {
  if (opts.wordnet_dir.empty()) return std::nullopt;
  return std::filesystem::path(opts.wordnet_dir);
}

std::optional<lf::WordNetDb> load_wordnet(const CommonOptions& opts, bool required) {
  auto dir = lf::resolve_wordnet_dir(wordnet_flag(opts));
  if (!dir) {
    if (required) {
      throw lf::ConfigError(
          "a lexical database is needed; pass --wordnet-dir or set WNHOME");
    }
    return std::nullopt;
  }
  return lf::WordNetDb::load(*dir);
}

lf::InputKind kind_from(const std::string& name) {
  if (name == "auto") return lf::InputKind::auto_detect;
  if (name == "deps") return lf::InputKind::dependencies;
  if (name == "pairs") return lf::InputKind::pairs;
  if (name == "cex") return lf::InputKind::cex;
  throw lf::ConfigError("unknown input kind: " + name);
}

void emit(const std::string& out_file, const std::string& bytes) {
  if (out_file.empty()) {
    std::cout << bytes;
  } else {
    lf::write_file(out_file, bytes);
  }
}

lf::FormalContext load_context_any(const std::string& input, const std::string& kind,
                                   const lf::WordNetDb* db, bool fold_case) {
  return lf::load_context(input, kind_from(kind), db, fold_case);
}

std::string context_csv_or_cex(const lf::FormalContext& ctx, const std::string& format,
                               bool extended) {
  if (format == "csv") return ctx.to_csv();
  if (format == "cex") return lf::write_cex(ctx, extended);
  throw lf::ConfigError("unsupported context format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept-lattice toolkit: dependency pairs to reduced concept lattices"};
  app.require_subcommand(1);

  auto* nlp = app.add_subcommand("nlp", "Raw-text utilities");
  nlp->require_subcommand(1);
  std::string nlp_input, nlp_out;
  auto* nlp_split = nlp->add_subcommand("split", "Split text into sentences");
  nlp_split->add_option("input", nlp_input, "Text file")->required();
  nlp_split->add_option("-o,--out", nlp_out, "Output file (default stdout)");
  auto* nlp_tokenize = nlp->add_subcommand("tokenize", "Tokenize text sentence by sentence");
  nlp_tokenize->add_option("input", nlp_input, "Text file")->required();
  nlp_tokenize->add_option("-o,--out", nlp_out, "Output file (default stdout)");

  auto* ingest = app.add_subcommand("ingest", "Build a formal context from parsed text");
  CommonOptions ingest_opts;
  std::string ingest_input, ingest_out, ingest_kind = "auto", ingest_format = "cex";
  bool ingest_plain = false;
  ingest->add_option("input", ingest_input, "Dependency, pair or context file")->required();
  ingest->add_option("--kind", ingest_kind, "Input kind")
      ->check(CLI::IsMember({"auto", "deps", "pairs", "cex"}))
      ->capture_default_str();
  ingest->add_option("--format", ingest_format, "Output format")
      ->check(CLI::IsMember({"cex", "csv"}))
      ->capture_default_str();
  ingest->add_flag("--plain", ingest_plain, "Write cex without frequency annotations");
  ingest->add_flag("--fold-case", ingest_opts.fold_case, "Lowercase all labels");
  add_wordnet_option(ingest, ingest_opts);
  ingest->add_option("-o,--out", ingest_out, "Output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Apply reduction techniques to a context");
  CommonOptions reduce_opts;
  std::string reduce_input, reduce_out, reduce_kind = "auto", reduce_format = "cex";
  std::string reduce_report;
  bool reduce_plain = false;
  reduce->add_option("input", reduce_input, "Context, pair or dependency file")->required();
  reduce->add_option("--kind", reduce_kind, "Input kind")
      ->check(CLI::IsMember({"auto", "deps", "pairs", "cex"}))
      ->capture_default_str();
  add_technique_options(reduce, reduce_opts);
  reduce->add_option("--format", reduce_format, "Output format")
      ->check(CLI::IsMember({"cex", "csv"}))
      ->capture_default_str();
  reduce->add_flag("--plain", reduce_plain, "Write cex without frequency annotations");
  reduce->add_flag("--fold-case", reduce_opts.fold_case, "Lowercase all labels");
  reduce->add_option("--report", reduce_report, "Write the reduction report CSV here");
  reduce->add_option("-o,--out", reduce_out, "Output file (default stdout)");

  auto* lattice_cmd = app.add_subcommand("lattice", "Derive the concept lattice");
  std::string lattice_input, lattice_out, lattice_kind = "auto", lattice_format = "dot";
  CommonOptions lattice_opts;
  lattice_cmd->add_option("input", lattice_input, "Context, pair or dependency file")
      ->required();
  lattice_cmd->add_option("--kind", lattice_kind, "Input kind")
      ->check(CLI::IsMember({"auto", "deps", "pairs", "cex"}))
      ->capture_default_str();
  lattice_cmd->add_option("--format", lattice_format, "Output format")
      ->check(CLI::IsMember({"dot", "csv"}))
      ->capture_default_str();
  add_wordnet_option(lattice_cmd, lattice_opts);
  lattice_cmd->add_option("-o,--out", lattice_out, "Output file (default stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "Lattice statistics of a context");
  std::string stats_input, stats_out, stats_kind = "auto";
  CommonOptions stats_opts;
  stats_cmd->add_option("input", stats_input, "Context, pair or dependency file")
      ->required();
  stats_cmd->add_option("--kind", stats_kind, "Input kind")
      ->check(CLI::IsMember({"auto", "deps", "pairs", "cex"}))
      ->capture_default_str();
  add_wordnet_option(stats_cmd, stats_opts);
  stats_cmd->add_option("-o,--out", stats_out, "Output file (default stdout)");

  auto* run = app.add_subcommand("run", "Full pipeline: ingest, reduce, lattice, stats");
  CommonOptions run_opts;
  std::string run_input, run_out_dir, run_kind = "auto";
  bool run_no_dot = false, run_plain = false;
  run->add_option("input", run_input, "Dependency, pair or context file")->required();
  run->add_option("--kind", run_kind, "Input kind")
      ->check(CLI::IsMember({"auto", "deps", "pairs", "cex"}))
      ->capture_default_str();
  add_technique_options(run, run_opts);
  run->add_flag("--fold-case", run_opts.fold_case, "Lowercase all labels");
  run->add_flag("--no-dot", run_no_dot, "Skip the lattice.dot artifact");
  run->add_flag("--plain-cex", run_plain, "Write reduced.cex without frequencies");
  run->add_option("-o,--out", run_out_dir, "Output directory")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate every corpus in a directory");
  CommonOptions eval_opts;
  std::string eval_dir, eval_out, eval_format = "csv";
  eval->add_option("corpus_dir", eval_dir, "Directory of corpus files")->required();
  add_wordnet_option(eval, eval_opts);
  eval->add_option("--depth", eval_opts.depth, "Hypernym search depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eval->add_option("--threshold", eval_opts.threshold, "Frequency threshold in percent")
      ->capture_default_str();
  eval->add_option("--format", eval_format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  eval->add_option("-o,--out", eval_out, "Output file (default stdout)");

  auto* cex = app.add_subcommand("cex", "Context file utilities");
  cex->require_subcommand(1);
  std::string cex_input, cex_out, cex_format = "cex";
  bool cex_lenient = false, cex_plain = false;
  auto* cex_validate = cex->add_subcommand("validate", "Check a cex document");
  cex_validate->add_option("input", cex_input, "cex file")->required();
  cex_validate->add_flag("--lenient", cex_lenient,
                         "Report frequency mismatches without failing");
  auto* cex_convert = cex->add_subcommand("convert", "Convert between cex and csv");
  cex_convert->add_option("input", cex_input, "cex or csv file")->required();
  cex_convert->add_option("--format", cex_format, "Output format")
      ->check(CLI::IsMember({"cex", "csv"}))
      ->capture_default_str();
  cex_convert->add_flag("--plain", cex_plain, "Write cex without frequency annotations");
  cex_convert->add_option("-o,--out", cex_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (nlp_split->parsed()) {
      std::string text = lf::read_file(nlp_input);
      std::string out;
      for (const auto& sentence : lf::split_sentences(text)) {
        out += sentence.text;
        out += '\n';
      }
      emit(nlp_out, out);
    } else if (nlp_tokenize->parsed()) {
      std::string text = lf::read_file(nlp_input);
      std::string out;
      for (const auto& sentence : lf::split_sentences(text)) {
        auto tokens = lf::tokenize(sentence.text);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
          if (i) out += ' ';
          out += tokens[i].text;
        }
        out += '\n';
      }
      emit(nlp_out, out);
    } else if (ingest->parsed()) {
      auto db = load_wordnet(ingest_opts, false);
      lf::FormalContext ctx = load_context_any(ingest_input, ingest_kind,
                                               db ? &*db : nullptr,
                                               ingest_opts.fold_case);
      if (ctx.object_count() == 0 && ctx.attribute_count() == 0) {
        std::cerr << "warning: empty context\n";
      }
      emit(ingest_out, context_csv_or_cex(ctx, ingest_format, !ingest_plain));
    } else if (reduce->parsed()) {
      lf::TechniqueConfig technique = technique_from(reduce_opts);
      const bool needs_wordnet = technique.order != lf::ReductionOrder::none &&
                                 technique.order != lf::ReductionOrder::frequency_only;
      auto db = load_wordnet(reduce_opts, needs_wordnet);
      lf::FormalContext ctx = load_context_any(reduce_input, reduce_kind,
                                               db ? &*db : nullptr,
                                               reduce_opts.fold_case);
      std::optional<lf::WordNetLexicon> lexicon;
      if (db) lexicon.emplace(*db);
      auto [reduced, reports] =
          lf::apply_order(ctx, technique, lexicon ? &*lexicon : nullptr);
      emit(reduce_out, context_csv_or_cex(reduced, reduce_format, !reduce_plain));
      if (!reduce_report.empty()) {
        std::string report_csv;
        for (const auto& report : reports) report_csv += report.csv();
        lf::write_file(reduce_report, report_csv);
      }
    } else if (lattice_cmd->parsed()) {
      auto db = load_wordnet(lattice_opts, false);
      lf::FormalContext ctx = load_context_any(lattice_input, lattice_kind,
                                               db ? &*db : nullptr, false);
      lf::ConceptLattice lattice = lf::build_lattice(ctx);
      if (lattice_format == "dot") {
        emit(lattice_out, lf::export_dot(lattice));
      } else {
        emit(lattice_out, std::string(lf::kStatsCsvHeader) + "\n" +
                              lf::stats_csv_row(lf::lattice_stats(lattice)) + "\n");
      }
    } else if (stats_cmd->parsed()) {
      auto db = load_wordnet(stats_opts, false);
      lf::FormalContext ctx = load_context_any(stats_input, stats_kind,
                                               db ? &*db : nullptr, false);
      lf::LatticeStats stats = lf::lattice_stats(lf::build_lattice(ctx));
      emit(stats_out, std::string(lf::kStatsCsvHeader) + "\n" +
                          lf::stats_csv_row(stats) + "\n");
    } else if (run->parsed()) {
      lf::RunConfig config;
      config.input = run_input;
      config.kind = kind_from(run_kind);
      config.technique = technique_from(run_opts);
      config.wordnet_dir = wordnet_flag(run_opts);
      config.out_dir = run_out_dir;
      config.fold_case = run_opts.fold_case;
      config.extended_cex = !run_plain;
      config.emit_dot = !run_no_dot;
      lf::PipelineResult result = lf::run_pipeline(config);
      std::cerr << "wrote " << result.artifacts.size() << " artifacts to "
                << run_out_dir << "\n";
    } else if (eval->parsed()) {
      lf::TechniqueConfig base = technique_from(eval_opts);
      auto db = load_wordnet(eval_opts, true);
      lf::EvalOutcome outcome =
          lf::eval_corpus(eval_dir, base, *db, eval_format == "tsv" ? '\t' : ',');
      emit(eval_out, outcome.csv);
      for (const auto& failure : outcome.failures) {
        std::cerr << "corpus failed: " << failure << "\n";
      }
      if (!outcome.failures.empty()) return kExitPartialFailure;
    } else if (cex_validate->parsed()) {
      lf::CexDocument doc = lf::read_cex(lf::read_file(cex_input));
      auto mismatches = lf::frequency_mismatches(doc);
      for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
      if (!mismatches.empty() && !cex_lenient) return kExitInputError;
      std::cout << "ok: " << doc.context.object_count() << " objects, "
                << doc.context.attribute_count() << " attributes"
                << (doc.extended ? ", extended" : "") << "\n";
    } else if (cex_convert->parsed()) {
      lf::InputKind kind = lf::detect_input_kind(cex_input);
      lf::FormalContext ctx;
      if (kind == lf::InputKind::cex) {
        ctx = lf::read_cex(lf::read_file(cex_input)).context;
      } else {
        ctx = lf::FormalContext::from_csv(lf::read_file(cex_input));
      }
      emit(cex_out, context_csv_or_cex(ctx, cex_format, !cex_plain));
    }
  } catch (const lf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const lf::MissingDatabaseFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const lf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
