#include "latticeforge/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latticeforge {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output file: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write output file: " + path.string());
}

InputKind detect_input_kind(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (ext == ".cex" || ext == ".xml") return InputKind::cex;
  if (ext == ".tsv" || ext == ".pairs") return InputKind::pairs;
  return InputKind::dependencies;
}

namespace {

std::filesystem::path accept_dict_subdir(std::filesystem::path dir) {
  if (!std::filesystem::exists(dir / "index.noun") &&
      std::filesystem::exists(dir / "dict" / "index.noun")) {
    return dir / "dict";
  }
  return dir;
}

}  // namespace

std::optional<std::filesystem::path> resolve_wordnet_dir(
    const std::optional<std::filesystem::path>& flag) {
  if (flag) return accept_dict_subdir(*flag);
  if (const char* env = std::getenv("WNHOME"); env && *env) {
    return accept_dict_subdir(std::filesystem::path(env));
  }
  return std::nullopt;
}

FormalContext load_context(const std::filesystem::path& path, InputKind kind,
                           const WordNetDb* db, bool fold_case) {
  if (kind == InputKind::auto_detect) kind = detect_input_kind(path);
  const std::string bytes = read_file(path);
  switch (kind) {
    case InputKind::cex:
      return read_cex(bytes).context;
    case InputKind::pairs:
      return context_from_pairs(prune_pairs(pairs_from_tsv(bytes, fold_case), db));
    case InputKind::dependencies:
    default: {
      auto triples = filter_triples(parse_dependencies(bytes));
      return context_from_pairs(extract_pairs(triples, db, fold_case));
    }
  }
}

PipelineResult run_pipeline(const RunConfig& config) {
  std::optional<WordNetDb> db;
  if (auto dir = resolve_wordnet_dir(config.wordnet_dir)) {
    db.emplace(WordNetDb::load(*dir));
  }
  const bool wants_wordnet =
      config.technique.order == ReductionOrder::wordnet_only ||
      config.technique.order == ReductionOrder::wordnet_then_frequency ||
      config.technique.order == ReductionOrder::frequency_then_wordnet;
  if (wants_wordnet && !db) {
    throw ConfigError(
        "the selected order needs a lexical database; pass --wordnet-dir or set WNHOME");
  }

  PipelineResult result;
  result.context = load_context(config.input, config.kind,
                                db ? &*db : nullptr, config.fold_case);

  std::optional<WordNetLexicon> lexicon;
  if (db) lexicon.emplace(*db);
  auto [reduced, reports] = apply_order(result.context, config.technique,
                                        lexicon ? &*lexicon : nullptr);
  result.reduced = std::move(reduced);
  result.reports = std::move(reports);

  ConceptLattice lattice = build_lattice(result.reduced);
  result.stats = lattice_stats(lattice);

  std::filesystem::create_directories(config.out_dir);
  auto emit = [&](const char* name, const std::string& bytes) {
    std::filesystem::path path = config.out_dir / name;
    write_file(path, bytes);
    result.artifacts.push_back(std::move(path));
  };

  emit("context.cex", write_cex(result.context, true));
  emit("reduced.cex", write_cex(result.reduced, config.extended_cex));
  if (config.emit_dot) emit("lattice.dot", export_dot(lattice));
  emit("stats.csv", std::string(kStatsCsvHeader) + "\n" +
                        stats_csv_row(result.stats) + "\n");

  std::ostringstream report;
  report << "input: " << config.input.filename().string() << '\n';
  report << "order: " << order_name(config.technique.order) << '\n';
  report << "hypernym depth: " << config.technique.hypernym_depth << '\n';
  report << "threshold: " << config.technique.threshold.str() << "%\n";
  report << "context: " << result.context.object_count() << " objects, "
         << result.context.attribute_count() << " attributes\n";
  report << "reduced: " << result.reduced.object_count() << " objects, "
         << result.reduced.attribute_count() << " attributes\n\n";
  for (const auto& r : result.reports) report << r.text() << '\n';
  report << "lattice: " << result.stats.concepts << " concepts, "
         << result.stats.edges << " edges, height " << result.stats.height
         << ", width [" << result.stats.width_lo << ", " << result.stats.width_hi
         << "]" << (result.stats.width_exact ? "" : " (upper bound inexact)")
         << '\n';
  emit("report.txt", report.str());

  return result;
}

EvalOutcome eval_corpus(const std::filesystem::path& corpus_dir,
                        const TechniqueConfig& base, const WordNetDb& db,
                        char sep) {
  if (!std::filesystem::is_directory(corpus_dir)) {
    throw Error("corpus directory not found: " + corpus_dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  constexpr ReductionOrder kConfigs[] = {
      ReductionOrder::none, ReductionOrder::wordnet_only,
      ReductionOrder::frequency_only, ReductionOrder::wordnet_then_frequency,
      ReductionOrder::frequency_then_wordnet};

  EvalOutcome outcome;
  WordNetLexicon lexicon(db);
  for (const auto& file : files) {
    const std::string corpus = file.stem().string();
    try {
      FormalContext context =
          load_context(file, InputKind::auto_detect, &db, false);
      for (ReductionOrder order : kConfigs) {
        TechniqueConfig config = base;
        config.order = order;
        auto [reduced, reports] = apply_order(context, config, &lexicon);
        (void)reports;
        LatticeStats stats = lattice_stats(build_lattice(reduced));
        outcome.rows.push_back({corpus, order, stats});
      }
    } catch (const Error& e) {
      outcome.failures.push_back(corpus + ": " + e.what());
    }
  }
  outcome.csv = stats_csv(outcome.rows, sep);
  return outcome;
}

}  // namespace latticeforge
