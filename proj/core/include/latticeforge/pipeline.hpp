#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "latticeforge/cex.hpp"
#include "latticeforge/context.hpp"
#include "latticeforge/eval.hpp"
#include "latticeforge/ingest.hpp"
#include "latticeforge/lattice.hpp"
#include "latticeforge/reduce.hpp"
#include "latticeforge/wordnet.hpp"

namespace latticeforge {

enum class InputKind { auto_detect, dependencies, pairs, cex };

struct RunConfig {
  std::filesystem::path input;
  InputKind kind = InputKind::auto_detect;
  TechniqueConfig technique;
  std::optional<std::filesystem::path> wordnet_dir;
  std::filesystem::path out_dir;
  bool fold_case = false;
  bool extended_cex = true;
  bool emit_dot = true;
};

struct PipelineResult {
  FormalContext context;
  FormalContext reduced;
  std::vector<ReductionReport> reports;
  LatticeStats stats;
  std::vector<std::filesystem::path> artifacts;
};

// Reads a whole file; throws Error when unreadable.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

// .cex/.xml files hold contexts, .tsv/.pairs files hold pair lists,
// anything else is dependency-parser output.
InputKind detect_input_kind(const std::filesystem::path& path);

// The explicit flag wins; otherwise the WNHOME environment variable is
// consulted. A path whose dict subdirectory holds the database files is
// accepted in place of the dict directory itself.
std::optional<std::filesystem::path> resolve_wordnet_dir(
    const std::optional<std::filesystem::path>& flag);

// Builds the initial context from one input file.
FormalContext load_context(const std::filesystem::path& path, InputKind kind,
                           const WordNetDb* db, bool fold_case);

// Ingest, reduce, derive the lattice and write context.cex, reduced.cex,
// lattice.dot, stats.csv and report.txt into the output directory.
PipelineResult run_pipeline(const RunConfig& config);

struct EvalOutcome {
  std::vector<EvalRow> rows;
  // One "corpus: reason" entry per corpus that could not be processed.
  std::vector<std::string> failures;
  std::string csv;
};

// Runs every corpus file in the directory through the five standard
// configurations (none, wn, freq, wn-freq, freq-wn) using the depth and
// threshold of the base configuration.
EvalOutcome eval_corpus(const std::filesystem::path& corpus_dir,
                        const TechniqueConfig& base, const WordNetDb& db,
                        char sep = ',');

}  // namespace latticeforge
