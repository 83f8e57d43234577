#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latticeforge/lattice.hpp"
#include "latticeforge/reduce.hpp"

namespace latticeforge {

struct EvalRow {
  std::string corpus;
  ReductionOrder config = ReductionOrder::none;
  LatticeStats stats;
};

struct AggregateRow {
  double mean = 0;
  double median = 0;
  double sum = 0;
  double max = 0;
  double min = 0;
  double stdv_p = 0;
  // Undefined for a single value.
  std::optional<double> stdv_s;
  // Sample stddev over numeric data; alias of stdv_s.
  std::optional<double> stdeva;
};

// Throws EmptyInput for an empty value list.
AggregateRow aggregate(const std::vector<double>& values);

inline constexpr const char* kEvalCsvHeader =
    "corpus,config,concepts,edges,height,width_lo,width_hi";

// Evaluation table: data rows sorted by (corpus, config), then per config
// eight aggregate rows (mean, median, sum, max, min, stdv_p, stdv_s,
// stdeva) over each statistic column. Byte-deterministic.
std::string stats_csv(std::vector<EvalRow> rows, char sep = ',');

// Decimal rendering with at most six fractional digits, trailing zeros
// trimmed.
std::string format_number(double value);

}  // namespace latticeforge
