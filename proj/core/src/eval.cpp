#include "latticeforge/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace latticeforge {

AggregateRow aggregate(const std::vector<double>& values) {
  if (values.empty()) throw EmptyInput("aggregate needs at least one value");
  const std::size_t n = values.size();
  AggregateRow row;
  row.sum = 0;
  for (double v : values) row.sum += v;
  row.mean = row.sum / static_cast<double>(n);
  row.max = *std::max_element(values.begin(), values.end());
  row.min = *std::min_element(values.begin(), values.end());

  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  row.median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

  double squares = 0;
  for (double v : values) squares += (v - row.mean) * (v - row.mean);
  row.stdv_p = std::sqrt(squares / static_cast<double>(n));
  if (n > 1) {
    row.stdv_s = std::sqrt(squares / static_cast<double>(n - 1));
    row.stdeva = row.stdv_s;
  }
  return row;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  std::string out = buffer;
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

std::string stats_csv(std::vector<EvalRow> rows, char sep) {
  std::stable_sort(rows.begin(), rows.end(), [](const EvalRow& a, const EvalRow& b) {
    if (a.corpus != b.corpus) return a.corpus < b.corpus;
    return static_cast<int>(a.config) < static_cast<int>(b.config);
  });

  std::ostringstream out;
  std::string header = kEvalCsvHeader;
  if (sep != ',') std::replace(header.begin(), header.end(), ',', sep);
  out << header << '\n';

  for (const auto& row : rows) {
    out << row.corpus << sep << order_name(row.config) << sep << row.stats.concepts
        << sep << row.stats.edges << sep << row.stats.height << sep
        << row.stats.width_lo << sep << row.stats.width_hi << '\n';
  }

  constexpr ReductionOrder kConfigs[] = {
      ReductionOrder::none, ReductionOrder::wordnet_only,
      ReductionOrder::frequency_only, ReductionOrder::wordnet_then_frequency,
      ReductionOrder::frequency_then_wordnet};
  for (ReductionOrder config : kConfigs) {
    std::array<std::vector<double>, 5> columns;
    for (const auto& row : rows) {
      if (row.config != config) continue;
      columns[0].push_back(static_cast<double>(row.stats.concepts));
      columns[1].push_back(static_cast<double>(row.stats.edges));
      columns[2].push_back(static_cast<double>(row.stats.height));
      columns[3].push_back(static_cast<double>(row.stats.width_lo));
      columns[4].push_back(static_cast<double>(row.stats.width_hi));
    }
    if (columns[0].empty()) continue;

    std::array<AggregateRow, 5> aggs;
    for (std::size_t c = 0; c < columns.size(); ++c) aggs[c] = aggregate(columns[c]);

    const struct {
      const char* label;
      std::optional<double> AggregateRow::* optional_field;
      double AggregateRow::* field;
    } functions[] = {
        {"mean", nullptr, &AggregateRow::mean},
        {"median", nullptr, &AggregateRow::median},
        {"sum", nullptr, &AggregateRow::sum},
        {"max", nullptr, &AggregateRow::max},
        {"min", nullptr, &AggregateRow::min},
        {"stdv_p", nullptr, &AggregateRow::stdv_p},
        {"stdv_s", &AggregateRow::stdv_s, nullptr},
        {"stdeva", &AggregateRow::stdeva, nullptr},
    };
    for (const auto& fn : functions) {
      out << fn.label << sep << order_name(config);
      for (const auto& agg : aggs) {
        out << sep;
        if (fn.field) {
          out << format_number(agg.*fn.field);
        } else if ((agg.*fn.optional_field).has_value()) {
          out << format_number(*(agg.*fn.optional_field));
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace latticeforge
