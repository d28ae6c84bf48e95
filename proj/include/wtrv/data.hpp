#pragma once

// CSV ingestion and descriptive statistics.

#include <optional>
#include <string>
#include <vector>

namespace wtrv {

struct Series {
  std::string label;
  std::optional<std::vector<int>> year;
  std::vector<double> values;
  std::size_t skipped = 0;  // rows with a missing or unparsable value
};

/// Header row required. Rows with an empty or non-numeric value cell are
/// skipped and counted; a missing column raises SchemaError.
Series read_csv(const std::string& path, const std::string& value_column,
                const std::optional<std::string>& year_column = std::nullopt);

/// Splits one CSV record, honouring double quotes.
std::vector<std::string> split_csv_line(const std::string& line);

enum class MomentConvention { population, sample };
MomentConvention parse_moment_convention(const std::string& name);

struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;  // most frequent raw value, first seen wins ties
  double sd = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;  // non-excess
  double min = 0.0;
  double max = 0.0;
  MomentConvention convention = MomentConvention::population;
};

DescriptiveStats describe(const std::vector<double>& values,
                          MomentConvention convention = MomentConvention::population);
inline DescriptiveStats describe(const Series& s, MomentConvention convention = MomentConvention::population) {
  return describe(s.values, convention);
}

}  // namespace wtrv
