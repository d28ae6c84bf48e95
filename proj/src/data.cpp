#include "wtrv/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "wtrv/errors.hpp"

namespace wtrv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_real(const std::string& cell) {
  const std::string t = trim(cell);
  if (t.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (trim(header[i]) == name) return i;
  throw SchemaError("read_csv: no column named '" + name + "'");
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

Series read_csv(const std::string& path, const std::string& value_column,
                const std::optional<std::string>& year_column) {
  std::ifstream in(path);
  if (!in) throw SchemaError("read_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("read_csv: '" + path + "' has no header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_csv_line(line);
  const std::size_t vi = column_index(header, value_column);
  std::optional<std::size_t> yi;
  if (year_column) yi = column_index(header, *year_column);

  Series s;
  s.label = value_column;
  std::vector<int> years;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    const auto v = vi < cells.size() ? parse_real(cells[vi]) : std::nullopt;
    std::optional<double> y;
    if (yi) y = *yi < cells.size() ? parse_real(cells[*yi]) : std::nullopt;
    if (!v || (yi && !y)) {
      ++s.skipped;
      continue;
    }
    s.values.push_back(*v);
    if (yi) years.push_back(static_cast<int>(std::lround(*y)));
  }
  if (s.values.empty()) throw EmptyDataError("read_csv: no usable rows in '" + path + "'");
  if (yi) s.year = std::move(years);
  return s;
}

MomentConvention parse_moment_convention(const std::string& name) {
  if (name == "population") return MomentConvention::population;
  if (name == "sample") return MomentConvention::sample;
  throw ParseError("unknown moment convention '" + name + "'");
}

DescriptiveStats describe(const std::vector<double>& values, MomentConvention convention) {
  if (values.size() < 2) throw DomainError("describe: need at least 2 values");
  DescriptiveStats d;
  d.n = values.size();
  d.convention = convention;
  const double n = static_cast<double>(d.n);

  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  d.min = sorted.front();
  d.max = sorted.back();
  d.median = d.n % 2 ? sorted[d.n / 2] : 0.5 * (sorted[d.n / 2 - 1] + sorted[d.n / 2]);

  std::map<double, std::size_t> freq;
  for (double v : values) ++freq[v];
  std::size_t best = 0;
  for (double v : values) {
    if (freq[v] > best) {
      best = freq[v];
      d.mode = v;
    }
  }

  double sum = 0.0;
  for (double v : values) sum += v;
  d.mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double e = v - d.mean;
    m2 += e * e;
    m3 += e * e * e;
    m4 += e * e * e * e;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) throw DegenerateSampleError("describe: constant series, skewness and kurtosis undefined");

  const double g1 = m3 / std::pow(m2, 1.5);
  const double g2 = m4 / (m2 * m2);
  if (convention == MomentConvention::population) {
    d.variance = m2;
    d.skewness = g1;
    d.kurtosis = g2;
  } else {
    if (d.n < 4) throw DomainError("describe: the sample convention needs at least 4 values");
    d.variance = m2 * n / (n - 1.0);
    d.skewness = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
    d.kurtosis = ((n + 1.0) * (g2 - 3.0) + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0)) + 3.0;
  }
  d.sd = std::sqrt(d.variance);
  return d;
}

}  // namespace wtrv
