#include "wtrv/spec_parse.hpp"

#include <cctype>
#include <charconv>

namespace wtrv {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

double parse_number(const std::string& text, const std::string& whole) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("bad number '" + text + "' in '" + whole + "'");
  return v;
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  const std::string s = trim(text);
  ParsedSpec out;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    out.name = s;
    if (!valid_identifier(out.name)) throw ParseError("bad name in '" + text + "'");
    return out;
  }
  if (s.back() != ')') throw ParseError("missing ')' in '" + text + "'");
  out.name = trim(s.substr(0, open));
  if (!valid_identifier(out.name)) throw ParseError("bad name in '" + text + "'");
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  if (trim(body).empty()) return out;

  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string item = body.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + text + "'");
    const std::string key = trim(item.substr(0, eq));
    if (!valid_identifier(key)) throw ParseError("bad key '" + key + "' in '" + text + "'");
    if (out.params.count(key)) throw ParseError("duplicate key '" + key + "' in '" + text + "'");
    out.params[key] = parse_number(trim(item.substr(eq + 1)), text);
    pos = comma + 1;
  }
  return out;
}

DistributionHandle parse_distribution(const std::string& text) {
  const auto p = parse_spec(text);
  return make_catalog(p.name, p.params);
}

WeightFunction parse_weight(const std::string& text) {
  const auto p = parse_spec(text);
  return make_weight(p.name, p.params);
}

}  // namespace wtrv
