#include "equichar/core.hpp"

#include <charconv>

namespace equichar {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& text) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw UsageError("malformed rational '" + text + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const auto den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw UsageError("zero denominator in '" + text + "'");
  return Rational(parse_int(s.substr(0, slash), text), den);
}

}  // namespace equichar
