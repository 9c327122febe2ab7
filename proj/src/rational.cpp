#include "forestlcs/rational.hpp"

#include <charconv>

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last)
    throw PreconditionError("not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17 || frac.front() == '-' || frac.front() == '+')
      throw PreconditionError("not a rational number: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t int_part = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole, text);
    const std::int64_t frac_part = parse_int(frac, text);
    const Rational magnitude = Rational(negative ? -int_part : int_part) + Rational(frac_part, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

}  // namespace forestlcs
