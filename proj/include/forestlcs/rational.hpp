#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace forestlcs {

using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", integers and finite decimals ("0.25"); the result is exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

}  // namespace forestlcs
