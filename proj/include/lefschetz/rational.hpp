#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace lefschetz {

/// Exact rational scalar. Every coefficient in the library is one of these;
/// there is no floating point anywhere in the core. The backend keeps the
/// value canonical (gcd(num, den) = 1, den >= 1) after every operation.
/// Expression templates are off so arithmetic yields plain values.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Renders "a" for integers and "a/b" otherwise. This is the wire format for
/// every scalar in JSON reports and model files.
std::string to_string(const Rational& x);

/// Strict parse of "a" or "a/b" (optional leading '-', decimal digits only).
/// Rejects empty strings, zero denominators, whitespace, and floats.
std::optional<Rational> parse_rational(const std::string& s);

} // namespace lefschetz
