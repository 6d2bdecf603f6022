#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace casconn {

// Exact arbitrary-precision rational scalar. All representation-theoretic
// modules compute over Rat; floating point only enters in the monodromy
// integrator and in report formatting.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& x) { return x.str(); }

inline double to_double(const Rat& x) { return x.template convert_to<double>(); }

// Parses "p", "p/q" or a plain decimal like "-0.25".
std::optional<Rat> parse_rational(const std::string& s);

// Exact square root when x is a perfect rational square.
std::optional<Rat> rational_sqrt(const Rat& x);

} // namespace casconn
