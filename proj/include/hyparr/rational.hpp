#pragma once
// Exact rational arithmetic used by all combinatorial predicates.
// Thin wrapper over boost::multiprecision so the backend stays swappable.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace hyparr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// -1, 0, +1.
inline int sgn(const Rat& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double(double x);

/// Parse "p/q", "p", or a decimal literal such as "-0.25" (exact).
/// Returns nullopt on malformed input.
std::optional<Rat> rat_parse(const std::string& s);

/// Canonical serialization: "p" or "p/q", q > 0, reduced.
std::string rat_to_string(const Rat& x);

double rat_to_double(const Rat& x);

using RatVec = std::vector<Rat>;

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace hyparr
