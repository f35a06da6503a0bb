#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace cylmhd {

// Exact rational arithmetic; numerators/denominators are arbitrary-precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_rat(const Rat& r) {
  std::hash<std::string> h;
  return h(to_string(r));
}

}  // namespace cylmhd
