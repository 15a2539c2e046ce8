#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace arith {

using BigInt = boost::multiprecision::cpp_int;

/// Greatest common divisor for builtin integers and BigInt alike. Result is non-negative.
template <typename Int>
Int gcd(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

template <typename Int>
Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return Int(0);
  Int g = arith::gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? Int(-r) : r;
}

template <typename Int>
Int gcd_of(std::span<const Int> values) {
  Int g(0);
  for (const auto& v : values) g = arith::gcd(g, v);
  return g;
}

template <typename Int>
Int lcm_of(std::span<const Int> values) {
  Int l(1);
  for (const auto& v : values) l = arith::lcm(l, v);
  return l;
}

template <typename Int>
bool is_negative(const Int& v) {
  if constexpr (std::is_integral_v<Int> && std::is_unsigned_v<Int>) {
    return false;
  } else {
    return v < 0;
  }
}

/// Least non-negative representative of a mod m, m > 0.
template <typename Int>
Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// (-a) mod m with the least non-negative representative, for a >= 0 and m > 0.
template <typename Int>
Int neg_mod(const Int& a, const Int& m) {
  Int r = a % m;
  return r == 0 ? Int(0) : Int(m - r);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::vector<BigInt> to_big(std::span<const std::uint64_t> v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline std::vector<BigInt> to_big(std::initializer_list<std::uint64_t> v) {
  return to_big(std::span<const std::uint64_t>(v.begin(), v.size()));
}

}  // namespace arith
