#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chss {

// Exact scalar for every decision path. Never use floating point.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) { return r.str(); }

// ---------------------------------------------------------------------------
// Small bitset helpers (subsets of Δ(g₁); |Δ(g₁)| ≤ 27, so uint32_t suffices).
// ---------------------------------------------------------------------------
using Bits = uint32_t;

inline int popcount(Bits b) { return std::popcount(b); }

inline bool has_bit(Bits b, int i) { return (b >> i) & 1u; }

inline Bits with_bit(Bits b, int i) { return b | (Bits{1} << i); }

inline Bits without_bit(Bits b, int i) { return b & ~(Bits{1} << i); }

// Number of set bits strictly below position i (wedge-sign bookkeeping).
inline int bits_below(Bits b, int i) {
  return std::popcount(b & ((Bits{1} << i) - 1u));
}

// Visit set bits in ascending order.
template <typename F>
void for_each_bit(Bits b, F&& f) {
  while (b) {
    int i = std::countr_zero(b);
    f(i);
    b &= b - 1;
  }
}

inline std::vector<int> bit_positions(Bits b) {
  std::vector<int> v;
  v.reserve(popcount(b));
  for_each_bit(b, [&](int i) { v.push_back(i); });
  return v;
}

inline std::string bits_to_hex(Bits b) {
  static const char* digits = "0123456789abcdef";
  if (b == 0) return "0x0";
  std::string s;
  while (b) {
    s.insert(s.begin(), digits[b & 0xf]);
    b >>= 4;
  }
  return "0x" + s;
}

Bits bits_from_hex(const std::string& s);  // throws std::invalid_argument

// ---------------------------------------------------------------------------
// FNV-1a content hash (cache keys, deterministic).
// ---------------------------------------------------------------------------
inline uint64_t fnv1a(const std::string& data, uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v);

// ---------------------------------------------------------------------------
// Deterministic xorshift PRNG for seeded property tests.
// ---------------------------------------------------------------------------
struct XorShift64 {
  uint64_t state;
  explicit XorShift64(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    uint64_t x = state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    return state = x;
  }
  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }
};

// ---------------------------------------------------------------------------
// parallel_for: run fn(i) for i in [0, n) on `jobs` threads.  Results must be
// written to preallocated slots; iteration order is unspecified but the
// partition of work is deterministic.
// ---------------------------------------------------------------------------
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Internal invariant failure (would falsify a proposition the code relies on).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace chss
