#pragma once
// Small constructors and generators shared by the test binaries.
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "ktinv/localization.hpp"
#include "ktinv/ring.hpp"

namespace ktinv::testing {

inline std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<BigInt> big(const std::vector<long>& xs) {
  return {xs.begin(), xs.end()};
}

inline RingElement elem(std::uint32_t order, std::initializer_list<long> xs) {
  return RingElement(GroupSpec(order), big(xs));
}

inline RingElement elem(std::uint32_t order, const std::vector<long>& xs) {
  return RingElement(GroupSpec(order), big(xs));
}

inline CharacterPolynomial pv(std::uint32_t order, std::initializer_list<long> xs) {
  return CharacterPolynomial(elem(order, xs));
}

inline CharacterPolynomial pv(std::uint32_t order, const std::vector<long>& xs) {
  return CharacterPolynomial(elem(order, xs));
}

// Calls f on every vector of length n with entries in [lo, hi].
template <class F>
void for_each_vector(std::size_t n, long lo, long hi, F&& f) {
  std::vector<long> v(n, lo);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

// Every multiplicity vector with entries in [0, hi], not all zero.
inline std::vector<std::vector<long>> all_pvs(std::uint32_t order, long hi) {
  std::vector<std::vector<long>> out;
  for_each_vector(order, 0, hi, [&](const std::vector<long>& v) {
    for (long x : v)
      if (x != 0) {
        out.push_back(v);
        return;
      }
  });
  return out;
}

inline std::vector<long> random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<long> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

// Random multiplicities with entries in [0, hi], not all zero.
inline CharacterPolynomial random_pv(std::mt19937_64& rng, std::uint32_t order, long hi) {
  for (;;) {
    auto v = random_vector(rng, order, 0, hi);
    for (long x : v)
      if (x != 0) return pv(order, v);
  }
}

// Random primitive multiplicities with entries in [0, hi].
inline CharacterPolynomial random_primitive(std::mt19937_64& rng, std::uint32_t order, long hi) {
  for (;;) {
    CharacterPolynomial p = random_pv(rng, order, hi);
    if (is_primitive(p)) return p;
  }
}

inline std::vector<BigInt> to_vec(const RingElement& x) {
  return {x.coeffs().begin(), x.coeffs().end()};
}

}  // namespace ktinv::testing
