#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polyherm {

/// Four-slot index M = (m, n, m', n') of a bivariate Hermite polynomial.
struct MultiIndex4 {
  unsigned m = 0;
  unsigned n = 0;
  unsigned mp = 0;
  unsigned np = 0;

  constexpr unsigned total() const { return m + n + mp + np; }
  constexpr std::array<unsigned, 4> as_array() const { return {m, n, mp, np}; }
  static constexpr MultiIndex4 from_array(const std::array<unsigned, 4>& a) { return {a[0], a[1], a[2], a[3]}; }

  /// Within-pair swap: (j, k, j', k') becomes (k, j, k', j').
  constexpr MultiIndex4 transpose() const { return {n, m, np, mp}; }

  /// Componentwise partial order.
  constexpr bool le(const MultiIndex4& o) const { return m <= o.m && n <= o.n && mp <= o.mp && np <= o.np; }

  constexpr MultiIndex4 operator+(const MultiIndex4& o) const { return {m + o.m, n + o.n, mp + o.mp, np + o.np}; }
  /// Requires o.le(*this).
  constexpr MultiIndex4 operator-(const MultiIndex4& o) const { return {m - o.m, n - o.n, mp - o.mp, np - o.np}; }

  friend constexpr auto operator<=>(const MultiIndex4&, const MultiIndex4&) = default;

  /// m!·n!·m'!·n'! as an exact integer (fits for every slot ≤ 20).
  std::uint64_t factorial() const;
  std::string str() const;
};

/// Componentwise minimum.
constexpr MultiIndex4 meet(const MultiIndex4& a, const MultiIndex4& b) {
  auto mn = [](unsigned x, unsigned y) { return x < y ? x : y; };
  return {mn(a.m, b.m), mn(a.n, b.n), mn(a.mp, b.mp), mn(a.np, b.np)};
}

std::uint64_t factorial(unsigned k);
std::uint64_t binomial(unsigned n, unsigned k);
/// Product of the four slot binomials; zero unless j.le(M).
std::uint64_t binomial(const MultiIndex4& M, const MultiIndex4& j);

/// Every J with J ≤ bound componentwise, in lexicographic order.
std::vector<MultiIndex4> indices_below(const MultiIndex4& bound);
/// Every M whose slots are each ≤ max_slot, in lexicographic order.
std::vector<MultiIndex4> indices_with_slots_le(unsigned max_slot);
/// Every M with |M| ≤ max_total, in lexicographic order.
std::vector<MultiIndex4> indices_with_total_le(unsigned max_total);

}  // namespace polyherm
