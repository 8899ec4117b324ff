#include "polyherm/multi_index.hpp"

#include <stdexcept>

namespace polyherm {

std::uint64_t factorial(unsigned k) {
  if (k > 20) throw std::overflow_error("factorial(" + std::to_string(k) + ") exceeds 64 bits");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t binomial(const MultiIndex4& M, const MultiIndex4& j) {
  return binomial(M.m, j.m) * binomial(M.n, j.n) * binomial(M.mp, j.mp) * binomial(M.np, j.np);
}

std::uint64_t MultiIndex4::factorial() const {
  return polyherm::factorial(m) * polyherm::factorial(n) * polyherm::factorial(mp) * polyherm::factorial(np);
}

std::string MultiIndex4::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(mp) + "," + std::to_string(np) + ")";
}

std::vector<MultiIndex4> indices_below(const MultiIndex4& bound) {
  std::vector<MultiIndex4> out;
  out.reserve((bound.m + 1) * (bound.n + 1) * (bound.mp + 1) * (bound.np + 1));
  for (unsigned a = 0; a <= bound.m; ++a)
    for (unsigned b = 0; b <= bound.n; ++b)
      for (unsigned c = 0; c <= bound.mp; ++c)
        for (unsigned d = 0; d <= bound.np; ++d) out.push_back({a, b, c, d});
  return out;
}

std::vector<MultiIndex4> indices_with_slots_le(unsigned max_slot) {
  return indices_below({max_slot, max_slot, max_slot, max_slot});
}

std::vector<MultiIndex4> indices_with_total_le(unsigned max_total) {
  std::vector<MultiIndex4> out;
  for (const auto& M : indices_with_slots_le(max_total))
    if (M.total() <= max_total) out.push_back(M);
  return out;
}

}  // namespace polyherm
