#include "polyherm/orthogonality.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "polyherm/bchp.hpp"
#include "polyherm/kahan.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/uchp.hpp"

namespace polyherm::ortho {

namespace {

const cd kI{0.0, 1.0};

cd planar(unsigned nodes, const auto& integrand) {
  KahanSum<cd> sum;
  for (const auto& node : quad::complex_rule(nodes)) sum += node.weight * integrand(node.point);
  return sum.value();
}

cd eval(const Poly4& p, cd z, cd w) { return p.eval({z, std::conj(z), w, std::conj(w)}); }

// H_{m,n}(ξ, ξ̄) from H_{m,n,0,0} at a point with ξ̃ = 0, and H_{m',n'}(ξ̃*, ξ̃)
// from H_{0,0,m',n'} at a point with ξ = 0.
cd unprimed_part(const MultiIndex4& M, cd xi) { return eval(bchp::table({M.m, M.n, 0, 0}), xi / 2.0, -kI * xi / 2.0); }
cd primed_part(const MultiIndex4& M, cd xt) { return eval(bchp::table({0, 0, M.mp, M.np}), xt / 2.0, kI * xt / 2.0); }

}  // namespace

cd uchp_inner(unsigned m, unsigned n, unsigned j, unsigned k, unsigned nodes) {
  return planar(nodes, [&](cd z) { return uchp::value(m, n, z) * std::conj(uchp::value(j, k, z)); });
}

cd uchp_product(unsigned m, unsigned n, unsigned j, unsigned k, unsigned nodes) {
  return planar(nodes, [&](cd z) { return uchp::value(m, n, z) * uchp::value(j, k, z); });
}

cd bchp_inner(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes) {
  const cd a = planar(nodes, [&](cd xi) { return unprimed_part(M, xi) * std::conj(unprimed_part(N, xi)); });
  const cd b = planar(nodes, [&](cd xt) { return primed_part(M, xt) * std::conj(primed_part(N, xt)); });
  // dλ(z, w) = dλ(ξ, ξ̃)/4.
  return a * b / 4.0;
}

namespace {

// Both factors of every H_M at every node, row-major in (index, node).
struct SplitValues {
  std::vector<quad::ComplexNode> rule;
  std::vector<cd> first, second;
};

SplitValues split_values(const std::vector<MultiIndex4>& idx, unsigned nodes) {
  SplitValues v{quad::complex_rule(nodes), {}, {}};
  const std::size_t q = v.rule.size();
  v.first.resize(idx.size() * q);
  v.second.resize(idx.size() * q);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t r = 0; r < q; ++r) {
      v.first[a * q + r] = unprimed_part(idx[a], v.rule[r].point);
      v.second[a * q + r] = primed_part(idx[a], v.rule[r].point);
    }
  return v;
}

cd split_pair(const SplitValues& v, std::size_t a, std::size_t b, bool conjugate) {
  const std::size_t q = v.rule.size();
  KahanSum<cd> s1, s2;
  for (std::size_t r = 0; r < q; ++r) {
    const cd f = v.first[b * q + r], s = v.second[b * q + r];
    s1 += v.rule[r].weight * v.first[a * q + r] * (conjugate ? std::conj(f) : f);
    s2 += v.rule[r].weight * v.second[a * q + r] * (conjugate ? std::conj(s) : s);
  }
  return s1.value() * s2.value() / 4.0;
}

}  // namespace

std::vector<cd> uchp_gram(const std::vector<std::pair<unsigned, unsigned>>& idx, bool conjugate, unsigned nodes) {
  const auto rule = quad::complex_rule(nodes);
  const std::size_t n = idx.size(), q = rule.size();
  std::vector<cd> values(n * q);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < q; ++r) values[a * q + r] = uchp::value(idx[a].first, idx[a].second, rule[r].point);
  std::vector<cd> gram(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      KahanSum<cd> s;
      for (std::size_t r = 0; r < q; ++r) {
        const cd g = values[b * q + r];
        s += rule[r].weight * values[a * q + r] * (conjugate ? std::conj(g) : g);
      }
      gram[a * n + b] = s.value();
    }
  return gram;
}

std::vector<cd> bchp_gram(const std::vector<MultiIndex4>& idx, unsigned nodes) {
  const SplitValues v = split_values(idx, nodes);
  const std::size_t n = idx.size();
  std::vector<cd> gram(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram[a * n + b] = split_pair(v, a, b, true);
  return gram;
}

std::vector<cd> bchp_literal_gram(const std::vector<MultiIndex4>& idx, unsigned nodes) {
  const std::size_t n = idx.size();
  std::vector<std::size_t> swapped(n);
  for (std::size_t b = 0; b < n; ++b) {
    const MultiIndex4 S{idx[b].mp, idx[b].np, idx[b].m, idx[b].n};
    const auto it = std::find(idx.begin(), idx.end(), S);
    if (it == idx.end()) throw std::invalid_argument("index set is not closed under exchanging the two pairs");
    swapped[b] = static_cast<std::size_t>(it - idx.begin());
  }
  const SplitValues v = split_values(idx, nodes);
  std::vector<cd> gram(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram[a * n + b] = split_pair(v, a, swapped[b], false);
  return gram;
}

cd bchp_inner_direct(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes) {
  const auto rule = quad::complex_rule(nodes, 2.0);
  const Poly4& hm = bchp::table(M);
  const Poly4& hn = bchp::table(N);
  KahanSum<cd> sum;
  for (const auto& a : rule)
    for (const auto& b : rule)
      sum += a.weight * b.weight * eval(hm, a.point, b.point) * std::conj(eval(hn, a.point, b.point));
  return sum.value();
}

cd bchp_literal_pairing(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes) {
  // Exchanging partners turns H_{p,q,p',q'} into H_{p',q',p,q}, so the
  // integrand still splits in (ξ, ξ̃).
  const MultiIndex4 S{N.mp, N.np, N.m, N.n};
  const cd a = planar(nodes, [&](cd xi) { return unprimed_part(M, xi) * unprimed_part(S, xi); });
  const cd b = planar(nodes, [&](cd xt) { return primed_part(M, xt) * primed_part(S, xt); });
  return a * b / 4.0;
}

double bchp_norm_squared(const MultiIndex4& M) {
  return std::numbers::pi * std::numbers::pi / 4.0 * static_cast<double>(M.factorial());
}

}  // namespace polyherm::ortho
