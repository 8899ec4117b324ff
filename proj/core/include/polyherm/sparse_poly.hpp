#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyherm/coeff.hpp"

namespace polyherm {

/// Sparse polynomial in N commuting variables over ℚ(i,√2).
///
/// Terms are kept sorted by exponent tuple (lexicographic, first variable most
/// significant) with no zero coefficients, so equality is structural. The
/// exponent tuple is packed into one 64-bit key with 64/N bits per slot, which
/// makes the lexicographic order a plain integer order and monomial products
/// a key addition.
template <int N>
class SparsePoly {
  static_assert(N == 1 || N == 2 || N == 4, "supported arities are 1, 2 and 4");

 public:
  static constexpr int kVars = N;
  static constexpr int kBits = 64 / N;
  static constexpr std::uint64_t kSlotMax = N == 1 ? ~std::uint64_t{0} : (std::uint64_t{1} << kBits) - 1;

  using Key = std::uint64_t;
  using Exponents = std::array<unsigned, N>;

  struct Term {
    Key key;
    CoeffQi2 coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  SparsePoly() = default;
  SparsePoly(const CoeffQi2& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({0, c});
  }
  SparsePoly(std::int64_t c) : SparsePoly(CoeffQi2(c)) {}  // NOLINT(google-explicit-constructor)

  static Key pack(const Exponents& e) {
    Key k = 0;
    for (int v = 0; v < N; ++v) {
      if (e[v] > kSlotMax) throw std::overflow_error("exponent exceeds packed slot width");
      k = N == 1 ? e[v] : (k << kBits) | e[v];
    }
    return k;
  }
  static Exponents unpack(Key k) {
    Exponents e{};
    for (int v = N - 1; v >= 0; --v) {
      e[v] = static_cast<unsigned>(k & kSlotMax);
      if constexpr (N > 1) k >>= kBits;
    }
    return e;
  }
  static unsigned exponent(Key k, int v) {
    if constexpr (N == 1) {
      return static_cast<unsigned>(k);
    } else {
      return static_cast<unsigned>((k >> (kBits * (N - 1 - v))) & kSlotMax);
    }
  }
  static Key unit_key(int v) {
    if constexpr (N == 1) {
      return 1;
    } else {
      return Key{1} << (kBits * (N - 1 - v));
    }
  }

  static SparsePoly monomial(const Exponents& e, const CoeffQi2& c = 1) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.push_back({pack(e), c});
    return p;
  }
  static SparsePoly variable(int v) {
    SparsePoly p;
    p.terms_.push_back({unit_key(v), CoeffQi2(1)});
    return p;
  }
  /// Builds the canonical form from terms in any order, merging duplicates.
  static SparsePoly from_terms(std::vector<Term> raw) {
    SparsePoly p;
    p.terms_ = canonicalize(std::move(raw));
    return p;
  }
  static SparsePoly from_exponent_terms(const std::vector<std::pair<Exponents, CoeffQi2>>& raw) {
    std::vector<Term> t;
    t.reserve(raw.size());
    for (const auto& [e, c] : raw) t.push_back({pack(e), c});
    return from_terms(std::move(t));
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; −1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
      int s = 0;
      for (int v = 0; v < N; ++v) s += static_cast<int>(exponent(t.key, v));
      d = std::max(d, s);
    }
    return d;
  }
  unsigned degree_in(int v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, exponent(t.key, v));
    return d;
  }
  CoeffQi2 coeff(const Exponents& e) const {
    const Key k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Key x) { return t.key < x; });
    return it != terms_.end() && it->key == k ? it->coeff : CoeffQi2();
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend SparsePoly operator*(const CoeffQi2& c, const SparsePoly& p) {
    if (c.is_zero()) return {};
    SparsePoly r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.key, c * t.coeff});
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].key == 0) return a.terms_[0].coeff * b;
    if (b.size() == 1 && b.terms_[0].key == 0) return b.terms_[0].coeff * a;
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.push_back({add_keys(x.key, y.key), x.coeff * y.coeff});
    return from_terms(std::move(raw));
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Formal partial derivative in variable v.
  SparsePoly diff(int v) const {
    SparsePoly r;
    const Key unit = unit_key(v);
    for (const auto& t : terms_) {
      const unsigned e = exponent(t.key, v);
      if (e == 0) continue;
      r.terms_.push_back({t.key - unit, CoeffQi2(static_cast<std::int64_t>(e)) * t.coeff});
    }
    return r;  // key order is preserved: terms with e ≥ 1 shift uniformly
  }

  /// Multiplication by a power of variable v.
  SparsePoly mul_var(int v, unsigned power = 1) const {
    SparsePoly r = *this;
    Key shift = 0;
    for (unsigned i = 0; i < power; ++i) shift += unit_key(v);
    for (auto& t : r.terms_) t.key = add_keys(t.key, shift);
    return r;
  }

  /// Swaps each (x, x̄) slot pair and conjugates coefficients.
  SparsePoly conj() const {
    static_assert(N % 2 == 0, "conjugation needs paired variables");
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e = unpack(t.key);
      for (int v = 0; v < N; v += 2) std::swap(e[v], e[v + 1]);
      raw.push_back({pack(e), t.coeff.conj()});
    }
    return from_terms(std::move(raw));
  }

  /// P(s·x): each term scaled by s^{total degree}.
  SparsePoly scale_arguments(const CoeffQi2& s) const {
    std::vector<CoeffQi2> powers{CoeffQi2(1)};
    SparsePoly r;
    for (const auto& t : terms_) {
      unsigned d = 0;
      for (int v = 0; v < N; ++v) d += exponent(t.key, v);
      while (powers.size() <= d) powers.push_back(powers.back() * s);
      CoeffQi2 c = powers[d] * t.coeff;
      if (!c.is_zero()) r.terms_.push_back({t.key, std::move(c)});
    }
    return r;
  }

  /// Ring homomorphism sending variable v to images[v].
  template <int M>
  SparsePoly<M> substitute(const std::array<SparsePoly<M>, N>& images) const {
    std::array<std::vector<SparsePoly<M>>, N> powers;
    for (int v = 0; v < N; ++v) {
      powers[v].push_back(SparsePoly<M>(1));
      const unsigned d = degree_in(v);
      for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
    }
    std::vector<typename SparsePoly<M>::Term> raw;
    for (const auto& t : terms_) {
      SparsePoly<M> prod(t.coeff);
      for (int v = 0; v < N; ++v) {
        const unsigned e = exponent(t.key, v);
        if (e) prod = prod * powers[v][e];
      }
      raw.insert(raw.end(), prod.terms().begin(), prod.terms().end());
    }
    return SparsePoly<M>::from_terms(std::move(raw));
  }

  /// Exact value with every variable supplied independently.
  CoeffQi2 eval(const std::array<CoeffQi2, N>& x) const {
    std::array<std::vector<CoeffQi2>, N> powers;
    for (int v = 0; v < N; ++v) {
      powers[v].push_back(CoeffQi2(1));
      const unsigned d = degree_in(v);
      for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * x[v]);
    }
    CoeffQi2 sum;
    for (const auto& t : terms_) {
      CoeffQi2 term = t.coeff;
      for (int v = 0; v < N; ++v) {
        const unsigned e = exponent(t.key, v);
        if (e) term *= powers[v][e];
      }
      sum += term;
    }
    return sum;
  }

  /// Floating value, nested Horner in each variable over the sorted terms.
  std::complex<double> eval(const std::array<std::complex<double>, N>& x) const {
    if (terms_.empty()) return 0.0;
    return horner(terms_.data(), terms_.data() + terms_.size(), 0, x);
  }

  /// Readable rendering with the given variable names.
  std::string pretty(const std::array<const char*, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string mono;
      for (int v = 0; v < N; ++v) {
        const unsigned e = exponent(t.key, v);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      std::string c = t.coeff.pretty();
      const bool compound = c.find(' ') != std::string::npos;
      if (!out.empty()) out += " + ";
      if (mono.empty())
        out += compound ? "(" + c + ")" : c;
      else if (c == "1")
        out += mono;
      else if (c == "-1")
        out += "-" + mono;
      else
        out += (compound ? "(" + c + ")" : c) + "*" + mono;
    }
    return out;
  }

 private:
  static Key add_keys(Key a, Key b) {
    if constexpr (N == 1) {
      return a + b;
    } else {
      Key r = 0;
      for (int v = 0; v < N; ++v) {
        const int shift = kBits * (N - 1 - v);
        const Key s = ((a >> shift) & kSlotMax) + ((b >> shift) & kSlotMax);
        if (s > kSlotMax) throw std::overflow_error("exponent exceeds packed slot width");
        r |= s << shift;
      }
      return r;
    }
  }

  static std::vector<Term> canonicalize(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
      if (!out.empty() && out.back().key == t.key) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    return out;
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->key < j->key)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->key < i->key) {
        r.terms_.push_back({j->key, subtract ? -j->coeff : j->coeff});
        ++j;
      } else {
        CoeffQi2 c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!c.is_zero()) r.terms_.push_back({i->key, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static std::complex<double> ipow(std::complex<double> x, unsigned e) {
    std::complex<double> r = 1.0;
    while (e) {
      if (e & 1U) r *= x;
      x *= x;
      e >>= 1U;
    }
    return r;
  }

  // Terms in [first, last) agree on every exponent before slot v.
  static std::complex<double> horner(const Term* first, const Term* last, int v,
                                     const std::array<std::complex<double>, N>& x) {
    if (v == N) return first->coeff.to_complex();
    // Groups by exponent of v appear in ascending order; fold from the top.
    std::complex<double> acc = 0.0;
    unsigned prev = 0;
    bool started = false;
    const Term* end = last;
    while (end != first) {
      const unsigned e = exponent((end - 1)->key, v);
      const Term* begin = end - 1;
      while (begin != first && exponent((begin - 1)->key, v) == e) --begin;
      const std::complex<double> inner = horner(begin, end, v + 1, x);
      acc = started ? acc * ipow(x[v], prev - e) + inner : inner;
      started = true;
      prev = e;
      end = begin;
    }
    return acc * ipow(x[v], prev);
  }

  std::vector<Term> terms_;
};

using Poly1 = SparsePoly<1>;
using Poly2 = SparsePoly<2>;
using Poly4 = SparsePoly<4>;

/// Slot numbering for Poly4 and Poly2.
enum class Var : int { z = 0, zbar = 1, w = 2, wbar = 3 };
inline constexpr int kU = 0;
inline constexpr int kUbar = 1;

inline Poly4 var(Var v) { return Poly4::variable(static_cast<int>(v)); }

/// ξ = z + iw, ξ̄ = z̄ − iw̄, ξ* = z̄ + iw̄, ξ̃ = z − iw.
enum class Aux { xi, xibar, xistar, xitilde };

Poly4 aux_poly(Aux a);
const char* aux_name(Aux a);

/// Serialization in the JSON polynomial schema.
std::string to_json(const Poly4& p);
std::string to_json(const Poly2& p);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
Poly4 poly4_from_json(std::string_view text);
Poly2 poly2_from_json(std::string_view text);

std::string pretty(const Poly4& p);
std::string pretty(const Poly2& p);

}  // namespace polyherm
