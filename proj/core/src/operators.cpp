#include "polyherm/operators.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "polyherm/parallel.hpp"

namespace polyherm::ops {

namespace {

using Action = LinOp::Action;

// ∂v of the weight exponent 2(zz̄ + ww̄).
Poly4 weight_gradient(Var v) {
  switch (v) {
    case Var::z: return CoeffQi2(2) * var(Var::zbar);
    case Var::zbar: return CoeffQi2(2) * var(Var::z);
    case Var::w: return CoeffQi2(2) * var(Var::wbar);
    case Var::wbar: return CoeffQi2(2) * var(Var::w);
  }
  throw std::invalid_argument("unknown variable");
}

const char* var_name(Var v) {
  switch (v) {
    case Var::z: return "z";
    case Var::zbar: return "zbar";
    case Var::w: return "w";
    case Var::wbar: return "wbar";
  }
  return "?";
}

std::optional<Action> both(const std::optional<Action>& a, const std::optional<Action>& b,
                           Poly4 (*combine)(const Poly4&, const Poly4&)) {
  if (!a || !b) return std::nullopt;
  return Action([a = *a, b = *b, combine](const Poly4& p) { return combine(a(p), b(p)); });
}

Poly4 add(const Poly4& x, const Poly4& y) { return x + y; }
Poly4 sub(const Poly4& x, const Poly4& y) { return x - y; }

// Every monomial of total degree exactly d, lexicographic.
std::vector<Poly4::Exponents> monomials_of_degree(unsigned d) {
  std::vector<Poly4::Exponents> out;
  for (unsigned a = 0; a <= d; ++a)
    for (unsigned b = 0; a + b <= d; ++b)
      for (unsigned c = 0; a + b + c <= d; ++c) out.push_back({a, b, c, d - a - b - c});
  return out;
}

}  // namespace

WeightedPoly LinOp::weighted_apply(const WeightedPoly& f) const {
  if (!weighted_) throw std::logic_error("operator '" + name_ + "' has no action on weighted polynomials");
  return {(*weighted_)(f.cofactor)};
}

LinOp operator+(const LinOp& a, const LinOp& b) {
  return LinOp("(" + a.name_ + " + " + b.name_ + ")",
               [pa = a.plain_, pb = b.plain_](const Poly4& p) { return pa(p) + pb(p); },
               both(a.weighted_, b.weighted_, &add));
}

LinOp operator-(const LinOp& a, const LinOp& b) {
  return LinOp("(" + a.name_ + " - " + b.name_ + ")",
               [pa = a.plain_, pb = b.plain_](const Poly4& p) { return pa(p) - pb(p); },
               both(a.weighted_, b.weighted_, &sub));
}

LinOp operator*(const CoeffQi2& c, const LinOp& a) {
  std::optional<Action> w;
  if (a.weighted_) w = Action([c, wa = *a.weighted_](const Poly4& p) { return c * wa(p); });
  return LinOp("(" + c.pretty() + ")*" + a.name_, [c, pa = a.plain_](const Poly4& p) { return c * pa(p); },
               std::move(w));
}

LinOp operator*(const LinOp& a, const LinOp& b) {
  std::optional<Action> w;
  if (a.weighted_ && b.weighted_)
    w = Action([wa = *a.weighted_, wb = *b.weighted_](const Poly4& p) { return wa(wb(p)); });
  return LinOp(a.name_ + " " + b.name_, [pa = a.plain_, pb = b.plain_](const Poly4& p) { return pa(pb(p)); },
               std::move(w));
}

LinOp identity() {
  Action id = [](const Poly4& p) { return p; };
  return LinOp("I", id, id);
}

LinOp multiply(const Poly4& factor, std::string name) {
  Action act = [factor](const Poly4& p) { return factor * p; };
  return LinOp(std::move(name), act, act);
}

LinOp multiply(Var v) {
  const int slot = static_cast<int>(v);
  Action act = [slot](const Poly4& p) { return p.mul_var(slot); };
  return LinOp(var_name(v), act, act);
}

LinOp multiply(Aux a) { return multiply(aux_poly(a), aux_name(a)); }

LinOp diff(Var v) {
  const int slot = static_cast<int>(v);
  Action plain = [slot](const Poly4& p) { return p.diff(slot); };
  Action weighted = [slot, g = weight_gradient(v)](const Poly4& p) { return p.diff(slot) - g * p; };
  return LinOp(std::string("d/d") + var_name(v), plain, weighted);
}

LinOp pow(const LinOp& t, unsigned k) {
  LinOp r = identity();
  for (unsigned i = 0; i < k; ++i) r = i == 0 ? t : t * r;
  return r;
}

LinOp exp_nilpotent(const LinOp& d, const CoeffQi2& c) {
  struct Probe {
    std::mutex mu;
    int checked_up_to = -1;
  };
  auto probe = std::make_shared<Probe>();
  auto ensure_lowering = [probe, d](int degree) {
    std::lock_guard lock(probe->mu);
    for (int k = probe->checked_up_to + 1; k <= degree; ++k) {
      for (const auto& e : monomials_of_degree(static_cast<unsigned>(k))) {
        const Poly4 image = d(Poly4::monomial(e));
        if (!image.is_zero() && image.total_degree() >= k)
          throw std::domain_error("exponential requested of '" + d.name() + "', which does not lower degree");
      }
      probe->checked_up_to = k;
    }
  };
  Action plain = [d, c, ensure_lowering](const Poly4& p) {
    if (p.is_zero()) return p;
    const int deg = p.total_degree();
    ensure_lowering(deg);
    Poly4 sum = p;
    Poly4 term = p;
    for (int k = 1; k <= deg; ++k) {
      term = CoeffQi2(Rational(1, k)) * (c * d(term));
      if (term.is_zero()) break;
      sum += term;
    }
    return sum;
  };
  return LinOp("exp(" + c.pretty() + "*" + d.name() + ")", plain);
}

LinOp conjugate(const LinOp& t) {
  std::optional<Action> w;
  if (t.has_weighted_action())
    w = Action([t](const Poly4& p) { return t.weighted_apply({p.conj()}).cofactor.conj(); });
  return LinOp("conj(" + t.name() + ")", [t](const Poly4& p) { return t(p.conj()).conj(); }, std::move(w));
}

LinOp A(Aux a) {
  const CoeffQi2 half(Rational(1, 2));
  const CoeffQi2 i = CoeffQi2::i();
  LinOp op = [&] {
    switch (a) {
      case Aux::xi: return half * (diff(Var::z) - i * diff(Var::w));
      case Aux::xibar: return half * (diff(Var::zbar) + i * diff(Var::wbar));
      case Aux::xistar: return half * (diff(Var::zbar) - i * diff(Var::wbar));
      case Aux::xitilde: return half * (diff(Var::z) + i * diff(Var::w));
    }
    throw std::invalid_argument("unknown auxiliary variable");
  }();
  return LinOp(std::string("A_") + aux_name(a), [op](const Poly4& p) { return op(p); },
               [op](const Poly4& p) { return op.weighted_apply({p}).cofactor; });
}

namespace {

Aux partner(Aux a) {
  switch (a) {
    case Aux::xi: return Aux::xibar;
    case Aux::xibar: return Aux::xi;
    case Aux::xistar: return Aux::xitilde;
    case Aux::xitilde: return Aux::xistar;
  }
  throw std::invalid_argument("unknown auxiliary variable");
}

}  // namespace

LinOp raising(Aux a) { return multiply(a) - A(partner(a)); }

LinOp lowering(Aux a) { return A(a); }

LinOp raising_as_printed(Aux a) {
  switch (a) {
    case Aux::xistar: return raising(Aux::xitilde);
    case Aux::xitilde: return raising(Aux::xistar);
    default: return raising(a);
  }
}

LinOp laplacian() { return diff(Var::z) * diff(Var::zbar) + diff(Var::w) * diff(Var::wbar); }

LinOp box() { return diff(Var::z) * diff(Var::wbar) - diff(Var::w) * diff(Var::zbar); }

LinOp euler(Var x) { return multiply(x) * diff(x); }

LinOp coupled_euler(Var u, Var v) { return multiply(u) * diff(v); }

LinOp bochner_L(Aux a) {
  switch (a) {
    case Aux::xi: return multiply(Aux::xi) * A(Aux::xi) - A(Aux::xi) * A(Aux::xibar);
    case Aux::xibar: return multiply(Aux::xibar) * A(Aux::xibar) - A(Aux::xi) * A(Aux::xibar);
    case Aux::xistar: return multiply(Aux::xistar) * A(Aux::xistar) - A(Aux::xistar) * A(Aux::xitilde);
    case Aux::xitilde: return multiply(Aux::xitilde) * A(Aux::xitilde) - A(Aux::xistar) * A(Aux::xitilde);
  }
  throw std::invalid_argument("unknown auxiliary variable");
}

LinOp bochner_S(Aux a) {
  const CoeffQi2 i = CoeffQi2::i();
  const CoeffQi2 quarter(Rational(-1, 4));
  const LinOp s_xi = quarter * (laplacian() + i * box() - CoeffQi2(2) * (euler(Var::z) + euler(Var::w)) +
                                CoeffQi2(0, 2) * (coupled_euler(Var::z, Var::w) - coupled_euler(Var::w, Var::z)));
  const LinOp s_star =
      quarter * (laplacian() - i * box() - CoeffQi2(2) * (euler(Var::zbar) + euler(Var::wbar)) +
                 CoeffQi2(0, 2) * (coupled_euler(Var::zbar, Var::wbar) - coupled_euler(Var::wbar, Var::zbar)));
  switch (a) {
    case Aux::xi: return s_xi;
    case Aux::xibar: return conjugate(s_xi);
    case Aux::xistar: return s_star;
    case Aux::xitilde: return conjugate(s_star);
  }
  throw std::invalid_argument("unknown auxiliary variable");
}

OpEqualResult op_equal(const LinOp& t, const LinOp& u, unsigned bound) {
  std::vector<Poly4::Exponents> monos;
  for (unsigned d = 0; d <= bound; ++d) {
    auto layer = monomials_of_degree(d);
    monos.insert(monos.end(), layer.begin(), layer.end());
  }
  const auto residuals = parallel_map(monos.size(), [&](std::size_t k) {
    const Poly4 m = Poly4::monomial(monos[k]);
    return t(m) - u(m);
  });
  OpEqualResult r;
  r.monomials_checked = monos.size();
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (!residuals[k].is_zero()) {
      r.equal = false;
      r.witness = monos[k];
      r.residual = residuals[k];
      break;
    }
  }
  return r;
}

}  // namespace polyherm::ops
