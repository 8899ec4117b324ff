#include "polyherm/generating.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "polyherm/kahan.hpp"
#include "polyherm/uchp.hpp"

namespace polyherm::gen {

namespace {

using uchp::NumericTable;
const cd kI{0.0, 1.0};

struct Info {
  Kernel kernel;
  const char* name;
  bool bivariate;
  const char* erratum;
};

constexpr Info kInfo[] = {
    {Kernel::gen_hmn, "GenHmn", false, ""},
    {Kernel::genfct1hh, "genfct1hh", false, ""},
    {Kernel::mehler2, "Mehler2", false, ""},
    {Kernel::bilgen2, "BilGen2", false, ""},
    {Kernel::bilgen1, "BilGen1", false,
     "base is (wbar - t*zbar + t*u)^m'; the printed base carries u where t*u is needed"},
    {Kernel::gf4, "gf4", true, "prefactor is (-t)^{m'}; the printed exponent -m' has the wrong sign"},
    {Kernel::g2, "G2", true, "last exponent term is 2i(u-v)Re(z*wbar); the printed form drops (u-v)"},
    {Kernel::genfct4, "GenFct4", true, ""},
    {Kernel::genfct4pc, "GenFct4pc", true, ""},
    {Kernel::genfct5, "GenFct5", true,
     "series weight is t^n (printed v^n); closed form is (t*u + eta)^{m'} exp(t(zbar^2+wbar^2) + u*zeta) "
     "with eta = (z - t*zbar) - i(w - t*wbar)"},
    {Kernel::g4, "G4", true, "series index order is H_{m,n,m',n'}; the printed H_{m,m',n,n'} fails"},
    {Kernel::partial_gf1, "PartialGF1", true, ""},
    {Kernel::partial_gf2, "PartialGF2", true,
     "closed form is exp(-uv + u*xi + v*xibar) H_{m',n'}(xi*, z - iw); the printed form flips the "
     "exponent signs and reads w - iw"},
    {Kernel::tm, "TM", true,
     "no constant phase fits; closed form is exp(iu(w-z) + z*wbar) H_{m,n}(w-z, wbar-iu) "
     "exp(v(w+zbar) - w*z) H_{m',n'}(zbar+w, z-v)"},
};

const Info& info(Kernel k) {
  for (const Info& i : kInfo)
    if (i.kernel == k) return i;
  throw std::invalid_argument("unknown kernel");
}

void require_unit(cd t, const char* what) {
  if (std::abs(std::abs(t) - 1.0) > 1e-12) throw DomainError(std::string(what) + ": t must lie on the unit circle");
}

void require_below_one(double x, const char* what, const char* cond) {
  if (!(x < 1.0)) throw DomainError(std::string(what) + ": requires " + cond + " < 1");
}

std::vector<cd> powers(cd x, unsigned n) {
  std::vector<cd> p(n + 1);
  p[0] = 1.0;
  for (unsigned k = 1; k <= n; ++k) p[k] = p[k - 1] * x;
  return p;
}

std::vector<double> inverse_factorials(unsigned n) {
  std::vector<double> f(n + 1);
  f[0] = 1.0;
  for (unsigned k = 1; k <= n; ++k) f[k] = f[k - 1] / k;
  return f;
}

// ξ, ξ̄, ξ*, ξ̃ at a genuine point (z, w).
struct AuxValues {
  cd xi, xibar, xistar, xitilde;
};

AuxValues aux_values(cd z, cd w) {
  const cd zb = std::conj(z), wb = std::conj(w);
  return {z + kI * w, zb - kI * wb, zb + kI * wb, z - kI * w};
}

cd power(cd x, unsigned k) {
  cd r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

const char* kernel_name(Kernel k) { return info(k).name; }

std::optional<Kernel> parse_kernel(std::string_view name) {
  for (const Info& i : kInfo)
    if (name == i.name) return i.kernel;
  return std::nullopt;
}

bool is_bivariate(Kernel k) { return info(k).bivariate; }
bool has_erratum(Kernel k) { return *info(k).erratum != '\0'; }
std::string_view erratum_note(Kernel k) { return info(k).erratum; }

cd series(Kernel k, const Args& a, unsigned trunc, bchp::Form form) {
  const unsigned N = trunc;
  const MultiIndex4& F = a.fixed;
  const auto inv = inverse_factorials(N);
  const auto pu = powers(a.u, N), pv = powers(a.v, N), pup = powers(a.up, N), pvp = powers(a.vp, N),
             pt = powers(a.t, N);
  const cd zb = std::conj(a.z), wb = std::conj(a.w);
  const AuxValues x = aux_values(a.z, a.w);
  const bool printed = form == bchp::Form::as_printed;
  KahanSum<cd> sum;

  switch (k) {
    case Kernel::gen_hmn: {
      const NumericTable h(a.z, zb, N, N);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pv[n] * (inv[m] * inv[n]) * h(m, n);
      break;
    }
    case Kernel::genfct1hh: {
      const NumericTable hz(a.z, zb, F.m, N), hw(a.w, wb, N, F.mp);
      for (unsigned n = 0; n <= N; ++n) sum += pt[n] * inv[n] * hz(F.m, n) * hw(n, F.mp);
      break;
    }
    case Kernel::mehler2: {
      const NumericTable hz(a.z, zb, N, N), hw(a.w, wb, N, N);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pv[n] * (inv[m] * inv[n]) * hz(m, n) * hw(m, n);
      break;
    }
    case Kernel::bilgen2: {
      const NumericTable hz(a.z, zb, N, N), hw(wb, a.w, N, N);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pt[n] * (inv[m] * inv[n]) * hz(m, n) * hw(m, n);
      break;
    }
    case Kernel::bilgen1: {
      const NumericTable hz(a.z, zb, N, N), hw(a.w, wb, N, F.mp);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pt[n] * (inv[m] * inv[n]) * hz(m, n) * hw(n, F.mp);
      break;
    }
    case Kernel::gf4: {
      const NumericTable h1(x.xi, x.xibar, F.m, N), h2(x.xistar, x.xitilde, N, F.mp);
      for (unsigned n = 0; n <= N; ++n) sum += pt[n] * inv[n] * h1(F.m, n) * h2(n, F.mp);
      break;
    }
    case Kernel::g2: {
      const NumericTable h1(x.xi, x.xibar, N, N), h2(x.xistar, x.xitilde, N, N);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pv[n] * (inv[m] * inv[n]) * h1(m, n) * h2(m, n);
      break;
    }
    case Kernel::genfct4:
    case Kernel::genfct4pc: {
      const NumericTable h1(x.xi, x.xibar, N, N), h2(x.xistar, x.xitilde, N, N);
      const bool with_t = k == Kernel::genfct4;
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n)
          sum += pu[m] * (with_t ? pt[n] : cd(1.0)) * (inv[m] * inv[n]) * h1(m, n) * h2(n, m);
      break;
    }
    case Kernel::genfct5: {
      const NumericTable h1(x.xi, x.xibar, N, N), h2(x.xistar, x.xitilde, N, F.mp);
      const auto& second = printed ? pv : pt;
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n)
          sum += pu[m] * second[n] * (inv[m] * inv[n]) * h1(m, n) * h2(n, F.mp);
      break;
    }
    case Kernel::g4: {
      const NumericTable h1(x.xi, x.xibar, N, N), h2(x.xistar, x.xitilde, N, N);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n)
          for (unsigned mp = 0; mp <= N; ++mp)
            for (unsigned np = 0; np <= N; ++np) {
              const cd hm = printed ? h1(m, mp) * h2(n, np) : h1(m, n) * h2(mp, np);
              sum += pu[m] * pv[n] * pup[mp] * pvp[np] * (inv[m] * inv[n] * inv[mp] * inv[np]) * hm;
            }
      break;
    }
    case Kernel::partial_gf1: {
      const NumericTable h1(x.xi, x.xibar, N, F.n), h2(x.xistar, x.xitilde, N, F.np);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned mp = 0; mp <= N; ++mp)
          sum += pu[m] * pup[mp] * (inv[m] * inv[mp]) * h1(m, F.n) * h2(mp, F.np);
      break;
    }
    case Kernel::partial_gf2: {
      const NumericTable h1(x.xi, x.xibar, N, N);
      const cd tail = uchp::value(F.mp, F.np, x.xistar, x.xitilde);
      for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n) sum += pu[m] * pv[n] * (inv[m] * inv[n]) * h1(m, n) * tail;
      break;
    }
    case Kernel::tm: {
      const NumericTable hw(a.w, wb, N + F.m, N + F.n), hz(zb, a.z, N + F.mp, N + F.np);
      const auto piu = powers(kI * a.u, N), pz = powers(a.z, N), pmw = powers(-a.w, N);
      for (unsigned j = 0; j <= N; ++j)
        for (unsigned kk = 0; kk <= N; ++kk)
          for (unsigned jp = 0; jp <= N; ++jp)
            for (unsigned kp = 0; kp <= N; ++kp)
              sum += piu[j] * pz[kk] * pv[jp] * pmw[kp] * (inv[j] * inv[kk] * inv[jp] * inv[kp]) *
                     hz(jp + F.mp, kp + F.np) * hw(j + F.m, kk + F.n);
      break;
    }
  }
  return sum.value();
}

cd closed(Kernel k, const Args& a, bchp::Form form) {
  const MultiIndex4& F = a.fixed;
  const cd z = a.z, w = a.w, zb = std::conj(z), wb = std::conj(w);
  const cd u = a.u, v = a.v, t = a.t;
  const AuxValues x = aux_values(z, w);
  const bool printed = form == bchp::Form::as_printed;
  const char* name = kernel_name(k);

  switch (k) {
    case Kernel::gen_hmn: return std::exp(-u * v + z * u + zb * v);
    case Kernel::genfct1hh:
      require_unit(t, name);
      return power(-t, F.mp) * uchp::value(F.m, F.mp, z - t * w, zb - std::conj(t) * wb) * std::exp(t * w * zb);
    case Kernel::mehler2: {
      require_below_one(std::abs(u * v), name, "|uv|");
      const cd d = 1.0 - u * v;
      return std::exp(-(u * v * (std::norm(z) + std::norm(w)) - u * z * w - v * zb * wb) / d) / d;
    }
    case Kernel::bilgen2: {
      require_unit(t, name);
      require_below_one(std::abs(u), name, "|u|");
      const cd d = 1.0 - t * u;
      return std::exp(-t * u * std::norm(z - t * w) / d) * std::exp(t * w * zb) / d;
    }
    case Kernel::bilgen1:
      require_unit(t, name);
      require_below_one(std::abs(u), name, "|u|");
      if (printed) return power(wb - t * zb + u, F.mp) * std::exp(t * zb * w - u * t * (w - std::conj(t) * z));
      return power(wb - t * zb + t * u, F.mp) * std::exp(t * zb * w + u * (z - t * w));
    case Kernel::gf4: {
      require_unit(t, name);
      const cd zeta = (z - t * zb) + kI * (w - t * wb);
      const cd phase = printed ? 1.0 / power(-t, F.mp) : power(-t, F.mp);
      return phase * uchp::value(F.m, F.mp, zeta, std::conj(zeta)) * std::exp(t * (zb * zb + wb * wb));
    }
    case Kernel::g2: {
      require_below_one(std::abs(u * v), name, "|uv|");
      const cd d = 1.0 - u * v;
      const cd cross = 2.0 * kI * (z * wb).real() * (printed ? cd(1.0) : u - v);
      return std::exp(((u + v - 2.0 * u * v) * std::norm(z) - (u + v + 2.0 * u * v) * std::norm(w) + cross) / d) / d;
    }
    case Kernel::genfct4: {
      require_unit(t, name);
      require_below_one(std::abs(u), name, "|u|");
      const cd d = 1.0 - u * t;
      return std::exp(t * (zb * zb + wb * wb)) / d * std::exp(-u * t / d * std::norm(z - t * zb + kI * (w - t * wb)));
    }
    case Kernel::genfct4pc: {
      require_below_one(std::abs(u), name, "|u|");
      const cd d = 1.0 - u;
      const double im2 = z.imag() * z.imag() + w.imag() * w.imag();
      return std::exp(zb * zb + wb * wb) / d * std::exp(-4.0 * u / d * im2);
    }
    case Kernel::genfct5: {
      require_unit(t, name);
      require_below_one(std::abs(u), name, "|u|");
      const cd zeta = (z - t * zb) + kI * (w - t * wb);
      const cd lead = std::exp(t * (zb * zb + wb * wb));
      if (printed) return power(t * u + zeta, F.mp) * lead * std::exp(u * std::conj(zeta));
      const cd eta = (z - t * zb) - kI * (w - t * wb);
      return power(t * u + eta, F.mp) * lead * std::exp(u * zeta);
    }
    case Kernel::g4:
      return std::exp(-u * v - a.up * a.vp) *
             std::exp(z * (u + a.vp) + zb * (v + a.up) + kI * w * (u - a.vp) + kI * wb * (a.up - v));
    case Kernel::partial_gf1:
      return power(zb - kI * wb - u, F.n) * power(z - kI * w - a.up, F.np) * std::exp(u * x.xi + a.up * x.xistar);
    case Kernel::partial_gf2:
      if (printed) return std::exp(u * v - u * x.xi - v * x.xibar) * uchp::value(F.mp, F.np, x.xistar, w - kI * w);
      return std::exp(-u * v + u * x.xi + v * x.xibar) * uchp::value(F.mp, F.np, x.xistar, x.xitilde);
    case Kernel::tm:
      if (printed) {
        const cd sign = F.total() % 2 ? -1.0 : 1.0;
        return sign * power(kI, F.m + F.np) * std::exp(u * x.xi + v * x.xistar) *
               uchp::value(F.m, F.n, x.xi, x.xibar) * uchp::value(F.mp, F.np, x.xistar, x.xitilde);
      }
      return std::exp(kI * u * (w - z) + z * wb) * uchp::value(F.m, F.n, w - z, wb - kI * u) *
             std::exp(v * (w + zb) - w * z) * uchp::value(F.mp, F.np, zb + w, z - v);
  }
  throw std::invalid_argument("unknown kernel");
}

}  // namespace polyherm::gen
