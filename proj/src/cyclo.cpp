#include "wallcross/cyclo.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wallcross {

namespace {

// Dense integer polynomials, index = exponent, no trailing zeros.
using IPoly = std::vector<Int>;

void strip(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of a by monic b.
IPoly divide_monic(IPoly a, const IPoly& b) {
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  for (int k = int(a.size()) - int(b.size()); k >= 0; --k) {
    Int coef = a[k + b.size() - 1];
    if (coef == 0) continue;
    q[k] = coef;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= coef * b[j];
  }
  strip(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
  return q;
}

// Phi_M via x^M - 1 = prod_{d | M} Phi_d.
IPoly cyclotomic_poly(long m) {
  std::vector<IPoly> phi(m + 1);
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    IPoly num(d + 1, Int(0));  // x^d - 1
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = divide_monic(num, phi[e]);
    phi[d] = num;
  }
  return phi[m];
}

// Rational polynomials for field inversion, no trailing zeros.
using QPoly = std::vector<Rat>;

void strip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strip(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// a = q*b + r with deg r < deg b; returns {q, r}.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat coef = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    strip(a);  // leading term cancels exactly, so a shrinks every pass
  }
  return {q, a};
}

}  // namespace

CycloContext::CycloContext(long m) : order(m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  minpoly = cyclotomic_poly(m);
  degree = int(minpoly.size()) - 1;
  zeta_pow.assign(size_t(m), std::vector<Rat>(size_t(degree), Rat(0)));
  zeta_pow[0][0] = 1;
  for (long e = 1; e < m; ++e) {
    const auto& prev = zeta_pow[e - 1];
    auto& cur = zeta_pow[e];
    Rat spill = prev[degree - 1];
    for (int k = degree - 1; k >= 1; --k) cur[k] = prev[k - 1];
    cur[0] = 0;
    if (spill != 0)  // zeta^degree = -sum_k minpoly[k] zeta^k
      for (int k = 0; k < degree; ++k) cur[k] -= spill * Rat(minpoly[k]);
  }
}

CycloNum::CycloNum(const CycloContext& cx, const Rat& value)
    : ctx(&cx), c(size_t(cx.degree), Rat(0)) {
  c[0] = value;
}

bool CycloNum::is_zero() const {
  for (const Rat& x : c)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) return false;
  return true;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (Rat& x : r.c) x = -x;
  return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum r = *this;
  for (size_t k = 0; k < c.size(); ++k) r.c[k] += o.c[k];
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  CycloNum r = *this;
  for (size_t k = 0; k < c.size(); ++k) r.c[k] -= o.c[k];
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  int deg = ctx->degree;
  std::vector<Rat> conv(size_t(2 * deg - 1), Rat(0));
  for (int i = 0; i < deg; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c[j] == 0) continue;
      Rat prod = c[i] * o.c[j];
      conv[i + j] += prod;
    }
  }
  CycloNum r(*ctx, Rat(0));
  for (int k = 0; k < int(conv.size()); ++k) {
    if (conv[k] == 0) continue;
    if (k < deg) {
      r.c[k] += conv[k];
    } else {
      const auto& rep = ctx->zeta_pow[size_t(k % ctx->order)];
      for (int j = 0; j < deg; ++j) r.c[j] += conv[k] * rep[j];
    }
  }
  return r;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  if (is_rational()) {
    CycloNum r(*ctx, Rat(0));
    r.c[0] = Rat(1) / c[0];
    return r;
  }
  // Extended Euclid: s*a + t*Phi = 1 since Phi_M is irreducible and deg a < deg Phi.
  QPoly a(c);
  strip(a);
  QPoly b(ctx->minpoly.size());
  for (size_t k = 0; k < b.size(); ++k) b[k] = Rat(ctx->minpoly[k]);
  QPoly r0 = b, r1 = a;
  QPoly s0 = {}, s1 = {Rat(1)};  // s tracks the coefficient of a
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic polynomial not coprime");
  CycloNum inv(*ctx, Rat(0));
  if (s0.size() > inv.c.size()) throw std::logic_error("cofactor degree too large");
  for (size_t k = 0; k < s0.size(); ++k) inv.c[k] = s0[k] / r0[0];
  return inv;
}

std::string CycloNum::str() const {
  std::ostringstream out;
  bool first = true;
  for (int k = ctx->degree - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    Rat coef = c[k];
    if (first) {
      if (coef < 0) out << "-";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    Rat mag = rat_abs(coef);
    if (k == 0) {
      out << rat_str(mag);
    } else {
      if (mag != 1) out << rat_str(mag) << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CycloNum root_of_unity(const CycloContext& cx, const Rat& q) {
  Rat qc = q;
  qc.canonicalize();  // callers may pass freshly built fractions
  Rat scaled = qc * Rat(cx.order);
  if (!is_integer(scaled))
    throw std::domain_error("root of unity outside cyclotomic context");
  Int e = scaled.get_num();
  Int m(cx.order);
  Int red = e % m;
  if (red < 0) red += m;
  CycloNum r(cx, Rat(0));
  r.c.assign(cx.zeta_pow[red.get_ui()].begin(), cx.zeta_pow[red.get_ui()].end());
  return r;
}

CycloNum galois(const CycloNum& x, long a) {
  const CycloContext& cx = *x.ctx;
  long m = cx.order;
  long aa = ((a % m) + m) % m;
  if (gcd(Int(aa), Int(m)) != 1)
    throw std::domain_error("galois exponent not coprime to order");
  CycloNum r(cx, Rat(0));
  for (int k = 0; k < cx.degree; ++k) {
    if (x.c[k] == 0) continue;
    const auto& rep = cx.zeta_pow[size_t((long(k) * aa) % m)];
    for (int j = 0; j < cx.degree; ++j) r.c[j] += x.c[k] * rep[j];
  }
  return r;
}

}  // namespace wallcross
