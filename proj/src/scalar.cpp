#include "wallcross/scalar.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace wallcross {

namespace {

RatVec exps_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec exps_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string exp_str(const Rat& e) {
  std::string s = rat_str(e);
  if (s.find('/') != std::string::npos || e < 0) return "(" + s + ")";
  return s;
}

// Quotient n/d if the division terminates exactly, nullopt otherwise.
std::optional<LaurentPoly> try_divide(const LaurentPoly& n, const LaurentPoly& d) {
  if (n.is_zero()) return LaurentPoly(*n.ctx, Rat(0));
  if (d.terms.size() == 1) {
    const auto& [dexp, dcoef] = *d.terms.begin();
    CycloNum dinv = dcoef.inverse();
    LaurentPoly q(*n.ctx);
    for (const auto& [e, c] : n.terms) q.add_term(exps_sub(e, dexp), c * dinv);
    return q;
  }
  const RatVec& lead = d.terms.rbegin()->first;
  const CycloNum& lead_coef = d.terms.rbegin()->second;
  RatVec low_bound = exps_sub(n.terms.begin()->first, d.terms.begin()->first);
  LaurentPoly rem = n, quot(*n.ctx);
  size_t cap = 1000 + 10 * n.terms.size() * d.terms.size();
  for (size_t iter = 0; iter < cap; ++iter) {
    if (rem.is_zero()) return quot;
    RatVec qe = exps_sub(rem.terms.rbegin()->first, lead);
    if (qe < low_bound) return std::nullopt;  // below the least possible term
    CycloNum qc = rem.terms.rbegin()->second / lead_coef;
    quot.add_term(qe, qc);
    for (const auto& [e, c] : d.terms) rem.add_term(exps_add(qe, e), -(qc * c));
  }
  return std::nullopt;
}

}  // namespace

LaurentPoly::LaurentPoly(const ScalarContext& cx, const Rat& value) : ctx(&cx) {
  if (value != 0) terms.emplace(RatVec(size_t(cx.nvars()), Rat(0)), CycloNum(cx.cyclo, value));
}

LaurentPoly LaurentPoly::monomial(const ScalarContext& cx, const RatVec& exps,
                                  const CycloNum& coef) {
  LaurentPoly p(cx);
  p.add_term(exps, coef);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  for (const Rat& e : terms.begin()->first)
    if (e != 0) return false;
  return true;
}

void LaurentPoly::add_term(const RatVec& exps, const CycloNum& coef) {
  if (coef.is_zero()) return;
  auto [it, fresh] = terms.emplace(exps, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*ctx);
  for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(*ctx);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) r.add_term(exps_add(e1, e2), c1 * c2);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool rational = c.is_rational();
    Rat mag = rational ? rat_abs(c.rational_part()) : Rat(0);
    bool negative = rational && c.rational_part() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string coef_txt = rational ? rat_str(mag) : "(" + c.str() + ")";
    bool monomial_empty = true;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial_empty) mono << "*";
      mono << ctx->vars[i];
      if (e[i] != 1) mono << "^" << exp_str(e[i]);
      monomial_empty = false;
    }
    if (monomial_empty) {
      out << coef_txt;
    } else {
      if (coef_txt != "1") out << coef_txt << "*";
      out << mono.str();
    }
  }
  return out.str();
}

Scalar::Scalar(const ScalarContext& cx, const Rat& value)
    : ctx(&cx), num(cx, value), den(cx, Rat(1)) {}

Scalar::Scalar(LaurentPoly n) : ctx(n.ctx), num(std::move(n)), den(*ctx, Rat(1)) {}

Scalar::Scalar(LaurentPoly n, LaurentPoly d) : ctx(n.ctx) {
  if (d.is_zero()) throw std::domain_error("scalar division by zero");
  if (n.is_zero()) {
    num = LaurentPoly(*ctx, Rat(0));
    den = LaurentPoly(*ctx, Rat(1));
    return;
  }
  if (auto q = try_divide(n, d)) {
    num = std::move(*q);
    den = LaurentPoly(*ctx, Rat(1));
    return;
  }
  // Normal form: den's least exponent is 0, den's leading coefficient is 1.
  RatVec shift = d.terms.begin()->first;
  CycloNum lead = d.terms.rbegin()->second;
  CycloNum lead_inv = lead.inverse();
  num = LaurentPoly(*ctx);
  den = LaurentPoly(*ctx);
  for (const auto& [e, c] : n.terms) num.terms.emplace(exps_sub(e, shift), c * lead_inv);
  for (const auto& [e, c] : d.terms) den.terms.emplace(exps_sub(e, shift), c * lead_inv);
}

bool Scalar::operator==(const Scalar& o) const { return num * o.den == o.num * den; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num = -r.num;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num * o.den + o.num * den, den * o.den);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num * o.den - o.num * den, den * o.den);
}

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num * o.num, den * o.den); }

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  return Scalar(num * o.den, den * o.num);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar inverse of zero");
  return Scalar(den, num);
}

Scalar Scalar::galois_conjugate(long a) const {
  LaurentPoly gn(*ctx), gd(*ctx);
  for (const auto& [e, c] : num.terms) gn.add_term(e, galois(c, a));
  for (const auto& [e, c] : den.terms) gd.add_term(e, galois(c, a));
  return Scalar(std::move(gn), std::move(gd));
}

std::string Scalar::str() const {
  if (den.is_constant() && !den.is_zero() &&
      den.terms.begin()->second == CycloNum(ctx->cyclo, Rat(1)))
    return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

UnitValue UnitValue::operator*(const UnitValue& o) const {
  return UnitValue(root + o.root, exps_add(exps, o.exps));
}

UnitValue UnitValue::inverse() const {
  RatVec e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) e[i] = -exps[i];
  return UnitValue(-root, std::move(e));
}

UnitValue UnitValue::pow(const Int& k) const {
  Rat kk(k);
  RatVec e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) e[i] = exps[i] * kk;
  return UnitValue(root * kk, std::move(e));
}

UnitValue UnitValue::principal_root(long l) const {
  if (l <= 0) throw std::domain_error("root index must be positive");
  Rat inv_l(1, l);
  RatVec e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) e[i] = exps[i] * inv_l;
  return UnitValue(root * inv_l, std::move(e));
}

Scalar UnitValue::to_scalar(const ScalarContext& cx) const {
  if (int(exps.size()) != cx.nvars())
    throw std::logic_error("unit value variable count mismatch");
  return Scalar(LaurentPoly::monomial(cx, exps, root_of_unity(cx.cyclo, root)));
}

std::vector<Scalar> scalar_solve(ScalarMatrix a, std::vector<Scalar> b) {
  int n = int(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular scalar system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    Scalar inv = a[col][col].inverse();
    for (int j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Scalar f = a[row][col];
      for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

Scalar scalar_det(ScalarMatrix a) {
  int n = int(a.size());
  if (n == 0) throw std::logic_error("determinant of empty matrix");
  const ScalarContext& cx = *a[0][0].ctx;
  Scalar det = Scalar::one(cx);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Scalar::zero(cx);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    Scalar inv = a[col][col].inverse();
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      Scalar f = a[row][col] * inv;
      for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace wallcross
