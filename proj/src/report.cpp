#include "wallcross/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "wallcross/anticones.hpp"
#include "wallcross/eqk.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/fmk.hpp"
#include "wallcross/ifun.hpp"
#include "wallcross/stackgeom.hpp"
#include "wallcross/wallcrossing.hpp"

namespace wallcross {
namespace {

using nlohmann::json;  // objects are std::map-backed: dumps come out key-sorted

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// ---- input parsing ---------------------------------------------------------

void reject_floats(const json& j, const std::string& path) {
  if (j.is_number_float())
    throw NonRationalNumber("decimal float at " + path + ": write rationals as \"p/q\"");
  if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) reject_floats(v, path + "[" + std::to_string(i++) + "]");
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) reject_floats(v, path + "." + k);
  }
}

Rat as_rat(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Rat(static_cast<unsigned long>(j.get<unsigned long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw SchemaError(path + " must be an integer or a \"p/q\" string");
}

Int as_int(const json& j, const std::string& path) {
  Rat q = as_rat(j, path);
  if (!is_integer(q)) throw SchemaError(path + " must be an integer");
  return q.get_num();
}

int as_small_int(const json& j, const std::string& path, int lo, int hi) {
  Int v = as_int(j, path);
  if (v < lo || v > hi)
    throw SchemaError(path + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return int(v.get_si());
}

RatVec as_ratvec(const json& j, int len, const std::string& path) {
  if (!j.is_array() || int(j.size()) != len)
    throw SchemaError(path + " must be an array of length " + std::to_string(len));
  RatVec v;
  v.reserve(j.size());
  size_t i = 0;
  for (const auto& x : j) v.push_back(as_rat(x, path + "[" + std::to_string(i++) + "]"));
  return v;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!allowed.count(k)) throw SchemaError("unknown key " + path + "." + k);
  }
}

// ---- serialization ---------------------------------------------------------

std::string jrat(const Rat& q) { return rat_str(q); }

json jratvec(const RatVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(jrat(q));
  return a;
}

std::string jint(const Int& x) { return x.get_str(); }

json jintvec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(jint(x));
  return a;
}

json jrows(const std::vector<IntVec>& rows) {
  json a = json::array();
  for (const IntVec& r : rows) a.push_back(jintvec(r));
  return a;
}

json jmat(const IntMatrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(jintvec(m.row(i)));
  return a;
}

json jslots(const std::vector<int>& v) {
  json a = json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

json jsets(const std::vector<std::vector<int>>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(jslots(s));
  return a;
}

json jgroup(const FgAbelianGroup& g) {
  json o;
  o["free_rank"] = g.free_rank;
  json t = json::array();
  for (const Int& d : g.torsion) t.push_back(jint(d));
  o["torsion"] = t;
  return o;
}

json jepsvec(const EpsVec& v) {
  json a = json::array();
  for (const EpsRat& e : v) a.push_back(e.str());
  return a;
}

json jpoly(const LaurentPoly& p) {
  json a = json::array();
  for (const auto& [exps, coef] : p.terms) {
    json t;
    t["exps"] = jratvec(exps);
    json c = json::array();
    for (const Rat& q : coef.c) c.push_back(jrat(q));
    t["coef"] = c;
    a.push_back(t);
  }
  return a;
}

json jscalar(const Scalar& s) {
  json o;
  o["num"] = jpoly(s.num);
  o["den"] = jpoly(s.den);
  o["text"] = s.str();
  return o;
}

json jchecks(const std::vector<ValidationCheck>& checks) {
  json a = json::array();
  for (const ValidationCheck& c : checks) {
    json o;
    o["name"] = c.name;
    o["pass"] = c.pass;
    o["detail"] = c.detail;
    a.push_back(o);
  }
  return a;
}

json jlabels(const std::vector<BasisLabel>& v) {
  json a = json::array();
  for (const BasisLabel& b : v) {
    json o;
    o["point"] = b.point + 1;
    o["rho"] = b.rho;
    a.push_back(o);
  }
  return a;
}

json jentries(const ScalarMatrix& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Scalar& s : row) r.push_back(jscalar(s));
    a.push_back(r);
  }
  return a;
}

std::string ideal_generator_text(const HypertoricIdealData& ideal, int row) {
  std::string s;
  for (int i = 0; i < ideal.coefficients.cols(); ++i) {
    Int c = ideal.coefficients.at(row, i);
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    Int a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += "z" + std::to_string(i + 1) + "*w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

void push_check(std::vector<ValidationCheck>& checks, const std::string& name, bool pass,
                const std::string& detail) {
  checks.push_back({name, pass, detail});
}

// validate() battery with chamber-dependent names suffixed by side.
void append_validate_checks(const GitData& g, const RatVec& theta, const std::string& suffix,
                            bool include_structural, std::vector<ValidationCheck>& checks) {
  static const std::set<std::string> structural = {"lawrence_pairing", "cy_sum", "characters_span"};
  for (ValidationCheck c : validate(g, theta).checks) {
    if (structural.count(c.name)) {
      if (!include_structural) continue;
    } else {
      c.name += suffix;
    }
    checks.push_back(c);
  }
}

// ---- commands --------------------------------------------------------------

const RatVec& require_minus(const InputSpec& s, const std::string& command) {
  if (!s.theta_minus) throw SchemaError(command + " requires theta_minus");
  return *s.theta_minus;
}

json cmd_validate(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  append_validate_checks(s.git, s.theta_plus, ":plus", true, checks);
  if (s.theta_minus) append_validate_checks(s.git, *s.theta_minus, ":minus", false, checks);
  json r;
  r["rank"] = s.git.rank;
  r["n"] = s.git.n;
  r["slots"] = s.git.count();
  r["extended_count"] = s.git.ext_count;
  return r;
}

json chamber_obj(const GitData& g, const RatVec& theta) {
  AnticoneSet a = anticone_set(g.chars, stability(theta));
  json o;
  o["minimal_anticones"] = jsets(a.minimal_sets());
  o["minimal_count"] = int(a.minimal.size());
  o["extended"] = jslots(extended_set(g.chars, stability(theta)));
  return o;
}

json cmd_chambers(const InputSpec& s, std::vector<ValidationCheck>&) {
  json r;
  r["plus"] = chamber_obj(s.git, s.theta_plus);
  if (s.theta_minus) r["minus"] = chamber_obj(s.git, *s.theta_minus);
  return r;
}

json cmd_wallcross(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  const RatVec& tm = require_minus(s, "wallcross");
  WallCrossingData wc = wall_crossing(s.git, s.theta_plus, tm);
  TildeGitData td = tilde_data(s.git, wc, s.theta_plus, tm);
  json r;
  r["e"] = jintvec(wc.e);
  r["m_plus"] = jslots(wc.m_plus);
  r["m_minus"] = jslots(wc.m_minus);
  r["m_zero"] = jslots(wc.m_zero);
  r["theta_zero"] = jratvec(wc.theta_zero);
  r["wall_basis"] = jmat(wc.wall_basis);
  r["anticones_plus"] = jsets(wc.aplus.minimal_sets());
  r["anticones_minus"] = jsets(wc.aminus.minimal_sets());
  json t;
  t["characters"] = jrows(td.chars.characters);
  t["theta"] = jepsvec(td.theta_tilde);
  t["theta_plus"] = jratvec(td.theta_tilde_plus);
  t["theta_minus"] = jratvec(td.theta_tilde_minus);
  r["tilde"] = t;
  push_check(checks, "m_sizes_match", wc.m_plus.size() == wc.m_minus.size(),
             std::to_string(wc.m_plus.size()) + " raising vs " + std::to_string(wc.m_minus.size()) +
                 " lowering slots");
  return r;
}

json fan_obj(const GitData& g, const RatVec& theta) {
  StackyFanData f = stacky_fan(g, theta);
  json o;
  o["target"] = jgroup(f.target);
  o["beta"] = jmat(f.beta);
  o["top_cones"] = jsets(f.top_cones);
  o["extended"] = jslots(f.extended);
  json sup = json::array();
  for (bool b : f.extended_in_support) sup.push_back(b);
  o["extended_in_support"] = sup;
  return o;
}

json cmd_fan(const InputSpec& s, std::vector<ValidationCheck>&) {
  json r;
  r["plus"] = fan_obj(s.git, s.theta_plus);
  if (s.theta_minus) r["minus"] = fan_obj(s.git, *s.theta_minus);
  HypertoricIdealData ideal = hypertoric_ideal(s.git);
  json io;
  io["reduced_basis"] = jmat(ideal.reduced_basis);
  io["coefficients"] = jmat(ideal.coefficients);
  json gens = json::array();
  for (int b = 0; b < ideal.coefficients.rows(); ++b) gens.push_back(ideal_generator_text(ideal, b));
  io["generators"] = gens;
  r["ideal"] = io;
  return r;
}

json atlas_obj(const CharData& chars, const RatVec& theta) {
  FixedPointAtlas a = fixed_points(chars, stability(theta));
  json o;
  json pts = json::array();
  for (const FixedPoint& p : a.points) {
    json q;
    q["delta"] = jslots(p.delta);
    q["iso_order"] = jint(p.iso_order);
    q["iso"] = jgroup(p.iso);
    q["char_lifts"] = jrows(p.char_lifts);
    json els = json::array();
    for (const RatVec& e : p.elements) els.push_back(jratvec(e));
    q["elements"] = els;
    pts.push_back(q);
  }
  o["points"] = pts;
  json in = json::array();
  for (const InertiaPoint& ip : a.inertia) {
    json q;
    q["point"] = ip.point + 1;
    q["elem"] = ip.elem + 1;
    q["label"] = jratvec(ip.label);
    in.push_back(q);
  }
  o["inertia"] = in;
  o["iso_order_sum"] = jint(a.iso_order_sum());
  return o;
}

json cmd_fixed_points(const InputSpec& s, std::vector<ValidationCheck>&) {
  json r;
  r["plus"] = atlas_obj(s.git.chars, s.theta_plus);
  if (s.theta_minus) r["minus"] = atlas_obj(s.git.chars, *s.theta_minus);
  return r;
}

json jcases(const std::vector<CrossingCase>& cases) {
  json a = json::array();
  for (size_t i = 0; i < cases.size(); ++i) {
    const CrossingCase& c = cases[i];
    json o;
    o["minus_point"] = int(i) + 1;
    o["shared"] = c.shared;
    if (c.shared) {
      o["plus_point"] = c.plus_point + 1;
    } else {
      o["j_minus"] = c.j_minus + 1;
      o["l"] = c.l;
    }
    a.push_back(o);
  }
  return a;
}

json cmd_fm(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  const RatVec& tm = require_minus(s, "fm");
  CrossingContext ctx = make_crossing(s.git, s.theta_plus, tm);
  FMMatrix m = fm_matrix(ctx);
  json r;
  r["session_order"] = ctx.session;
  r["cases"] = jcases(ctx.cases);
  r["rows"] = jlabels(m.rows);
  r["cols"] = jlabels(m.cols);
  r["entries"] = jentries(m.entries);
  json images = json::array();
  for (size_t c = 0; c < m.cols.size(); ++c) {
    KClass img = fm_transform(ctx, m.cols[c].point, m.cols[c].rho);
    json o;
    o["point"] = m.cols[c].point + 1;
    o["rho"] = m.cols[c].rho;
    json vals = json::array();
    for (const Scalar& v : img.values) vals.push_back(jscalar(v));
    o["values"] = vals;
    images.push_back(o);
  }
  r["images"] = images;
  push_check(checks, "fm_square", m.rows.size() == m.cols.size(),
             std::to_string(m.rows.size()) + " x " + std::to_string(m.cols.size()));
  return r;
}

json cmd_monodromy(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  const RatVec& tm = require_minus(s, "monodromy");
  CrossingContext ctx = make_crossing(s.git, s.theta_plus, tm);
  MonodromyData md = monodromy_data(ctx);
  Scalar det_fwd = fm_det(md.forward);
  Scalar det_rev = fm_det(md.reverse);
  Scalar det_loop = det_rev * det_fwd;
  json r;
  r["session_order"] = ctx.session;
  json loop;
  loop["rows"] = jlabels(md.loop.rows);
  loop["cols"] = jlabels(md.loop.cols);
  loop["entries"] = jentries(md.loop.entries);
  r["loop"] = loop;
  r["loop_is_identity"] = md.loop.is_identity();
  r["det_forward"] = jscalar(det_fwd);
  r["det_reverse"] = jscalar(det_rev);
  r["det_loop"] = jscalar(det_loop);
  push_check(checks, "monodromy_invertible", !det_loop.is_zero(),
             det_loop.is_zero() ? "loop determinant vanishes" : "loop determinant is nonzero");
  return r;
}

json jterm(const ISeriesTerm& t) {
  json o;
  o["degree"] = jratvec(t.degree.d);
  o["pairings"] = jratvec(t.degree.pairings);
  o["y_exponents"] = jratvec(t.y_exps);
  o["x_exponents"] = jratvec(t.x_exps);
  json fs = json::array();
  for (const HypFactor& f : t.factors) {
    json fo;
    fo["slot"] = f.slot + 1;
    fo["denominator"] = f.denominator;
    fo["shifts"] = jratvec(f.shifts);
    fs.push_back(fo);
  }
  o["factors"] = fs;
  json sec;
  sec["fractions"] = jratvec(t.sector.fractions);
  sec["age"] = jrat(t.sector.age);
  o["sector"] = sec;
  o["text"] = t.str();
  return o;
}

json cmd_ifunction(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  const RatVec& tm = require_minus(s, "ifunction");
  WallCrossingData wc = wall_crossing(s.git, s.theta_plus, tm);
  ModuliChartTransition chart = chart_transition(wc);
  const RatVec& theta = (s.side > 0) ? s.theta_plus : tm;
  ISeries is = i_series(s.git, theta, s.bound, chart, s.sector_sign_flipped);
  json r;
  r["side"] = (is.side > 0) ? "plus" : "minus";
  r["bound"] = jrat(s.bound);
  r["sector_sign"] = s.sector_sign_flipped ? "plus" : "minus";
  r["extended"] = jslots(is.extended);
  r["basis"] = jrows(is.basis);
  json ch;
  ch["e"] = jintvec(chart.e);
  ch["basis_plus"] = jrows(chart.basis_plus);
  ch["basis_minus"] = jrows(chart.basis_minus);
  ch["c_i"] = jratvec(chart.c_i);
  ch["c"] = jrat(chart.c);
  r["chart"] = ch;
  json sg;
  json rows = json::array();
  for (const RatVec& row : is.sigma.theta_rows) rows.push_back(jratvec(row));
  sg["theta_rows"] = rows;
  sg["c0"] = is.sigma.c0;
  r["sigma"] = sg;
  json ts = json::array();
  for (const ISeriesTerm& t : is.terms) ts.push_back(jterm(t));
  r["terms"] = ts;
  bool unit = false;
  for (const ISeriesTerm& t : is.terms) {
    bool zero = true;
    for (const Rat& q : t.degree.d)
      if (q != 0) zero = false;
    if (zero) unit = t.factors.empty() && t.sector.age == 0;
  }
  push_check(checks, "unit_term", unit, unit ? "degree 0 contributes 1" : "degree 0 term is not 1");
  return r;
}

// ---- verify battery --------------------------------------------------------

bool factors_match_grid(const ISeriesTerm& t) {
  std::vector<HypFactor> expected;
  for (size_t j = 0; j < t.degree.pairings.size(); ++j) {
    const Rat& v = t.degree.pairings[j];
    if (v == 0) continue;
    HypFactor f;
    f.slot = int(j);
    f.denominator = v > 0;
    long reach = std::labs(rat_floor(v).get_si()) + 3;
    for (long k = -reach; k <= reach; ++k) {
      Rat a = rat_frac(v) + k;
      bool keep = f.denominator ? (a > 0 && a <= v) : (a > v && a <= 0);
      if (keep) f.shifts.push_back(a);
    }
    if (!f.shifts.empty()) expected.push_back(f);
  }
  return expected == t.factors;
}

bool chart_law_holds(const GitData& g, const ModuliChartTransition& chart, const RatVec& theta,
                     const Rat& bound) {
  const int r = g.rank;
  for (const RationalDegree& d : enumerate_degrees(g, theta, bound)) {
    RatVec qp = monomial_exponents(chart.basis_plus, d.d);
    RatVec qm = monomial_exponents(chart.basis_minus, d.d);
    for (int i = 0; i + 1 < r; ++i)
      if (qp[i] != qm[i]) return false;
    Rat rhs = -chart.c * qm[r - 1];
    for (int i = 0; i + 1 < r; ++i) rhs += chart.c_i[i] * qm[i];
    if (qp[r - 1] != rhs) return false;
  }
  return true;
}

bool sector_dichotomy_holds(const GitData& g, const ISeries& is, const FixedPointAtlas& atlas,
                            const ScalarContext& cx) {
  for (const ISeriesTerm& t : is.terms) {
    bool matched = false;
    for (const InertiaPoint& ip : atlas.inertia)
      if (ip.label == t.sector.fractions) matched = true;
    if (matched) continue;
    for (const FixedPoint& p : atlas.points)
      if (!restrict_factors(g, t, is.extended, p.delta, cx).is_zero()) return false;
  }
  return true;
}

void verify_side(const InputSpec& s, const RatVec& theta, const std::string& side,
                 const ModuliChartTransition& chart, std::vector<ValidationCheck>& checks) {
  const GitData& g = s.git;
  ISeries is = i_series(g, theta, s.bound, chart, s.sector_sign_flipped);
  bool tel = true;
  for (const ISeriesTerm& t : is.terms) tel = tel && factors_match_grid(t);
  push_check(checks, "ifun_telescoping:" + side, tel,
             tel ? "factor blocks match the brute-force a-grid" : "a factor block disagrees");
  bool unit = false;
  for (const ISeriesTerm& t : is.terms) {
    bool zero = true;
    for (const Rat& q : t.degree.d)
      if (q != 0) zero = false;
    if (zero) unit = t.factors.empty() && t.sector.age == 0;
  }
  push_check(checks, "ifun_unit_term:" + side, unit, "degree 0 contributes the unit");
  FixedPointAtlas atlas = fixed_points(g.chars, stability(theta));
  ScalarContext cx = restriction_context(g);
  bool dich = sector_dichotomy_holds(g, is, atlas, cx);
  push_check(checks, "ifun_sector_dichotomy:" + side, dich,
             dich ? "every term matches an inertia label or restricts to zero"
                  : "a term has no matching sector yet a nonzero restriction");
}

json cmd_verify(const InputSpec& s, std::vector<ValidationCheck>& checks) {
  const GitData& g = s.git;
  append_validate_checks(g, s.theta_plus, ":plus", true, checks);
  if (s.theta_minus) append_validate_checks(g, *s.theta_minus, ":minus", false, checks);

  IntMatrix h = hermite_normal_form(g.chars.char_matrix());
  push_check(checks, "fgab_hnf_idempotent", hermite_normal_form(h) == h,
             "hermite form is a fixed point of itself");

  CokernelData ck = reconstruct_beta(g);
  IntMatrix back = gale_dual(ck.projection, ck.group);
  bool gale = hermite_normal_form(back) == h;
  push_check(checks, "stackgeom_gale_roundtrip", gale,
             gale ? "characters and double gale dual span the same lattice"
                  : "gale roundtrip changed the character lattice");

  for (const ValidationCheck& c : verify_relations(g, s.theta_plus))
    checks.push_back({"eqk_" + c.name + ":plus", c.pass, c.detail});
  if (s.theta_minus)
    for (const ValidationCheck& c : verify_relations(g, *s.theta_minus))
      checks.push_back({"eqk_" + c.name + ":minus", c.pass, c.detail});

  bool trivial_loop = monodromy(make_trivial_loop(g, s.theta_plus)).is_identity();
  push_check(checks, "fmk_trivial_loop_identity", trivial_loop,
             "crossing a chamber into itself is the identity");

  if (s.theta_minus) {
    WallCrossingData wc = wall_crossing(g, s.theta_plus, *s.theta_minus);
    Rat on_wall(0);
    for (size_t k = 0; k < wc.theta_zero.size(); ++k) on_wall += wc.theta_zero[k] * wc.e[k];
    push_check(checks, "wall_theta_zero_on_wall", on_wall == 0,
               "the shared facet barycenter pairs to zero with the wall normal");
    push_check(checks, "wall_m_partition", wc.m_plus.size() == wc.m_minus.size(),
               "raising and lowering slot counts agree");
    ModuliChartTransition chart = chart_transition(wc);
    bool law = chart_law_holds(g, chart, s.theta_plus, s.bound) &&
               chart_law_holds(g, chart, *s.theta_minus, s.bound);
    push_check(checks, "chart_monomial_law", law,
               law ? "coordinate change matches on every enumerated degree"
                   : "coordinate change broke on an enumerated degree");
    verify_side(s, s.theta_plus, "plus", chart, checks);
    verify_side(s, *s.theta_minus, "minus", chart, checks);
  }

  int passed = 0;
  for (const ValidationCheck& c : checks)
    if (c.pass) ++passed;
  json r;
  r["checks_run"] = int(checks.size());
  r["checks_passed"] = passed;
  r["bound"] = jrat(s.bound);
  return r;
}

}  // namespace

InputSpec parse_input_text(const std::string& text, const ParseOptions& opt) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level must be an object");
  reject_floats(j, "$");
  check_keys(j,
             {"name", "description", "rank", "n", "characters", "extended", "theta_plus",
              "theta_minus", "options"},
             "$");
  for (const char* key : {"rank", "n", "characters", "theta_plus"})
    if (!j.contains(key)) throw SchemaError(std::string("missing key $.") + key);

  int rank = as_small_int(j["rank"], "$.rank", 1, 64);
  int n = as_small_int(j["n"], "$.n", 0, 1024);
  if (!j["characters"].is_array()) throw SchemaError("$.characters must be an array");
  std::vector<IntVec> characters;
  size_t idx = 0;
  for (const auto& row : j["characters"]) {
    std::string path = "$.characters[" + std::to_string(idx++) + "]";
    if (!row.is_array() || int(row.size()) != rank)
      throw SchemaError(path + " must be an array of length " + std::to_string(rank));
    IntVec d;
    size_t k = 0;
    for (const auto& x : row) d.push_back(as_int(x, path + "[" + std::to_string(k++) + "]"));
    characters.push_back(d);
  }

  InputSpec s;
  s.git = GitData::make(rank, n, characters);

  if (j.contains("extended")) {
    const json& ext = j["extended"];
    if (!ext.is_array()) throw SchemaError("$.extended must be an array");
    std::vector<int> given;
    size_t k = 0;
    for (const auto& x : ext)
      given.push_back(as_small_int(x, "$.extended[" + std::to_string(k++) + "]", 1, s.git.count()));
    std::vector<int> expected;
    for (int i = 2 * n; i < s.git.count(); ++i) expected.push_back(i + 1);
    if (given != expected)
      throw SchemaError("$.extended must list exactly the trailing slots after the " +
                        std::to_string(2 * n) + " paired ones");
  }

  if (opt.enforce_lawrence_pairing) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < rank; ++k)
        if (characters[n + i][k] != -characters[i][k])
          throw LawrencePairingError("character " + std::to_string(n + i + 1) +
                                     " is not the negative of character " + std::to_string(i + 1));
  }

  s.theta_plus = as_ratvec(j["theta_plus"], rank, "$.theta_plus");
  if (j.contains("theta_minus")) s.theta_minus = as_ratvec(j["theta_minus"], rank, "$.theta_minus");

  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) throw SchemaError("$.options must be an object");
    check_keys(o, {"bound", "sector_sign", "side"}, "$.options");
    if (o.contains("bound")) {
      s.bound = as_rat(o["bound"], "$.options.bound");
      if (s.bound < 0) throw SchemaError("$.options.bound must be nonnegative");
    }
    if (o.contains("sector_sign")) {
      std::string v = o["sector_sign"].is_string() ? o["sector_sign"].get<std::string>() : "";
      if (v != "minus" && v != "plus")
        throw SchemaError("$.options.sector_sign must be \"minus\" or \"plus\"");
      s.sector_sign_flipped = (v == "plus");
    }
    if (o.contains("side")) {
      std::string v = o["side"].is_string() ? o["side"].get<std::string>() : "";
      if (v != "minus" && v != "plus") throw SchemaError("$.options.side must be \"plus\" or \"minus\"");
      s.side = (v == "minus") ? -1 : 1;
    }
  }

  s.digest = fnv1a_hex(text);
  return s;
}

InputSpec parse_input(const std::string& path, const ParseOptions& opt) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str(), opt);
}

Report run_command(const std::string& command, const InputSpec& spec, bool pretty) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;
  rep.digest = spec.digest;

  json results;
  if (command == "validate")
    results = cmd_validate(spec, rep.checks);
  else if (command == "chambers")
    results = cmd_chambers(spec, rep.checks);
  else if (command == "wallcross")
    results = cmd_wallcross(spec, rep.checks);
  else if (command == "fan")
    results = cmd_fan(spec, rep.checks);
  else if (command == "fixed-points")
    results = cmd_fixed_points(spec, rep.checks);
  else if (command == "fm")
    results = cmd_fm(spec, rep.checks);
  else if (command == "monodromy")
    results = cmd_monodromy(spec, rep.checks);
  else if (command == "ifunction")
    results = cmd_ifunction(spec, rep.checks);
  else if (command == "verify")
    results = cmd_verify(spec, rep.checks);
  else
    throw SchemaError("unknown command: " + command);

  rep.ok = true;
  for (const ValidationCheck& c : rep.checks) rep.ok = rep.ok && c.pass;

  json out;
  out["command"] = command;
  out["digest"] = spec.digest;
  out["checks"] = jchecks(rep.checks);
  out["ok"] = rep.ok;
  out["results"] = results;
  rep.json = (pretty ? out.dump(2) : out.dump()) + "\n";

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wallcross
