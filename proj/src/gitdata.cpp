#include "wallcross/gitdata.hpp"

#include "wallcross/anticones.hpp"

namespace wallcross {

GitData GitData::make(int rank, int n, const std::vector<IntVec>& characters) {
  GitData g;
  g.rank = rank;
  g.n = n;
  g.ext_count = int(characters.size()) - 2 * n;
  if (g.ext_count < 0) throw SchemaError("fewer characters than 2n");
  const int m = n + g.ext_count;
  g.chars.rank = rank;
  g.chars.lambda_count = m;
  g.chars.characters = characters;
  for (const IntVec& d : characters)
    if (int(d.size()) != rank) throw SchemaError("character length does not match rank");
  g.chars.twists.assign(characters.size(), TwistVec(m + 1, Int(0)));
  for (int i = 0; i < n; ++i) g.chars.twists[i][i] = 1;
  for (int i = 0; i < n; ++i) {
    g.chars.twists[n + i][m] = 1;
    g.chars.twists[n + i][i] = -1;
  }
  for (int j = 0; j < g.ext_count; ++j) g.chars.twists[2 * n + j][n + j] = 1;
  return g;
}

ValidationReport validate(const GitData& g, const RatVec& theta) {
  ValidationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  bool pairing = true;
  for (int i = 0; i < g.n && pairing; ++i)
    for (int k = 0; k < g.rank; ++k)
      if (g.chars.characters[g.n + i][k] != -g.chars.characters[i][k]) {
        pairing = false;
        break;
      }
  add("lawrence_pairing", pairing, pairing ? "D_{n+i} = -D_i" : "a Lawrence partner is not the negative");

  IntVec cy(g.rank, Int(0));
  for (int i = 0; i < 2 * g.n; ++i)
    for (int k = 0; k < g.rank; ++k) cy[k] += g.chars.characters[i][k];
  bool cy_ok = true;
  for (const Int& x : cy)
    if (x != 0) cy_ok = false;
  add("cy_sum", cy_ok, cy_ok ? "sum of paired characters is zero" : "paired characters do not sum to zero");

  int rnk = rat_rank(rat_matrix(g.chars.char_matrix()));
  add("characters_span", rnk == g.rank,
      "character matrix rank " + std::to_string(rnk) + " of " + std::to_string(g.rank));

  bool generic = true;
  std::string generic_detail = "no rank-deficient angle contains theta";
  bool a1 = false, a2 = false;
  std::string a1_detail, a2_detail;
  try {
    AnticoneSet a = anticone_set(g.chars, stability(theta));
    std::vector<int> all(g.count());
    for (int i = 0; i < g.count(); ++i) all[i] = i;
    a1 = a.contains(all);
    a1_detail = a1 ? "full index set is an anticone" : "full index set is not an anticone";
    a2 = !a.minimal.empty();
    a2_detail = a2 ? "every anticone contains a spanning minimal anticone"
                   : "no minimal anticone exists at theta";
  } catch (const NonGenericTheta& e) {
    generic = false;
    generic_detail = e.what();
    a1_detail = a2_detail = "not evaluated: theta is non-generic";
  }
  add("theta_generic", generic, generic_detail);
  add("anticone_full_set", a1, a1_detail);
  add("anticones_span", a2, a2_detail);
  return rep;
}

}  // namespace wallcross
