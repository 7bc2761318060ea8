#include "ftqft/verlinde.hpp"

#include <algorithm>

namespace ftqft {

namespace {

Cyclotomic e(const Rat& q) { return Cyclotomic::root_of_unity(q); }

}  // namespace

Cyclotomic DoubleData::dchar(int simple, int g, int y) const {
  const auto& gr = *group;
  auto [ci, row] = simple_site[simple];
  if (classes.class_of[g] != ci) return Cyclotomic();
  if (gr.mul(y, g) != gr.mul(g, y)) return Cyclotomic();
  int xg = section[ci][g];
  int z = gr.mul(gr.inv(xg), gr.mul(y, xg));  // x_g^-1 y x_g in Z(rep)
  int zi = transgressions[ci].centralizer.position_of(z);
  if (zi < 0) throw Error("double character: transported element left the centralizer");
  Rat phase = double_twist_phase(omega, g, y, xg) - double_twist_phase(omega, g, xg, z) +
              tables[ci].normalization_shift;
  return e(phase) * tables[ci].chi_elem[row][zi];
}

DoubleData build_double(const GroupPtr& g, const Cochain& omega,
                        unsigned long long seed) {
  if (omega.degree() != 3) throw Error("the double twist must be a 3-cochain");
  auto check = is_cocycle(omega);
  if (!check.ok) throw NotACocycle("double: omega is not closed", check.witness);

  // Work in the normalized gauge: every downstream phase formula assumes
  // identity-argument values vanish, and a coboundary shift is invisible to
  // the invariants (rank, T spectrum, fusion class).
  Cochain w = normalize_3cocycle(omega);
  DoubleData d{g, w, conjugacy_classes(*g), {}, {}, {}, {}, {}, seed};
  const int n = g->order();
  const int nc = static_cast<int>(d.classes.classes.size());

  for (int ci = 0; ci < nc; ++ci) {
    int rep = d.classes.rep[ci];
    // Deterministic section: x_g conjugates rep to g, found by scanning h in
    // element order; x_rep = e.
    std::vector<int> sec(n, -1);
    sec[rep] = g->identity();
    for (int h = 0; h < n; ++h) {
      int target = g->conj(h, rep);
      if (sec[target] < 0) sec[target] = h;
    }
    d.section.push_back(std::move(sec));

    auto tr = transgress(w, rep);
    auto table = projective_character_table(tr.centralizer.as_group(), tr.theta, seed);
    for (int row = 0; row < table.irreps(); ++row) {
      DoubleSimple s;
      s.class_index = ci;
      s.class_rep = rep;
      s.irrep = row;
      s.degree = table.degrees[row];
      s.quantum_dim = static_cast<int>(d.classes.classes[ci].size()) * s.degree;
      s.label = "[" + g->name_of(rep) + "]:" + std::to_string(row);
      d.simples.push_back(std::move(s));
      d.simple_site.emplace_back(ci, row);
    }
    d.transgressions.push_back(std::move(tr));
    d.tables.push_back(std::move(table));
  }
  return d;
}

std::vector<DoubleSimple> double_simples(const GroupPtr& g, const Cochain& omega,
                                         unsigned long long seed) {
  return build_double(g, omega, seed).simples;
}

int k_theory_rank(const GroupPtr& g, const Cochain& omega) {
  if (omega.degree() != 3) throw Error("the double twist must be a 3-cochain");
  auto check = is_cocycle(omega);
  if (!check.ok) throw NotACocycle("k_theory_rank: omega is not closed", check.witness);

  auto classes = conjugacy_classes(*g);
  int rank = 0;
  for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
    int rep = classes.rep[ci];
    Subgroup zg = centralizer(g, rep);
    // Count transgressed-regular classes of Z(rep) directly.
    auto sub = zg.as_group();
    auto sub_classes = conjugacy_classes(*sub);
    for (size_t cj = 0; cj < sub_classes.classes.size(); ++cj) {
      int h = zg.elements[sub_classes.rep[cj]];
      bool regular = true;
      for (int zi = 0; zi < zg.order() && regular; ++zi) {
        int z = zg.elements[zi];
        if (g->mul(h, z) != g->mul(z, h)) continue;
        Rat lhs = double_twist_phase(omega, rep, h, z);
        Rat rhs = double_twist_phase(omega, rep, z, h);
        if (lhs != rhs) regular = false;
      }
      if (regular) ++rank;
    }
  }
  return rank;
}

ModularData modular_data(const GroupPtr& g, const Cochain& omega,
                         unsigned long long seed) {
  ModularData m{0, 0, {}, {}, {}, Cyclotomic(), build_double(g, omega, seed)};
  m.simples = m.data.simples;
  m.rank = static_cast<int>(m.simples.size());
  const auto& gr = *g;
  const int n = gr.order();

  // S matrix over commuting pairs.
  m.s.assign(m.rank, std::vector<Cyclotomic>(m.rank));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (gr.mul(x, y) != gr.mul(y, x)) continue;
      int cx = m.data.classes.class_of[x], cy = m.data.classes.class_of[y];
      for (int i = 0; i < m.rank; ++i) {
        if (m.data.simple_site[i].first != cx) continue;
        Cyclotomic a = m.data.dchar(i, x, y).conj();
        if (a.is_zero()) continue;
        for (int j = 0; j < m.rank; ++j) {
          if (m.data.simple_site[j].first != cy) continue;
          Cyclotomic b = m.data.dchar(j, y, x).conj();
          if (b.is_zero()) continue;
          m.s[i][j] += a * b;
        }
      }
    }
  Rat inv_n(1, n);
  for (auto& row : m.s)
    for (auto& v : row) v = v.scaled(inv_n);

  // Vacuum: the unique simple whose S row is entirely positive rational
  // (the quantum dimensions over |G|).  This is gauge-independent, so it
  // works for arbitrary closed twists, normalized or not.
  m.unit = -1;
  int e_class = m.data.classes.class_of[gr.identity()];
  for (int i = 0; i < m.rank; ++i) {
    bool positive = true;
    for (int j = 0; j < m.rank && positive; ++j)
      positive = m.s[i][j].is_rational() && m.s[i][j].as_rational() > 0;
    if (!positive) continue;
    if (m.unit >= 0) throw Error("modular_data: vacuum row is not unique");
    m.unit = i;
  }
  if (m.unit < 0) throw Error("modular_data: vacuum simple not found");
  if (m.data.simple_site[m.unit].first != e_class || m.simples[m.unit].degree != 1)
    throw Error("modular_data: vacuum is not a degree-1 identity-class simple");

  // T: ratio chi(g)/chi(e) on the defining class.
  m.t.resize(m.rank);
  for (int i = 0; i < m.rank; ++i) {
    int a = m.simples[i].class_rep;
    Cyclotomic num = m.data.dchar(i, a, a);
    Cyclotomic den = m.data.dchar(i, a, gr.identity());
    m.t[i] = num / den;
    if (!(m.t[i] * m.t[i].conj() == Cyclotomic(Rat(1))))
      throw Error("modular_data: T entry is not a phase");
  }

  m.global_dimension = m.s[m.unit][m.unit].inverse();
  return m;
}

ModularChecks run_modular_checks(const ModularData& m) {
  ModularChecks out;
  const int r = m.rank;
  const Cyclotomic one(Rat(1)), zero;

  out.symmetric = true;
  for (int i = 0; i < r && out.symmetric; ++i)
    for (int j = 0; j < r && out.symmetric; ++j)
      if (!(m.s[i][j] == m.s[j][i])) out.symmetric = false;

  out.unitary = true;
  for (int i = 0; i < r && out.unitary; ++i)
    for (int j = 0; j < r && out.unitary; ++j) {
      Cyclotomic acc;
      for (int k = 0; k < r; ++k) acc += m.s[i][k] * m.s[j][k].conj();
      if (!(acc == (i == j ? one : zero))) out.unitary = false;
    }

  // S^2 as an exact matrix; check it is a permutation fixing the unit.
  std::vector<std::vector<Cyclotomic>> s2(r, std::vector<Cyclotomic>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclotomic acc;
      for (int k = 0; k < r; ++k) acc += m.s[i][k] * m.s[k][j];
      s2[i][j] = acc;
    }
  out.charge_conjugation.assign(r, -1);
  out.s_squared_permutation = true;
  for (int i = 0; i < r; ++i) {
    int hit = -1;
    for (int j = 0; j < r; ++j) {
      if (s2[i][j] == zero) continue;
      if (s2[i][j] == one && hit < 0) {
        hit = j;
      } else {
        out.s_squared_permutation = false;
      }
    }
    if (hit < 0) out.s_squared_permutation = false;
    out.charge_conjugation[i] = hit;
  }
  if (out.s_squared_permutation) {
    // involution fixing the vacuum
    for (int i = 0; i < r; ++i)
      if (out.charge_conjugation[out.charge_conjugation[i]] != i)
        out.s_squared_permutation = false;
    if (out.charge_conjugation[m.unit] != m.unit) out.s_squared_permutation = false;
  }

  // (ST)^3 = lambda S^2.
  std::vector<std::vector<Cyclotomic>> st(r, std::vector<Cyclotomic>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) st[i][j] = m.s[i][j] * m.t[j];
  auto mul = [r](const std::vector<std::vector<Cyclotomic>>& a,
                 const std::vector<std::vector<Cyclotomic>>& b) {
    std::vector<std::vector<Cyclotomic>> c(r, std::vector<Cyclotomic>(r));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < r; ++j)
          if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  auto st3 = mul(mul(st, st), st);
  out.st_cubed_proportional = true;
  Cyclotomic lambda;
  bool lambda_set = false;
  for (int i = 0; i < r && out.st_cubed_proportional; ++i)
    for (int j = 0; j < r && out.st_cubed_proportional; ++j) {
      if (s2[i][j] == zero) {
        if (!(st3[i][j] == zero)) out.st_cubed_proportional = false;
        continue;
      }
      Cyclotomic ratio = st3[i][j] / s2[i][j];
      if (!lambda_set) {
        lambda = ratio;
        lambda_set = true;
      } else if (!(ratio == lambda)) {
        out.st_cubed_proportional = false;
      }
    }
  if (lambda_set) out.lambda = lambda;
  if (out.st_cubed_proportional && lambda_set &&
      !(out.lambda * out.lambda.conj() == Cyclotomic(Rat(1))))
    out.st_cubed_proportional = false;
  return out;
}

VerlindeRing fusion(const ModularData& m) {
  const int r = m.rank;
  for (int x = 0; x < r; ++x)
    if (m.s[m.unit][x].is_zero())
      throw Error("fusion: vanishing S_{0x}");

  VerlindeRing ring;
  ring.rank = r;
  ring.unit = m.unit;
  ring.n.assign(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        Cyclotomic acc;
        for (int x = 0; x < r; ++x)
          acc += m.s[a][x] * m.s[b][x] * m.s[c][x].conj() / m.s[m.unit][x];
        if (!acc.is_rational())
          throw NonIntegralFusion("fusion coefficient is irrational at (" +
                                  std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "): " + acc.str());
        Rat v = acc.as_rational();
        if (denominator(v) != 1 || v < 0)
          throw NonIntegralFusion("fusion coefficient is not a non-negative integer: " +
                                  rat_str(v));
        ring.n[a][b][c] = numerator(v);
      }

  // Ring axioms.
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) {
      if (ring.n[a][m.unit][c] != (a == c ? 1 : 0))
        throw Error("fusion: unit axiom fails");
      if (ring.n[m.unit][a][c] != (a == c ? 1 : 0))
        throw Error("fusion: unit axiom fails");
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (ring.n[a][b][c] != ring.n[b][a][c]) throw Error("fusion: not commutative");
      }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          Int lhs = 0, rhs = 0;
          for (int x = 0; x < r; ++x) {
            lhs += ring.n[a][b][x] * ring.n[x][c][d];
            rhs += ring.n[b][c][x] * ring.n[a][x][d];
          }
          if (lhs != rhs) throw Error("fusion: not associative");
        }
  return ring;
}

Cyclotomic z_sigma_times_circle(const ModularData& m, int genus) {
  if (genus < 0) throw Error("genus must be non-negative");
  Cyclotomic acc;
  for (int x = 0; x < m.rank; ++x) {
    Cyclotomic s0x = m.s[m.unit][x];
    if (s0x.is_zero()) throw Error("z_sigma_times_circle: vanishing S_{0x}");
    int exp = 2 - 2 * genus;
    Cyclotomic term(Rat(1));
    Cyclotomic base = exp >= 0 ? s0x : s0x.inverse();
    for (int t = 0; t < std::abs(exp); ++t) term *= base;
    acc += term;
  }
  if (genus >= 1) {
    if (!acc.is_rational() || denominator(acc.as_rational()) != 1 ||
        acc.as_rational() < 0)
      throw Error("z_sigma_times_circle: expected a non-negative integer dimension");
  }
  return acc;
}

namespace {

bool extend_isomorphism(const VerlindeRing& a, const VerlindeRing& b,
                        std::vector<int>& map, std::vector<bool>& used, size_t at) {
  const int r = a.rank;
  if (at == static_cast<size_t>(r)) {
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < r; ++y)
        for (int z = 0; z < r; ++z)
          if (a.n[x][y][z] != b.n[map[x]][map[y]][map[z]]) return false;
    return true;
  }
  int x = static_cast<int>(at);
  for (int y = 0; y < r; ++y) {
    if (used[y]) continue;
    if (x == a.unit && y != b.unit) continue;
    map[x] = y;
    used[y] = true;
    // quick partial consistency
    bool ok = true;
    for (int p = 0; p <= x && ok; ++p)
      for (int q = 0; q <= x && ok; ++q)
        for (int s = 0; s <= x && ok; ++s)
          if (a.n[p][q][s] != b.n[map[p]][map[q]][map[s]]) ok = false;
    if (ok && extend_isomorphism(a, b, map, used, at + 1)) return true;
    used[y] = false;
  }
  map[x] = -1;
  return false;
}

}  // namespace

bool fusion_rings_isomorphic(const VerlindeRing& a, const VerlindeRing& b) {
  if (a.rank != b.rank) return false;
  std::vector<int> map(a.rank, -1);
  std::vector<bool> used(a.rank, false);
  return extend_isomorphism(a, b, map, used, 0);
}

}  // namespace ftqft
