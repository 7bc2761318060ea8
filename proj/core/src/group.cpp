#include "ftqft/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace ftqft {

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    std::vector<std::vector<int>> table, std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty multiplication table", {});
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotAGroup("table is not square", {i});
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range", {i, j});
      g->table_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  // Latin square: each row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      int r = g->mul(i, j), c = g->mul(j, i);
      if (row[r]) throw NotAGroup("row is not a permutation", {i, j});
      if (col[c]) throw NotAGroup("column is not a permutation", {j, i});
      row[r] = col[c] = true;
    }
  }

  // Locate the two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (g->mul(i, j) != j || g->mul(j, i) != j) { ok = false; break; }
    if (ok) e = i;
  }
  if (e < 0) throw NotAGroup("no identity element", {});
  g->identity_ = e;

  // Associativity: exhaustive to order 512, sampled deterministically beyond.
  auto check = [&](int a, int b, int c) {
    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
      throw NotAGroup("associativity fails", {a, b, c});
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0xA550C1A7ULL);
    for (long t = 0; t < 4000000; ++t)
      check(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
            static_cast<int>(rng() % n));
  }

  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == e) g->inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g->inv_[a] < 0) throw NotAGroup("missing inverse", {a});

  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw NotAGroup("names list does not match order", {});
  g->names_ = std::move(names);
  return g;
}

int FiniteGroup::element_order(int a) const {
  int ord = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
  return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::name_of(int a) const {
  if (!names_.empty()) return names_[a];
  return "g" + std::to_string(a);
}

// GSet ----------------------------------------------------------------------

std::shared_ptr<const GSet> GSet::make(GroupPtr group,
                                       std::vector<std::vector<int>> action) {
  auto s = std::shared_ptr<GSet>(new GSet());
  const int n = group->order();
  const int sz = action.empty() ? 0 : static_cast<int>(action[0].size());
  if (static_cast<int>(action.size()) != n || sz == 0)
    throw Error("action table must have one row per group element");
  s->group_ = std::move(group);
  s->size_ = sz;
  s->action_.resize(static_cast<size_t>(n) * sz);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(action[g].size()) != sz)
      throw Error("ragged action table");
    for (int x = 0; x < sz; ++x) {
      int v = action[g][x];
      if (v < 0 || v >= sz) throw Error("action entry out of range");
      s->action_[static_cast<size_t>(g) * sz + x] = v;
    }
  }
  const auto& gr = *s->group_;
  for (int x = 0; x < sz; ++x)
    if (s->act(gr.identity(), x) != x) throw Error("identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < sz; ++x)
        if (s->act(g, s->act(h, x)) != s->act(gr.mul(g, h), x))
          throw Error("action is not compatible with the group product");
  return s;
}

std::shared_ptr<const GSet> GSet::point(GroupPtr group) {
  std::vector<std::vector<int>> action(group->order(), std::vector<int>{0});
  return make(std::move(group), std::move(action));
}

std::shared_ptr<const GSet> GSet::regular(GroupPtr group) {
  const int n = group->order();
  std::vector<std::vector<int>> action(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) action[g][x] = group->mul(g, x);
  return make(std::move(group), std::move(action));
}

std::shared_ptr<const GSet> GSet::conjugation(GroupPtr group) {
  const int n = group->order();
  std::vector<std::vector<int>> action(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) action[g][x] = group->conj(g, x);
  return make(std::move(group), std::move(action));
}

std::shared_ptr<const GSet> GSet::cosets(GroupPtr group,
                                         const std::vector<int>& subgroup_elements) {
  Subgroup h = subgroup_closure(group, subgroup_elements);
  const int n = group->order();
  // Enumerate left cosets gH; canonical label = minimal member.
  std::vector<int> coset_label(n, -1);
  std::vector<int> labels;
  for (int g = 0; g < n; ++g) {
    if (coset_label[g] >= 0) continue;
    int lead = n;
    std::vector<int> members;
    for (int x : h.elements) members.push_back(group->mul(g, x));
    for (int m : members) lead = std::min(lead, m);
    for (int m : members) coset_label[m] = lead;
    labels.push_back(lead);
  }
  std::sort(labels.begin(), labels.end());
  std::map<int, int> index_of;
  for (size_t i = 0; i < labels.size(); ++i) index_of[labels[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> action(n, std::vector<int>(labels.size()));
  for (int g = 0; g < n; ++g)
    for (size_t s = 0; s < labels.size(); ++s)
      action[g][s] = index_of.at(coset_label[group->mul(g, labels[s])]);
  return make(std::move(group), std::move(action));
}

std::vector<int> GSet::stabilizer(int s) const {
  std::vector<int> out;
  for (int g = 0; g < group_->order(); ++g)
    if (act(g, s) == s) out.push_back(g);
  return out;
}

std::vector<int> GSet::orbit_of(int s) const {
  std::set<int> orb;
  for (int g = 0; g < group_->order(); ++g) orb.insert(act(g, s));
  return {orb.begin(), orb.end()};
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size_; ++s) {
    if (seen[s]) continue;
    auto orb = orbit_of(s);
    for (int x : orb) seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

// Subgroups -------------------------------------------------------------

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

int Subgroup::position_of(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return -1;
  return static_cast<int>(it - elements.begin());
}

GroupPtr Subgroup::as_group() const {
  const int m = order();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = position_of(parent->mul(elements[i], elements[j]));
      if (p < 0) throw Error("element set is not closed under product");
      table[i][j] = p;
    }
  std::vector<std::string> names;
  for (int e : elements) names.push_back(parent->name_of(e));
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

Subgroup subgroup_closure(GroupPtr g, std::vector<int> generators) {
  std::set<int> elems{g->identity()};
  std::vector<int> frontier{g->identity()};
  for (int x : generators)
    if (elems.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int b : elems) {
        for (int p : {g->mul(a, b), g->mul(b, a)})
          if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  Subgroup out;
  out.parent = std::move(g);
  out.elements.assign(elems.begin(), elems.end());
  return out;
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjClasses out;
  out.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (out.class_of[a] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < n; ++h) cls.insert(g.conj(h, a));
    int idx = static_cast<int>(out.classes.size());
    for (int x : cls) out.class_of[x] = idx;
    out.rep.push_back(*cls.begin());
    out.classes.emplace_back(cls.begin(), cls.end());
  }
  return out;  // scan order already sorts classes by minimal representative
}

Subgroup centralizer(GroupPtr g, int element) {
  Subgroup out;
  for (int h = 0; h < g->order(); ++h)
    if (g->mul(h, element) == g->mul(element, h)) out.elements.push_back(h);
  out.parent = std::move(g);
  return out;
}

Subgroup center(GroupPtr g) {
  Subgroup out;
  for (int h = 0; h < g->order(); ++h) {
    bool central = true;
    for (int x = 0; x < g->order() && central; ++x)
      central = g->mul(h, x) == g->mul(x, h);
    if (central) out.elements.push_back(h);
  }
  out.parent = std::move(g);
  return out;
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  const int n = g->order();
  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> gens) {
    Subgroup h = subgroup_closure(g, std::move(gens));
    seen.insert(h.elements);
  };
  add({});
  for (int a = 0; a < n; ++a) add({a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add({a, b});
  if (n <= 48) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) add({a, b, c});
  }
  std::vector<Subgroup> out;
  for (const auto& elems : seen) out.push_back(Subgroup{g, elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return out;
}

// Permutations ----------------------------------------------------------

namespace {

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];  // (a*b)(x) = a(b(x))
  return out;
}

}  // namespace

PermutationGroup group_from_permutations(const std::vector<Permutation>& generators,
                                         int degree, long max_order) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw NotAPermutation("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v])
        throw NotAPermutation("generator is not a bijection");
      hit[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> elems{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& gen : generators) {
        Permutation p = perm_compose(gen, a);
        if (elems.insert(p).second) {
          if (static_cast<long>(elems.size()) > max_order)
            throw GroupTooLarge("closure exceeds bound of " + std::to_string(max_order));
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }

  PermutationGroup out;
  out.elements.assign(elems.begin(), elems.end());  // lexicographic order
  std::map<Permutation, int> index;
  for (size_t i = 0; i < out.elements.size(); ++i)
    index[out.elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(out.elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index.at(perm_compose(out.elements[i], out.elements[j]));
  out.group = FiniteGroup::from_table(std::move(table));
  std::vector<std::vector<int>> action(n, std::vector<int>(degree));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < degree; ++x) action[i][x] = out.elements[i][x];
  out.natural_gset = GSet::make(out.group, std::move(action));
  return out;
}

// Standard constructions -------------------------------------------------

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_table(std::move(table));
}

GroupPtr dihedral_group(int n) {
  // Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i.
  const int m = 2 * n;
  auto code = [n](bool flip, int rot) { return (flip ? n : 0) + rot; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool fa = a >= n, fb = b >= n;
      int ra = a % n, rb = b % n;
      // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb + (-1)^fb ra ... careful:
      // use r s = s r^{-1}: s^fa r^ra s^fb r^rb = s^{fa+fb} r^{rb + (fb ? -ra : ra)}
      int rot = ((fb ? rb - ra : rb + ra) % n + n) % n;
      table[a][b] = code(fa != fb, rot);
    }
  return FiniteGroup::from_table(std::move(table));
}

GroupPtr symmetric_group(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return group_from_permutations(gens, std::max(n, 1)).group;
}

GroupPtr alternating_group(int n) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    p[i] = i + 1; p[i + 1] = i + 2; p[i + 2] = i;  // 3-cycle (i i+1 i+2)
    gens.push_back(std::move(p));
  }
  return group_from_permutations(gens, std::max(n, 1)).group;
}

GroupPtr quaternion_group() {
  // Q8 = {1, -1, i, -i, j, -j, k, -k} as signed units; index = 2*axis + sign
  // with axes 1, i, j, k.  Build from the quaternion product.
  struct Q { int axis; int sign; };
  auto mul = [](Q a, Q b) {
    static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Q{tab[a.axis][b.axis], a.sign * b.sign * sgn[a.axis][b.axis]};
  };
  auto index = [](Q q) { return 2 * q.axis + (q.sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Q qa{a / 2, a % 2 ? -1 : 1}, qb{b / 2, b % 2 ? -1 : 1};
      table[a][b] = index(mul(qa, qb));
    }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

GroupPtr klein_four_group() {
  std::vector<std::vector<int>> table = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup::from_table(std::move(table));
}

GroupPtr product_group(GroupPtr a, GroupPtr b) {
  const int na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto idx = [nb](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
  return FiniteGroup::from_table(std::move(table));
}

}  // namespace ftqft
