#include "ftqft/cochain.hpp"

#include <algorithm>
#include <random>

#include "ftqft/smith.hpp"

namespace ftqft {

namespace {

// Odometer over {0..n-1}^k in lexicographic order.
bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

Rat Cochain::operator()(const std::vector<int>& tuple) const {
  auto it = values_.find(tuple);
  return it == values_.end() ? Rat(0) : it->second;
}

void Cochain::set(const std::vector<int>& tuple, const Rat& value) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw Error("cochain tuple arity mismatch");
  Rat v = mod1(value);
  if (v == 0)
    values_.erase(tuple);
  else
    values_[tuple] = v;
}

bool Cochain::is_normalized() const {
  const int e = group_->identity();
  for (const auto& [tuple, v] : values_) {
    (void)v;
    if (std::find(tuple.begin(), tuple.end(), e) != tuple.end()) return false;
  }
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain out(group_, degree_);
  for (const auto& [t, v] : values_) out.set(t, v + o(t));
  for (const auto& [t, v] : o.values_)
    if (!values_.count(t)) out.set(t, v);
  return out;
}

Cochain Cochain::operator-() const {
  Cochain out(group_, degree_);
  for (const auto& [t, v] : values_) out.set(t, -v);
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  return degree_ == o.degree_ && values_ == o.values_;
}

Rat EquivariantCochain::operator()(int s, const std::vector<int>& tuple) const {
  std::vector<int> key;
  key.reserve(tuple.size() + 1);
  key.push_back(s);
  key.insert(key.end(), tuple.begin(), tuple.end());
  auto it = values_.find(key);
  return it == values_.end() ? Rat(0) : it->second;
}

void EquivariantCochain::set(int s, const std::vector<int>& tuple, const Rat& value) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw Error("cochain tuple arity mismatch");
  std::vector<int> key;
  key.reserve(tuple.size() + 1);
  key.push_back(s);
  key.insert(key.end(), tuple.begin(), tuple.end());
  Rat v = mod1(value);
  if (v == 0)
    values_.erase(key);
  else
    values_[key] = v;
}

bool EquivariantCochain::is_normalized() const {
  const int e = gset_->group()->identity();
  for (const auto& [key, v] : values_) {
    (void)v;
    if (std::find(key.begin() + 1, key.end(), e) != key.end()) return false;
  }
  return true;
}

EquivariantCochain EquivariantCochain::operator+(const EquivariantCochain& o) const {
  EquivariantCochain out(gset_, degree_);
  auto split = [](const std::vector<int>& key) {
    return std::vector<int>(key.begin() + 1, key.end());
  };
  for (const auto& [k, v] : values_) out.set(k[0], split(k), v + o(k[0], split(k)));
  for (const auto& [k, v] : o.values_)
    if (!values_.count(k)) out.set(k[0], split(k), v);
  return out;
}

EquivariantCochain EquivariantCochain::operator-() const {
  EquivariantCochain out(gset_, degree_);
  for (const auto& [k, v] : values_)
    out.set(k[0], std::vector<int>(k.begin() + 1, k.end()), -v);
  return out;
}

// Coboundaries ------------------------------------------------------------

Cochain coboundary(const Cochain& c) {
  const auto& g = *c.group();
  const int n = g.order(), k = c.degree();
  Cochain out(c.group(), k + 1);
  std::vector<int> t(k + 1, 0);
  do {
    Rat acc = c(std::vector<int>(t.begin() + 1, t.end()));
    std::vector<int> merged(k);
    for (int i = 1; i <= k; ++i) {
      int pos = 0;
      for (int j = 0; j < k + 1; ++j) {
        if (j == i) continue;
        merged[pos++] = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
      }
      Rat term = c(merged);
      acc += (i % 2) ? -term : term;
    }
    Rat last = c(std::vector<int>(t.begin(), t.end() - 1));
    acc += ((k + 1) % 2) ? -last : last;
    out.set(t, acc);
  } while (next_tuple(t, n));
  return out;
}

EquivariantCochain coboundary(const EquivariantCochain& c) {
  const auto& gs = *c.gset();
  const auto& g = *gs.group();
  const int n = g.order(), k = c.degree();
  EquivariantCochain out(c.gset(), k + 1);
  for (int s = 0; s < gs.size(); ++s) {
    std::vector<int> t(k + 1, 0);
    do {
      Rat acc = c(s, std::vector<int>(t.begin() + 1, t.end()));
      std::vector<int> merged(k);
      for (int i = 1; i <= k; ++i) {
        int pos = 0;
        for (int j = 0; j < k + 1; ++j) {
          if (j == i) continue;
          merged[pos++] = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
        }
        Rat term = c(s, merged);
        acc += (i % 2) ? -term : term;
      }
      // Last face moves the base point: s -> g_{k+1} . s.
      Rat last = c(gs.act(t[k], s), std::vector<int>(t.begin(), t.end() - 1));
      acc += ((k + 1) % 2) ? -last : last;
      out.set(s, t, acc);
    } while (next_tuple(t, n));
  }
  return out;
}

CocycleCheck is_cocycle(const Cochain& c) {
  if (c.is_zero()) return {true, {}};
  Cochain d = coboundary(c);
  const int n = c.group()->order();
  std::vector<int> t(c.degree() + 1, 0);
  do {
    if (d(t) != 0) return {false, t};
  } while (next_tuple(t, n));
  return {true, {}};
}

CocycleCheck is_cocycle(const EquivariantCochain& c) {
  if (c.is_zero()) return {true, {}};
  EquivariantCochain d = coboundary(c);
  const int n = c.gset()->group()->order();
  for (int s = 0; s < c.gset()->size(); ++s) {
    std::vector<int> t(c.degree() + 1, 0);
    do {
      if (d(s, t) != 0) {
        std::vector<int> witness{s};
        witness.insert(witness.end(), t.begin(), t.end());
        return {false, witness};
      }
    } while (next_tuple(t, n));
  }
  return {true, {}};
}

// Transgression -----------------------------------------------------------

Rat double_twist_phase(const Cochain& omega, int g, int x, int y) {
  const auto& gr = *omega.group();
  int xinv = gr.inv(x);
  int xy = gr.mul(x, y);
  int gx = gr.mul(xinv, gr.mul(g, x));            // x^-1 g x
  int gxy = gr.mul(gr.inv(xy), gr.mul(g, xy));    // (xy)^-1 g (xy)
  return mod1(omega({g, x, y}) - omega({x, gx, y}) + omega({x, y, gxy}));
}

TransgressResult transgress(const Cochain& omega, int g) {
  if (omega.degree() != 3) throw Error("transgress expects a 3-cochain");
  auto check = is_cocycle(omega);
  if (!check.ok) throw NotACocycle("transgress: input is not closed", check.witness);

  Subgroup z = centralizer(omega.group(), g);
  GroupPtr zg = z.as_group();
  Cochain theta(zg, 2);
  for (int i = 0; i < z.order(); ++i)
    for (int j = 0; j < z.order(); ++j)
      theta.set({i, j}, double_twist_phase(omega, g, z.elements[i], z.elements[j]));
  return {std::move(z), std::move(theta)};
}

RestrictionResult restrict_equivariant(const EquivariantCochain& b, int s) {
  const auto& gs = *b.gset();
  Subgroup stab{gs.group(), gs.stabilizer(s)};
  GroupPtr h = stab.as_group();
  Cochain out(h, b.degree());
  const int m = stab.order(), k = b.degree();
  std::vector<int> t(k, 0);
  if (k == 0) {
    out.set({}, b(s, {}));
    return {std::move(stab), std::move(out)};
  }
  do {
    std::vector<int> parent_tuple(k);
    for (int i = 0; i < k; ++i) parent_tuple[i] = stab.elements[t[i]];
    out.set(t, b(s, parent_tuple));
  } while (next_tuple(t, m));
  return {std::move(stab), std::move(out)};
}

Cochain normalize_3cocycle(const Cochain& omega) {
  if (omega.degree() != 3) throw Error("normalize_3cocycle expects degree 3");
  const auto& g = *omega.group();
  const int n = g.order(), e = g.identity();
  // Step 1: mu1(a,b) = omega(e,a,b) clears the first slot.
  Cochain mu1(omega.group(), 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mu1.set({a, b}, omega({e, a, b}));
  Cochain w1 = omega - coboundary(mu1);
  // Step 2: mu2(a,b) = -w1(a,e,e) clears the second slot; the cocycle
  // identity then forces the third slot too.
  Cochain mu2(omega.group(), 2);
  for (int a = 0; a < n; ++a) {
    Rat v = -w1({a, e, e});
    for (int b = 0; b < n; ++b) mu2.set({a, b}, v);
  }
  Cochain w2 = w1 - coboundary(mu2);
  if (!w2.is_normalized()) throw Error("normalize_3cocycle: normalization failed");
  return w2;
}

// Cohomology via Smith normal form -----------------------------------------

namespace {

// Index of a k-tuple in the lexicographic enumeration of {0..n-1}^k.
long tuple_index(const std::vector<int>& t, int n) {
  long idx = 0;
  for (int x : t) idx = idx * n + x;
  return idx;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Integer matrix of the bar coboundary C^k -> C^{k+1} for the group g.
ZMat coboundary_matrix(const FiniteGroup& g, int k) {
  const int n = g.order();
  const long rows = ipow(n, k + 1), cols = ipow(n, k);
  ZMat m(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> t(k + 1, 0);
  if (k + 1 == 0) return m;
  do {
    long row = tuple_index(t, n);
    m(static_cast<int>(row),
      static_cast<int>(tuple_index(std::vector<int>(t.begin() + 1, t.end()), n))) += 1;
    std::vector<int> merged(k);
    for (int i = 1; i <= k; ++i) {
      int pos = 0;
      for (int j = 0; j < k + 1; ++j) {
        if (j == i) continue;
        merged[pos++] = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
      }
      m(static_cast<int>(row), static_cast<int>(tuple_index(merged, n))) +=
          (i % 2) ? -1 : 1;
    }
    m(static_cast<int>(row),
      static_cast<int>(tuple_index(std::vector<int>(t.begin(), t.end() - 1), n))) +=
        ((k + 1) % 2) ? -1 : 1;
  } while (next_tuple(t, n));
  return m;
}

}  // namespace

CohomologyData cohomology_dimension(GroupPtr g, int degree, long m, long max_entries) {
  if (degree < 0 || m < 1) throw Error("cohomology_dimension: bad arguments");
  const int n = g->order();
  const long cdim = ipow(n, degree);
  if (ipow(n, degree + 1) * cdim > max_entries)
    throw SizeExceeded("cohomology_dimension: bar complex too large");

  // H^0 = (Z/m)^G = Z/m for the bar model (constants; delta_0 = 0).
  ZMat a = coboundary_matrix(*g, degree);  // C^k -> C^{k+1}
  SmithForm sa = smith_normal_form(a);

  // Lattice K = {x in Z^c : A x = 0 mod m}, basis columns in ker_basis.
  const int c = static_cast<int>(cdim);
  ZMat kb(c, c);
  for (int i = 0; i < c; ++i) {
    Int scale = 1;
    if (i < sa.rank) {
      Int d = sa.diag[i];
      scale = Int(m) / boost::multiprecision::gcd(d, Int(m));
    }
    for (int r = 0; r < c; ++r) kb(r, i) = sa.v(r, i) * scale;
  }

  // Lattice L = im(delta_{k-1}) + m Z^c  (delta_{k-1} = 0 for degree 0).
  std::vector<std::vector<Int>> l_cols;
  if (degree >= 1) {
    ZMat b = coboundary_matrix(*g, degree - 1);
    for (int j = 0; j < b.cols; ++j) {
      std::vector<Int> col(c);
      for (int i = 0; i < c; ++i) col[i] = b(i, j);
      l_cols.push_back(std::move(col));
    }
  }
  for (int i = 0; i < c; ++i) {
    std::vector<Int> col(c, Int(0));
    col[i] = m;
    l_cols.push_back(std::move(col));
  }

  // Express L in the K basis: Y = K^-1 * L, necessarily integral.
  // Solve K * y = l exactly via the Smith form of K.
  SmithForm sk = smith_normal_form(kb);
  ZMat y(c, static_cast<int>(l_cols.size()));
  for (size_t j = 0; j < l_cols.size(); ++j) {
    // y = V_k * D^-1 * U_k * l
    std::vector<Int> t1(c, Int(0));
    for (int i = 0; i < c; ++i)
      for (int r = 0; r < c; ++r) t1[i] += sk.u(i, r) * l_cols[j][r];
    for (int i = 0; i < c; ++i) {
      if (sk.diag[i] == 0) {
        if (t1[i] != 0) throw Error("cohomology: image not contained in kernel");
        continue;
      }
      if (t1[i] % sk.diag[i] != 0)
        throw Error("cohomology: non-integral coordinate, image not in kernel");
      t1[i] /= sk.diag[i];
    }
    for (int i = 0; i < c; ++i) {
      Int acc = 0;
      for (int r = 0; r < c; ++r) acc += sk.v(i, r) * t1[r];
      y(i, static_cast<int>(j)) = acc;
    }
  }

  SmithForm sy = smith_normal_form(y);
  CohomologyData out;
  out.order = 1;
  for (int i = 0; i < c; ++i) {
    Int f = (i < static_cast<int>(sy.diag.size())) ? sy.diag[i] : Int(0);
    if (f == 0)
      throw Error("cohomology: quotient is not finite");  // cannot happen, L has full rank
    out.order *= f;
    if (f > 1) out.invariant_factors.push_back(f);
  }

  // Generators: K * U_y^-1 e_i for invariant factors > 1, reduced mod m.
  for (int i = 0; i < c; ++i) {
    Int f = sy.diag[i];
    if (f <= 1) continue;
    std::vector<Int> gen(c, Int(0));
    for (int r = 0; r < c; ++r) {
      Int acc = 0;
      for (int t = 0; t < c; ++t) acc += kb(r, t) * sy.u_inv(t, i);
      gen[r] = acc;
    }
    Cochain rep(g, degree);
    std::vector<int> tup(degree, 0);
    long idx = 0;
    if (degree == 0) {
      rep.set({}, Rat(gen[0], m));
    } else {
      do {
        rep.set(tup, Rat(gen[idx], m));
        ++idx;
      } while (next_tuple(tup, n));
    }
    out.generators.push_back(std::move(rep));
  }
  return out;
}

// Fixtures ------------------------------------------------------------------

Cochain cyclic_3cocycle(const GroupPtr& zn, long p) {
  const int n = zn->order();
  Cochain w(zn, 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        w.set({a, b, c}, Rat(static_cast<long>(p) * a * (b + c - (b + c) % n),
                             static_cast<long>(n) * n));
  return w;
}

Cochain bilinear_2cocycle_on_product(const GroupPtr& g, int n1, int n2, const Rat& coef) {
  if (g->order() != n1 * n2) throw Error("bilinear cocycle: order mismatch");
  Cochain theta(g, 2);
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) {
      int a1 = a / n2, b2 = b % n2;
      theta.set({a, b}, coef * a1 * b2);
    }
  return theta;
}

Cochain random_cochain(const GroupPtr& g, int degree, long denominator,
                       unsigned long long seed) {
  std::mt19937_64 rng(seed);
  Cochain c(g, degree);
  std::vector<int> t(degree, 0);
  if (degree == 0) {
    c.set({}, Rat(static_cast<long>(rng() % denominator), denominator));
    return c;
  }
  do {
    c.set(t, Rat(static_cast<long>(rng() % denominator), denominator));
  } while (next_tuple(t, g->order()));
  return c;
}

EquivariantCochain random_equivariant_cochain(const GSetPtr& s, int degree,
                                              long denominator,
                                              unsigned long long seed) {
  std::mt19937_64 rng(seed);
  EquivariantCochain c(s, degree);
  for (int x = 0; x < s->size(); ++x) {
    std::vector<int> t(degree, 0);
    if (degree == 0) {
      c.set(x, {}, Rat(static_cast<long>(rng() % denominator), denominator));
      continue;
    }
    do {
      c.set(x, t, Rat(static_cast<long>(rng() % denominator), denominator));
    } while (next_tuple(t, s->group()->order()));
  }
  return c;
}

}  // namespace ftqft
