#include "ftqft/rarita.hpp"

#include <algorithm>

namespace ftqft {

namespace {

QMat kron(const QMat& a, const QMat& b) {
  QMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero())
            out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

QMat pauli_x() {
  QMat m(2, 2);
  m(0, 1) = GaussRat(Rat(1));
  m(1, 0) = GaussRat(Rat(1));
  return m;
}
QMat pauli_z() {
  QMat m(2, 2);
  m(0, 0) = GaussRat(Rat(1));
  m(1, 1) = GaussRat(Rat(-1));
  return m;
}
QMat pauli_iy() {  // i sigma_y, real entries
  QMat m(2, 2);
  m(0, 1) = GaussRat(Rat(1));
  m(1, 0) = GaussRat(Rat(-1));
  return m;
}
QMat pauli_ix() {  // i sigma_x
  QMat m(2, 2);
  m(0, 1) = GaussRat::i();
  m(1, 0) = GaussRat::i();
  return m;
}

// Square Dirac gammas for signature (+,-,...,-) with entries in {0,+-1,+-i}:
// gamma(0)^2 = +1, gamma(i)^2 = -1, pairwise anticommuting.
std::vector<QMat> dirac_gammas(int n) {
  std::vector<QMat> g;
  g.push_back(pauli_x());
  g.push_back(pauli_iy());
  while (static_cast<int>(g.size()) + 1 < n) {
    std::vector<QMat> next;
    QMat id = QMat::identity(g.front().rows());
    for (const auto& gm : g) next.push_back(kron(gm, pauli_z()));
    next.push_back(kron(id, pauli_ix()));
    next.push_back(kron(id, pauli_iy()));
    g = std::move(next);
  }
  if (static_cast<int>(g.size()) < n) {
    // Odd n: append the normalized chirality of the even part; it
    // anticommutes with everything and squares to -1.
    QMat p = g[0];
    for (size_t i = 1; i < g.size(); ++i) p = p * g[i];
    QMat p2 = p * p;
    bool plus = p2(0, 0) == GaussRat(Rat(1));
    g.push_back(plus ? p.scaled(GaussRat::i()) : p);
  }
  return g;
}

GaussRat metric_sq(int mu) { return GaussRat(mu == 0 ? Rat(2) : Rat(-2)); }

bool gamma_relation_holds(const std::vector<QMat>& g) {
  const int n = static_cast<int>(g.size());
  const int d = g[0].rows();
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu; nu < n; ++nu) {
      QMat anti = g[mu] * g[nu] + g[nu] * g[mu];
      QMat expect =
          (mu == nu) ? QMat::identity(d).scaled(metric_sq(mu)) : QMat(d, d);
      if (!(anti == expect)) return false;
    }
  return true;
}

// gamma^T = t * gamma in the tensor-product basis; 0 if neither sign works.
int transpose_sign(const QMat& g) {
  QMat t = g.transposed();
  if (t == g) return 1;
  if (t == g.scaled(GaussRat(Rat(-1)))) return -1;
  return 0;
}

struct PairingSearch {
  bool found = false;
  QMat c, c_inv;
};

// C = product of a subset of gammas with C gamma^mu C^-1 = eta (gamma^mu)^T
// and all C gamma^mu, gamma^mu C^-1 symmetric.
PairingSearch find_symmetric_pairing(const std::vector<QMat>& g) {
  const int n = static_cast<int>(g.size());
  const int d = g[0].rows();
  std::vector<int> tsign(n);
  for (int mu = 0; mu < n; ++mu) {
    tsign[mu] = transpose_sign(g[mu]);
    if (tsign[mu] == 0) return {};
  }
  for (int eta : {1, -1}) {
    for (int parity : {0, 1}) {
      // mu in A iff eta t_mu = (-1)^{|A|-1}, assuming |A| = parity (mod 2).
      int target = (parity == 1) ? 1 : -1;
      std::vector<int> subset;
      for (int mu = 0; mu < n; ++mu)
        if (eta * tsign[mu] == target) subset.push_back(mu);
      if (static_cast<int>(subset.size()) % 2 != parity) continue;
      QMat c = QMat::identity(d);
      for (int mu : subset) c = c * g[mu];
      QMat c_inv = inverse(c);
      bool ok = true;
      for (int mu = 0; mu < n && ok; ++mu)
        ok = (c * g[mu] * c_inv) == g[mu].transposed().scaled(GaussRat(Rat(eta)));
      for (int mu = 0; mu < n && ok; ++mu) {
        QMat up = c * g[mu];
        QMat dn = g[mu] * c_inv;
        ok = up.transposed() == up && dn.transposed() == dn;
      }
      if (ok) return {true, std::move(c), std::move(c_inv)};
    }
  }
  return {};
}

bool model_valid(const CliffordModel& m) {
  const int d = m.dim_s;
  for (int mu = 0; mu < m.n; ++mu)
    if (!(m.cu[mu].transposed() == m.cu[mu]) || !(m.cd[mu].transposed() == m.cd[mu]))
      return false;
  for (int mu = 0; mu < m.n; ++mu)
    for (int nu = mu; nu < m.n; ++nu) {
      QMat want = (mu == nu) ? QMat::identity(d).scaled(metric_sq(mu)) : QMat(d, d);
      if (!(m.cd[mu] * m.cu[nu] + m.cd[nu] * m.cu[mu] == want)) return false;
      if (!(m.cu[mu] * m.cd[nu] + m.cu[nu] * m.cd[mu] == want)) return false;
    }
  return true;
}

struct ChiralSplit {
  bool ok = false;
  std::vector<int> order;  // new index -> old index, + block first
  int positive = 0;
};

ChiralSplit chirality_split(const std::vector<QMat>& g) {
  ChiralSplit out;
  const int d = g[0].rows();
  QMat p = g[0];
  for (size_t i = 1; i < g.size(); ++i) p = p * g[i];
  QMat p2 = p * p;
  QMat chi = (p2(0, 0) == GaussRat(Rat(-1))) ? p.scaled(GaussRat::i()) : p;
  std::vector<int> sign(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j)
      if (i != j && !chi(i, j).is_zero()) return out;
    if (chi(i, i) == GaussRat(Rat(1))) sign[i] = 1;
    else if (chi(i, i) == GaussRat(Rat(-1))) sign[i] = -1;
    else return out;
  }
  for (int i = 0; i < d; ++i)
    if (sign[i] > 0) out.order.push_back(i);
  out.positive = static_cast<int>(out.order.size());
  for (int i = 0; i < d; ++i)
    if (sign[i] < 0) out.order.push_back(i);
  out.ok = true;
  return out;
}

}  // namespace

CliffordModel build_clifford(int n) {
  if (n < 2 || n > 12)
    throw DimensionOutOfRange("build_clifford supports 2 <= n <= 12");

  auto gammas = dirac_gammas(n);
  if (!gamma_relation_holds(gammas))
    throw Error("internal: gamma recursion failed the Clifford relation");

  CliffordModel m;
  m.n = n;

  // Half-spinor module in n = 2 mod 8 beyond the degenerate n = 2 case.
  if (n % 8 == 2 && n > 2) {
    auto split = chirality_split(gammas);
    auto pairing = find_symmetric_pairing(gammas);
    if (split.ok && pairing.found && split.positive * 2 == gammas[0].rows()) {
      const int d = gammas[0].rows(), h = split.positive;
      auto permuted = [&](const QMat& x) {
        QMat out(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) out(i, j) = x(split.order[i], split.order[j]);
        return out;
      };
      bool ok = true;
      std::vector<QMat> cu, cd;
      for (int mu = 0; mu < n && ok; ++mu) {
        QMat up = permuted(pairing.c * gammas[mu]);
        QMat dn = permuted(gammas[mu] * pairing.c_inv);
        QMat up_pp(h, h), dn_pp(h, h);
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < h; ++j) {
            up_pp(i, j) = up(i, j);
            dn_pp(i, j) = dn(i, j);
          }
        // Mixed-chirality blocks must vanish for the restriction to close.
        for (int i = 0; i < h && ok; ++i)
          for (int j = h; j < d && ok; ++j)
            if (!up(i, j).is_zero() || !up(j, i).is_zero() ||
                !dn(i, j).is_zero() || !dn(j, i).is_zero())
              ok = false;
        cu.push_back(std::move(up_pp));
        cd.push_back(std::move(dn_pp));
      }
      if (ok) {
        m.dim_s = gammas[0].rows() / 2;
        m.cu = std::move(cu);
        m.cd = std::move(cd);
        m.chiral = true;
        if (model_valid(m)) return m;
        m = CliffordModel{};
        m.n = n;
      }
    }
  }

  auto pairing = find_symmetric_pairing(gammas);
  if (pairing.found) {
    m.dim_s = gammas[0].rows();
    for (int mu = 0; mu < n; ++mu) {
      m.cu.push_back(pairing.c * gammas[mu]);
      m.cd.push_back(gammas[mu] * pairing.c_inv);
    }
    if (model_valid(m)) return m;
    m.cu.clear();
    m.cd.clear();
  }

  // Doubled module S = W + W*: symmetric pairings exist unconditionally.
  const int d = gammas[0].rows();
  m.dim_s = 2 * d;
  m.doubled = true;
  for (int mu = 0; mu < n; ++mu) {
    QMat up(2 * d, 2 * d), dn(2 * d, 2 * d);
    const QMat& g = gammas[mu];
    QMat gt = g.transposed();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        up(i, d + j) = gt(i, j);
        up(d + i, j) = g(i, j);
        dn(i, d + j) = g(i, j);
        dn(d + i, j) = gt(i, j);
      }
    m.cu.push_back(std::move(up));
    m.cd.push_back(std::move(dn));
  }
  if (!model_valid(m)) throw Error("internal: doubled Clifford model invalid");
  return m;
}

Rat covector_norm_sq(const CliffordModel& m, const Covector& k) {
  Rat acc(0);
  for (int mu = 0; mu < m.n; ++mu) acc += m.inverse_metric(mu) * k[mu] * k[mu];
  return acc;
}

QMat c_of_k(const CliffordModel& m, const Covector& k, bool up) {
  if (static_cast<int>(k.size()) != m.n) throw Error("covector dimension mismatch");
  QMat acc(m.dim_s, m.dim_s);
  const auto& mats = up ? m.cu : m.cd;
  for (int mu = 0; mu < m.n; ++mu) {
    if (k[mu] == 0) continue;
    acc = acc + mats[mu].scaled(GaussRat(k[mu]));
  }
  return acc;
}

Covector canonical_null(int n) {
  Covector k(n, Rat(0));
  k[0] = 1;
  k[1] = 1;
  return k;
}

Covector canonical_timelike(int n) {
  Covector k(n, Rat(0));
  k[0] = 1;
  return k;
}

namespace {

Covector flat(const CliffordModel& m, const Covector& v) {
  Covector out(m.n);
  for (int mu = 0; mu < m.n; ++mu) out[mu] = m.metric_diag(mu) * v[mu];
  return out;
}

// B_k(e^nu (x) s) = sum_mu e_mu (x) ct(e^mu ^ k ^ e^nu) s with ct expanded
// through the Clifford identity.
QMat build_b(const CliffordModel& m, const Covector& k) {
  const int n = m.n, d = m.dim_s;
  QMat b(n * d, n * d);
  QMat cdk = c_of_k(m, k, false);
  QMat cuk = c_of_k(m, k, true);
  for (int nu = 0; nu < n; ++nu) {
    QMat right = cdk * m.cu[nu];
    for (int mu = 0; mu < n; ++mu) {
      QMat block = m.cu[mu] * right;
      Rat g_mu_k = m.inverse_metric(mu) * k[mu];     // <e^mu, k>
      if (g_mu_k != 0) block = block - m.cu[nu].scaled(GaussRat(g_mu_k));
      if (mu == nu)                                   // <e^mu, e^nu> cu(k)
        block = block + cuk.scaled(GaussRat(m.inverse_metric(mu)));
      Rat g_k_nu = m.inverse_metric(nu) * k[nu];     // <k, e^nu>
      if (g_k_nu != 0) block = block - m.cu[mu].scaled(GaussRat(g_k_nu));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (!block(i, j).is_zero()) b(mu * d + i, nu * d + j) = block(i, j);
    }
  }
  return b;
}

QMat build_a(const CliffordModel& m, const Covector& k) {
  const int n = m.n, d = m.dim_s;
  QMat a(n * d, d);
  for (int nu = 0; nu < n; ++nu) {
    if (k[nu] == 0) continue;
    for (int i = 0; i < d; ++i) a(nu * d + i, i) = GaussRat(k[nu]);
  }
  return a;
}

// Exact coordinates of w in the column span of `basis`; throws if outside.
std::vector<GaussRat> solve_in_span(const QMat& basis, const std::vector<GaussRat>& w) {
  const int rows = basis.rows(), cols = basis.cols();
  QMat aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = basis(i, j);
    aug(i, cols) = w[i];
  }
  row_reduce(aug);
  std::vector<GaussRat> x(cols);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    if (aug(row, col).is_zero()) continue;
    x[col] = aug(row, cols);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (!aug(i, cols).is_zero()) throw Error("solve_in_span: vector outside the span");
  return x;
}

constexpr std::uint64_t kPrimes[] = {998244353ULL, 1004535809ULL, 469762049ULL};

// Exact rank with a modular certificate: a mod-p rank equal to `expected`
// proves rank >= expected, and the caller supplies the matching exhibited
// upper bound.  Falls back to exact elimination if every prime disagrees.
int certified_rank(const QMat& m, int expected, bool* used_fallback) {
  for (std::uint64_t p : kPrimes)
    if (rank_mod_p(m, p) == expected) return expected;
  if (used_fallback) *used_fallback = true;
  return rank_exact(m);
}

// Integer Gaussian matrices (entries a + b i with word-sized a, b) for the
// non-null sweep: B_k A_k vanishes in exact int64 arithmetic (entries are
// provably far below overflow for the |k| <= 1000 fast path) and the rank
// certificate reduces mod p.
struct GIMat {
  int rows = 0, cols = 0;
  std::vector<std::pair<long long, long long>> d;
  GIMat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, {0, 0}) {}
  std::pair<long long, long long>& at(int i, int j) {
    return d[static_cast<size_t>(i) * cols + j];
  }
  const std::pair<long long, long long>& at(int i, int j) const {
    return d[static_cast<size_t>(i) * cols + j];
  }
};

long long rat_as_ll(const Rat& q) {
  if (denominator(q) != 1) throw Error("expected integer entry");
  return static_cast<long long>(numerator(q));
}

GIMat gimat_of(const QMat& m) {
  GIMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.at(i, j) = {rat_as_ll(m(i, j).re), rat_as_ll(m(i, j).im)};
  return out;
}

GIMat gimul(const GIMat& a, const GIMat& b) {
  GIMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      auto [re, im] = a.at(i, k);
      if (re == 0 && im == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        auto [bre, bim] = b.at(k, j);
        if (bre == 0 && bim == 0) continue;
        auto& cell = out.at(i, j);
        cell.first += re * bre - im * bim;
        cell.second += re * bim + im * bre;
      }
    }
  return out;
}

GIMat giadd_scaled(GIMat m, const GIMat& other, long long s) {
  for (size_t i = 0; i < m.d.size(); ++i) {
    m.d[i].first += s * other.d[i].first;
    m.d[i].second += s * other.d[i].second;
  }
  return m;
}

int girank_mod_p(const GIMat& m, std::uint64_t p) {
  std::uint64_t w = sqrt_minus_one_mod(p);
  std::vector<std::uint64_t> buf(m.d.size());
  auto norm = [p](long long v) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  };
  for (size_t i = 0; i < m.d.size(); ++i)
    buf[i] = (norm(m.d[i].first) +
              static_cast<__uint128_t>(norm(m.d[i].second)) * w % p) % p;
  return rank_mod_p_inplace(buf, m.rows, m.cols, p);
}

// Fast exact verification of ker B_k = im A_k for an integer covector with
// small entries.  Returns false when the certificates are inconclusive.
bool verify_nonnull_fast(const CliffordModel& m, const std::vector<long long>& k,
                         FiberReport& rep) {
  const int n = m.n, d = m.dim_s;
  std::vector<GIMat> cu, cd;
  for (int mu = 0; mu < n; ++mu) {
    cu.push_back(gimat_of(m.cu[mu]));
    cd.push_back(gimat_of(m.cd[mu]));
  }
  auto inv_metric = [](int mu) { return mu == 0 ? 1LL : -1LL; };
  GIMat cdk(d, d), cuk(d, d);
  for (int mu = 0; mu < n; ++mu) {
    if (k[mu] == 0) continue;
    cdk = giadd_scaled(std::move(cdk), cd[mu], k[mu]);
    cuk = giadd_scaled(std::move(cuk), cu[mu], k[mu]);
  }
  GIMat b(n * d, n * d);
  for (int nu = 0; nu < n; ++nu) {
    GIMat right = gimul(cdk, cu[nu]);
    for (int mu = 0; mu < n; ++mu) {
      GIMat block = gimul(cu[mu], right);
      long long g_mu_k = inv_metric(mu) * k[mu];
      if (g_mu_k != 0) block = giadd_scaled(std::move(block), cu[nu], -g_mu_k);
      if (mu == nu) block = giadd_scaled(std::move(block), cuk, inv_metric(mu));
      long long g_k_nu = inv_metric(nu) * k[nu];
      if (g_k_nu != 0) block = giadd_scaled(std::move(block), cu[mu], -g_k_nu);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b.at(mu * d + i, nu * d + j) = block.at(i, j);
    }
  }
  GIMat a(n * d, d);
  for (int nu = 0; nu < n; ++nu) {
    if (k[nu] == 0) continue;
    for (int i = 0; i < d; ++i) a.at(nu * d + i, i) = {k[nu], 0};
  }
  // Exact complex-integer product; entries are far below overflow.
  GIMat ba = gimul(b, a);
  for (const auto& [re, im] : ba.d)
    if (re != 0 || im != 0) throw Error("B_k A_k != 0: the complex is broken");

  int expected = (n - 1) * d;
  for (std::uint64_t p : kPrimes) {
    if (girank_mod_p(b, p) == expected) {
      rep.rank_a = d;
      rep.rank_b = expected;
      rep.dim_ker_b = n * d - expected;
      rep.quotient_dim = rep.dim_ker_b - d;
      rep.kernel_is_image = true;
      return true;
    }
  }
  return false;
}

struct NullFiberData {
  QMat s_prime, s_dprime;         // kernel bases of c(k) both ways
  std::vector<Covector> v_prime;  // representatives of k-perp mod k-sharp
  QMat c_prime;                   // V' (x) S' -> S''
  QMat r_prime;                   // kernel basis of c'
};

NullFiberData null_fiber(const CliffordModel& m, const Covector& k) {
  NullFiberData out;
  out.s_prime = kernel_basis(c_of_k(m, k, true));
  out.s_dprime = kernel_basis(c_of_k(m, k, false));

  const int n = m.n;
  Covector ksharp(n);
  for (int mu = 0; mu < n; ++mu) ksharp[mu] = m.inverse_metric(mu) * k[mu];
  QMat krow(1, n);
  for (int mu = 0; mu < n; ++mu) krow(0, mu) = GaussRat(k[mu]);
  QMat kperp = kernel_basis(krow);  // n x (n-1)

  QMat accum(n, 1);
  for (int mu = 0; mu < n; ++mu) accum(mu, 0) = GaussRat(ksharp[mu]);
  int kept = 1;
  for (int col = 0; col < kperp.cols(); ++col) {
    QMat trial(n, kept + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < kept; ++j) trial(i, j) = accum(i, j);
      trial(i, kept) = kperp(i, col);
    }
    if (rank_exact(trial) != kept + 1) continue;
    accum = trial;
    ++kept;
    Covector v(n);
    for (int i = 0; i < n; ++i) {
      if (kperp(i, col).im != 0)
        throw Error("null_fiber: complex kernel vector for a real covector");
      v[i] = kperp(i, col).re;
    }
    out.v_prime.push_back(std::move(v));
  }

  const int ds_p = out.s_prime.cols(), ds_pp = out.s_dprime.cols();
  const int vdim = static_cast<int>(out.v_prime.size());
  out.c_prime = QMat(ds_pp, vdim * ds_p);
  for (int j = 0; j < vdim; ++j) {
    QMat cv = c_of_k(m, flat(m, out.v_prime[j]), true);
    for (int bcol = 0; bcol < ds_p; ++bcol) {
      std::vector<GaussRat> w(m.dim_s);
      for (int i = 0; i < m.dim_s; ++i) {
        GaussRat acc;
        for (int t = 0; t < m.dim_s; ++t)
          if (!cv(i, t).is_zero() && !out.s_prime(t, bcol).is_zero())
            acc += cv(i, t) * out.s_prime(t, bcol);
        w[i] = acc;
      }
      auto coords = solve_in_span(out.s_dprime, w);
      for (int i = 0; i < ds_pp; ++i) out.c_prime(i, j * ds_p + bcol) = coords[i];
    }
  }
  out.r_prime = kernel_basis(out.c_prime);
  return out;
}

}  // namespace

FiberReport fiber_report(const CliffordModel& m, const Covector& k) {
  if (static_cast<int>(k.size()) != m.n) throw Error("covector dimension mismatch");
  if (std::all_of(k.begin(), k.end(), [](const Rat& q) { return q == 0; }))
    throw ZeroCovector("fiber_report requires k != 0");

  FiberReport rep;
  rep.n = m.n;
  rep.dim_s = m.dim_s;
  rep.k = k;
  rep.norm_sq = covector_norm_sq(m, k);
  rep.null_covector = rep.norm_sq == 0;

  const int n = m.n, d = m.dim_s;

  if (!rep.null_covector) {
    // Scale to an integer covector (ranks and kernels are unchanged) and try
    // the word-sized fast path first.
    Int scale = 1;
    for (const Rat& q : k) scale = boost::multiprecision::lcm(scale, denominator(q));
    Int maxabs = 0;
    std::vector<long long> k_int(n);
    bool small = scale < 100000;
    if (small) {
      for (int mu = 0; mu < n; ++mu) {
        Int v = numerator(k[mu]) * (scale / denominator(k[mu]));
        Int av = abs(v);
        if (av > maxabs) maxabs = av;
        if (av > 1000) { small = false; break; }
        k_int[mu] = static_cast<long long>(v);
      }
    }
    if (small && verify_nonnull_fast(m, k_int, rep)) return rep;

    QMat a = build_a(m, k);
    QMat b = build_b(m, k);
    if (!(b * a).is_zero()) throw Error("B_k A_k != 0: the complex is broken");
    rep.rank_a = d;
    int expected = (n - 1) * d;
    rep.rank_b = certified_rank(b, expected, &rep.exact_fallback_used);
    rep.dim_ker_b = n * d - rep.rank_b;
    rep.quotient_dim = rep.dim_ker_b - rep.rank_a;
    rep.kernel_is_image = (rep.rank_b == expected);
    return rep;
  }

  QMat a = build_a(m, k);
  QMat b = build_b(m, k);
  if (!(b * a).is_zero()) throw Error("B_k A_k != 0: the complex is broken");
  rep.rank_a = d;  // k != 0: the k_mu id blocks are injective

  auto nf = null_fiber(m, k);
  rep.dim_s_prime = nf.s_prime.cols();
  rep.dim_s_dprime = nf.s_dprime.cols();
  rep.dim_v_prime = static_cast<int>(nf.v_prime.size());
  rep.dim_r_prime = nf.r_prime.cols();

  // Lift R' into V* (x) S; the lift must land in ker B exactly.
  const int rp = rep.dim_r_prime, ds_p = rep.dim_s_prime;
  QMat lift(n * d, rp);
  for (int col = 0; col < rp; ++col)
    for (int j = 0; j < rep.dim_v_prime; ++j) {
      Covector vflat = flat(m, nf.v_prime[j]);
      for (int bcol = 0; bcol < ds_p; ++bcol) {
        GaussRat coef = nf.r_prime(j * ds_p + bcol, col);
        if (coef.is_zero()) continue;
        for (int mu = 0; mu < n; ++mu) {
          if (vflat[mu] == 0) continue;
          for (int i = 0; i < d; ++i) {
            GaussRat add = coef * GaussRat(vflat[mu]) * nf.s_prime(i, bcol);
            if (!add.is_zero()) lift(mu * d + i, col) += add;
          }
        }
      }
    }
  if (!(b * lift).is_zero()) throw Error("lifted R' vectors are not in ker B_k");

  QMat joint(n * d, d + rp);
  for (int i = 0; i < n * d; ++i) {
    for (int j = 0; j < d; ++j) joint(i, j) = a(i, j);
    for (int j = 0; j < rp; ++j) joint(i, d + j) = lift(i, j);
  }
  // Full column rank mod p is already an exact certificate of independence.
  bool independent = false;
  for (std::uint64_t p : kPrimes)
    if (rank_mod_p(joint, p) == d + rp) { independent = true; break; }
  if (!independent && rank_exact(joint) != d + rp)
    throw Error("im A_k and lifted R' are not independent");

  int expected = n * d - d - rp;
  rep.rank_b = certified_rank(b, expected, &rep.exact_fallback_used);
  rep.dim_ker_b = n * d - rep.rank_b;
  rep.quotient_dim = rep.dim_ker_b - rep.rank_a;
  rep.quotient_matches_r_prime = (rep.quotient_dim == rep.dim_r_prime);
  return rep;
}

ParticleContent particle_content(const CliffordModel& m) {
  auto rep = fiber_report(m, canonical_null(m.n));
  ParticleContent out;
  out.n = m.n;
  out.dim_r_prime = rep.dim_r_prime;
  out.dim_s_dprime = rep.dim_s_dprime;
  out.dim_s_prime = rep.dim_s_prime;
  out.first_approach = {{"R'", rep.dim_r_prime},
                        {"S''", rep.dim_s_dprime},
                        {"S'", rep.dim_s_prime},
                        {"S'", rep.dim_s_prime}};
  out.second_approach = {{"R'", rep.dim_r_prime}};
  out.third_approach = {{"R'", rep.dim_r_prime}, {"S'", rep.dim_s_prime}};
  return out;
}

DualType default_dual_type(int n) {
  int r = ((n % 8) + 8) % 8;
  return (r == 2 || r == 6) ? DualType::kDistinctDual : DualType::kSelfDual;
}

VirtualCoefficient rs_virtual_coefficient(int n, DualType dual) {
  VirtualCoefficient out;
  out.n = n;
  out.dual_type = dual;
  // The anomaly line is (Pfaff D_{E (x) TcX}) (Pfaff D_E)^{-2} (Pfaff D~)^{-1}.
  int coupled = 1, plain = -2, dual_exp = -1;
  if (dual == DualType::kDistinctDual) {
    // The dual-spinor pfaffian is canonically inverse to Pfaff D, so its
    // factor enters with the opposite exponent.
    plain -= dual_exp;  // -2 + 1 = -1
  } else {
    // Self-dual: the dual operator is D itself.
    plain += dual_exp;  // -2 - 1 = -3
  }
  out.pfaffian_factors = {{"Pfaff D_TcX", coupled}, {"Pfaff D", plain}};
  out.tangent_coefficient = 1;
  out.constant_term = plain;
  out.expression = "TcX - " + std::to_string(-plain);
  return out;
}

SplittingCheck splitting_check(const CliffordModel& m, const Covector& k) {
  SplittingCheck out;
  if (covector_norm_sq(m, k) != 0)
    throw Error("splitting_check expects a null covector");
  auto nf = null_fiber(m, k);
  const int ds_p = nf.s_prime.cols(), ds_pp = nf.s_dprime.cols();
  const int vdim = static_cast<int>(nf.v_prime.size());
  const int n = m.n;

  // Literal splitting candidate sigma(t) = (1/n) g_{mu nu} c(e^mu) t e^nu
  // projected to V' (x) S'; its composite with c' is a scalar.
  QMat sigma(vdim * ds_p, ds_pp);
  for (int col = 0; col < ds_pp; ++col)
    for (int j = 0; j < vdim; ++j) {
      QMat cdv = c_of_k(m, flat(m, nf.v_prime[j]), false);
      std::vector<GaussRat> w(m.dim_s);
      for (int i = 0; i < m.dim_s; ++i) {
        GaussRat acc;
        for (int t = 0; t < m.dim_s; ++t)
          if (!cdv(i, t).is_zero() && !nf.s_dprime(t, col).is_zero())
            acc += cdv(i, t) * nf.s_dprime(t, col);
        w[i] = acc;
      }
      auto coords = solve_in_span(nf.s_prime, w);
      for (int b = 0; b < ds_p; ++b)
        sigma(j * ds_p + b, col) = coords[b] * GaussRat(Rat(1, n));
    }

  QMat composite = nf.c_prime * sigma;  // expect a scalar multiple of id
  GaussRat lambda = composite(0, 0);
  for (int i = 0; i < ds_pp; ++i)
    for (int j = 0; j < ds_pp; ++j) {
      const GaussRat want = (i == j) ? lambda : GaussRat();
      if (!(composite(i, j) == want)) return out;  // splits = false
    }
  if (lambda.is_zero() || lambda.im != 0) return out;
  out.raw_eigenvalue = lambda.re;
  out.splits = true;
  return out;
}

}  // namespace ftqft
