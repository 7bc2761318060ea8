#include "ftqft/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "ftqft/linalg.hpp"

namespace ftqft {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

cplx phase_of(const Rat& q) {
  double x = kTau * static_cast<double>(q);
  return {std::cos(x), std::sin(x)};
}

struct Decomposition {
  // One entry per distinct irreducible; columns of basis[i] span one copy.
  std::vector<CMat> basis;           // |H| x d_i orthonormal columns
  std::vector<int> degrees;
  std::vector<std::vector<cplx>> characters;  // numeric chi on every element
};

// Decomposes the twisted regular representation by diagonalizing a random
// Hermitian element of its commutant (the right twisted multiplications).
Decomposition decompose_twisted_regular(const FiniteGroup& gr, const Cochain* theta,
                                        unsigned long long seed) {
  const int n = gr.order();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  // X = sum_x c_x R(x) with R(x) e_h = e(theta(h,x)) e_{hx}.
  CMat x(n, n);
  for (int t = 0; t < n; ++t) {
    cplx coef(unif(rng), unif(rng));
    for (int h = 0; h < n; ++h) {
      cplx w = theta ? phase_of((*theta)({h, t})) : cplx(1.0, 0.0);
      x(gr.mul(h, t), h) += coef * w;
    }
  }
  CMat herm = x.adjoint();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) herm(i, j) += x(i, j);

  HermitianEigen eig = hermitian_eigen(std::move(herm));

  // Cluster eigenvalues; each cluster spans one simple module.
  double scale = 1.0;
  for (double v : eig.values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-7 * scale;
  std::vector<std::pair<int, int>> clusters;  // [start, end)
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && eig.values[j] - eig.values[j - 1] < tol) ++j;
    clusters.emplace_back(i, j);
    i = j;
  }

  // Numeric character of the module spanned by columns [start, end).
  auto character_of = [&](int start, int end) {
    std::vector<cplx> chi(n);
    for (int g = 0; g < n; ++g) {
      cplx acc(0.0, 0.0);
      for (int h = 0; h < n; ++h) {
        int gh = gr.mul(g, h);
        cplx w = theta ? phase_of((*theta)({g, h})) : cplx(1.0, 0.0);
        for (int a = start; a < end; ++a)
          acc += std::conj(eig.vectors(gh, a)) * w * eig.vectors(h, a);
      }
      chi[g] = acc;
    }
    return chi;
  };

  Decomposition out;
  std::vector<int> multiplicity;
  for (auto [start, end] : clusters) {
    auto chi = character_of(start, end);
    bool found = false;
    for (size_t k = 0; k < out.characters.size() && !found; ++k) {
      if (out.degrees[k] != end - start) continue;
      double diff = 0;
      for (int g = 0; g < n; ++g) diff = std::max(diff, std::abs(chi[g] - out.characters[k][g]));
      if (diff < 1e-6) {
        ++multiplicity[k];
        found = true;
      }
    }
    if (found) continue;
    CMat cols(n, end - start);
    for (int i = 0; i < n; ++i)
      for (int a = start; a < end; ++a) cols(i, a - start) = eig.vectors(i, a);
    out.basis.push_back(std::move(cols));
    out.degrees.push_back(end - start);
    out.characters.push_back(std::move(chi));
    multiplicity.push_back(1);
  }

  // Validation: each simple of dimension d occurs exactly d times, and the
  // squared degrees sum to |H|.  A failed draw falls back to a reseed.
  long sum_sq = 0;
  for (size_t k = 0; k < out.degrees.size(); ++k) {
    if (multiplicity[k] != out.degrees[k]) throw RecognitionFailure("cluster multiplicity mismatch");
    sum_sq += static_cast<long>(out.degrees[k]) * out.degrees[k];
  }
  if (sum_sq != n) throw RecognitionFailure("sum of squared degrees mismatch");
  return out;
}

Decomposition decompose_with_retries(const FiniteGroup& gr, const Cochain* theta,
                                     unsigned long long seed) {
  for (int attempt = 0;; ++attempt) {
    try {
      return decompose_twisted_regular(gr, theta, seed + 0x9E3779B97F4A7C15ULL * attempt);
    } catch (const RecognitionFailure&) {
      if (attempt >= 7) throw;
    }
  }
}

// Exact recognition of chi(g) from the numeric module: the eigenvalues of
// rho(g) are roots of unity times a fixed rational phase determined by
// theta, so integer multiplicities are recovered by a small discrete
// Fourier transform of the traces of powers.
Cyclotomic recognize_value(int group_order, const std::vector<cplx>& powers_trace,
                           int r, const Rat& base_phase) {
  // Multiplicity of eigenvalue e(base_phase) * zeta_r^j.
  std::vector<long> mult(r, 0);
  double max_err = 0;
  for (int j = 0; j < r; ++j) {
    cplx acc(0.0, 0.0);
    for (int t = 0; t < r; ++t) {
      cplx y = powers_trace[t] * phase_of(mod1(-base_phase * t));
      acc += y * phase_of(mod1(Rat(-static_cast<long>(j) * t, r)));
    }
    double value = acc.real() / r;
    long rounded = std::lround(value);
    max_err = std::max(max_err, std::abs(value - rounded));
    max_err = std::max(max_err, std::abs(acc.imag() / r));
    mult[j] = rounded;
  }
  double tol = 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(group_order)));
  if (max_err > tol)
    throw RecognitionFailure("eigenvalue multiplicities are not near integers");
  Cyclotomic out;
  for (int j = 0; j < r; ++j) {
    if (mult[j] == 0) continue;
    if (mult[j] < 0) throw RecognitionFailure("negative eigenvalue multiplicity");
    out += Cyclotomic::root_of_unity(base_phase + Rat(j, r)).scaled(Rat(mult[j]));
  }
  return out;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, unsigned long long seed,
                               int max_order) {
  if (g->order() > max_order)
    throw SizeExceeded("character_table: group order exceeds bound");
  Decomposition dec = decompose_with_retries(*g, nullptr, seed);
  const int n = g->order();
  ConjClasses classes = conjugacy_classes(*g);
  const int nc = static_cast<int>(classes.classes.size());
  if (static_cast<int>(dec.degrees.size()) != nc)
    throw RecognitionFailure("number of irreducibles != number of classes");

  CharacterTable table;
  table.group = g;
  table.classes = classes;
  table.conductor = g->exponent();
  table.seed = seed;

  std::vector<std::pair<int, std::vector<Cyclotomic>>> rows;
  for (size_t k = 0; k < dec.degrees.size(); ++k) {
    const int d = dec.degrees[k];
    std::vector<Cyclotomic> row(nc);
    for (int ci = 0; ci < nc; ++ci) {
      int rep = classes.rep[ci];
      int r = g->element_order(rep);
      // rho(rep)^t has trace chi(rep^t): read off the numeric characters.
      std::vector<cplx> tr(r);
      int x = g->identity();
      for (int t = 0; t < r; ++t) {
        tr[t] = dec.characters[k][x];
        x = g->mul(x, rep);
      }
      Cyclotomic v = recognize_value(n, tr, r, Rat(0));
      auto numeric = v.to_complex();
      if (std::abs(numeric - dec.characters[k][rep]) > 1e-7)
        throw RecognitionFailure("recognized character does not match numeric value");
      row[ci] = std::move(v);
    }
    rows.emplace_back(d, std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    for (size_t i = 0; i < a.second.size(); ++i) {
      if (a.second[i] == b.second[i]) continue;
      return cyclo_less(b.second[i], a.second[i]);  // descending: trivial row first
    }
    return false;
  });
  for (auto& [d, row] : rows) {
    table.degrees.push_back(d);
    table.chi.push_back(std::move(row));
  }
  return table;
}

int ProjectiveCharacterTable::regular_class_count() const {
  int c = 0;
  for (char f : regular) c += (f != 0);
  return c;
}

ProjectiveCharacterTable projective_character_table(const GroupPtr& h,
                                                    const Cochain& theta,
                                                    unsigned long long seed,
                                                    int max_order) {
  if (h->order() > max_order)
    throw SizeExceeded("projective_character_table: group order exceeds bound");
  if (theta.degree() != 2)
    throw Error("projective_character_table: cocycle must have degree 2");
  auto check = is_cocycle(theta);
  if (!check.ok)
    throw NotACocycle("projective_character_table: theta is not closed", check.witness);

  // Normalize edges: theta' = theta - delta(const) kills theta(e,e).
  const int e = h->identity();
  Rat shift = theta({e, e});
  Cochain norm(h, 2);
  const int n = h->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) norm.set({a, b}, theta({a, b}) - shift);

  Decomposition dec = decompose_with_retries(*h, &norm, seed);

  ProjectiveCharacterTable table{h, norm, shift, conjugacy_classes(*h), {}, 1, {}, {}, {}, seed};
  const int nc = static_cast<int>(table.classes.classes.size());

  // theta-regular classes: e(theta(g,z)) = e(theta(z,g)) for all z in Z(g).
  table.regular.assign(nc, 1);
  for (int ci = 0; ci < nc; ++ci) {
    int g = table.classes.rep[ci];
    for (int z = 0; z < n && table.regular[ci]; ++z)
      if (h->mul(g, z) == h->mul(z, g) && norm({g, z}) != norm({z, g}))
        table.regular[ci] = 0;
  }
  int regular_count = 0;
  for (char f : table.regular) regular_count += f;
  if (static_cast<int>(dec.degrees.size()) != regular_count)
    throw RecognitionFailure("irreducible count != theta-regular class count");

  struct Row {
    int degree;
    std::vector<Cyclotomic> at_class;
    std::vector<Cyclotomic> at_elem;
  };
  std::vector<Row> rows;
  for (size_t k = 0; k < dec.degrees.size(); ++k) {
    Row row{dec.degrees[k], std::vector<Cyclotomic>(nc), std::vector<Cyclotomic>(n)};
    for (int g = 0; g < n; ++g) {
      const int r = h->element_order(g);
      // u_g^r = e(q) u_e with q the accumulated theta phases along <g>.
      Rat q(0);
      std::vector<cplx> tr(r);
      {
        // Traces of rho(g)^t via the explicit module action.
        const CMat& p = dec.basis[k];
        const int d = dec.degrees[k];
        CMat rho(d, d);
        // rho = P^dagger L(g) P
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            cplx acc(0.0, 0.0);
            for (int x = 0; x < n; ++x)
              acc += std::conj(p(h->mul(g, x), a)) * phase_of(norm({g, x})) * p(x, b);
            rho(a, b) = acc;
          }
        CMat pw = CMat(d, d);
        for (int i = 0; i < d; ++i) pw(i, i) = 1.0;
        for (int t = 0; t < r; ++t) {
          tr[t] = pw.trace();
          pw = pw * rho;
        }
      }
      {
        int x = g;
        for (int t = 1; t < r; ++t) {
          q += norm({g, x});
          x = h->mul(g, x);
        }
      }
      row.at_elem[g] = recognize_value(n, tr, r,
                                       mod1(Rat(numerator(q), denominator(q) * r)));
      auto numeric = row.at_elem[g].to_complex();
      if (std::abs(numeric - dec.characters[k][g]) > 1e-7)
        throw RecognitionFailure("projective character recognition mismatch");
    }
    for (int ci = 0; ci < nc; ++ci) row.at_class[ci] = row.at_elem[table.classes.rep[ci]];
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t i = 0; i < a.at_elem.size(); ++i) {
      if (a.at_elem[i] == b.at_elem[i]) continue;
      return cyclo_less(b.at_elem[i], a.at_elem[i]);  // descending: trivial row first
    }
    return false;
  });

  long conductor = 1;
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    for (const auto& v : row.at_elem) conductor = std::lcm(conductor, v.conductor());
    table.chi_class.push_back(std::move(row.at_class));
    table.chi_elem.push_back(std::move(row.at_elem));
  }
  table.conductor = conductor;
  return table;
}

bool row_orthogonality_holds(const CharacterTable& t) {
  const int nc = static_cast<int>(t.classes.classes.size());
  Rat order(t.group->order());
  for (int i = 0; i < t.irreps(); ++i)
    for (int j = 0; j < t.irreps(); ++j) {
      Cyclotomic acc;
      for (int c = 0; c < nc; ++c) {
        Rat size(static_cast<long>(t.classes.classes[c].size()));
        acc += (t.chi[i][c] * t.chi[j][c].conj()).scaled(size);
      }
      Cyclotomic expected(i == j ? Rat(order) : Rat(0));
      if (acc != expected) return false;
    }
  return true;
}

bool column_orthogonality_holds(const CharacterTable& t) {
  const int nc = static_cast<int>(t.classes.classes.size());
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2) {
      Cyclotomic acc;
      for (int i = 0; i < t.irreps(); ++i) acc += t.chi[i][c1] * t.chi[i][c2].conj();
      Rat expected = (c1 == c2)
                         ? Rat(t.group->order(), static_cast<long>(t.classes.classes[c1].size()))
                         : Rat(0);
      if (acc != Cyclotomic(expected)) return false;
    }
  return true;
}

}  // namespace ftqft
