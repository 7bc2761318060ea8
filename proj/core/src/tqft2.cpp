#include "ftqft/tqft2.hpp"

#include <algorithm>
#include <numeric>

#include "ftqft/linalg.hpp"

namespace ftqft {

namespace {

Cyclotomic e(const Rat& q) { return Cyclotomic::root_of_unity(q); }

// Loop transgression of a 2-cochain: the phase by which h acts on the line
// at the loop (s, g).
Rat loop_phase(const EquivariantCochain& b, const GSet& s, int h, int point, int g) {
  const auto& gr = *s.group();
  return mod1(b(point, {h, g}) - b(point, {gr.conj(h, g), h}));
}

// Edge normalization: replace B by B - delta(A) with A supported on the
// identity, so that B(g,e;s) = B(e,g;s) = 0.  A gauge move; the resulting
// algebra is isomorphic and the unit/counit formulas are exact.
EquivariantCochain normalize_edges(const EquivariantCochain& b) {
  const auto& s = *b.gset();
  const auto& gr = *s.group();
  EquivariantCochain a(b.gset(), 1);
  for (int x = 0; x < s.size(); ++x) a.set(x, {gr.identity()}, b(x, {gr.identity(), gr.identity()}));
  return b - coboundary(a);
}

}  // namespace

// --------------------------------------------------------------------------
// 1d theory

Hilbert1d hilbert_1d(const EquivariantCochain& b1) {
  if (b1.degree() != 1) throw Error("hilbert_1d expects a degree-1 cochain");
  auto check = is_cocycle(b1);
  if (!check.ok) throw NotACocycle("hilbert_1d: B is not closed", check.witness);
  const auto& s = *b1.gset();
  Hilbert1d out;
  for (const auto& orbit : s.orbits()) {
    int base = orbit.front();
    auto stab = s.stabilizer(base);
    bool trivial = true;
    for (int h : stab)
      if (b1(base, {h}) != 0) { trivial = false; break; }
    out.orbits.push_back({base, static_cast<int>(stab.size()), trivial});
    if (trivial) ++out.dimension;
  }
  return out;
}

ZCircle1d z_circle_1d(const EquivariantCochain& b1) {
  if (b1.degree() != 1) throw Error("z_circle_1d expects a degree-1 cochain");
  auto check = is_cocycle(b1);
  if (!check.ok) throw NotACocycle("z_circle_1d: B is not closed", check.witness);
  const auto& s = *b1.gset();
  const auto& gr = *s.group();

  ZCircle1d out;
  // Measured: sum over loop objects of the holonomy phase, divided by |G|
  // (the Burnside form of the sum over classes weighted by 1/#Aut).
  Cyclotomic total;
  for (int x = 0; x < s.size(); ++x)
    for (int h = 0; h < gr.order(); ++h)
      if (s.act(h, x) == x) total += e(b1(x, {h}));
  out.measured = total.scaled(Rat(1, gr.order()));

  // Display: per orbit, the bare character sum over the stabilizer at the
  // canonical base point.
  Cyclotomic display;
  for (const auto& orbit : s.orbits())
    for (int h : s.stabilizer(orbit.front())) display += e(b1(orbit.front(), {h}));
  out.display = display;
  return out;
}

// --------------------------------------------------------------------------
// Line bundle over the loop groupoid

Rat LineBundleData::phase(int h, int object) const {
  auto [s, g] = base.objects[object];
  return loop_phase(b, *base.gset, h, s, g);
}

bool LineBundleData::phases_compose() const {
  const auto& s = *base.gset;
  const auto& gr = *s.group();
  for (size_t x = 0; x < base.objects.size(); ++x) {
    auto [pt, g] = base.objects[x];
    for (int h1 = 0; h1 < gr.order(); ++h1) {
      int pt1 = s.act(h1, pt), g1 = gr.conj(h1, g);
      int target = base.object_index(pt1, g1);
      for (int h2 = 0; h2 < gr.order(); ++h2) {
        Rat lhs = phase(gr.mul(h2, h1), static_cast<int>(x));
        Rat rhs = mod1(phase(h2, target) + phase(h1, static_cast<int>(x)));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

LineBundleData loop_line_bundle(const EquivariantCochain& b2) {
  if (b2.degree() != 2) throw Error("loop_line_bundle expects a degree-2 cochain");
  auto check = is_cocycle(b2);
  if (!check.ok) throw NotACocycle("loop_line_bundle: B is not closed", check.witness);
  return LineBundleData{fields_on_circle(b2.gset()), b2};
}

// --------------------------------------------------------------------------
// Frobenius algebra

FrobeniusAlgebra frobenius_algebra(const GSetPtr& s) {
  return frobenius_algebra(EquivariantCochain(s, 2));
}

FrobeniusAlgebra frobenius_algebra(const EquivariantCochain& b2_in) {
  if (b2_in.degree() != 2) throw Error("frobenius_algebra expects a degree-2 cochain");
  auto check = is_cocycle(b2_in);
  if (!check.ok) throw NotACocycle("frobenius_algebra: B is not closed", check.witness);

  EquivariantCochain b = normalize_edges(b2_in);
  const GSetPtr& sp = b2_in.gset();
  const auto& s = *sp;
  const auto& gr = *s.group();
  const int n = gr.order();

  FrobeniusAlgebra f;
  f.gset_ = sp;
  f.loops_ = fields_on_circle(sp);

  // Classes with transport phases and the regularity test.
  for (size_t ci = 0; ci < f.loops_.classes.size(); ++ci) {
    FrobeniusAlgebra::LoopClass lc;
    lc.base_object = f.loops_.classes[ci].front();
    auto [pt, g] = f.loops_.objects[lc.base_object];
    lc.section = pt;
    lc.holonomy = g;
    lc.orbit_size = static_cast<int>(f.loops_.classes[ci].size());
    lc.aut_order = f.loops_.aut_order[ci];

    lc.regular = true;
    for (int h = 0; h < n && lc.regular; ++h)
      if (s.act(h, pt) == pt && gr.conj(h, g) == g &&
          loop_phase(b, s, h, pt, g) != 0)
        lc.regular = false;

    if (lc.regular) {
      // Transport phase to each member through the smallest h reaching it.
      std::vector<char> seen(f.loops_.objects.size(), 0);
      for (int h = 0; h < n; ++h) {
        int obj = f.loops_.object_index(s.act(h, pt), gr.conj(h, g));
        if (seen[obj]) continue;
        seen[obj] = 1;
        lc.member_phase.emplace_back(obj, loop_phase(b, s, h, pt, g));
      }
      std::sort(lc.member_phase.begin(), lc.member_phase.end());
    }
    f.classes_.push_back(std::move(lc));
  }
  for (size_t ci = 0; ci < f.classes_.size(); ++ci)
    if (f.classes_[ci].regular) f.basis_.push_back(static_cast<int>(ci));

  const int dim = static_cast<int>(f.basis_.size());

  // Object index -> (basis position, base-object flag) for reading off
  // coordinates of invariant vectors.
  std::vector<int> base_of(f.loops_.objects.size(), -1);
  for (int bi = 0; bi < dim; ++bi)
    base_of[f.classes_[f.basis_[bi]].base_object] = bi;

  // Structure constants via the twisted convolution on the loop groupoid.
  f.c_.assign(dim, std::vector<std::vector<Cyclotomic>>(dim, std::vector<Cyclotomic>(dim)));
  for (int i = 0; i < dim; ++i) {
    const auto& a = f.classes_[f.basis_[i]];
    for (int j = 0; j < dim; ++j) {
      const auto& bq = f.classes_[f.basis_[j]];
      // product vector in object coordinates
      std::vector<Cyclotomic> prod(f.loops_.objects.size());
      for (const auto& [obj_a, ph_a] : a.member_phase) {
        auto [sa, ga] = f.loops_.objects[obj_a];
        for (const auto& [obj_b, ph_b] : bq.member_phase) {
          auto [sb, gb] = f.loops_.objects[obj_b];
          if (sa != sb) continue;
          int target = f.loops_.object_index(sa, gr.mul(ga, gb));
          prod[target] += e(ph_a + ph_b + b(sa, {ga, gb}));
        }
      }
      // Read off coefficients at canonical base objects; verify the product
      // is exactly the claimed combination of basis vectors.
      for (int k = 0; k < dim; ++k)
        f.c_[i][j][k] = prod[f.classes_[f.basis_[k]].base_object];
      std::vector<Cyclotomic> recon(f.loops_.objects.size());
      for (int k = 0; k < dim; ++k) {
        if (f.c_[i][j][k].is_zero()) continue;
        for (const auto& [obj, ph] : f.classes_[f.basis_[k]].member_phase)
          recon[obj] += f.c_[i][j][k] * e(ph);
      }
      for (size_t o = 0; o < prod.size(); ++o)
        if (!(prod[o] == recon[o]))
          throw Error("frobenius product left the span of invariant sections");
    }
  }

  // Unit: the sum of the (s, e)-classes.  Counit: disk amplitude
  // 1/|G| per object in a trivial-holonomy class.
  f.unit_.assign(dim, Cyclotomic());
  f.counit_.assign(dim, Cyclotomic());
  for (int k = 0; k < dim; ++k) {
    const auto& lc = f.classes_[f.basis_[k]];
    if (lc.holonomy == gr.identity()) {
      f.unit_[k] = Cyclotomic(Rat(1));
      f.counit_[k] = Cyclotomic(Rat(lc.orbit_size, n));
    }
  }

  // Pairing from the structure constants and the counit.
  f.pairing_.assign(dim, std::vector<Cyclotomic>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Cyclotomic acc;
      for (int k = 0; k < dim; ++k) acc += f.c_[i][j][k] * f.counit_[k];
      f.pairing_[i][j] = acc;
    }
  return f;
}

std::vector<Cyclotomic> FrobeniusAlgebra::multiply(const std::vector<Cyclotomic>& x,
                                                   const std::vector<Cyclotomic>& y) const {
  const int dim = dimension();
  std::vector<Cyclotomic> out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Cyclotomic xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k)
        if (!c_[i][j][k].is_zero()) out[k] += xy * c_[i][j][k];
    }
  }
  return out;
}

Cyclotomic FrobeniusAlgebra::eps(const std::vector<Cyclotomic>& x) const {
  Cyclotomic acc;
  for (int i = 0; i < dimension(); ++i) acc += x[i] * counit_[i];
  return acc;
}

std::vector<std::vector<Cyclotomic>> FrobeniusAlgebra::pairing_inverse() const {
  const int dim = dimension();
  Mat<Cyclotomic> p(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) p(i, j) = pairing_[i][j];
  Mat<Cyclotomic> inv = inverse(p);  // throws SingularPairing
  std::vector<std::vector<Cyclotomic>> out(dim, std::vector<Cyclotomic>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) out[i][j] = inv(i, j);
  return out;
}

std::vector<Cyclotomic> FrobeniusAlgebra::handle_element() const {
  const int dim = dimension();
  auto eta = pairing_inverse();
  std::vector<Cyclotomic> h(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (eta[i][j].is_zero()) continue;
      for (int k = 0; k < dim; ++k)
        if (!c_[i][j][k].is_zero()) h[k] += eta[i][j] * c_[i][j][k];
    }
  return h;
}

HilbertSpaceDescr FrobeniusAlgebra::descriptor() const {
  HilbertSpaceDescr d;
  d.dimension = dimension();
  long cond = 1;
  for (int k : basis_) {
    const auto& lc = classes_[k];
    d.basis_labels.push_back("(s" + std::to_string(lc.section) + ",g" +
                             std::to_string(lc.holonomy) + ")");
  }
  for (const auto& plane : c_)
    for (const auto& row : plane)
      for (const auto& v : row) cond = std::lcm(cond, v.conductor());
  d.conductor = cond;
  return d;
}

Cyclotomic z_surface_algebra(const FrobeniusAlgebra& f, int genus) {
  if (genus < 0) throw Error("genus must be non-negative");
  std::vector<Cyclotomic> acc = f.unit();
  if (genus > 0) {
    auto h = f.handle_element();
    for (int t = 0; t < genus; ++t) acc = f.multiply(acc, h);
  } else {
    f.pairing_inverse();  // still require nondegeneracy
  }
  return f.eps(acc);
}

Cyclotomic z_surface_direct(const GSetPtr& sp, const EquivariantCochain* b2, int genus,
                            unsigned long long max_work) {
  if (genus < 0) throw Error("genus must be non-negative");
  const auto& s = *sp;
  const auto& gr = *s.group();
  const int n = gr.order();
  unsigned long long sq = static_cast<unsigned long long>(n) * n;
  if (sq * static_cast<unsigned long long>(s.size()) > max_work)
    throw SizeExceeded("z_surface_direct: work bound");

  const bool twisted = b2 && !b2->is_zero();
  if (!twisted) {
    // 1/|G| * sum_s #{2g-tuples in Stab(s) satisfying the surface relation}.
    Int total = 0;
    for (int x = 0; x < s.size(); ++x) total += surface_solution_count_at_point(s, x, genus);
    return Cyclotomic(Rat(total, Int(n)));
  }

  if (b2->degree() != 2) throw Error("z_surface_direct expects a degree-2 cochain");
  auto check = is_cocycle(*b2);
  if (!check.ok) throw NotACocycle("z_surface_direct: B is not closed", check.witness);
  if (genus > 1)
    throw UnsupportedTwistedGenus(
        "twisted direct integral implemented for genus <= 1 only");

  if (genus == 0) {
    // No holonomy; the action phase vanishes on a trivialized bundle.
    return Cyclotomic(Rat(s.size(), n));
  }
  // Genus 1: the action on a commuting pair (a, b) at s is the B-pairing of
  // the fundamental cycle [a|b] - [b|a].
  Cyclotomic total;
  for (int x = 0; x < s.size(); ++x)
    for (int a = 0; a < n; ++a) {
      if (s.act(a, x) != x) continue;
      for (int bb = 0; bb < n; ++bb) {
        if (gr.mul(a, bb) != gr.mul(bb, a) || s.act(bb, x) != x) continue;
        total += e((*b2)(x, {a, bb}) - (*b2)(x, {bb, a}));
      }
    }
  return total.scaled(Rat(1, n));
}

bool gluing_check(const FrobeniusAlgebra& f, int genus1, int genus2) {
  const int dim = f.dimension();
  auto eta = f.pairing_inverse();
  auto h = f.handle_element();

  auto h_power = [&](int g) {
    std::vector<Cyclotomic> acc = f.unit();
    for (int t = 0; t < g; ++t) acc = f.multiply(acc, h);
    return acc;
  };

  // One-boundary amplitudes eps_i(g) = eps(h^g * e_i).
  auto amplitudes = [&](int g) {
    auto hg = h_power(g);
    std::vector<Cyclotomic> out(dim);
    for (int i = 0; i < dim; ++i) {
      std::vector<Cyclotomic> ei(dim);
      ei[i] = Cyclotomic(Rat(1));
      out[i] = f.eps(f.multiply(hg, ei));
    }
    return out;
  };

  auto e1 = amplitudes(genus1), e2 = amplitudes(genus2);
  Cyclotomic glued;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) glued += eta[i][j] * e1[i] * e2[j];

  return glued == z_surface_algebra(f, genus1 + genus2);
}

}  // namespace ftqft
