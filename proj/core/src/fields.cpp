#include "ftqft/fields.hpp"

#include <algorithm>
#include <map>

namespace ftqft {

PointGroupoid fields_on_point(const GSetPtr& s) {
  PointGroupoid out;
  out.gset = s;
  out.classes = s->orbits();
  for (const auto& orbit : out.classes)
    out.aut_order.push_back(static_cast<int>(s->stabilizer(orbit.front()).size()));
  return out;
}

int CircleGroupoid::object_index(int s, int g) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), std::make_pair(s, g));
  if (it == objects.end() || *it != std::make_pair(s, g)) return -1;
  return static_cast<int>(it - objects.begin());
}

CircleGroupoid fields_on_circle(const GSetPtr& s) {
  CircleGroupoid out;
  out.gset = s;
  const auto& g = *s->group();
  const int n = g.order();
  for (int x = 0; x < s->size(); ++x)
    for (int h = 0; h < n; ++h)
      if (s->act(h, x) == x) out.objects.emplace_back(x, h);

  std::vector<int> cls(out.objects.size(), -1);
  for (size_t i = 0; i < out.objects.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    std::vector<int> members;
    auto [x, hol] = out.objects[i];
    int aut = 0;
    for (int h = 0; h < n; ++h) {
      int idx = out.object_index(s->act(h, x), g.conj(h, hol));
      if (cls[idx] < 0) {
        cls[idx] = id;
        members.push_back(idx);
      }
      if (s->act(h, x) == x && g.conj(h, hol) == hol) ++aut;
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
    out.aut_order.push_back(aut);
  }
  return out;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& word,
                  const std::vector<int>& holonomies) {
  int acc = g.identity();
  for (int letter : word) {
    if (letter == 0) throw Error("relator letters are 1-based and nonzero");
    int idx = std::abs(letter) - 1;
    if (idx >= static_cast<int>(holonomies.size()))
      throw Error("relator letter out of range");
    int h = holonomies[idx];
    acc = g.mul(acc, letter > 0 ? h : g.inv(h));
  }
  return acc;
}

namespace {

// Orbit/automorphism data for a list of fields under the simultaneous
// action h: (tuple, s) -> (h tuple h^-1, h s).
template <class Field>
void classify(const GSetPtr& s, std::vector<Field>& fields,
              std::vector<std::vector<int>>& classes, std::vector<int>& auts) {
  const auto& g = *s->group();
  const int n = g.order();
  std::map<std::pair<std::vector<int>, int>, int> index;
  for (size_t i = 0; i < fields.size(); ++i)
    index[{fields[i].holonomies, fields[i].section}] = static_cast<int>(i);

  std::vector<int> cls(fields.size(), -1);
  for (size_t i = 0; i < fields.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> members;
    int aut = 0;
    for (int h = 0; h < n; ++h) {
      std::vector<int> conj(fields[i].holonomies.size());
      for (size_t k = 0; k < conj.size(); ++k) conj[k] = g.conj(h, fields[i].holonomies[k]);
      int sec = s->act(h, fields[i].section);
      int idx = index.at({conj, sec});
      if (cls[idx] < 0) {
        cls[idx] = id;
        members.push_back(idx);
      }
      if (idx == static_cast<int>(i)) ++aut;
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
    auts.push_back(aut);
  }
}

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

unsigned long long ull_pow_capped(unsigned long long base, int e,
                                  unsigned long long cap) {
  unsigned long long r = 1;
  while (e-- > 0) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

SurfaceFields fields_on_surface(const GSetPtr& s, int genus,
                                unsigned long long max_work) {
  if (genus < 0) throw Error("genus must be non-negative");
  const auto& g = *s->group();
  const int n = g.order();
  unsigned long long work = ull_pow_capped(n, 2 * genus, max_work);
  if (work > max_work ||
      work > max_work / static_cast<unsigned long long>(s->size()))
    throw SizeExceeded("fields_on_surface: enumeration exceeds work bound");

  SurfaceFields out;
  out.gset = s;
  out.genus = genus;
  if (genus == 0) {
    for (int x = 0; x < s->size(); ++x) out.fields.push_back({{}, x});
  } else {
    std::vector<int> t(2 * genus, 0);
    do {
      int rel = g.identity();
      for (int i = 0; i < genus; ++i) {
        int a = t[2 * i], b = t[2 * i + 1];
        rel = g.mul(rel, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
      }
      if (rel != g.identity()) continue;
      for (int x = 0; x < s->size(); ++x) {
        bool fixes = true;
        for (int h : t)
          if (s->act(h, x) != x) { fixes = false; break; }
        if (fixes) out.fields.push_back({t, x});
      }
    } while (next_tuple(t, n));
  }

  classify(s, out.fields, out.classes, out.aut_order);
  return out;
}

PresentedFields fields_on_presented_manifold(const GSetPtr& s, const Presentation& p,
                                             unsigned long long max_work) {
  if (p.generators < 0) throw Error("negative generator count");
  const auto& g = *s->group();
  const int n = g.order();
  unsigned long long work = ull_pow_capped(n, p.generators, max_work);
  if (work > max_work ||
      work > max_work / static_cast<unsigned long long>(s->size()))
    throw SizeExceeded("fields_on_presented_manifold: enumeration exceeds work bound");

  PresentedFields out;
  out.gset = s;
  out.presentation = p;
  if (p.generators == 0) {
    for (int x = 0; x < s->size(); ++x) out.fields.push_back({{}, x});
  } else {
    std::vector<int> t(p.generators, 0);
    do {
      bool ok = true;
      for (const auto& rel : p.relators)
        if (evaluate_word(g, rel, t) != g.identity()) { ok = false; break; }
      if (!ok) continue;
      for (int x = 0; x < s->size(); ++x) {
        bool fixes = true;
        for (int h : t)
          if (s->act(h, x) != x) { fixes = false; break; }
        if (fixes) out.fields.push_back({t, x});
      }
    } while (next_tuple(t, n));
  }

  classify(s, out.fields, out.classes, out.aut_order);
  return out;
}

Int surface_solution_count(const FiniteGroup& h, int genus) {
  const int n = h.order();
  if (genus == 0) return 1;
  // N(c) = #{(a,b) : [a,b] = c}; the genus-g count is the g-fold
  // convolution of N evaluated at the identity.
  std::vector<Int> base(n, Int(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = h.mul(h.mul(a, b), h.mul(h.inv(a), h.inv(b)));
      base[c] += 1;
    }
  std::vector<Int> acc = base;
  for (int t = 1; t < genus; ++t) {
    std::vector<Int> next(n, Int(0));
    for (int x = 0; x < n; ++x) {
      if (acc[x] == 0) continue;
      for (int y = 0; y < n; ++y) next[h.mul(x, y)] += acc[x] * base[y];
    }
    acc = std::move(next);
  }
  return acc[h.identity()];
}

Int surface_solution_count_at_point(const GSet& s, int point, int genus) {
  Subgroup stab{s.group(), s.stabilizer(point)};
  return surface_solution_count(*stab.as_group(), genus);
}

Int presented_solution_count(const GSet& s, const Presentation& p,
                             unsigned long long max_work) {
  const auto& g = *s.group();
  const int n = g.order();
  unsigned long long work = ull_pow_capped(n, p.generators, max_work);
  if (work > max_work) throw SizeExceeded("presented_solution_count: work bound");
  if (p.generators == 0) return Int(s.size());
  Int count = 0;
  std::vector<int> t(p.generators, 0);
  do {
    bool ok = true;
    for (const auto& rel : p.relators)
      if (evaluate_word(g, rel, t) != g.identity()) { ok = false; break; }
    if (!ok) continue;
    for (int x = 0; x < s.size(); ++x) {
      bool fixes = true;
      for (int h : t)
        if (s.act(h, x) != x) { fixes = false; break; }
      if (fixes) count += 1;
    }
  } while (next_tuple(t, n));
  return count;
}

}  // namespace ftqft
