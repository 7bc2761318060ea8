// ftqft: command-line front end for the finite TQFT engine.
//
// Subcommands: group info, chartable, cocycle check, tqft z, frobenius,
// verlinde, rs-verify, rs-content, anomaly, corpus.  All numeric output is
// exact (rationals / cyclotomic strings); reports embed input hashes, the
// library version and the seed, so identical invocations are byte-identical.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "ftqft/anomaly.hpp"
#include "ftqft/chartable.hpp"
#include "ftqft/cochain.hpp"
#include "ftqft/fields.hpp"
#include "ftqft/io.hpp"
#include "ftqft/rarita.hpp"
#include "ftqft/tqft2.hpp"
#include "ftqft/verlinde.hpp"
#include "ftqft/version.hpp"

using namespace ftqft;

namespace {

struct Options {
  std::string format = "json";
  unsigned long long seed = kDefaultSeed;
  unsigned long long max_work = 100000000ULL;
  std::string out;

  std::string group_file;
  std::string cocycle_file;
  std::string omega_file;
  std::string presentation_file;
  std::string space = "point";
  std::string gset_file;
  std::string subgroup;  // comma-separated generator indices for cosets
  int dim = 2;
  int genus = 0;
  std::string covector;
  std::string route = "both";
  std::string dual = "auto";
  std::string corpus_dir = "data/groups";
};

std::map<std::string, std::string> g_input_hashes;

// Reads an input file exactly once, records its content hash for the
// report, and hands back the parsed JSON.
Json slurp(const std::string& path) {
  std::string content = read_file(path);
  g_input_hashes[path] = fnv1a64(content);
  return Json::parse(content);
}

GroupPtr load_group(const Options& opt) {
  if (opt.group_file.empty()) throw ParseError("missing --group file");
  return group_from_json(slurp(opt.group_file));
}

GSetPtr make_space(const Options& opt, const GroupPtr& g) {
  if (!opt.gset_file.empty()) return gset_from_json(slurp(opt.gset_file), g);
  if (opt.space == "point") return GSet::point(g);
  if (opt.space == "regular") return GSet::regular(g);
  if (opt.space == "conjugation") return GSet::conjugation(g);
  if (opt.space == "cosets") {
    std::vector<int> gens;
    std::stringstream ss(opt.subgroup);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) gens.push_back(std::stoi(part));
    return GSet::cosets(g, gens);
  }
  throw ParseError("unknown --space (point|regular|conjugation|cosets)");
}

std::vector<Rat> parse_covector(const std::string& text, int n) {
  std::vector<Rat> k;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    auto slash = part.find('/');
    if (slash == std::string::npos)
      k.emplace_back(std::stol(part));
    else
      k.emplace_back(std::stol(part.substr(0, slash)), std::stol(part.substr(slash + 1)));
  }
  if (static_cast<int>(k.size()) != n)
    throw ParseError("covector needs exactly " + std::to_string(n) + " components");
  return k;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

void emit(const Options& opt, const std::string& command, const Json& result,
          const std::vector<std::vector<std::string>>& csv_rows) {
  std::ostringstream body;
  if (opt.format == "json") {
    Json envelope;
    envelope["command"] = command;
    envelope["version"] = kVersion;
    envelope["seed"] = opt.seed;
    envelope["max_work"] = opt.max_work;
    Json inputs = Json::object();
    for (const auto& [path, hash] : g_input_hashes) inputs[path] = {{"fnv1a64", hash}};
    envelope["inputs"] = inputs;
    envelope["result"] = result;
    body << envelope.dump(2) << "\n";
  } else if (opt.format == "csv") {
    body << "# command=" << command << " version=" << kVersion << " seed=" << opt.seed;
    for (const auto& [path, hash] : g_input_hashes) body << " " << path << "=" << hash;
    body << "\n";
    for (const auto& row : csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) body << ",";
        body << csv_quote(row[i]);
      }
      body << "\n";
    }
  } else {
    throw ParseError("unknown --format (json|csv)");
  }
  if (opt.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    f << body.str();
  }
}

// --------------------------------------------------------------------------

void run_group_info(const Options& opt) {
  auto g = load_group(opt);
  auto classes = conjugacy_classes(*g);
  Json result;
  result["order"] = g->order();
  result["identity"] = g->identity();
  result["abelian"] = g->is_abelian();
  result["exponent"] = g->exponent();
  result["class_count"] = classes.classes.size();
  Json cls = Json::array();
  std::vector<std::vector<std::string>> rows{{"class", "representative", "size",
                                              "centralizer_order", "rep_order"}};
  for (size_t c = 0; c < classes.classes.size(); ++c) {
    int rep = classes.rep[c];
    int zc = centralizer(g, rep).order();
    cls.push_back({{"representative", rep},
                   {"size", classes.classes[c].size()},
                   {"centralizer_order", zc},
                   {"element_order", g->element_order(rep)}});
    rows.push_back({std::to_string(c), std::to_string(rep),
                    std::to_string(classes.classes[c].size()), std::to_string(zc),
                    std::to_string(g->element_order(rep))});
  }
  result["classes"] = cls;
  emit(opt, "group info", result, rows);
}

void run_chartable(const Options& opt) {
  auto g = load_group(opt);
  auto t = character_table(g, opt.seed);
  Json result;
  result["conductor"] = t.conductor;
  result["degrees"] = t.degrees;
  Json reps = Json::array();
  for (int r : t.classes.rep) reps.push_back(r);
  result["class_representatives"] = reps;
  Json chi = Json::array();
  std::vector<std::vector<std::string>> rows;
  {
    std::vector<std::string> head{"degree"};
    for (int r : t.classes.rep) head.push_back("class_g" + std::to_string(r));
    rows.push_back(head);
  }
  for (int i = 0; i < t.irreps(); ++i) {
    Json row = Json::array();
    std::vector<std::string> csv{std::to_string(t.degrees[i])};
    for (size_t c = 0; c < t.classes.classes.size(); ++c) {
      row.push_back(t.chi[i][c].str());
      csv.push_back(t.chi[i][c].str());
    }
    chi.push_back(row);
    rows.push_back(csv);
  }
  result["characters"] = chi;
  emit(opt, "chartable", result, rows);
}

void run_cocycle_check(const Options& opt) {
  if (opt.cocycle_file.empty()) throw ParseError("missing --cocycle file");
  Cochain c = cochain_from_json(slurp(opt.cocycle_file));
  auto check = is_cocycle(c);
  Json result;
  result["degree"] = c.degree();
  result["group_order"] = c.group()->order();
  result["normalized"] = c.is_normalized();
  result["is_cocycle"] = check.ok;
  if (!check.ok) result["witness"] = check.witness;
  std::vector<std::vector<std::string>> rows{{"is_cocycle", "witness"}};
  std::string wit;
  for (size_t i = 0; i < check.witness.size(); ++i)
    wit += (i ? "," : "") + std::to_string(check.witness[i]);
  rows.push_back({check.ok ? "true" : "false", wit});
  emit(opt, "cocycle check", result, rows);
}

EquivariantCochain lift_to_point(const GroupPtr& g, const Cochain& c, const GSetPtr& pt) {
  EquivariantCochain out(pt, c.degree());
  for (const auto& [tuple, v] : c.values()) out.set(0, tuple, v);
  return out;
}

void run_tqft_z(const Options& opt) {
  auto g = load_group(opt);
  auto s = make_space(opt, g);
  Json result;
  result["theory"] = {{"group", opt.group_file},
                      {"group_order", g->order()},
                      {"space", opt.space},
                      {"space_size", s->size()},
                      {"dim", opt.dim},
                      {"twist", opt.cocycle_file.empty() ? "none" : opt.cocycle_file}};
  std::vector<std::vector<std::string>> rows;

  if (opt.dim == 1) {
    EquivariantCochain b(s, 1);
    if (!opt.cocycle_file.empty()) {
      if (opt.space != "point")
        throw ParseError("cocycle files define the twist on S = pt only");
      Cochain c = cochain_from_json(slurp(opt.cocycle_file), g);
      if (c.degree() != 1) throw ParseError("--dim 1 expects a degree-1 cocycle");
      b = lift_to_point(g, c, s);
    }
    auto h = hilbert_1d(b);
    auto z = z_circle_1d(b);
    result["dimension"] = h.dimension;
    result["Z_measured"] = cyclotomic_to_json(z.measured);
    result["Z_display"] = cyclotomic_to_json(z.display);
    if (!(z.display == z.measured))
      result["note"] =
          "the bare display sum omits the 1/#Aut weights of the counting "
          "measure; the measured value equals dim E";
    rows = {{"dimension", "Z_measured", "Z_display"},
            {std::to_string(h.dimension), z.measured.str(), z.display.str()}};
    emit(opt, "tqft z", result, rows);
    return;
  }
  if (opt.dim != 2) throw ParseError("--dim must be 1 or 2");

  EquivariantCochain b(s, 2);
  bool twisted = false;
  if (!opt.cocycle_file.empty()) {
    if (opt.space != "point")
      throw ParseError("cocycle files define the twist on S = pt only");
    Cochain c = cochain_from_json(slurp(opt.cocycle_file), g);
    if (c.degree() != 2) throw ParseError("--dim 2 expects a degree-2 cocycle");
    b = lift_to_point(g, c, s);
    twisted = !b.is_zero();
  }

  result["genus"] = opt.genus;
  Json zj;
  std::string z_alg_str, z_dir_str;
  if (opt.route == "algebra" || opt.route == "both") {
    auto f = frobenius_algebra(b);
    Cyclotomic z = z_surface_algebra(f, opt.genus);
    zj["algebra"] = cyclotomic_to_json(z);
    z_alg_str = z.str();
    result["Z"] = cyclotomic_to_json(z);
  }
  if (opt.route == "direct" || opt.route == "both") {
    Cyclotomic z = z_surface_direct(s, twisted ? &b : nullptr, opt.genus, opt.max_work);
    zj["direct"] = cyclotomic_to_json(z);
    z_dir_str = z.str();
    if (!result.contains("Z")) result["Z"] = cyclotomic_to_json(z);
  }
  if (opt.route == "both" && !z_alg_str.empty() && !z_dir_str.empty())
    zj["routes_agree"] = (z_alg_str == z_dir_str);
  result["routes"] = zj;
  rows = {{"genus", "Z_algebra", "Z_direct"},
          {std::to_string(opt.genus), z_alg_str, z_dir_str}};
  emit(opt, "tqft z", result, rows);
}

void run_frobenius(const Options& opt) {
  auto g = load_group(opt);
  auto s = make_space(opt, g);
  EquivariantCochain b(s, 2);
  if (!opt.cocycle_file.empty()) {
    if (opt.space != "point")
      throw ParseError("cocycle files define the twist on S = pt only");
    Cochain c = cochain_from_json(slurp(opt.cocycle_file), g);
    b = lift_to_point(g, c, s);
  }
  auto f = frobenius_algebra(b);
  Json result;
  result["dimension"] = f.dimension();
  auto d = f.descriptor();
  result["conductor"] = d.conductor;
  result["basis"] = d.basis_labels;
  Json counit = Json::array(), pairing = Json::array();
  for (const auto& v : f.counit()) counit.push_back(v.str());
  for (const auto& row : f.pairing()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    pairing.push_back(r);
  }
  result["counit"] = counit;
  result["pairing"] = pairing;
  Json sc = Json::object();
  for (int i = 0; i < f.dimension(); ++i)
    for (int j = 0; j < f.dimension(); ++j)
      for (int k = 0; k < f.dimension(); ++k) {
        const auto& c = f.structure_constant(i, j, k);
        if (!c.is_zero())
          sc[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k)] =
              c.str();
      }
  result["structure_constants"] = sc;

  std::vector<std::vector<std::string>> rows{
      {"basis", "section", "holonomy", "orbit_size", "aut_order", "counit"}};
  for (int i = 0; i < f.dimension(); ++i) {
    const auto& lc = f.loop_classes()[f.basis()[i]];
    rows.push_back({d.basis_labels[i], std::to_string(lc.section),
                    std::to_string(lc.holonomy), std::to_string(lc.orbit_size),
                    std::to_string(lc.aut_order), f.counit()[i].str()});
  }
  emit(opt, "frobenius", result, rows);
}

void run_verlinde(const Options& opt) {
  auto g = load_group(opt);
  Cochain omega(g, 3);
  if (!opt.omega_file.empty()) omega = cochain_from_json(slurp(opt.omega_file), g);
  auto m = modular_data(g, omega, opt.seed);
  auto checks = run_modular_checks(m);
  auto ring = fusion(m);

  Json result;
  result["rank"] = m.rank;
  result["unit"] = m.unit;
  result["k_theory_rank"] = k_theory_rank(g, omega);
  Json simples = Json::array();
  for (const auto& s : m.simples)
    simples.push_back({{"label", s.label},
                       {"class_representative", s.class_rep},
                       {"degree", s.degree},
                       {"quantum_dimension", s.quantum_dim}});
  result["simples"] = simples;
  Json sj = Json::array();
  for (int i = 0; i < m.rank; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.rank; ++j)
      row.push_back({m.s[i][j].real_part().str(), m.s[i][j].imag_part().str()});
    sj.push_back(row);
  }
  result["S"] = sj;
  Json tj = Json::array();
  for (const auto& t : m.t) tj.push_back(t.str());
  result["T"] = tj;
  Json fus = Json::object();
  for (int a = 0; a < m.rank; ++a)
    for (int b = 0; b < m.rank; ++b) {
      Json cell = Json::object();
      for (int c = 0; c < m.rank; ++c)
        if (ring.n[a][b][c] != 0) cell[std::to_string(c)] = ring.n[a][b][c].str();
      fus[std::to_string(a) + "," + std::to_string(b)] = cell;
    }
  result["fusion"] = fus;
  result["global_dimension"] = m.global_dimension.str();
  result["checks"] = {{"S_symmetric", checks.symmetric},
                      {"S_unitary", checks.unitary},
                      {"ST_cubed_proportional_to_S_squared", checks.st_cubed_proportional},
                      {"S_squared_permutation", checks.s_squared_permutation},
                      {"lambda", checks.lambda.str()}};

  std::vector<std::vector<std::string>> rows{
      {"simple", "label", "degree", "quantum_dimension", "T"}};
  for (int i = 0; i < m.rank; ++i)
    rows.push_back({std::to_string(i), m.simples[i].label,
                    std::to_string(m.simples[i].degree),
                    std::to_string(m.simples[i].quantum_dim), m.t[i].str()});
  emit(opt, "verlinde", result, rows);
}

void run_rs_verify(const Options& opt) {
  auto m = build_clifford(opt.dim);
  Covector k = opt.covector.empty() ? canonical_null(opt.dim)
                                    : parse_covector(opt.covector, opt.dim);
  auto rep = fiber_report(m, k);
  Json result;
  result["n"] = rep.n;
  result["dim_S"] = rep.dim_s;
  Json kj = Json::array();
  for (const auto& q : k) kj.push_back(rat_str(q));
  result["k"] = kj;
  result["norm_sq"] = rat_str(rep.norm_sq);
  result["null"] = rep.null_covector;
  result["rank_A"] = rep.rank_a;
  result["rank_B"] = rep.rank_b;
  result["dim_ker_B"] = rep.dim_ker_b;
  result["quotient_dim"] = rep.quotient_dim;
  if (rep.null_covector) {
    result["dim_S_prime"] = rep.dim_s_prime;
    result["dim_S_dprime"] = rep.dim_s_dprime;
    result["dim_V_prime"] = rep.dim_v_prime;
    result["dim_R_prime"] = rep.dim_r_prime;
    result["quotient_matches_r_prime"] = rep.quotient_matches_r_prime;
  } else {
    result["kernel_is_image"] = rep.kernel_is_image;
  }
  result["exact_fallback_used"] = rep.exact_fallback_used;
  std::vector<std::vector<std::string>> rows{
      {"n", "dim_S", "norm_sq", "rank_A", "rank_B", "dim_ker_B", "quotient_dim",
       "verdict"}};
  rows.push_back({std::to_string(rep.n), std::to_string(rep.dim_s),
                  rat_str(rep.norm_sq), std::to_string(rep.rank_a),
                  std::to_string(rep.rank_b), std::to_string(rep.dim_ker_b),
                  std::to_string(rep.quotient_dim),
                  (rep.null_covector ? rep.quotient_matches_r_prime : rep.kernel_is_image)
                      ? "pass"
                      : "fail"});
  emit(opt, "rs-verify", result, rows);
}

void run_rs_content(const Options& opt) {
  auto m = build_clifford(opt.dim);
  auto content = particle_content(m);
  DualType dual = opt.dual == "self"
                      ? DualType::kSelfDual
                      : opt.dual == "distinct" ? DualType::kDistinctDual
                                               : default_dual_type(opt.dim);
  auto coeff = rs_virtual_coefficient(opt.dim, dual);

  Json result;
  result["n"] = content.n;
  result["dim_S"] = m.dim_s;
  result["chiral"] = m.chiral;
  result["doubled"] = m.doubled;
  auto table = [](const std::vector<std::pair<std::string, int>>& rows) {
    Json j = Json::array();
    for (const auto& [name, dim] : rows) j.push_back({{"bundle", name}, {"dim", dim}});
    return j;
  };
  result["first_approach"] = table(content.first_approach);
  result["second_approach"] = table(content.second_approach);
  result["third_approach"] = table(content.third_approach);
  Json cj;
  cj["dual_type"] = dual == DualType::kSelfDual ? "self" : "distinct";
  cj["expression"] = coeff.expression;
  Json factors = Json::array();
  for (const auto& [name, exp] : coeff.pfaffian_factors)
    factors.push_back({{"factor", name}, {"exponent", exp}});
  cj["pfaffian_factors"] = factors;
  result["virtual_coefficient"] = cj;

  std::vector<std::vector<std::string>> rows{{"approach", "bundle", "dim"}};
  for (const auto& [name, dim] : content.first_approach)
    rows.push_back({"first", name, std::to_string(dim)});
  for (const auto& [name, dim] : content.second_approach)
    rows.push_back({"second", name, std::to_string(dim)});
  for (const auto& [name, dim] : content.third_approach)
    rows.push_back({"third", name, std::to_string(dim)});
  emit(opt, "rs-content", result, rows);
}

void run_anomaly(const Options& opt) {
  auto d = anomaly_pipeline(opt.dim);
  Json result;
  result["n"] = d.n;
  result["n_mod_8"] = d.n_mod_8;
  result["bundle_reality"] = d.bundle_reality;
  result["source_theory"] = d.source_theory;
  result["pushforward_degree"] = d.pushforward_degree;
  result["target_group"] = d.target_group;
  result["uses_difference_class"] = d.uses_difference_class;
  if (!d.note.empty()) result["note"] = d.note;
  std::vector<std::vector<std::string>> rows{
      {"n", "n_mod_8", "reality", "source", "degree", "target", "difference_class"}};
  rows.push_back({std::to_string(d.n), std::to_string(d.n_mod_8), d.bundle_reality,
                  d.source_theory, std::to_string(d.pushforward_degree), d.target_group,
                  d.uses_difference_class ? "true" : "false"});
  emit(opt, "anomaly", result, rows);
}

void run_corpus(const Options& opt) {
  std::vector<std::pair<std::string, GroupPtr>> corpus = {
      {"z1", cyclic_group(1)},   {"z2", cyclic_group(2)},
      {"z3", cyclic_group(3)},   {"z4", cyclic_group(4)},
      {"z5", cyclic_group(5)},   {"z6", cyclic_group(6)},
      {"v4", klein_four_group()}, {"s3", symmetric_group(3)},
      {"d4", dihedral_group(4)}, {"d5", dihedral_group(5)},
      {"d6", dihedral_group(6)}, {"q8", quaternion_group()},
      {"a4", alternating_group(4)}, {"s4", symmetric_group(4)}};
  Json written = Json::array();
  for (const auto& [name, g] : corpus) {
    Json j = group_to_json(*g);
    std::string path = opt.corpus_dir + "/" + name + ".json";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << j.dump(2) << "\n";
    written.push_back(path);
  }
  Json result;
  result["written"] = written;
  emit(opt, "corpus", result, {{"written"}, {std::to_string(corpus.size())}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite TQFT engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  if (const char* env = std::getenv("FTQFT_MAX_WORK"))
    opt.max_work = std::strtoull(env, nullptr, 10);

  app.add_option("--format", opt.format, "output format (json|csv)");
  app.add_option("--seed", opt.seed, "seed for randomized internals");
  app.add_option("--max-work", opt.max_work, "enumeration work bound");
  app.add_option("--out", opt.out, "write the report to a file");

  auto add_group_opt = [&](CLI::App* cmd) {
    cmd->add_option("--group", opt.group_file, "group JSON file");
  };
  auto add_space_opts = [&](CLI::App* cmd) {
    cmd->add_option("--space", opt.space, "G-set: point|regular|conjugation|cosets");
    cmd->add_option("--subgroup", opt.subgroup, "generators for --space cosets");
    cmd->add_option("--gset", opt.gset_file, "G-set JSON file (overrides --space)");
  };

  auto* group = app.add_subcommand("group", "group utilities");
  group->fallthrough();
  auto* group_info = group->add_subcommand("info", "classes and centralizers");
  group_info->fallthrough();
  add_group_opt(group_info);

  auto* chartable_cmd = app.add_subcommand("chartable", "exact character table");
  chartable_cmd->fallthrough();
  add_group_opt(chartable_cmd);

  auto* cocycle = app.add_subcommand("cocycle", "cochain utilities");
  cocycle->fallthrough();
  auto* cocycle_check = cocycle->add_subcommand("check", "closedness with witness");
  cocycle_check->fallthrough();
  cocycle_check->add_option("--cocycle", opt.cocycle_file, "cocycle JSON file");

  auto* tqft = app.add_subcommand("tqft", "partition functions");
  tqft->fallthrough();
  auto* tqft_z = tqft->add_subcommand("z", "Z of S^1 (dim 1) or a surface (dim 2)");
  tqft_z->fallthrough();
  add_group_opt(tqft_z);
  add_space_opts(tqft_z);
  tqft_z->add_option("--dim", opt.dim, "theory dimension (1 or 2)")->required();
  tqft_z->add_option("--genus", opt.genus, "surface genus");
  tqft_z->add_option("--cocycle", opt.cocycle_file, "twist cocycle (S = pt)");
  tqft_z->add_option("--route", opt.route, "algebra|direct|both");

  auto* frobenius_cmd = app.add_subcommand("frobenius", "E(S^1) Frobenius algebra");
  frobenius_cmd->fallthrough();
  add_group_opt(frobenius_cmd);
  add_space_opts(frobenius_cmd);
  frobenius_cmd->add_option("--cocycle", opt.cocycle_file, "twist cocycle (S = pt)");

  auto* verlinde_cmd = app.add_subcommand("verlinde", "twisted double modular data");
  verlinde_cmd->fallthrough();
  add_group_opt(verlinde_cmd);
  verlinde_cmd->add_option("--omega", opt.omega_file, "3-cocycle file");

  auto* rs_verify = app.add_subcommand("rs-verify", "fiber report at a covector");
  rs_verify->fallthrough();
  rs_verify->add_option("--dim", opt.dim, "spacetime dimension")->required();
  rs_verify->add_option("--k", opt.covector, "covector components, e.g. 1,1,0,0");

  auto* rs_content = app.add_subcommand("rs-content", "particle content table");
  rs_content->fallthrough();
  rs_content->add_option("--dim", opt.dim, "spacetime dimension")->required();
  rs_content->add_option("--dual", opt.dual, "self|distinct|auto");

  auto* anomaly_cmd = app.add_subcommand("anomaly", "K-theory anomaly descriptor");
  anomaly_cmd->fallthrough();
  anomaly_cmd->add_option("--dim", opt.dim, "fiber dimension n")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "write the bundled group corpus");
  corpus_cmd->fallthrough();
  corpus_cmd->add_option("--dir", opt.corpus_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (group_info->parsed()) run_group_info(opt);
    else if (chartable_cmd->parsed()) run_chartable(opt);
    else if (cocycle_check->parsed()) run_cocycle_check(opt);
    else if (tqft_z->parsed()) run_tqft_z(opt);
    else if (frobenius_cmd->parsed()) run_frobenius(opt);
    else if (verlinde_cmd->parsed()) run_verlinde(opt);
    else if (rs_verify->parsed()) run_rs_verify(opt);
    else if (rs_content->parsed()) run_rs_content(opt);
    else if (anomaly_cmd->parsed()) run_anomaly(opt);
    else if (corpus_cmd->parsed()) run_corpus(opt);
    else {
      std::cerr << "no subcommand\n";
      return 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const SizeExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const GroupTooLarge& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
