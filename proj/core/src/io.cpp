#include "ftqft/io.hpp"

#include <fstream>
#include <sstream>

namespace ftqft {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupPtr group_from_json(const Json& j) {
  if (j.contains("table")) {
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
      throw ParseError("group file: order does not match the table");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(names));
  }
  if (j.contains("generators")) {
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<Permutation>>();
    return group_from_permutations(gens, degree).group;
  }
  throw ParseError("group file: expected a \"table\" or \"generators\" field");
}

GroupPtr load_group_file(const std::string& path) {
  Json j = Json::parse(read_file(path));
  return group_from_json(j);
}

GSetPtr gset_from_json(const Json& j, GroupPtr group_override) {
  GroupPtr g = group_override;
  if (!g) {
    if (!j.contains("group")) throw ParseError("gset file: missing \"group\"");
    const Json& gj = j.at("group");
    g = gj.is_string() ? load_group_file(gj.get<std::string>()) : group_from_json(gj);
  }
  auto action = j.at("action").get<std::vector<std::vector<int>>>();
  return GSet::make(std::move(g), std::move(action));
}

GSetPtr load_gset_file(const std::string& path, GroupPtr group_override) {
  Json j = Json::parse(read_file(path));
  return gset_from_json(j, std::move(group_override));
}

Cochain cochain_from_json(const Json& j, GroupPtr group_override) {
  GroupPtr g = group_override;
  if (!g) {
    if (!j.contains("group"))
      throw ParseError("cocycle file: missing \"group\"");
    const Json& gj = j.at("group");
    g = gj.is_string() ? load_group_file(gj.get<std::string>()) : group_from_json(gj);
  }
  int degree = j.at("degree").get<int>();
  long modulus = j.at("modulus").get<long>();
  if (modulus < 1) throw ParseError("cocycle file: modulus must be positive");
  Cochain c(g, degree);
  if (j.contains("values")) {
    for (auto& [key, val] : j.at("values").items()) {
      std::vector<int> tuple;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        tuple.push_back(std::stoi(part));
      }
      if (static_cast<int>(tuple.size()) != degree)
        throw ParseError("cocycle file: key arity mismatch: " + key);
      for (int x : tuple)
        if (x < 0 || x >= g->order())
          throw ParseError("cocycle file: element out of range in key " + key);
      c.set(tuple, Rat(val.get<long>(), modulus));
    }
  }
  return c;
}

Cochain load_cochain_file(const std::string& path, GroupPtr group_override) {
  Json j = Json::parse(read_file(path));
  return cochain_from_json(j, std::move(group_override));
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = j.at("generators").get<int>();
  if (j.contains("relators"))
    p.relators = j.at("relators").get<std::vector<std::vector<int>>>();
  for (const auto& rel : p.relators)
    for (int letter : rel)
      if (letter == 0 || std::abs(letter) > p.generators)
        throw ParseError("presentation file: relator letter out of range");
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  Json j = Json::parse(read_file(path));
  return presentation_from_json(j);
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
  j["table"] = table;
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

Json cochain_to_json(const Cochain& c, long modulus) {
  Json j;
  j["degree"] = c.degree();
  j["modulus"] = modulus;
  Json values = Json::object();
  for (const auto& [tuple, v] : c.values()) {
    Rat scaled = v * modulus;
    if (denominator(scaled) != 1)
      throw Error("cochain_to_json: value not representable over the modulus");
    std::string key;
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(tuple[i]);
    }
    values[key] = static_cast<long>(numerator(scaled));
  }
  j["values"] = values;
  return j;
}

Json cyclotomic_to_json(const Cyclotomic& z) {
  Json j;
  j["str"] = z.str();
  j["conductor"] = z.conductor();
  std::vector<std::string> coeffs;
  for (const auto& c : z.coeffs()) coeffs.push_back(rat_str(c));
  j["coeffs"] = coeffs;
  if (z.is_rational()) {
    j["numerator"] = numerator(z.as_rational()).str();
    j["denominator"] = denominator(z.as_rational()).str();
  }
  return j;
}

Json rational_to_json(const Rat& q) {
  Json j;
  j["numerator"] = numerator(q).str();
  j["denominator"] = denominator(q).str();
  j["str"] = rat_str(q);
  return j;
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fnv1a64_file(const std::string& path) { return fnv1a64(read_file(path)); }

}  // namespace ftqft
