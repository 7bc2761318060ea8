#pragma once

#include <string>

#include "json.hpp"

#include "ftqft/cochain.hpp"
#include "ftqft/cyclotomic.hpp"
#include "ftqft/fields.hpp"
#include "ftqft/group.hpp"

namespace ftqft {

using Json = nlohmann::json;

// Group file: {"order": n, "table": [[...]], "names": [...]} or the
// permutation format {"degree": m, "generators": [[images...], ...]}.
GroupPtr group_from_json(const Json& j);
GroupPtr load_group_file(const std::string& path);

// GSet file: {"group": <path or inline group>, "action": [[...]]} with one
// row per group element.
GSetPtr gset_from_json(const Json& j, GroupPtr group_override = nullptr);
GSetPtr load_gset_file(const std::string& path, GroupPtr group_override = nullptr);

// Cocycle file: {"group": <path or inline group>, "degree": k,
// "modulus": m, "values": {"g1,g2,...,gk": integer}}, value = integer/m.
Cochain cochain_from_json(const Json& j, GroupPtr group_override = nullptr);
Cochain load_cochain_file(const std::string& path, GroupPtr group_override = nullptr);

// Presentation file: {"generators": k, "relators": [[signed indices]]}.
Presentation presentation_from_json(const Json& j);
Presentation load_presentation_file(const std::string& path);

Json group_to_json(const FiniteGroup& g);
Json cochain_to_json(const Cochain& c, long modulus);

// Exact scalar serialization; never floats.
Json cyclotomic_to_json(const Cyclotomic& z);
Json rational_to_json(const Rat& q);

// FNV-1a 64-bit content hash, hex string; used to stamp inputs in reports.
std::string fnv1a64_file(const std::string& path);
std::string fnv1a64(const std::string& data);

std::string read_file(const std::string& path);

}  // namespace ftqft
