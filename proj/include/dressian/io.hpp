#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "dressian/fan.hpp"
#include "dressian/polytope.hpp"
#include "dressian/subdivision.hpp"
#include "dressian/tropical.hpp"

// JSON readers and writers. Integers are written as bare numbers, other
// rationals as "p/q" strings; readers accept either. All output is in the
// library's canonical order, so equal values serialize byte-identically.

namespace dressian::io {

using nlohmann::json;

json read_file(const std::filesystem::path& path);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(Subset s);
Subset subset_from_json(const json& j);

/// {"n", "rank", "bases"}.
json to_json(const Matroid& m);
/// Accepts the object form or a catalog name string.
Matroid matroid_from_json(const json& j);

/// {"matroid", "values": [[basis, value], ...]}.
json to_json(const WeightVector& w);
/// "values" may be [basis, value] pairs (every basis exactly once) or a plain
/// list in basis order. A missing "matroid" falls back to `fallback`.
WeightVector weights_from_json(const json& j, const Matroid* fallback = nullptr);

json to_json(const std::vector<OctahedronFace>& faces);
json to_json(const Relation& r);
json to_json(const Hyperplane& h);
json to_json(const Classification& c);
/// {"cells", "matroidal", "classification"}; classification only when matroidal.
json to_json(const Subdivision& s);
/// Relation key such as "s:1|t:2345".
std::string relation_key(const Relation& r);
json to_json(const Fan& f);
json to_json(const IndecomposabilityResult& r);

/// {"leaves": n, "nodes": k, "edges": [[u, v, length], ...]}, nodes 1-based
/// with 1..n the leaves.
PhyloTree tree_from_json(const json& j);
/// {"entries": [[value or null, ...], ...]} (null is +infinity); a bare array also works.
TropicalMatrix matrix_from_json(const json& j);

}  // namespace dressian::io
