#include "dressian/io.hpp"

#include <fstream>
#include <limits>

namespace dressian::io {

namespace {

Error parse_error(const std::string& why) { return Error(ErrorCode::ParseError, why); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

json to_json(const Rational& q) {
  const Integer& num = numerator(q);
  if (denominator(q) == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max()) {
    return num.convert_to<std::int64_t>();
  }
  return format_rational(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw parse_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected a list of elements, got " + j.dump());
  std::vector<int> elems;
  for (const auto& e : j) {
    const int v = int_from_json(e, "element");
    if (v < 1 || v > Subset::kMaxElements) throw parse_error("element " + std::to_string(v) + " out of range");
    elems.push_back(v);
  }
  const Subset s = Subset::from_elements(elems);
  if (s.size() != static_cast<int>(elems.size())) throw parse_error("repeated element in " + j.dump());
  return s;
}

json to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(to_json(b));
  return {{"n", m.size()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  if (j.is_string()) return named(j.get<std::string>());
  const int n = int_from_json(field(j, "n"), "n");
  const int rank = int_from_json(field(j, "rank"), "rank");
  const json& list = field(j, "bases");
  if (!list.is_array()) throw parse_error("\"bases\" must be a list");
  std::vector<Subset> bases;
  for (const auto& b : list) {
    const Subset s = subset_from_json(b);
    if (!s.empty() && s.max_element() > n) throw parse_error("basis " + b.dump() + " leaves the ground set");
    bases.push_back(s);
  }
  return Matroid::from_bases(n, rank, std::move(bases));
}

json to_json(const WeightVector& w) {
  json values = json::array();
  for (std::size_t i = 0; i < w.matroid().basis_count(); ++i) {
    values.push_back(json::array({to_json(w.matroid().bases()[i]), to_json(w[i])}));
  }
  return {{"matroid", to_json(w.matroid())}, {"values", values}};
}

WeightVector weights_from_json(const json& j, const Matroid* fallback) {
  std::optional<Matroid> own;
  if (j.is_object() && j.contains("matroid")) own = matroid_from_json(j.at("matroid"));
  if (!own && !fallback) throw parse_error("weights need a matroid");
  const Matroid& m = own ? *own : *fallback;
  const json& list = field(j, "values");
  if (!list.is_array()) throw parse_error("\"values\" must be a list");
  const auto count = static_cast<Eigen::Index>(m.basis_count());
  VectorXq v(count);
  const bool pairs = !list.empty() && list.front().is_array();
  if (!pairs) {
    if (static_cast<Eigen::Index>(list.size()) != count) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(count) + " values, got " +
                                                 std::to_string(list.size()));
    }
    for (Eigen::Index i = 0; i < count; ++i) v(i) = rational_from_json(list.at(static_cast<std::size_t>(i)));
    return WeightVector(m, std::move(v));
  }
  std::vector<bool> seen(m.basis_count(), false);
  for (const auto& entry : list) {
    if (!entry.is_array() || entry.size() != 2) throw parse_error("value entries are [basis, value] pairs");
    const Subset b = subset_from_json(entry.at(0));
    const auto i = m.index_of(b);
    if (!i) throw Error(ErrorCode::NotABasis, b.to_string() + " is not a basis");
    if (seen[*i]) throw Error(ErrorCode::MalformedInput, "basis " + b.to_string() + " listed twice");
    seen[*i] = true;
    v(static_cast<Eigen::Index>(*i)) = rational_from_json(entry.at(1));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::MalformedInput, "no value for basis " + m.bases()[i].to_string());
  }
  return WeightVector(m, std::move(v));
}

json to_json(const std::vector<OctahedronFace>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back({{"s", to_json(f.s)}, {"t", to_json(f.t)}});
  return out;
}

namespace {

json terms_json(TermSet t) {
  json out = json::array();
  for (int k = 1; k <= 3; ++k) {
    if (t.contains(k)) out.push_back(k);
  }
  return out;
}

}  // namespace

json to_json(const Relation& r) { return {{"s", to_json(r.s)}, {"quad", r.quad}, {"finite_terms", terms_json(r.finite_terms())}}; }

json to_json(const Hyperplane& h) {
  json normal = json::array();
  for (const auto& c : h.normal) normal.push_back(to_json(Rational(c)));
  return {{"normal", normal}, {"rhs", to_json(Rational(h.rhs))}, {"text", to_string(h)}};
}

json to_json(const Classification& c) {
  json out{{"kind", to_string(c.kind)}, {"cell_count", c.cell_count}};
  if (c.hyperplane) out["hyperplane"] = to_json(*c.hyperplane);
  return out;
}

json to_json(const Subdivision& s) {
  json cells = json::array();
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    json cell = json::array();
    for (Subset b : s.cell_bases(i)) cell.push_back(to_json(b));
    cells.push_back(cell);
  }
  const auto check = is_matroidal(s);
  json out{{"cells", cells}, {"matroidal", check.matroidal}};
  if (check.matroidal) {
    out["classification"] = to_json(classify_subdivision(s));
  } else {
    out["offending_cell"] = *check.offending_cell;
  }
  return out;
}

std::string relation_key(const Relation& r) { return "s:" + r.s.to_string() + "|t:" + r.quad_set().to_string(); }

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.maximal_cones) {
    json states = json::object();
    for (std::size_t i = 0; i < f.relations.size(); ++i) states[relation_key(f.relations[i])] = to_string(c.states[i]);
    json witness = json::array();
    for (Eigen::Index i = 0; i < c.witness.size(); ++i) witness.push_back(to_json(c.witness(i)));
    cones.push_back({{"dim", c.dim}, {"states", states}, {"witness", witness}});
  }
  return {{"lineality_dim", f.lineality_dim},
          {"maximal_cones", cones},
          {"is_linear_space", f.is_linear_space},
          {"complete", f.complete},
          {"nodes", f.nodes}};
}

json to_json(const IndecomposabilityResult& r) {
  json out{{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"nodes", r.nodes}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.subdivision) out["subdivision"] = to_json(*r.subdivision);
  return out;
}

PhyloTree tree_from_json(const json& j) {
  PhyloTree t;
  t.leaf_count = int_from_json(field(j, "leaves"), "leaves");
  t.node_count = int_from_json(field(j, "nodes"), "nodes");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw parse_error("\"edges\" must be a list");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw parse_error("edges are [u, v, length] triples");
    t.edges.push_back({int_from_json(e.at(0), "node") - 1, int_from_json(e.at(1), "node") - 1, rational_from_json(e.at(2))});
  }
  return t;
}

TropicalMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? field(j, "entries") : j;
  if (!rows.is_array() || rows.empty() || !rows.front().is_array()) throw parse_error("matrix must be a list of rows");
  const auto d = static_cast<int>(rows.size());
  const auto n = static_cast<int>(rows.front().size());
  TropicalMatrix a(d, n);
  for (int i = 0; i < d; ++i) {
    const json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw parse_error("matrix rows differ in length");
    for (int k = 0; k < n; ++k) {
      const json& e = row.at(static_cast<std::size_t>(k));
      if (e.is_null()) {
        a(i, k) = std::nullopt;
      } else {
        a(i, k) = rational_from_json(e);
      }
    }
  }
  return a;
}

}  // namespace dressian::io
