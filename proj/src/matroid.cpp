#include "dressian/matroid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace dressian {

// ---------------------------------------------------------------------------
// Subset

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) bits_ |= Bits{1} << (e - 1);
}

Subset Subset::from_elements(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) s = s.with(e);
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Subset::to_string() const {
  const auto elems = elements();
  const bool compact = std::all_of(elems.begin(), elems.end(), [](int e) { return e < 10; });
  std::ostringstream os;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << elems[i];
  }
  return elems.empty() ? std::string("{}") : os.str();
}

bool lex_less(Subset a, Subset b) {
  const Subset::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Subset::Bits low = diff & (~diff + 1);
  const Subset::Bits above = ~((low << 1) - 1);
  // At the first differing position the list holding `low` is smaller, unless
  // the other list has already run out.
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

std::vector<Subset> k_subsets(Subset ground, int k) {
  std::vector<Subset> out;
  const auto elems = ground.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Subset s;
    for (int i : idx) s = s.with(elems[static_cast<std::size_t>(i)]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matroid

namespace {

void canonicalize(std::vector<Subset>& bases) {
  std::sort(bases.begin(), bases.end(), lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

}  // namespace

Matroid::Matroid(int n, int rank, std::vector<Subset> bases) : n_(n), rank_(rank), bases_(std::move(bases)) {
  canonicalize(bases_);
  index_.reserve(bases_.size());
  for (std::size_t i = 0; i < bases_.size(); ++i) index_.emplace(bases_[i].bits(), i);
}

Matroid Matroid::trusted(int n, int rank, std::vector<Subset> bases) { return Matroid(n, rank, std::move(bases)); }

std::optional<std::size_t> Matroid::index_of(Subset s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NotAMatroid::NotAMatroid(Subset b_, Subset b_prime_, int e_)
    : Error(ErrorCode::NotAMatroid, "exchange fails for B=" + b_.to_string() + ", B'=" + b_prime_.to_string() +
                                        ", e=" + std::to_string(e_)),
      b(b_),
      b_prime(b_prime_),
      e(e_) {}

std::optional<ExchangeViolation> find_exchange_violation(const std::vector<Subset>& bases) {
  std::unordered_map<Subset::Bits, bool> present;
  present.reserve(bases.size());
  for (auto b : bases) present.emplace(b.bits(), true);
  for (auto b : bases) {
    for (auto bp : bases) {
      const Subset out = b - bp;
      const Subset in = bp - b;
      for (int e : out.elements()) {
        bool ok = false;
        for (int f : in.elements()) {
          if (present.contains(b.without(e).with(f).bits())) {
            ok = true;
            break;
          }
        }
        if (!ok) return ExchangeViolation{b, bp, e};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(int n, int rank, std::vector<Subset> bases) {
  if (n < 0 || n > Subset::kMaxElements || rank < 0 || rank > n) {
    throw Error(ErrorCode::InvalidParameters, "need 0 <= rank <= n <= 63");
  }
  if (bases.empty()) throw Error(ErrorCode::EmptyBases, "a matroid needs at least one basis");
  const Subset ground = Subset::range(n);
  for (auto b : bases) {
    if (b.size() != rank || !ground.contains(b)) {
      throw Error(ErrorCode::WrongCardinality, "basis " + b.to_string() + " is not a " + std::to_string(rank) +
                                                   "-subset of {1.." + std::to_string(n) + "}");
    }
  }
  canonicalize(bases);
  if (auto v = find_exchange_violation(bases)) throw NotAMatroid(v->b, v->b_prime, v->e);
  return Matroid(n, rank, std::move(bases));
}

// ---------------------------------------------------------------------------
// Constructions

Matroid uniform(int rank, int n) {
  if (n < 1 || n > Subset::kMaxElements || rank < 0 || rank > n) {
    throw Error(ErrorCode::InvalidParameters, "uniform matroid needs 0 <= d <= n, n >= 1");
  }
  return Matroid::trusted(n, rank, k_subsets(Subset::range(n), rank));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Matroid graphic(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw Error(ErrorCode::NoEdges, "graph has no edges");
  if (vertex_count < 1 || static_cast<int>(edges.size()) > Subset::kMaxElements) {
    throw Error(ErrorCode::InvalidParameters, "bad vertex or edge count");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidParameters, "edge endpoint out of range");
    }
  }
  DisjointSets all(vertex_count);
  int rank = 0;
  for (auto [u, v] : edges) rank += all.unite(u, v) ? 1 : 0;
  const int n = static_cast<int>(edges.size());
  std::vector<Subset> bases;
  for (Subset s : k_subsets(Subset::range(n), rank)) {
    DisjointSets forest(vertex_count);
    bool acyclic = true;
    for (int e : s.elements()) {
      const auto& [u, v] = edges[static_cast<std::size_t>(e - 1)];
      if (!forest.unite(u, v)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) bases.push_back(s);
  }
  return Matroid::trusted(n, rank, std::move(bases));
}

namespace {

Matroid fano() {
  // Element k is the nonzero vector of GF(2)^3 with binary digits of k.
  std::vector<Subset> bases;
  for (Subset s : k_subsets(Subset::range(7), 3)) {
    const auto e = s.elements();
    if ((e[0] ^ e[1] ^ e[2]) != 0) bases.push_back(s);
  }
  return Matroid::trusted(7, 3, std::move(bases));
}

Matroid ternary_plane() {
  // Points of PG(2,3): nonzero vectors of GF(3)^3 whose first nonzero entry is 1.
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      for (int z = 0; z < 3; ++z) {
        const std::array<int, 3> p{x, y, z};
        const auto lead = std::find_if(p.begin(), p.end(), [](int c) { return c != 0; });
        if (lead != p.end() && *lead == 1) points.push_back(p);
      }
    }
  }
  std::vector<Subset> bases;
  for (Subset s : k_subsets(Subset::range(13), 3)) {
    const auto e = s.elements();
    const auto& a = points[static_cast<std::size_t>(e[0] - 1)];
    const auto& b = points[static_cast<std::size_t>(e[1] - 1)];
    const auto& c = points[static_cast<std::size_t>(e[2] - 1)];
    const int det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);
    if (((det % 3) + 3) % 3 != 0) bases.push_back(s);
  }
  return Matroid::trusted(13, 3, std::move(bases));
}

std::vector<Subset> parse_compact(std::initializer_list<const char*> words) {
  std::vector<Subset> out;
  for (const char* w : words) {
    Subset s;
    for (const char* c = w; *c != '\0'; ++c) s = s.with(*c - '0');
    out.push_back(s);
  }
  return out;
}

}  // namespace

Matroid named(std::string_view name) {
  if (name == "fano") return fano();
  if (name == "pg23") return ternary_plane();
  if (name == "example_16basis") {
    const auto excluded = parse_compact({"123", "145", "356"});
    std::vector<Subset> bases;
    for (Subset s : k_subsets(Subset::range(6), 3)) {
      if (std::find(excluded.begin(), excluded.end(), s) == excluded.end()) bases.push_back(s);
    }
    return Matroid::from_bases(6, 3, std::move(bases));
  }
  if (name == "example_14basis") {
    return Matroid::from_bases(6, 3,
                               parse_compact({"135", "136", "145", "146", "156", "235", "236", "245", "246", "256",
                                              "345", "346", "356", "456"}));
  }
  if (name == "square_pyramid") return Matroid::from_bases(4, 2, parse_compact({"12", "13", "14", "23", "24"}));
  throw Error(ErrorCode::UnknownName, "no catalog matroid named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"fano", "pg23", "example_16basis", "example_14basis", "square_pyramid"};
}

// ---------------------------------------------------------------------------
// Rank, closure, flats

int rank_of(const Matroid& m, Subset a) {
  int best = 0;
  for (auto b : m.bases()) {
    best = std::max(best, (b & a).size());
    if (best == a.size()) break;
  }
  return best;
}

Subset closure_of(const Matroid& m, Subset a) {
  const int r = rank_of(m, a);
  Subset out = a;
  for (int e : (m.ground() - a).elements()) {
    if (rank_of(m, a.with(e)) == r) out = out.with(e);
  }
  return out;
}

std::vector<std::vector<Subset>> flats(const Matroid& m) {
  std::vector<std::vector<Subset>> by_rank(static_cast<std::size_t>(m.rank()) + 1);
  by_rank[0].push_back(closure_of(m, Subset{}));
  for (int r = 0; r < m.rank(); ++r) {
    std::set<Subset::Bits> seen;
    for (Subset f : by_rank[static_cast<std::size_t>(r)]) {
      for (int e : (m.ground() - f).elements()) {
        const Subset g = closure_of(m, f.with(e));
        if (seen.insert(g.bits()).second) by_rank[static_cast<std::size_t>(r) + 1].push_back(g);
      }
    }
    std::sort(by_rank[static_cast<std::size_t>(r) + 1].begin(), by_rank[static_cast<std::size_t>(r) + 1].end(),
              lex_less);
  }
  return by_rank;
}

// ---------------------------------------------------------------------------
// Minors, duality, sums

namespace {

// Packs the elements of `keep` into positions 1..|keep| preserving order.
Subset compress(Subset s, Subset keep) {
  Subset out;
  int pos = 1;
  for (int e : keep.elements()) {
    if (s.contains(e)) out = out.with(pos);
    ++pos;
  }
  return out;
}

}  // namespace

Matroid minor(const Matroid& m, Subset contract, Subset del) {
  const Subset ground = m.ground();
  if (!ground.contains(contract) || !ground.contains(del)) {
    throw Error(ErrorCode::InvalidParameters, "minor sets must lie in the ground set");
  }
  if (!(contract & del).empty()) throw Error(ErrorCode::InvalidParameters, "contract and delete sets overlap");
  const Subset keep = ground - contract - del;
  if (keep.empty()) throw Error(ErrorCode::EverythingRemoved, "minor has an empty ground set");

  Subset independent;
  for (int e : contract.elements()) {
    if (rank_of(m, independent.with(e)) > independent.size()) independent = independent.with(e);
  }
  const Subset removed = del | (contract - independent);

  int fewest = Subset::kMaxElements + 1;
  for (auto b : m.bases()) {
    if (b.contains(independent)) fewest = std::min(fewest, (b & removed).size());
  }
  std::vector<Subset> bases;
  for (auto b : m.bases()) {
    if (b.contains(independent) && (b & removed).size() == fewest) bases.push_back(compress(b - independent - removed, keep));
  }
  return Matroid::trusted(keep.size(), m.rank() - independent.size() - fewest, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.basis_count());
  for (auto b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::trusted(m.size(), m.size() - m.rank(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > Subset::kMaxElements) throw Error(ErrorCode::InvalidParameters, "ground set too large");
  std::vector<Subset> bases;
  bases.reserve(a.basis_count() * b.basis_count());
  for (auto x : a.bases()) {
    for (auto y : b.bases()) bases.push_back(x | Subset(y.bits() << a.size()));
  }
  return Matroid::trusted(a.size() + b.size(), a.rank() + b.rank(), std::move(bases));
}

Subset loops(const Matroid& m) {
  Subset used;
  for (auto b : m.bases()) used = used | b;
  return m.ground() - used;
}

Subset coloops(const Matroid& m) {
  Subset common = m.ground();
  for (auto b : m.bases()) common = common & b;
  return common;
}

std::vector<Subset> connected_components(const Matroid& m) {
  // e ~ f whenever some basis exchanges e for f; the transitive closure is the
  // finest partition on which every block meets all bases equally often.
  DisjointSets ds(m.size());
  for (auto b : m.bases()) {
    const Subset outside = m.ground() - b;
    for (int e : b.elements()) {
      for (int f : outside.elements()) {
        if (m.is_basis(b.without(e).with(f))) ds.unite(e - 1, f - 1);
      }
    }
  }
  std::vector<Subset> blocks;
  std::vector<int> block_of_root(static_cast<std::size_t>(m.size()), -1);
  for (int e = 1; e <= m.size(); ++e) {
    const int root = ds.find(e - 1);
    int& slot = block_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot)] = blocks[static_cast<std::size_t>(slot)].with(e);
  }
  return blocks;
}

ParallelClasses parallel_classes(const Matroid& m) {
  ParallelClasses out;
  out.loops = loops(m);
  Subset assigned = out.loops;
  for (int e = 1; e <= m.size(); ++e) {
    if (assigned.contains(e)) continue;
    Subset cls = Subset::singleton(e);
    for (int f = e + 1; f <= m.size(); ++f) {
      if (!assigned.contains(f) && rank_of(m, Subset{e, f}) == 1) cls = cls.with(f);
    }
    assigned = assigned | cls;
    out.classes.push_back(cls);
  }
  return out;
}

BinaryCheck is_binary(const Matroid& m) {
  BinaryCheck out;
  const int d = m.rank();
  if (d < 2 || m.size() < d + 2) return out;
  const Matroid target = uniform(2, 4);
  for (Subset quad : k_subsets(m.ground(), 4)) {
    for (Subset contract : k_subsets(m.ground() - quad, d - 2)) {
      if (rank_of(m, contract) != d - 2) continue;
      const Subset del = m.ground() - quad - contract;
      if (minor(m, contract, del) == target) {
        out.binary = false;
        out.witness = MinorWitness{contract, del};
        return out;
      }
    }
  }
  return out;
}

}  // namespace dressian
