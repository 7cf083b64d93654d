#include "dressian/tropical.hpp"

#include <algorithm>
#include <limits>

#include "dressian/linalg.hpp"

namespace dressian {

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::shared_ptr<const Matroid> matroid, VectorXq values)
    : matroid_(std::move(matroid)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != matroid_->basis_count()) {
    throw Error(ErrorCode::MalformedInput, "weight vector needs exactly one value per basis");
  }
}

WeightVector::WeightVector(const Matroid& matroid, VectorXq values)
    : WeightVector(std::make_shared<const Matroid>(matroid), std::move(values)) {}

WeightVector WeightVector::zero(const Matroid& matroid) {
  return WeightVector(matroid, VectorXq::Zero(static_cast<Eigen::Index>(matroid.basis_count())));
}

const Rational& WeightVector::at(Subset basis) const {
  auto i = matroid_->index_of(basis);
  if (!i) throw Error(ErrorCode::NotABasis, basis.to_string() + " is not a basis");
  return values_(static_cast<Eigen::Index>(*i));
}

// ---------------------------------------------------------------------------
// Relations

TermSet Relation::finite_terms() const {
  TermSet out;
  for (int k = 0; k < 3; ++k) {
    if (factors[static_cast<std::size_t>(k)][0] && factors[static_cast<std::size_t>(k)][1]) out.insert(k + 1);
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::AllInfinite: return "AllInfinite";
    case Verdict::Violated: return "Violated";
    case Verdict::Satisfied: return "Satisfied";
  }
  return "?";
}

std::vector<Relation> relations(const Matroid& m, RelationFilter filter) {
  std::vector<Relation> out;
  const int d = m.rank();
  if (d < 2 || m.size() < d + 2) return out;
  for (Subset s : k_subsets(m.ground(), d - 2)) {
    for (Subset q : k_subsets(m.ground() - s, 4)) {
      Relation r;
      r.s = s;
      const auto e = q.elements();
      std::copy(e.begin(), e.end(), r.quad.begin());
      const auto [i, j, l, mm] = r.quad;
      const std::array<std::array<Subset, 2>, 3> terms{{{Subset{i, j}, Subset{l, mm}},
                                                        {Subset{i, l}, Subset{j, mm}},
                                                        {Subset{i, mm}, Subset{j, l}}}};
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t f = 0; f < 2; ++f) r.factors[k][f] = m.index_of(s | terms[k][f]);
      }
      const int finite = r.finite_terms().size();
      if (filter == RelationFilter::SkipAllInfinite && finite == 0) continue;
      if (filter == RelationFilter::ThreeFinite && finite != 3) continue;
      out.push_back(r);
    }
  }
  return out;
}

RelationStatus relation_status(const WeightVector& w, const Relation& r) {
  RelationStatus st;
  st.finite_terms = r.finite_terms();
  if (st.finite_terms.size() == 0) return st;
  std::optional<Rational> best;
  std::array<Rational, 3> sums;
  for (int k = 1; k <= 3; ++k) {
    if (!st.finite_terms.contains(k)) continue;
    const auto& f = r.factors[static_cast<std::size_t>(k - 1)];
    sums[static_cast<std::size_t>(k - 1)] = w[*f[0]] + w[*f[1]];
    if (!best || sums[static_cast<std::size_t>(k - 1)] < *best) best = sums[static_cast<std::size_t>(k - 1)];
  }
  for (int k = 1; k <= 3; ++k) {
    if (st.finite_terms.contains(k) && sums[static_cast<std::size_t>(k - 1)] == *best) st.minimizers.insert(k);
  }
  st.verdict = st.minimizers.size() >= 2 ? Verdict::Satisfied : Verdict::Violated;
  return st;
}

ValuationCheck is_valuated(const WeightVector& w) {
  ValuationCheck out;
  for (const auto& r : relations(w.matroid(), RelationFilter::SkipAllInfinite)) {
    auto st = relation_status(w, r);
    if (st.verdict == Verdict::Violated) {
      out.valuated = false;
      out.violated = r;
      out.status = st;
      return out;
    }
  }
  return out;
}

std::vector<TermSet> sign_vector(const WeightVector& w) {
  std::vector<TermSet> out;
  for (const auto& r : relations(w.matroid(), RelationFilter::SkipAllInfinite)) {
    const auto st = relation_status(w, r);
    if (st.verdict == Verdict::Violated) {
      throw Error(ErrorCode::NotValuated, "relation at s=" + r.s.to_string() + ", quad=" + r.quad_set().to_string() +
                                              " attains its minimum once");
    }
    out.push_back(st.minimizers);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lineality

MatrixXq lineality_basis(const Matroid& m) {
  const auto b = static_cast<Eigen::Index>(m.basis_count());
  MatrixXq l = MatrixXq::Zero(b, m.size());
  for (Eigen::Index r = 0; r < b; ++r) {
    for (int e : m.bases()[static_cast<std::size_t>(r)].elements()) l(r, e - 1) = 1;
  }
  return l;
}

namespace {

MatrixXq lineality_with_constants(const Matroid& m) {
  const MatrixXq l = lineality_basis(m);
  MatrixXq g(l.rows(), l.cols() + 1);
  g << l, VectorXq::Ones(l.rows());
  return g;
}

}  // namespace

int lineality_dim(const Matroid& m) {
  return static_cast<int>(linalg::rank<Rational>(lineality_with_constants(m))) - 1;
}

WeightVector normalize(const WeightVector& w) {
  const MatrixXq g = lineality_with_constants(w.matroid());
  const auto pivots = linalg::independent_rows<Rational>(g);
  MatrixXq gp(static_cast<Eigen::Index>(pivots.size()), g.cols());
  VectorXq wp(static_cast<Eigen::Index>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    gp.row(static_cast<Eigen::Index>(k)) = g.row(pivots[k]);
    wp(static_cast<Eigen::Index>(k)) = w.values()(pivots[k]);
  }
  const auto lambda = linalg::solve<Rational>(gp, wp);
  VectorXq out = w.values() - g * (*lambda);
  return WeightVector(w.matroid_ptr(), std::move(out));
}

bool equal_modulo_lineality(const WeightVector& a, const WeightVector& b) {
  return a.matroid() == b.matroid() && normalize(a).values() == normalize(b).values();
}

// ---------------------------------------------------------------------------
// Stiefel map

TropicalMatrix::TropicalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), Rational(0)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidParameters, "negative matrix dimension");
}

namespace {

// Tropical determinant of the columns `cols` by dynamic programming over the
// set of columns already matched to rows 0..k-1.
std::optional<Rational> tropical_minor(const TropicalMatrix& a, const std::vector<int>& cols) {
  const std::size_t d = cols.size();
  std::vector<std::optional<Rational>> best(std::size_t{1} << d);
  best[0] = Rational(0);
  for (std::size_t mask = 0; mask < best.size(); ++mask) {
    if (!best[mask]) continue;
    const int row = std::popcount(mask);
    if (row == static_cast<int>(d)) continue;
    for (std::size_t c = 0; c < d; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const auto& entry = a(row, cols[c] - 1);
      if (!entry) continue;
      Rational v = *best[mask] + *entry;
      auto& slot = best[mask | (std::size_t{1} << c)];
      if (!slot || v < *slot) slot = std::move(v);
    }
  }
  return best.back();
}

}  // namespace

WeightVector stiefel(const TropicalMatrix& a) {
  const int d = a.rows();
  const int n = a.cols();
  if (d > n || n < 1 || n > Subset::kMaxElements) throw Error(ErrorCode::InvalidParameters, "need d <= n");
  std::vector<Subset> support;
  std::vector<Rational> values;
  for (Subset b : k_subsets(Subset::range(n), d)) {
    if (auto v = tropical_minor(a, b.elements())) {
      support.push_back(b);
      values.push_back(*v);
    }
  }
  if (support.empty()) throw Error(ErrorCode::AllInfiniteColumnSet, "every tropical minor is infinite");
  if (auto v = find_exchange_violation(support)) {
    throw Error(ErrorCode::AllInfiniteColumnSet, "finite minors do not form a matroid (exchange fails for B=" +
                                                     v->b.to_string() + ", B'=" + v->b_prime.to_string() + ")");
  }
  auto m = std::make_shared<const Matroid>(Matroid::trusted(n, d, support));
  VectorXq w(static_cast<Eigen::Index>(support.size()));
  // k_subsets is already lexicographic, matching the matroid's basis order.
  for (std::size_t i = 0; i < values.size(); ++i) w(static_cast<Eigen::Index>(i)) = values[i];
  return WeightVector(m, std::move(w));
}

// ---------------------------------------------------------------------------
// Selected matroids, Bergman fan

Matroid selected_matroid(const WeightVector& w, const VectorXq& x) {
  const Matroid& m = w.matroid();
  if (x.size() != m.size()) throw Error(ErrorCode::MalformedInput, "point must have one coordinate per element");
  if (!is_valuated(w).valuated) throw Error(ErrorCode::NotValuated, "selected matroids need a valuated matroid");
  std::vector<Rational> score(m.basis_count());
  Rational best;
  for (std::size_t i = 0; i < m.basis_count(); ++i) {
    score[i] = w[i];
    for (int e : m.bases()[i].elements()) score[i] -= x(e - 1);
    if (i == 0 || score[i] < best) best = score[i];
  }
  std::vector<Subset> bases;
  for (std::size_t i = 0; i < m.basis_count(); ++i) {
    if (score[i] == best) bases.push_back(m.bases()[i]);
  }
  // A face of a matroid polytope; validated anyway since callers rely on it.
  return Matroid::from_bases(m.size(), m.rank(), std::move(bases));
}

std::vector<std::vector<Subset>> bergman_flag_cones(const Matroid& m) {
  if (!loops(m).empty()) throw Error(ErrorCode::HasLoops, "Bergman fan needs a loopless matroid");
  std::vector<Subset> proper;
  for (const auto& level : flats(m)) {
    for (Subset f : level) {
      if (!f.empty() && f != m.ground()) proper.push_back(f);
    }
  }
  std::vector<std::vector<Subset>> out{{}};
  std::vector<Subset> chain;
  const auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < proper.size(); ++i) {
      const Subset f = proper[i];
      if (!chain.empty() && (f == chain.back() || !f.contains(chain.back()))) continue;
      chain.push_back(f);
      out.push_back(chain);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Tree metrics

WeightVector tree_metric_weight(const PhyloTree& tree) {
  const int n = tree.leaf_count;
  const int nodes = tree.node_count;
  const auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedTree, why); };
  if (n < 3 || nodes < n) throw malformed("need at least three leaves");
  if (static_cast<int>(tree.edges.size()) != nodes - 1) throw malformed("a tree on k nodes has k-1 edges");
  std::vector<std::vector<std::pair<int, const Rational*>>> adj(static_cast<std::size_t>(nodes));
  for (const auto& e : tree.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= nodes || e.v >= nodes || e.u == e.v) throw malformed("bad edge endpoint");
    if (e.length < 0) throw malformed("negative edge length");
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, &e.length);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, &e.length);
  }
  for (int leaf = 0; leaf < n; ++leaf) {
    if (adj[static_cast<std::size_t>(leaf)].size() != 1) throw malformed("leaf " + std::to_string(leaf + 1) + " must have degree one");
  }
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n));
  for (int src = 0; src < n; ++src) {
    std::vector<std::optional<Rational>> reach(static_cast<std::size_t>(nodes));
    reach[static_cast<std::size_t>(src)] = Rational(0);
    std::vector<int> stack{src};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [v, len] : adj[static_cast<std::size_t>(u)]) {
        if (reach[static_cast<std::size_t>(v)]) continue;
        reach[static_cast<std::size_t>(v)] = *reach[static_cast<std::size_t>(u)] + *len;
        stack.push_back(v);
      }
    }
    for (const auto& r : reach) {
      if (!r) throw malformed("tree is disconnected");
    }
    for (int t = 0; t < n; ++t) dist[static_cast<std::size_t>(src)].push_back(*reach[static_cast<std::size_t>(t)]);
  }
  const Matroid m = uniform(2, n);
  VectorXq w(static_cast<Eigen::Index>(m.basis_count()));
  for (std::size_t i = 0; i < m.basis_count(); ++i) {
    const auto e = m.bases()[i].elements();
    w(static_cast<Eigen::Index>(i)) = -dist[static_cast<std::size_t>(e[0] - 1)][static_cast<std::size_t>(e[1] - 1)];
  }
  return WeightVector(m, std::move(w));
}

// ---------------------------------------------------------------------------

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TropicalBasisSize tropical_basis_size(int d, int n) {
  if (d < 2 || d >= n) throw Error(ErrorCode::InvalidParameters, "need 2 <= d < n");
  TropicalBasisSize out;
  out.value = binomial(n, d + 1) * (binomial(n, d - 1) - binomial(d + 1, 2)) + binomial(n, d) - Integer(d) * (n - d);
  out.within_bound = out.value <= (Integer(1) << (2 * n + 1));
  return out;
}

}  // namespace dressian
