#include "dressian/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dressian/linalg.hpp"
#include "dressian/lp.hpp"

namespace dressian {

namespace {

/// x -> a.x + c on R^n.
struct Affine {
  VectorXq a;
  Rational c;

  Rational operator()(Subset b) const {
    Rational v = c;
    for (int e : b.elements()) v += a(e - 1);
    return v;
  }
};

// Fraction-free elimination keeps every entry a minor of the input, so 64-bit
// integers suffice while minors of 0/1 matrices stay small.
template <typename Int>
int bareiss_rank(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

template <typename Int>
std::vector<std::vector<Int>> lifted_rows(int n, const std::vector<Subset>& points) {
  std::vector<std::vector<Int>> m;
  m.reserve(points.size());
  for (Subset b : points) {
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(0));
    for (int e : b.elements()) row[static_cast<std::size_t>(e - 1)] = 1;
    row.back() = 1;
    m.push_back(std::move(row));
  }
  return m;
}

MatrixXq lifted_matrix(int n, const std::vector<Subset>& points) {
  MatrixXq m = MatrixXq::Zero(static_cast<Eigen::Index>(points.size()), n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    for (int e : points[i].elements()) m(r, e - 1) = 1;
    m(r, n) = 1;
  }
  return m;
}

std::vector<Subset> pick(const Matroid& m, const Cell& cell) {
  std::vector<Subset> out;
  out.reserve(cell.size());
  for (auto i : cell) out.push_back(m.bases()[i]);
  return out;
}

/// An affine function vanishing on `points` but not on all of `support`.
std::optional<Affine> vanishing_functional(int n, const std::vector<Subset>& points,
                                           const std::vector<Subset>& support) {
  const MatrixXq ns = points.empty() ? MatrixXq(MatrixXq::Identity(n + 1, n + 1))
                                     : linalg::nullspace<Rational>(lifted_matrix(n, points));
  for (Eigen::Index k = 0; k < ns.cols(); ++k) {
    Affine g{ns.col(k).head(n), ns(n, k)};
    for (Subset b : support) {
      if (g(b) != 0) return g;
    }
  }
  return std::nullopt;
}

Cell intersect(const Cell& a, const Cell& b) {
  Cell out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Facet {
  Affine g;  // nonnegative on the cell, zero exactly on `tight`
  Cell tight;
};

class Walker {
 public:
  explicit Walker(const WeightVector& w) : w_(w), m_(w.matroid()), n_(m_.size()), dim_(polytope_dim(m_)) {}

  Subdivision run() {
    std::deque<std::size_t> queue;
    add(initial_cell(), queue);
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      for (const auto& f : facets(cells_[id])) {
        if (auto next = cross(f, heights_[id])) add(std::move(*next), queue);
      }
    }
    std::vector<std::size_t> order(cells_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cells_[a] < cells_[b]; });
    Subdivision out;
    out.matroid = w_.matroid_ptr();
    for (auto i : order) {
      out.cells.push_back(cells_[i]);
      out.certificates.push_back({heights_[i].a, heights_[i].c});
    }
    return out;
  }

 private:
  Rational slack(const Affine& h, std::size_t i) const { return w_[i] - h(m_.bases()[i]); }

  Cell tight_set(const Affine& h) const {
    Cell out;
    for (std::size_t i = 0; i < m_.basis_count(); ++i) {
      if (slack(h, i) == 0) out.push_back(i);
    }
    return out;
  }

  // Tilts a supporting functional about its current contact set until the
  // contact set is full-dimensional.
  std::pair<Cell, Affine> initial_cell() const {
    Affine h{VectorXq::Zero(n_), w_.values().minCoeff()};
    Cell t = tight_set(h);
    while (affine_dim(n_, pick(m_, t)) < dim_) {
      auto g = *vanishing_functional(n_, pick(m_, t), m_.bases());
      bool rises = false;
      for (Subset b : m_.bases()) rises = rises || g(b) > 0;
      if (!rises) {
        g.a = -g.a;
        g.c = -g.c;
      }
      std::optional<Rational> step;
      for (std::size_t i = 0; i < m_.basis_count(); ++i) {
        const Rational gi = g(m_.bases()[i]);
        if (gi <= 0) continue;
        Rational r = slack(h, i) / gi;
        if (!step || r < *step) step = std::move(r);
      }
      h.a += *step * g.a;
      h.c += *step * g.c;
      t = tight_set(h);
    }
    return {std::move(t), std::move(h)};
  }

  void add(std::pair<Cell, Affine> found, std::deque<std::size_t>& queue) {
    auto& [cell, h] = found;
    if (index_.contains(cell)) return;
    for (std::size_t i = 0, k = 0; i < m_.basis_count(); ++i) {
      const bool on = k < cell.size() && cell[k] == i;
      if (on) ++k;
      const Rational s = slack(h, i);
      if (on ? s != 0 : s <= 0) throw std::logic_error("lifting certificate failed for a subdivision cell");
    }
    index_.emplace(cell, cells_.size());
    queue.push_back(cells_.size());
    cells_.push_back(std::move(cell));
    heights_.push_back(std::move(h));
  }

  // Pushes the lifting functional across the facet to the neighboring cell.
  std::optional<std::pair<Cell, Affine>> cross(const Facet& f, const Affine& h) const {
    std::optional<Rational> step;
    for (std::size_t i = 0; i < m_.basis_count(); ++i) {
      const Rational gi = f.g(m_.bases()[i]);
      if (gi >= 0) continue;
      Rational r = slack(h, i) / -gi;
      if (!step || r < *step) step = std::move(r);
    }
    if (!step) return std::nullopt;  // facet on the boundary of P_M
    Affine next{h.a - *step * f.g.a, h.c - *step * f.g.c};
    Cell t = tight_set(next);
    return std::make_pair(std::move(t), std::move(next));
  }

  std::vector<Facet> facets(const Cell& cell) const {
    const auto pts = pick(m_, cell);
    if (!find_exchange_violation(pts)) return matroid_facets(cell, pts);
    return generic_facets(cell, pts);
  }

  // Facets of a matroid polytope come from x_e >= 0, x_e <= 1 and rank
  // inequalities of flats; keep the candidates whose contact set has
  // codimension one.
  std::vector<Facet> matroid_facets(const Cell& cell, const std::vector<Subset>& pts) const {
    const Matroid mc = Matroid::trusted(n_, m_.rank(), pts);
    std::vector<Facet> out;
    std::set<Cell> seen;
    const auto consider = [&](VectorXq a, Rational c) {
      Affine g{std::move(a), std::move(c)};
      Cell t;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (g(pts[k]) == 0) t.push_back(cell[k]);
      }
      if (t.empty() || t.size() == cell.size() || seen.contains(t)) return;
      seen.insert(t);
      if (affine_dim(n_, pick(m_, t)) != dim_ - 1) return;
      out.push_back({std::move(g), std::move(t)});
    };
    for (int e = 1; e <= n_; ++e) {
      VectorXq a = VectorXq::Zero(n_);
      a(e - 1) = 1;
      consider(a, 0);
      consider(-a, 1);
    }
    const auto by_rank = flats(mc);
    for (std::size_t r = 0; r < by_rank.size(); ++r) {
      for (Subset f : by_rank[r]) {
        if (f.empty() || f == mc.ground()) continue;
        VectorXq a = VectorXq::Zero(n_);
        for (int e : f.elements()) a(e - 1) = -1;
        consider(a, Rational(static_cast<long>(r)));
      }
    }
    return out;
  }

  // Any cell: hyperplanes through affinely independent dim-subsets of its
  // vertices that leave all vertices on one side.
  std::vector<Facet> generic_facets(const Cell& cell, const std::vector<Subset>& pts) const {
    std::vector<Facet> out;
    std::vector<std::size_t> choice;
    const auto covered = [&]() {
      for (const auto& f : out) {
        bool inside = true;
        for (auto k : choice) inside = inside && std::binary_search(f.tight.begin(), f.tight.end(), cell[k]);
        if (inside) return true;
      }
      return false;
    };
    const auto visit = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(choice.size()) == dim_) {
        if (covered()) return;
        std::vector<Subset> sel;
        for (auto k : choice) sel.push_back(pts[k]);
        auto g = vanishing_functional(n_, sel, pts);
        if (!g) return;
        bool pos = false;
        bool neg = false;
        for (Subset b : pts) {
          const Rational v = (*g)(b);
          pos = pos || v > 0;
          neg = neg || v < 0;
        }
        if (pos && neg) return;
        if (neg) {
          g->a = -g->a;
          g->c = -g->c;
        }
        Cell t;
        for (std::size_t k = 0; k < pts.size(); ++k) {
          if ((*g)(pts[k]) == 0) t.push_back(cell[k]);
        }
        out.push_back({std::move(*g), std::move(t)});
        return;
      }
      for (std::size_t k = from; k < pts.size(); ++k) {
        choice.push_back(k);
        std::vector<Subset> sel;
        for (auto j : choice) sel.push_back(pts[j]);
        if (affine_dim(n_, sel) == static_cast<int>(choice.size()) - 1) self(self, k + 1);
        choice.pop_back();
      }
    };
    visit(visit, 0);
    return out;
  }

  const WeightVector& w_;
  const Matroid& m_;
  int n_;
  int dim_;
  std::vector<Cell> cells_;
  std::vector<Affine> heights_;
  std::map<Cell, std::size_t> index_;
};

}  // namespace

std::vector<Subset> Subdivision::cell_bases(std::size_t i) const { return pick(*matroid, cells[i]); }

int affine_dim(int n, const std::vector<Subset>& points) {
  if (n + 1 <= 31) return bareiss_rank(lifted_rows<std::int64_t>(n, points)) - 1;
  return bareiss_rank(lifted_rows<Integer>(n, points)) - 1;
}

Subdivision regular_subdivision(const WeightVector& w) { return Walker(w).run(); }

bool certify_cell(const WeightVector& w, const Cell& cell) {
  const Matroid& m = w.matroid();
  const int n = m.size();
  // variables (x_1..x_n, c0, t); maximize t subject to t <= 1
  lp::Problem<Rational> p;
  const auto on = static_cast<Eigen::Index>(cell.size());
  const auto off = static_cast<Eigen::Index>(m.basis_count() - cell.size());
  p.eq_a = MatrixXq::Zero(on, n + 2);
  p.eq_b = VectorXq::Zero(on);
  p.ub_a = MatrixXq::Zero(off + 1, n + 2);
  p.ub_b = VectorXq::Zero(off + 1);
  Eigen::Index r_on = 0;
  Eigen::Index r_off = 0;
  for (std::size_t i = 0; i < m.basis_count(); ++i) {
    const bool in = std::binary_search(cell.begin(), cell.end(), i);
    auto& a = in ? p.eq_a : p.ub_a;
    auto& b = in ? p.eq_b : p.ub_b;
    const Eigen::Index r = in ? r_on++ : r_off++;
    for (int e : m.bases()[i].elements()) a(r, e - 1) = 1;
    a(r, n) = 1;
    if (!in) a(r, n + 1) = 1;
    b(r) = w[i];
  }
  p.ub_a(off, n + 1) = 1;
  p.ub_b(off) = 1;
  p.objective = VectorXq::Zero(n + 2);
  p.objective(n + 1) = 1;
  const auto res = lp::solve(p);
  return res.status == lp::Status::Optimal && res.value > 0;
}

MatroidalCheck is_matroidal(const Subdivision& s) {
  MatroidalCheck out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    if (auto v = find_exchange_violation(s.cell_bases(i))) {
      out.matroidal = false;
      out.offending_cell = i;
      out.violation = v;
      return out;
    }
  }
  return out;
}

const char* to_string(OctahedronLabel label) {
  switch (label) {
    case OctahedronLabel::Unsplit: return "Unsplit";
    case OctahedronLabel::Split12: return "Split12";
    case OctahedronLabel::Split13: return "Split13";
    case OctahedronLabel::Split23: return "Split23";
  }
  return "?";
}

std::vector<LabeledOctahedron> skeleton_labels(const WeightVector& w) {
  if (auto check = is_valuated(w); !check.valuated) {
    throw Error(ErrorCode::NotValuated, "skeleton labels need a valuated matroid");
  }
  std::vector<LabeledOctahedron> out;
  for (const auto& r : relations(w.matroid(), RelationFilter::ThreeFinite)) {
    const TermSet min = relation_status(w, r).minimizers;
    OctahedronLabel label = OctahedronLabel::Unsplit;
    if (min == TermSet{1, 2}) label = OctahedronLabel::Split12;
    if (min == TermSet{1, 3}) label = OctahedronLabel::Split13;
    if (min == TermSet{2, 3}) label = OctahedronLabel::Split23;
    out.push_back({{r.s, r.quad_set()}, label});
  }
  return out;
}

std::string to_string(const Hyperplane& h) {
  std::string out;
  for (std::size_t e = 0; e < h.normal.size(); ++e) {
    const Integer& c = h.normal[e];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const Integer mag = abs(c);
    if (mag != 1) out += mag.str();
    out += "x" + std::to_string(e + 1);
  }
  return (out.empty() ? std::string("0") : out) + " = " + h.rhs.str();
}

Hyperplane canonical_hyperplane(const Matroid& m, const VectorXq& a_in, const Rational& rhs_in) {
  VectorXq a = a_in;
  Rational rhs = rhs_in;
  for (Subset k : connected_components(m)) {
    const Rational coef = a(k.max_element() - 1);
    if (coef == 0) continue;
    for (int e : k.elements()) a(e - 1) -= coef;
    rhs -= coef * rank_of(m, k);
  }
  Integer den = denominator(rhs);
  for (Eigen::Index e = 0; e < a.size(); ++e) den = lcm(den, denominator(a(e)));
  Hyperplane h;
  Integer g = 0;
  for (Eigen::Index e = 0; e < a.size(); ++e) {
    const Rational scaled = a(e) * den;
    h.normal.push_back(numerator(scaled));
    g = gcd(g, h.normal.back());
  }
  h.rhs = numerator(Rational(rhs * den));
  g = gcd(g, h.rhs);
  auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Integer& c) { return c != 0; });
  if (g == 0) return h;
  if (lead != h.normal.end() && *lead < 0) g = -g;
  for (auto& c : h.normal) c /= g;
  h.rhs /= g;
  return h;
}

const char* to_string(SubdivisionKind kind) {
  switch (kind) {
    case SubdivisionKind::Trivial: return "Trivial";
    case SubdivisionKind::Split: return "Split";
    case SubdivisionKind::ThreeSplit: return "ThreeSplit";
    case SubdivisionKind::Other: return "Other";
  }
  return "?";
}

Classification classify_subdivision(const Subdivision& s) {
  if (auto check = is_matroidal(s); !check.matroidal) {
    throw Error(ErrorCode::NotMatroidal, "cell " + std::to_string(*check.offending_cell) + " is not a matroid polytope");
  }
  const Matroid& m = *s.matroid;
  const int n = m.size();
  const int dim = polytope_dim(m);
  Classification out;
  out.cell_count = s.cells.size();
  const auto dim_of = [&](const Cell& c) { return affine_dim(n, pick(m, c)); };
  if (s.cells.size() == 1) return out;
  if (s.cells.size() == 2) {
    const Cell common = intersect(s.cells[0], s.cells[1]);
    if (dim_of(common) != dim - 1) throw std::logic_error("two maximal cells without a common facet");
    const auto g = *vanishing_functional(n, pick(m, common), m.bases());
    out.kind = SubdivisionKind::Split;
    out.hyperplane = canonical_hyperplane(m, g.a, -g.c);
    return out;
  }
  out.kind = SubdivisionKind::Other;
  if (s.cells.size() == 3) {
    const Cell& a = s.cells[0];
    const Cell& b = s.cells[1];
    const Cell& c = s.cells[2];
    const bool walls = dim_of(intersect(a, b)) == dim - 1 && dim_of(intersect(a, c)) == dim - 1 &&
                       dim_of(intersect(b, c)) == dim - 1;
    if (walls && dim_of(intersect(intersect(a, b), c)) == dim - 2) out.kind = SubdivisionKind::ThreeSplit;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<LinearSpaceCell> linear_space_cells(const WeightVector& w) {
  if (!is_valuated(w).valuated) throw Error(ErrorCode::NotValuated, "linear space cells need a valuated matroid");
  const Matroid& m = w.matroid();
  const int n = m.size();
  if (n > 20) throw Error(ErrorCode::InvalidParameters, "face enumeration is limited to 20 elements");
  const Subdivision sub = regular_subdivision(w);
  std::set<Cell> faces;
  for (const auto& cell : sub.cells) {
    const auto pts = pick(m, cell);
    // Every face of a matroid polytope is an intersection of the faces
    // maximizing x(A), one for each subset A.
    std::set<Cell> local;
    for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << n); ++bits) {
      const Subset a(bits);
      int best = 0;
      for (Subset b : pts) best = std::max(best, (b & a).size());
      Cell f;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if ((pts[k] & a).size() == best) f.push_back(cell[k]);
      }
      local.insert(std::move(f));
    }
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<Cell> current(local.begin(), local.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          Cell f = intersect(current[i], current[j]);
          if (!f.empty() && local.insert(std::move(f)).second) grew = true;
        }
      }
    }
    faces.insert(local.begin(), local.end());
  }
  // A cell is bounded iff its face meets the relative interior of P_M, i.e. no
  // proper face x(F) = r(F) of P_M contains it. For the hypersimplex this is
  // the coloop-free condition; a disconnected M leaves every cell unbounded.
  const bool connected = connected_components(m).size() == 1;
  std::vector<std::pair<Subset, int>> walls;
  for (const auto& level : flats(m)) {
    for (Subset f : level) {
      if (!f.empty() && f != m.ground()) walls.emplace_back(f, rank_of(m, f));
    }
  }
  std::vector<LinearSpaceCell> out;
  for (const auto& f : faces) {
    const auto pts = pick(m, f);
    Subset used;
    for (Subset b : pts) used = used | b;
    if (used != m.ground()) continue;
    const bool on_boundary = std::any_of(walls.begin(), walls.end(), [&](const auto& wall) {
      return std::all_of(pts.begin(), pts.end(), [&](Subset b) { return (b & wall.first).size() == wall.second; });
    });
    out.push_back({Matroid::trusted(n, m.rank(), pts), connected && !on_boundary});
  }
  return out;
}

}  // namespace dressian
