#include "dressian/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "dressian/linalg.hpp"
#include "dressian/lp.hpp"

namespace dressian {

const char* to_string(RelationState s) {
  switch (s) {
    case RelationState::AllEqual: return "AllEqual";
    case RelationState::Min12: return "Min12";
    case RelationState::Min13: return "Min13";
    case RelationState::Min23: return "Min23";
  }
  return "?";
}

const char* to_string(Decomposability d) {
  switch (d) {
    case Decomposability::Indecomposable: return "Indecomposable";
    case Decomposability::Decomposable: return "Decomposable";
    case Decomposability::Unknown: return "Unknown";
  }
  return "?";
}

bool Cone::closure_contains(const VectorXq& w) const {
  if (equalities.rows() > 0) {
    const VectorXq e = equalities * w;
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (e(i) != 0) return false;
    }
  }
  if (strict.rows() > 0) {
    const VectorXq s = strict * w;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) < 0) return false;
    }
  }
  return true;
}

BudgetExceeded::BudgetExceeded(std::size_t budget, Fan partial_fan)
    : Error(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(budget) + " exhausted"),
      partial(std::move(partial_fan)) {}

namespace {

using Rows = std::vector<VectorXq>;

MatrixXq stack(const Rows& rows, Eigen::Index cols) {
  MatrixXq out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return out;
}

VectorXq term(const Relation& r, int k, Eigen::Index b) {
  VectorXq t = VectorXq::Zero(b);
  for (const auto& f : r.factors[static_cast<std::size_t>(k - 1)]) {
    if (f) t(static_cast<Eigen::Index>(*f)) += 1;
  }
  return t;
}

Rows forced_rows(const Matroid& m) {
  const auto b = static_cast<Eigen::Index>(m.basis_count());
  Rows out;
  for (const auto& r : relations(m, RelationFilter::SkipAllInfinite)) {
    const TermSet fin = r.finite_terms();
    if (fin.size() != 2) continue;
    int first = 0;
    int second = 0;
    for (int k = 1; k <= 3; ++k) {
      if (!fin.contains(k)) continue;
      (first == 0 ? first : second) = k;
    }
    out.push_back(term(r, first, b) - term(r, second, b));
  }
  return out;
}

constexpr std::array<RelationState, 4> kStates{RelationState::AllEqual, RelationState::Min12, RelationState::Min13,
                                               RelationState::Min23};

struct Exhausted {};

class Search {
 public:
  Search(const Matroid& m, std::size_t budget)
      : m_(m),
        b_(static_cast<Eigen::Index>(m.basis_count())),
        rels_(relations(m, RelationFilter::ThreeFinite)),
        eq_(forced_rows(m)),
        budget_(budget) {}

  const std::vector<Relation>& rels() const { return rels_; }
  std::size_t nodes() const { return nodes_; }
  Eigen::Index coords() const { return b_; }

  /// Relations ordered so each one shares as many coordinates as possible
  /// with those already placed.
  std::vector<std::size_t> order_from(std::size_t start) const {
    std::vector<std::size_t> order;
    if (rels_.empty()) return order;
    std::vector<bool> placed(rels_.size(), false);
    std::vector<bool> covered(static_cast<std::size_t>(b_), false);
    const auto place = [&](std::size_t i) {
      placed[i] = true;
      order.push_back(i);
      for (const auto& term : rels_[i].factors) {
        for (const auto& f : term) covered[*f] = true;
      }
    };
    place(start);
    while (order.size() < rels_.size()) {
      std::size_t best = rels_.size();
      int best_overlap = -1;
      for (std::size_t i = 0; i < rels_.size(); ++i) {
        if (placed[i]) continue;
        int overlap = 0;
        for (const auto& term : rels_[i].factors) {
          for (const auto& f : term) overlap += covered[*f] ? 1 : 0;
        }
        if (overlap > best_overlap) {
          best = i;
          best_overlap = overlap;
        }
      }
      place(best);
    }
    return order;
  }

  struct Leaf {
    std::vector<RelationState> states;
    const Rows& eq;
    const Rows& strict;
    const VectorXq& witness;
  };

  /// Visits every feasible full assignment (with an optional forced first
  /// choice); the visitor returns true to stop.
  bool run(const std::vector<std::size_t>& order, std::optional<RelationState> first,
           const std::function<bool(const Leaf&)>& visit) {
    states_.assign(rels_.size(), RelationState::AllEqual);
    auto witness = feasible();
    if (!witness) return false;
    return descend(order, 0, first, *witness, visit);
  }

 private:
  std::optional<VectorXq> feasible() {
    if (nodes_ >= budget_) throw Exhausted{};
    ++nodes_;
    return lp::strictly_feasible<Rational>(stack(eq_, b_), stack(strict_, b_));
  }

  void push(const Relation& r, RelationState s) {
    const VectorXq t1 = term(r, 1, b_);
    const VectorXq t2 = term(r, 2, b_);
    const VectorXq t3 = term(r, 3, b_);
    switch (s) {
      case RelationState::AllEqual:
        eq_.push_back(t1 - t2);
        eq_.push_back(t1 - t3);
        pushed_ = {2, 0};
        break;
      case RelationState::Min12:
        eq_.push_back(t1 - t2);
        strict_.push_back(t3 - t1);
        pushed_ = {1, 1};
        break;
      case RelationState::Min13:
        eq_.push_back(t1 - t3);
        strict_.push_back(t2 - t1);
        pushed_ = {1, 1};
        break;
      case RelationState::Min23:
        eq_.push_back(t2 - t3);
        strict_.push_back(t1 - t2);
        pushed_ = {1, 1};
        break;
    }
  }

  bool descend(const std::vector<std::size_t>& order, std::size_t depth, std::optional<RelationState> first,
               const VectorXq& witness, const std::function<bool(const Leaf&)>& visit) {
    if (depth == order.size()) return visit(Leaf{states_, eq_, strict_, witness});
    const std::size_t rel = order[depth];
    for (RelationState s : kStates) {
      if (depth == 0 && first && s != *first) continue;
      push(rels_[rel], s);
      const auto added = pushed_;
      states_[rel] = s;
      auto next = feasible();
      bool stop = false;
      if (next) stop = descend(order, depth + 1, std::nullopt, *next, visit);
      eq_.resize(eq_.size() - added.first);
      strict_.resize(strict_.size() - added.second);
      if (stop) return true;
    }
    states_[rel] = RelationState::AllEqual;
    return false;
  }

  const Matroid& m_;
  Eigen::Index b_;
  std::vector<Relation> rels_;
  Rows eq_;
  Rows strict_;
  std::vector<RelationState> states_;
  std::pair<std::size_t, std::size_t> pushed_{0, 0};
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

std::vector<Cone> maximal_only(const std::vector<Cone>& cones) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones.size() && maximal; ++j) {
      if (j != i && cones[j].dim > cones[i].dim && cones[j].closure_contains(cones[i].witness)) maximal = false;
    }
    if (maximal) out.push_back(cones[i]);
  }
  return out;
}

}  // namespace

ForcedEqualities forced_equalities(const Matroid& m) {
  ForcedEqualities out;
  const auto b = static_cast<Eigen::Index>(m.basis_count());
  out.equations = stack(forced_rows(m), b);
  const auto rank = out.equations.rows() > 0 ? linalg::rank<Rational>(out.equations) : 0;
  out.dim = static_cast<int>(b - rank) - 1;
  out.is_lineality = out.dim == lineality_dim(m);
  return out;
}

Fan enumerate_fan(const Matroid& m, std::size_t budget) {
  Fan fan;
  fan.matroid = std::make_shared<const Matroid>(m);
  fan.lineality_dim = lineality_dim(m);
  Search search(m, budget);
  fan.relations = search.rels();
  std::vector<Cone> cones;
  const auto b = search.coords();
  const auto finish = [&] {
    fan.nodes = search.nodes();
    fan.maximal_cones = maximal_only(cones);
    fan.cones = std::move(cones);
    fan.is_linear_space =
        fan.complete && fan.maximal_cones.size() == 1 && fan.maximal_cones.front().dim == fan.lineality_dim;
  };
  try {
    search.run(search.order_from(0), std::nullopt, [&](const Search::Leaf& leaf) {
      Cone c;
      c.states = leaf.states;
      c.equalities = stack(leaf.eq, b);
      c.strict = stack(leaf.strict, b);
      const auto rank = c.equalities.rows() > 0 ? linalg::rank<Rational>(c.equalities) : 0;
      c.dim = static_cast<int>(b - rank) - 1;
      c.witness = leaf.witness;
      cones.push_back(std::move(c));
      return false;
    });
  } catch (const Exhausted&) {
    fan.complete = false;
    finish();
    throw BudgetExceeded(budget, std::move(fan));
  }
  finish();
  return fan;
}

IndecomposabilityResult is_indecomposable(const Matroid& m, std::size_t budget) {
  IndecomposabilityResult out;
  if (octahedra(m).empty()) {
    out.verdict = Decomposability::Indecomposable;
    out.reason = "no octahedral faces";
    return out;
  }
  if (forced_equalities(m).is_lineality) {
    out.verdict = Decomposability::Indecomposable;
    out.reason = "forced equalities cut Dr(M) down to its lineality space";
    return out;
  }
  Search search(m, budget);
  try {
    for (std::size_t r = 0; r < search.rels().size(); ++r) {
      const auto order = search.order_from(r);
      for (RelationState s : {RelationState::Min12, RelationState::Min13, RelationState::Min23}) {
        const bool found = search.run(order, s, [&](const Search::Leaf& leaf) {
          out.witness = WeightVector(m, leaf.witness);
          return true;
        });
        if (found) {
          out.verdict = Decomposability::Decomposable;
          out.reason = "some octahedron splits";
          out.subdivision = regular_subdivision(*out.witness);
          out.nodes = search.nodes();
          return out;
        }
      }
    }
  } catch (const Exhausted&) {
    out.verdict = Decomposability::Unknown;
    out.reason = "node budget of " + std::to_string(budget) + " exhausted";
    out.nodes = search.nodes();
    return out;
  }
  out.verdict = Decomposability::Indecomposable;
  out.reason = "no octahedron splits at any point of Dr(M)";
  out.nodes = search.nodes();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_valuated(const WeightVector& w, const char* what) {
  if (!is_valuated(w).valuated) throw Error(ErrorCode::NotValuated, std::string(what) + " is not valuated");
}

}  // namespace

WeightVector tensor_weights(const WeightVector& w1, const WeightVector& w2) {
  require_valuated(w1, "first factor");
  require_valuated(w2, "second factor");
  const int n1 = w1.matroid().size();
  auto m = std::make_shared<const Matroid>(direct_sum(w1.matroid(), w2.matroid()));
  VectorXq v(static_cast<Eigen::Index>(m->basis_count()));
  for (std::size_t i = 0; i < m->basis_count(); ++i) {
    const Subset b = m->bases()[i];
    v(static_cast<Eigen::Index>(i)) = w1.at(b & Subset::range(n1)) + w2.at(Subset(b.bits() >> n1));
  }
  return WeightVector(m, std::move(v));
}

std::pair<WeightVector, WeightVector> phi(const WeightVector& w, const Matroid& m1, const Matroid& m2, Subset b1,
                                          Subset b2) {
  if (!(w.matroid() == direct_sum(m1, m2))) {
    throw Error(ErrorCode::InvalidParameters, "weight vector does not live on the direct sum");
  }
  require_valuated(w, "weight vector");
  if (!m1.is_basis(b1)) throw Error(ErrorCode::NotABasis, b1.to_string() + " is not a basis of the first summand");
  if (!m2.is_basis(b2)) throw Error(ErrorCode::NotABasis, b2.to_string() + " is not a basis of the second summand");
  const int n1 = m1.size();
  const Subset shifted_b2(b2.bits() << n1);
  VectorXq v1(static_cast<Eigen::Index>(m1.basis_count()));
  for (std::size_t i = 0; i < m1.basis_count(); ++i) v1(static_cast<Eigen::Index>(i)) = w.at(m1.bases()[i] | shifted_b2);
  VectorXq v2(static_cast<Eigen::Index>(m2.basis_count()));
  for (std::size_t i = 0; i < m2.basis_count(); ++i) {
    v2(static_cast<Eigen::Index>(i)) = w.at(b1 | Subset(m2.bases()[i].bits() << n1));
  }
  return {WeightVector(m1, std::move(v1)), WeightVector(m2, std::move(v2))};
}

WeightVector parallel_projection(const WeightVector& w, int e, int e_prime) {
  const Matroid& m = w.matroid();
  const auto parallel = [&] {
    if (e == e_prime || e < 1 || e_prime < 1 || e > m.size() || e_prime > m.size()) return false;
    for (Subset cls : parallel_classes(m).classes) {
      if (cls.contains(e) && cls.contains(e_prime)) return true;
    }
    return false;
  };
  if (!parallel()) throw Error(ErrorCode::NotParallel, std::to_string(e) + " and " + std::to_string(e_prime) + " are not parallel");
  require_valuated(w, "weight vector");

  // Moving along the lineality direction of e, w_B - w_{B-e+e'} is the same
  // for every basis B containing e; zero it and check.
  std::optional<Rational> gap;
  for (std::size_t i = 0; i < m.basis_count(); ++i) {
    const Subset b = m.bases()[i];
    if (!b.contains(e)) continue;
    const Rational d = w[i] - w.at(b.without(e).with(e_prime));
    if (!gap) gap = d;
    if (d != *gap) throw std::logic_error("parallel elements with inconsistent weight differences");
  }

  const Matroid del = minor(m, Subset{}, Subset::singleton(e_prime));
  VectorXq v(static_cast<Eigen::Index>(del.basis_count()));
  for (std::size_t i = 0; i < del.basis_count(); ++i) {
    // relabel back: elements >= e' move up by one
    const Subset b = del.bases()[i];
    const Subset low = b & Subset::range(e_prime - 1);
    const Subset high(((b - low).bits()) << 1);
    v(static_cast<Eigen::Index>(i)) = w.at(low | high);
  }
  return WeightVector(del, std::move(v));
}

}  // namespace dressian
