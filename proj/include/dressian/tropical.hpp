#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/rational.hpp"

namespace dressian {

/// Finite heights on the bases of a matroid, in the matroid's basis order.
/// Non-bases are implicitly +infinity. Min-plus convention throughout.
class WeightVector {
 public:
  WeightVector(std::shared_ptr<const Matroid> matroid, VectorXq values);
  WeightVector(const Matroid& matroid, VectorXq values);
  static WeightVector zero(const Matroid& matroid);

  const Matroid& matroid() const { return *matroid_; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return matroid_; }
  const VectorXq& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }
  /// Height of a basis; throws NotABasis otherwise.
  const Rational& at(Subset basis) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return *a.matroid_ == *b.matroid_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const Matroid> matroid_;
  VectorXq values_;
};

/// Subset of the three terms {1, 2, 3} of a relation.
class TermSet {
 public:
  constexpr TermSet() = default;
  constexpr TermSet(std::initializer_list<int> terms) {
    for (int t : terms) bits_ |= static_cast<std::uint8_t>(1U << (t - 1));
  }
  constexpr bool contains(int term) const { return (bits_ >> (term - 1)) & 1U; }
  constexpr int size() const { return std::popcount(static_cast<unsigned>(bits_)); }
  constexpr void insert(int term) { bits_ |= static_cast<std::uint8_t>(1U << (term - 1)); }
  constexpr std::uint8_t bits() const { return bits_; }
  friend constexpr bool operator==(TermSet, TermSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Three-term Plücker relation for (S, i<j<l<m):
///   t1 = w(Sij) + w(Slm),  t2 = w(Sil) + w(Sjm),  t3 = w(Sim) + w(Sjl).
struct Relation {
  Subset s;
  std::array<int, 4> quad{};
  /// Basis index of each factor of each term, nullopt for non-bases.
  std::array<std::array<std::optional<std::size_t>, 2>, 3> factors;

  TermSet finite_terms() const;
  Subset quad_set() const { return Subset{quad[0], quad[1], quad[2], quad[3]}; }
};

enum class RelationFilter { All, SkipAllInfinite, ThreeFinite };

/// Relations ordered lexicographically by (s, quad).
std::vector<Relation> relations(const Matroid& m, RelationFilter filter = RelationFilter::All);

enum class Verdict { AllInfinite, Violated, Satisfied };
const char* to_string(Verdict v);

struct RelationStatus {
  TermSet finite_terms;
  Verdict verdict = Verdict::AllInfinite;
  TermSet minimizers;  // terms attaining the minimum among finite terms
};

/// "Minimum attained at least twice", with +infinity for non-bases.
RelationStatus relation_status(const WeightVector& w, const Relation& r);

struct ValuationCheck {
  bool valuated = true;
  std::optional<Relation> violated;  // first violated relation
  RelationStatus status;
};
ValuationCheck is_valuated(const WeightVector& w);

/// Minimizing terms of every relation with a finite term, aligned with
/// relations(m, RelationFilter::SkipAllInfinite). Throws NotValuated.
std::vector<TermSet> sign_vector(const WeightVector& w);

/// b x n matrix whose column i is the indicator of the bases containing i.
MatrixXq lineality_basis(const Matroid& m);
/// Dimension of the lineality space modulo the all-ones vector (= n - c).
int lineality_dim(const Matroid& m);
/// Canonical representative of w modulo the lineality space and constants:
/// zero on the lexicographically first coordinates spanning their dual.
WeightVector normalize(const WeightVector& w);
bool equal_modulo_lineality(const WeightVector& a, const WeightVector& b);

/// A d x n matrix over the tropical semiring; nullopt entries are +infinity.
class TropicalMatrix {
 public:
  TropicalMatrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::optional<Rational>& operator()(int i, int j) { return entries_[index(i, j)]; }
  const std::optional<Rational>& operator()(int i, int j) const { return entries_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }
  int rows_;
  int cols_;
  std::vector<std::optional<Rational>> entries_;
};

/// Tropical minors: w_B = min over bijections rows -> B of the entry sum.
/// The support (finite minors) must form a matroid.
WeightVector stiefel(const TropicalMatrix& a);

/// M_x: bases minimizing w_B - sum_{i in B} x_i. Throws NotValuated.
Matroid selected_matroid(const WeightVector& w, const VectorXq& x);

struct LinearSpaceCell {
  Matroid cell;
  bool bounded = false;  // not inside a proper face of P_M; coloop-free when M is uniform
};
/// Loopless cells (all dimensions) of the regular subdivision induced by w.
/// The bounded ones form the tight span. Throws NotValuated.
std::vector<LinearSpaceCell> linear_space_cells(const WeightVector& w);

/// All chains F1 ⊂ ... ⊂ Fk of proper nonempty flats, the empty chain first.
/// Throws HasLoops.
std::vector<std::vector<Subset>> bergman_flag_cones(const Matroid& m);

struct TreeEdge {
  int u = 0;
  int v = 0;
  Rational length;
};
/// Nodes 0..leaf_count-1 are the leaves labeled 1..leaf_count.
struct PhyloTree {
  int leaf_count = 0;
  int node_count = 0;
  std::vector<TreeEdge> edges;
};
/// w_ij = -(path length between leaves i and j) on U(2, n).
WeightVector tree_metric_weight(const PhyloTree& tree);

struct TropicalBasisSize {
  Integer value;
  bool within_bound = false;  // value <= 2^(2n+1)
};
TropicalBasisSize tropical_basis_size(int d, int n);

}  // namespace dressian
