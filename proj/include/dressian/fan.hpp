#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dressian/subdivision.hpp"
#include "dressian/tropical.hpp"

namespace dressian {

/// State of a relation with three finite terms. Min_ab: terms a and b agree
/// and lie strictly below the third; AllEqual: all three agree.
enum class RelationState { AllEqual, Min12, Min13, Min23 };
const char* to_string(RelationState s);

/// Relatively open cone of Dr(M) in basis coordinates: equalities w = 0 and
/// strict w > 0 rowwise.
struct Cone {
  std::vector<RelationState> states;  // aligned with Fan::relations
  MatrixXq equalities;
  MatrixXq strict;
  int dim = 0;  // modulo the all-ones vector
  VectorXq witness;

  /// True when `w` satisfies the equalities and the weak inequalities.
  bool closure_contains(const VectorXq& w) const;
};

struct Fan {
  std::shared_ptr<const Matroid> matroid;
  std::vector<Relation> relations;  // relations with three finite terms
  int lineality_dim = 0;
  std::vector<Cone> maximal_cones;
  std::vector<Cone> cones;  // every cone found, in search order
  bool is_linear_space = false;
  bool complete = true;
  std::size_t nodes = 0;  // LP feasibility checks performed
};

struct ForcedEqualities {
  MatrixXq equations;  // one row per relation with exactly two finite terms
  int dim = 0;         // dimension of the solution space modulo all-ones
  bool is_lineality = false;
};
ForcedEqualities forced_equalities(const Matroid& m);

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t budget, Fan partial);
  Fan partial;
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// Cones of the Plücker fan structure, found by depth-first search over
/// relation states with exact LP pruning; each LP counts as one node.
/// Throws BudgetExceeded with the cones found so far.
Fan enumerate_fan(const Matroid& m, std::size_t budget = kDefaultBudget);

enum class Decomposability { Indecomposable, Decomposable, Unknown };
const char* to_string(Decomposability d);

struct IndecomposabilityResult {
  Decomposability verdict = Decomposability::Unknown;
  std::string reason;
  std::optional<WeightVector> witness;     // a valuated w with a nontrivial subdivision
  std::optional<Subdivision> subdivision;  // of the witness
  std::size_t nodes = 0;
};
IndecomposabilityResult is_indecomposable(const Matroid& m, std::size_t budget = kDefaultBudget);

/// (w1 ⊗ w2)_{B1 ⊔ B2} = w1_{B1} + w2_{B2} on direct_sum(m1, m2).
WeightVector tensor_weights(const WeightVector& w1, const WeightVector& w2);

/// Restrictions of w on direct_sum(m1, m2) through the bases b1 of m1 and b2 of m2.
std::pair<WeightVector, WeightVector> phi(const WeightVector& w, const Matroid& m1, const Matroid& m2, Subset b1,
                                          Subset b2);

/// Drops the bases containing e' (parallel to e), landing on M \ e' with the
/// elements after e' shifted down by one.
WeightVector parallel_projection(const WeightVector& w, int e, int e_prime);

}  // namespace dressian
