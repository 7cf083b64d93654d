#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/polytope.hpp"
#include "dressian/tropical.hpp"

namespace dressian {

/// Basis indices of a cell, increasing.
using Cell = std::vector<std::size_t>;

/// Lifting functional for a cell: w_B - x.e_B - c0 is zero on the cell and
/// positive on every other basis.
struct CellCertificate {
  VectorXq x;
  Rational c0;
};

struct Subdivision {
  std::shared_ptr<const Matroid> matroid;
  std::vector<Cell> cells;  // lexicographic on the index lists
  std::vector<CellCertificate> certificates;

  std::vector<Subset> cell_bases(std::size_t i) const;
  friend bool operator==(const Subdivision& a, const Subdivision& b) {
    return *a.matroid == *b.matroid && a.cells == b.cells;
  }
};

/// Maximal cells of the regular subdivision of P_M lifted by w (lower faces).
/// Works for any w; every returned cell carries a verified certificate.
Subdivision regular_subdivision(const WeightVector& w);

/// Independent check by exact LP: some (x, c0) makes w_B - x.e_B = c0 on the
/// cell and > c0 on the remaining bases.
bool certify_cell(const WeightVector& w, const Cell& cell);

/// Affine dimension of a set of 0/1 points of R^n.
int affine_dim(int n, const std::vector<Subset>& points);

struct MatroidalCheck {
  bool matroidal = true;
  std::optional<std::size_t> offending_cell;
  std::optional<ExchangeViolation> violation;
};
MatroidalCheck is_matroidal(const Subdivision& s);

enum class OctahedronLabel { Unsplit, Split12, Split13, Split23 };
const char* to_string(OctahedronLabel label);

struct LabeledOctahedron {
  OctahedronFace face;
  OctahedronLabel label = OctahedronLabel::Unsplit;
  friend bool operator==(const LabeledOctahedron&, const LabeledOctahedron&) = default;
};
/// One label per octahedron, in octahedra(m) order. Throws NotValuated.
std::vector<LabeledOctahedron> skeleton_labels(const WeightVector& w);

/// normal . x = rhs with a primitive integral normal.
struct Hyperplane {
  std::vector<Integer> normal;
  Integer rhs;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};
std::string to_string(const Hyperplane& h);

/// Canonical representative of the hyperplane a.x = rhs restricted to aff(P_M):
/// the coefficient of the last element of every connected component is zeroed
/// using x(K) = r(K), then the normal is made primitive with positive leading
/// coefficient. Two hyperplanes cut aff(P_M) alike iff their forms agree.
Hyperplane canonical_hyperplane(const Matroid& m, const VectorXq& a, const Rational& rhs);

enum class SubdivisionKind { Trivial, Split, ThreeSplit, Other };
const char* to_string(SubdivisionKind kind);

struct Classification {
  SubdivisionKind kind = SubdivisionKind::Trivial;
  std::optional<Hyperplane> hyperplane;  // for splits
  std::size_t cell_count = 1;
};
/// Throws NotMatroidal.
Classification classify_subdivision(const Subdivision& s);

}  // namespace dressian
