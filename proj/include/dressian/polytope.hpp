#pragma once

#include <utility>
#include <vector>

#include "dressian/matroid.hpp"

namespace dressian {

/// Octahedral 3-face of P_M: vertices e_{s ∪ p} for the six pairs p of t.
struct OctahedronFace {
  Subset s;  // |s| = d - 2
  Subset t;  // four elements, disjoint from s
  friend bool operator==(const OctahedronFace&, const OctahedronFace&) = default;
};

enum class FaceKind { Octahedron, Pyramid, Square, Triangle, Edge, Vertex, Empty };
const char* to_string(FaceKind kind);

struct FaceClass {
  FaceKind kind = FaceKind::Empty;
  std::vector<Subset> present_pairs;  // pairs p ⊂ t with s ∪ p a basis, lexicographic
};

struct ExchangeGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // basis indices, i < j, sorted
};

/// Vertices are bases; edges join bases with symmetric difference of size two.
ExchangeGraph exchange_graph(const Matroid& m);

/// dim P_M = n - (number of connected components).
int polytope_dim(const Matroid& m);

/// Classifies conv{e_{s∪p} : p ⊂ t, s∪p basis}, the face of P_M minimized by the
/// functional that is -N on s, -1 on t and 0 elsewhere.
FaceClass classify_pair_face(const Matroid& m, Subset s, Subset t);

/// All octahedral faces, ordered lexicographically by (s, t).
std::vector<OctahedronFace> octahedra(const Matroid& m);

}  // namespace dressian
