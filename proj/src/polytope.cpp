#include "dressian/polytope.hpp"

#include <algorithm>
#include <array>

#include "dressian/parallel.hpp"

namespace dressian {

const char* to_string(FaceKind kind) {
  switch (kind) {
    case FaceKind::Octahedron: return "Octahedron";
    case FaceKind::Pyramid: return "Pyramid";
    case FaceKind::Square: return "Square";
    case FaceKind::Triangle: return "Triangle";
    case FaceKind::Edge: return "Edge";
    case FaceKind::Vertex: return "Vertex";
    case FaceKind::Empty: return "Empty";
  }
  return "?";
}

ExchangeGraph exchange_graph(const Matroid& m) {
  ExchangeGraph g;
  g.vertex_count = m.basis_count();
  const auto& bases = m.bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Subset outside = m.ground() - bases[i];
    for (int e : bases[i].elements()) {
      for (int f : outside.elements()) {
        if (auto j = m.index_of(bases[i].without(e).with(f)); j && *j > i) g.edges.emplace_back(i, *j);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

int polytope_dim(const Matroid& m) { return m.size() - static_cast<int>(connected_components(m).size()); }

namespace {

std::array<Subset, 6> pairs_of(Subset t) {
  const auto e = t.elements();
  return {Subset{e[0], e[1]}, Subset{e[0], e[2]}, Subset{e[0], e[3]},
          Subset{e[1], e[2]}, Subset{e[1], e[3]}, Subset{e[2], e[3]}};
}

}  // namespace

FaceClass classify_pair_face(const Matroid& m, Subset s, Subset t) {
  const int d = m.rank();
  if (d < 2 || s.size() != d - 2 || t.size() != 4 || !(s & t).empty() || !m.ground().contains(s | t)) {
    throw Error(ErrorCode::MalformedInput, "need |s| = d-2, |t| = 4, s and t disjoint within the ground set");
  }
  FaceClass out;
  std::vector<Subset> missing;
  for (Subset p : pairs_of(t)) {
    (m.is_basis(s | p) ? out.present_pairs : missing).push_back(p);
  }
  const auto& k = out.present_pairs;
  const auto impossible = [&] {
    return Error(ErrorCode::ImpossiblePattern,
                 "pair pattern at s=" + s.to_string() + ", t=" + t.to_string() + " violates basis exchange");
  };
  switch (k.size()) {
    case 6: out.kind = FaceKind::Octahedron; break;
    case 5: out.kind = FaceKind::Pyramid; break;
    case 4:
      if (!(missing[0] & missing[1]).empty()) throw impossible();
      out.kind = FaceKind::Square;
      break;
    case 3: {
      const bool triangle = (k[0] | k[1] | k[2]).size() == 3;
      const bool star = !(k[0] & k[1] & k[2]).empty();
      if (!triangle && !star) throw impossible();
      out.kind = FaceKind::Triangle;
      break;
    }
    case 2:
      if ((k[0] & k[1]).empty()) throw impossible();
      out.kind = FaceKind::Edge;
      break;
    case 1: out.kind = FaceKind::Vertex; break;
    default: out.kind = FaceKind::Empty; break;
  }
  return out;
}

std::vector<OctahedronFace> octahedra(const Matroid& m) {
  const int d = m.rank();
  if (d < 2 || m.size() < d + 2) return {};
  const auto centers = k_subsets(m.ground(), d - 2);
  std::vector<std::vector<OctahedronFace>> found(centers.size());
  parallel_for(centers.size(), [&](std::size_t i) {
    const Subset s = centers[i];
    for (Subset t : k_subsets(m.ground() - s, 4)) {
      bool all = true;
      for (Subset p : pairs_of(t)) {
        if (!m.is_basis(s | p)) {
          all = false;
          break;
        }
      }
      if (all) found[i].push_back({s, t});
    }
  });
  std::vector<OctahedronFace> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace dressian
