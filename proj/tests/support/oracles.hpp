#pragma once

// Independent reference computations. They share only the data types with the
// library and use the slowest obvious method.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dressian/dressian.hpp"

namespace oracle {

using namespace dressian;

/// Direct "minimum attained at least twice" over every (S, i<j<k<l).
inline bool valuated(const WeightVector& w) {
  const Matroid& m = w.matroid();
  const int n = m.size();
  const int d = m.rank();
  std::map<Subset::Bits, Rational> value;
  for (std::size_t i = 0; i < m.basis_count(); ++i) value[m.bases()[i].bits()] = w[i];
  const auto get = [&](Subset::Bits b) -> std::optional<Rational> {
    auto it = value.find(b);
    if (it == value.end()) return std::nullopt;
    return it->second;
  };
  if (d < 2) return true;
  for (Subset::Bits s = 0; s < (Subset::Bits{1} << n); ++s) {
    if (std::popcount(s) != d - 2) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          for (int l = k + 1; l < n; ++l) {
            const Subset::Bits q = (Subset::Bits{1} << i) | (Subset::Bits{1} << j) | (Subset::Bits{1} << k) |
                                   (Subset::Bits{1} << l);
            if (s & q) continue;
            const auto bit = [](int e) { return Subset::Bits{1} << e; };
            const std::pair<Subset::Bits, Subset::Bits> terms[3] = {{bit(i) | bit(j), bit(k) | bit(l)},
                                                                    {bit(i) | bit(k), bit(j) | bit(l)},
                                                                    {bit(i) | bit(l), bit(j) | bit(k)}};
            std::vector<Rational> finite;
            for (const auto& [x, y] : terms) {
              auto a = get(s | x);
              auto b = get(s | y);
              if (a && b) finite.push_back(*a + *b);
            }
            if (finite.empty()) continue;
            std::sort(finite.begin(), finite.end());
            if (finite.size() == 1 || finite[0] != finite[1]) return false;
          }
        }
      }
    }
  }
  return true;
}

inline MatrixXq lifted(int n, const std::vector<Subset>& pts) {
  MatrixXq a = MatrixXq::Zero(static_cast<Eigen::Index>(pts.size()), n + 1);
  for (std::size_t r = 0; r < pts.size(); ++r) {
    for (int e : pts[r].elements()) a(static_cast<Eigen::Index>(r), e - 1) = 1;
    a(static_cast<Eigen::Index>(r), n) = 1;
  }
  return a;
}

/// Maximal cells of the lower hull by brute force: every affinely independent
/// (dim+1)-set of vertices spans a candidate lower facet of the lift.
inline std::vector<Cell> lower_hull_cells(const WeightVector& w) {
  const Matroid& m = w.matroid();
  const int n = m.size();
  const auto& pts = m.bases();
  const auto dim = static_cast<int>(linalg::rank<Rational>(lifted(n, pts))) - 1;
  std::set<Cell> cells;
  std::vector<std::size_t> pick;
  const auto visit = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == dim + 1) {
      std::vector<Subset> sel;
      VectorXq rhs(dim + 1);
      for (std::size_t k = 0; k < pick.size(); ++k) {
        sel.push_back(pts[pick[k]]);
        rhs(static_cast<Eigen::Index>(k)) = w[pick[k]];
      }
      const MatrixXq a = lifted(n, sel);
      if (linalg::rank<Rational>(a) != dim + 1) return;
      const VectorXq h = *linalg::solve<Rational>(a, rhs);
      const VectorXq all = lifted(n, pts) * h;
      Cell tight;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Rational slack = w[i] - all(static_cast<Eigen::Index>(i));
        if (slack < 0) return;
        if (slack == 0) tight.push_back(i);
      }
      cells.insert(tight);
      return;
    }
    for (std::size_t k = from; k < pts.size(); ++k) {
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return {cells.begin(), cells.end()};
}

using Splits = std::set<Subset::Bits>;

/// Nontrivial splits of a tree, each as the side avoiding leaf 1.
inline Splits tree_splits(const PhyloTree& t) {
  const int n = t.leaf_count;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.node_count));
  for (const auto& e : t.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  Splits out;
  for (const auto& e : t.edges) {
    Subset::Bits side = 0;
    std::vector<int> stack{e.v};
    std::vector<bool> seen(static_cast<std::size_t>(t.node_count), false);
    seen[static_cast<std::size_t>(e.u)] = true;
    seen[static_cast<std::size_t>(e.v)] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x < n) side |= Subset::Bits{1} << x;
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    if (side & 1U) side = ((Subset::Bits{1} << n) - 1) & ~side;
    if (std::popcount(side) >= 2 && std::popcount(side) <= n - 2) out.insert(side);
  }
  return out;
}

/// Number of distinct trivalent leaf-labeled trees on n leaves.
inline std::size_t trivalent_tree_count(int n) {
  std::set<Splits> seen;
  const auto grow = [&](auto&& self, PhyloTree t, int leaves_placed) -> void {
    if (leaves_placed == n) {
      t.leaf_count = n;
      seen.insert(tree_splits(t));
      return;
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      PhyloTree u = t;
      const auto old = u.edges[i];
      const int mid = u.node_count++;
      u.edges[i] = {old.u, mid, 1};
      u.edges.push_back({mid, old.v, 1});
      u.edges.push_back({leaves_placed, mid, 1});
      self(self, u, leaves_placed + 1);
    }
  };
  // leaves keep ids 0..n-1, internal nodes start at n
  PhyloTree start;
  start.leaf_count = n;
  start.node_count = n + 1;
  start.edges = {{0, n, 1}, {1, n, 1}, {2, n, 1}};
  grow(grow, start, 3);
  return seen.size();
}

}  // namespace oracle
