#include <doctest.h>

#include "support/check.hpp"
#include "support/generators.hpp"

using namespace dressian;

namespace {

int face_dim(const FaceClass& f, Subset s, int n) {
  std::vector<Subset> pts;
  for (Subset p : f.present_pairs) pts.push_back(s | p);
  return affine_dim(n, pts);
}

int expected_dim(FaceKind k) {
  switch (k) {
    case FaceKind::Octahedron:
    case FaceKind::Pyramid: return 3;
    case FaceKind::Square:
    case FaceKind::Triangle: return 2;
    case FaceKind::Edge: return 1;
    case FaceKind::Vertex: return 0;
    case FaceKind::Empty: return -1;
  }
  return -2;
}

// Bases minimizing -N|B ∩ s| - |B ∩ t|, by direct search.
std::vector<Subset> supported(const Matroid& m, Subset s, Subset t) {
  const int big = m.size() + 1;
  int best = 1;
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    const int v = -big * (b & s).size() - (b & t).size();
    if (out.empty() || v < best) {
      best = v;
      out = {b};
    } else if (v == best) {
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("exchange graph") {
  const auto g = exchange_graph(uniform(2, 4));
  CHECK(g.vertex_count == 6);
  CHECK(g.edges.size() == 12);  // 6 vertices of degree 4
  std::vector<int> degree(6, 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree) CHECK(d == 4);

  const auto sq = exchange_graph(direct_sum(uniform(1, 2), uniform(1, 2)));
  CHECK(sq.vertex_count == 4);
  CHECK(sq.edges.size() == 4);  // 13-14, 13-23, 14-24, 23-24

  const auto one = exchange_graph(uniform(3, 3));
  CHECK(one.vertex_count == 1);
  CHECK(one.edges.empty());
}

TEST_CASE("polytope dimension") {
  CHECK(polytope_dim(uniform(2, 4)) == 3);
  CHECK(polytope_dim(direct_sum(uniform(1, 2), uniform(1, 2))) == 2);
  CHECK(polytope_dim(named("pg23")) == 12);
  gen::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Matroid a = gen::random_linear_matroid(rng, gen::uniform_int(rng, 1, 3), gen::uniform_int(rng, 3, 5));
    const Matroid b = gen::random_graphic(rng, 3, gen::uniform_int(rng, 2, 4));
    CHECK(polytope_dim(direct_sum(a, b)) == polytope_dim(a) + polytope_dim(b));
    CHECK(polytope_dim(a) == affine_dim(a.size(), a.bases()));
  }
}

TEST_CASE("pair face classification") {
  CHECK(classify_pair_face(uniform(2, 4), Subset{}, Subset{1, 2, 3, 4}).kind == FaceKind::Octahedron);
  CHECK(classify_pair_face(named("square_pyramid"), Subset{}, Subset{1, 2, 3, 4}).kind == FaceKind::Pyramid);
  const auto sq = classify_pair_face(direct_sum(uniform(1, 2), uniform(1, 2)), Subset{}, Subset{1, 2, 3, 4});
  CHECK(sq.kind == FaceKind::Square);
  CHECK(sq.present_pairs == std::vector<Subset>{Subset{1, 3}, Subset{1, 4}, Subset{2, 3}, Subset{2, 4}});

  CHECK(check::error_of([] { classify_pair_face(uniform(2, 4), Subset{1}, Subset{1, 2, 3, 4}); }) == ErrorCode::MalformedInput);
  CHECK(check::error_of([] { classify_pair_face(uniform(2, 5), Subset{}, Subset{1, 2, 3}); }) == ErrorCode::MalformedInput);
  // bases {12, 34} is not a matroid; trusted() lets the corrupt pattern through
  const Matroid corrupt = Matroid::trusted(4, 2, {Subset{1, 2}, Subset{3, 4}});
  CHECK(check::error_of([&] { classify_pair_face(corrupt, Subset{}, Subset{1, 2, 3, 4}); }) == ErrorCode::ImpossiblePattern);
}

TEST_CASE("face kinds match geometry and the supporting functional") {
  gen::Rng rng(17);
  std::vector<Matroid> corpus{uniform(2, 4), uniform(3, 6), named("fano"), named("example_16basis"),
                              named("example_14basis"), named("square_pyramid")};
  for (int i = 0; i < 15; ++i) corpus.push_back(gen::random_linear_matroid(rng, gen::uniform_int(rng, 2, 4), gen::uniform_int(rng, 5, 8)));
  for (const auto& m : corpus) {
    const int d = m.rank();
    if (d < 2 || m.size() < d + 2) continue;
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (Subset s : k_subsets(m.ground(), d - 2)) {
      for (Subset t : k_subsets(m.ground() - s, 4)) {
        FaceClass f;
        REQUIRE_NOTHROW(f = classify_pair_face(m, s, t));
        CHECK(face_dim(f, s, m.size()) == expected_dim(f.kind));
        if (f.present_pairs.empty()) continue;
        std::vector<Subset> expect;
        for (Subset p : f.present_pairs) expect.push_back(s | p);
        auto got = supported(m, s, t);
        std::sort(got.begin(), got.end(), lex_less);
        CHECK(got == expect);
        for (Subset a : expect) {
          for (Subset b : expect) {
            if ((a - b).size() == 1) covered.emplace(*m.index_of(a), *m.index_of(b));
          }
        }
      }
    }
    for (auto [a, b] : exchange_graph(m).edges) CHECK(covered.contains({a, b}));
  }
}

TEST_CASE("octahedra") {
  CHECK(octahedra(uniform(3, 6)).size() == 30);
  CHECK(octahedra(named("fano")).empty());
  const auto u24 = octahedra(uniform(2, 4));
  REQUIRE(u24.size() == 1);
  CHECK(u24.front().s.empty());
  CHECK(u24.front().t == Subset{1, 2, 3, 4});
}

TEST_CASE("octahedra of the ternary projective plane") {
  const Matroid pg = named("pg23");
  const auto faces = octahedra(pg);
  // Through each of the 13 points pass 4 lines of 3 further points; t takes
  // one point from each, 3^4 = 81 ways.
  CHECK(faces.size() == 13 * 81);
  std::size_t line_faces = 0;
  for (const auto& f : faces) {
    for (const auto& p : k_subsets(f.t, 2)) CHECK(pg.is_basis(f.s | p));
    if (rank_of(pg, f.t) == 2) ++line_faces;
  }
  // The faces whose t is a whole line missing s: 13 points x 9 such lines.
  CHECK(line_faces == 117);
}

TEST_CASE("octahedra are ordered and thread-count independent") {
  const Matroid m = uniform(3, 7);
  const auto serial = octahedra(m);
  set_worker_threads(4);
  const auto threaded = octahedra(m);
  set_worker_threads(1);
  CHECK(serial == threaded);
  for (std::size_t i = 1; i < serial.size(); ++i) {
    const auto& a = serial[i - 1];
    const auto& b = serial[i];
    CHECK((lex_less(a.s, b.s) || (a.s == b.s && lex_less(a.t, b.t))));
  }
}
