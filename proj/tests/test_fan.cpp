#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/check.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dressian;
using check::error_of;
using check::weights;

namespace {

WeightVector at(const Fan& f, const VectorXq& v) { return WeightVector(f.matroid, v); }

std::multiset<SubdivisionKind> kinds(const Fan& f) {
  std::multiset<SubdivisionKind> out;
  for (const auto& c : f.maximal_cones) out.insert(classify_subdivision(regular_subdivision(at(f, c.witness))).kind);
  return out;
}

// Element n+1 parallel to element `e` of m.
Matroid add_parallel(const Matroid& m, int e) {
  std::vector<Subset> bases = m.bases();
  for (Subset b : m.bases()) {
    if (b.contains(e)) bases.push_back(b.without(e).with(m.size() + 1));
  }
  return Matroid::from_bases(m.size() + 1, m.rank(), bases);
}

// Extends w0 on m to add_parallel(m, e): w_B = w0(B with n+1 renamed e) + c [n+1 in B].
WeightVector extend_parallel(const WeightVector& w0, int e, const Matroid& big, const Rational& c) {
  const int extra = w0.matroid().size() + 1;
  VectorXq v(static_cast<Eigen::Index>(big.basis_count()));
  for (std::size_t i = 0; i < big.basis_count(); ++i) {
    const Subset b = big.bases()[i];
    v(static_cast<Eigen::Index>(i)) = b.contains(extra) ? w0.at(b.without(extra).with(e)) + c : w0.at(b);
  }
  return WeightVector(big, v);
}

}  // namespace

TEST_CASE("forced equalities") {
  const auto sq = forced_equalities(direct_sum(uniform(1, 2), uniform(1, 2)));
  CHECK(sq.equations.rows() == 1);
  const VectorXq eq = sq.equations.row(0).transpose();
  CHECK((eq == check::vec({1, -1, -1, 1}) || eq == check::vec({-1, 1, 1, -1})));
  CHECK(sq.dim == 2);
  CHECK(sq.is_lineality);

  const auto u24 = forced_equalities(uniform(2, 4));
  CHECK(u24.equations.rows() == 0);
  CHECK(u24.dim == 5);
  CHECK_FALSE(u24.is_lineality);

  const auto fano = forced_equalities(named("fano"));
  CHECK(fano.dim == 6);
  CHECK(fano.is_lineality);

  const auto pg = forced_equalities(named("pg23"));
  CHECK(pg.dim == 12);
  CHECK(pg.is_lineality);
}

TEST_CASE("fans of the worked examples") {
  const Fan u24 = enumerate_fan(uniform(2, 4));
  CHECK(u24.maximal_cones.size() == 3);
  CHECK(u24.lineality_dim == 3);
  CHECK_FALSE(u24.is_linear_space);
  CHECK(u24.complete);
  for (const auto& c : u24.maximal_cones) CHECK(c.dim == 4);
  CHECK(kinds(u24) == std::multiset<SubdivisionKind>{SubdivisionKind::Split, SubdivisionKind::Split, SubdivisionKind::Split});

  const Fan ex16 = enumerate_fan(named("example_16basis"));
  CHECK(ex16.matroid->basis_count() == 17);
  CHECK(ex16.maximal_cones.size() == 3);
  CHECK(ex16.lineality_dim == 5);
  for (const auto& c : ex16.maximal_cones) CHECK(c.dim == 6);
  CHECK(kinds(ex16) == std::multiset<SubdivisionKind>{SubdivisionKind::Split, SubdivisionKind::ThreeSplit,
                                                      SubdivisionKind::ThreeSplit});

  const Matroid m14 = named("example_14basis");
  const Fan ex14 = enumerate_fan(m14);
  CHECK(ex14.maximal_cones.size() == 3);
  CHECK(ex14.lineality_dim == 5);
  std::set<std::string> planes;
  for (const auto& c : ex14.maximal_cones) {
    CHECK(c.dim == 6);
    const auto cls = classify_subdivision(regular_subdivision(at(ex14, c.witness)));
    REQUIRE(cls.hyperplane);
    planes.insert(to_string(*cls.hyperplane));
  }
  const auto canon = [&](std::vector<int> a, int r) {
    VectorXq v(6);
    for (int i = 0; i < 6; ++i) v(i) = a[static_cast<std::size_t>(i)];
    return to_string(canonical_hyperplane(m14, v, r));
  };
  CHECK(planes == std::set<std::string>{canon({0, 0, 0, 1, 1, 1}, 2), canon({0, 0, 1, 0, 1, 1}, 2),
                                        canon({0, 0, 1, 1, 0, 0}, 1)});

  const Fan sq = enumerate_fan(direct_sum(uniform(1, 2), uniform(1, 2)));
  CHECK(sq.is_linear_space);
  CHECK(sq.lineality_dim == 2);
  CHECK(sq.maximal_cones.size() == 1);
  CHECK(sq.maximal_cones.front().dim == 2);
}

TEST_CASE("uniform rank two fans count trivalent trees") {
  for (int n : {4, 5}) {
    const Fan f = enumerate_fan(uniform(2, n));
    CHECK(f.maximal_cones.size() == oracle::trivalent_tree_count(n));
    for (const auto& c : f.maximal_cones) CHECK(c.dim == f.lineality_dim + n - 3);
  }
  CHECK(oracle::trivalent_tree_count(6) == 105);
}

TEST_CASE("cone dimensions and the lineality cone") {
  for (const Matroid& m : {uniform(2, 4), uniform(2, 5), named("example_16basis"), named("example_14basis")}) {
    const Fan f = enumerate_fan(m);
    int at_lineality = 0;
    for (const auto& c : f.cones) {
      CHECK(c.dim >= f.lineality_dim);
      if (c.dim == f.lineality_dim) {
        ++at_lineality;
        // the cone of w = 0, which only the lineality space reaches
        CHECK(regular_subdivision(at(f, c.witness)).cells.size() == 1);
      }
    }
    CHECK(at_lineality == 1);
  }
}

TEST_CASE("plucker and secondary fan structures agree") {
  gen::Rng rng(31);
  for (const Matroid& m : {uniform(2, 5), named("example_16basis"), named("example_14basis"),
                           direct_sum(uniform(2, 4), uniform(1, 2))}) {
    const Fan f = enumerate_fan(m);
    std::vector<Subdivision> seen;
    for (const auto& c : f.cones) {
      const WeightVector a = at(f, gen::cone_point(rng, c));
      const WeightVector b = at(f, gen::cone_point(rng, c));
      REQUIRE(is_valuated(a).valuated);
      REQUIRE(is_valuated(b).valuated);
      CHECK(c.closure_contains(a.values()));
      const auto sa = regular_subdivision(a);
      CHECK(sa == regular_subdivision(b));
      CHECK(sign_vector(a) == sign_vector(b));
      for (const auto& s : seen) CHECK_FALSE(s == sa);
      seen.push_back(sa);
    }
  }
}

TEST_CASE("maximal cones are not in the closure of one another") {
  const Fan f = enumerate_fan(uniform(2, 5));
  for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
    for (std::size_t j = 0; j < f.maximal_cones.size(); ++j) {
      if (i != j) CHECK_FALSE(f.maximal_cones[i].closure_contains(f.maximal_cones[j].witness));
    }
  }
  for (const auto& c : f.cones) {
    const bool covered = std::any_of(f.maximal_cones.begin(), f.maximal_cones.end(),
                                     [&](const Cone& big) { return big.closure_contains(c.witness); });
    CHECK(covered);
  }
}

TEST_CASE("budget") {
  try {
    enumerate_fan(uniform(2, 5), 5);
    FAIL("expected the budget to run out");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK_FALSE(e.partial.complete);
    CHECK(e.partial.nodes <= 5);
  }
  const Fan full = enumerate_fan(uniform(2, 5));
  CHECK(full.nodes > 5);
  CHECK_NOTHROW(enumerate_fan(uniform(2, 5), full.nodes));

  const auto unknown = is_indecomposable(uniform(3, 6), 1);
  CHECK(unknown.verdict == Decomposability::Unknown);
}

TEST_CASE("direct sums multiply cone counts") {
  const Fan a = enumerate_fan(direct_sum(uniform(2, 4), uniform(1, 2)));
  CHECK(a.maximal_cones.size() == 3);
  CHECK(a.lineality_dim == lineality_dim(uniform(2, 4)) + lineality_dim(uniform(1, 2)));
  const Fan b = enumerate_fan(direct_sum(uniform(2, 4), uniform(2, 4)));
  CHECK(b.maximal_cones.size() == 9);
  CHECK(b.lineality_dim == 3 + 3);
  for (const auto& c : b.maximal_cones) CHECK(c.dim == b.lineality_dim + 2);
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(named("fano")).verdict == Decomposability::Indecomposable);
  CHECK(is_indecomposable(named("pg23")).verdict == Decomposability::Indecomposable);
  const auto u24 = is_indecomposable(uniform(2, 4));
  REQUIRE(u24.verdict == Decomposability::Decomposable);
  REQUIRE(u24.witness);
  REQUIRE(u24.subdivision);
  CHECK(is_valuated(*u24.witness).valuated);
  CHECK(*u24.subdivision == regular_subdivision(*u24.witness));
  CHECK(classify_subdivision(*u24.subdivision).kind == SubdivisionKind::Split);
  CHECK(is_indecomposable(direct_sum(uniform(1, 2), uniform(1, 2))).verdict == Decomposability::Indecomposable);
}

TEST_CASE("indecomposability is stable under duality") {
  gen::Rng rng(33);
  std::vector<Matroid> corpus{uniform(2, 4), uniform(2, 5), uniform(3, 6), named("fano"), named("example_14basis"),
                              named("example_16basis"), named("square_pyramid"),
                              graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
  for (int i = 0; i < 8; ++i) corpus.push_back(gen::random_linear_matroid(rng, 3, gen::uniform_int(rng, 5, 7)));
  for (const auto& m : corpus) {
    const auto a = is_indecomposable(m);
    const auto b = is_indecomposable(dual(m));
    CHECK(a.verdict == b.verdict);
    CHECK(a.verdict != Decomposability::Unknown);
    CHECK((a.verdict == Decomposability::Indecomposable) == octahedra(m).empty());
  }
}

TEST_CASE("tensor and phi") {
  const Matroid u12 = uniform(1, 2);
  CHECK(tensor_weights(WeightVector::zero(u12), WeightVector::zero(u12)) ==
        WeightVector::zero(direct_sum(u12, u12)));
  const Rational a(3, 2);
  const Rational b(-5);
  CHECK(tensor_weights(weights(u12, {0, a}), weights(u12, {0, b})) ==
        weights(direct_sum(u12, u12), {0, b, a, a + b}));

  const Matroid u24 = uniform(2, 4);
  const Matroid sum = direct_sum(u24, u12);
  CHECK(error_of([&] { phi(WeightVector::zero(sum), u24, u12, Subset{1, 2, 3}, Subset{1}); }) ==
        ErrorCode::NotABasis);
  CHECK(error_of([&] {
          tensor_weights(weights(named("square_pyramid"), {0, 0, 1, 1, 1}), WeightVector::zero(u12));
        }) == ErrorCode::NotValuated);
}

TEST_CASE("tensor and phi are inverse modulo lineality") {
  gen::Rng rng(35);
  const std::vector<std::pair<Matroid, Matroid>> pairs{
      {uniform(2, 4), uniform(1, 2)}, {uniform(2, 4), uniform(2, 4)}, {uniform(2, 5), uniform(1, 3)}};
  for (const auto& [m1, m2] : pairs) {
    const Fan f1 = enumerate_fan(m1);
    const Fan f2 = enumerate_fan(m2);
    for (int it = 0; it < 30; ++it) {
      const auto& c1 = f1.cones[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(f1.cones.size()) - 1))];
      const auto& c2 = f2.cones[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(f2.cones.size()) - 1))];
      const WeightVector w1(m1, gen::cone_point(rng, c1));
      const WeightVector w2(m2, gen::cone_point(rng, c2));
      const WeightVector t = tensor_weights(w1, w2);
      CHECK(is_valuated(t).valuated);

      const Subset b1 = m1.bases()[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(m1.basis_count()) - 1))];
      const Subset b2 = m2.bases()[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(m2.basis_count()) - 1))];
      const auto [p1, p2] = phi(t, m1, m2, b1, b2);
      CHECK(equal_modulo_lineality(p1, w1));
      CHECK(equal_modulo_lineality(p2, w2));
      CHECK(equal_modulo_lineality(tensor_weights(p1, p2), t));

      // any other choice of bases agrees modulo lineality
      const auto [q1, q2] = phi(t, m1, m2, m1.bases().back(), m2.bases().front());
      CHECK(equal_modulo_lineality(p1, q1));
      CHECK(equal_modulo_lineality(p2, q2));

      // the sign vector of the product is a function of the factors' sign vectors
      const WeightVector w1b = gen::lineality_shift(rng, WeightVector(m1, gen::cone_point(rng, c1)));
      const WeightVector w2b = gen::lineality_shift(rng, WeightVector(m2, gen::cone_point(rng, c2)));
      REQUIRE(sign_vector(w1b) == sign_vector(w1));
      REQUIRE(sign_vector(w2b) == sign_vector(w2));
      CHECK(sign_vector(tensor_weights(w1b, w2b)) == sign_vector(t));
    }
  }
}

TEST_CASE("parallel projection") {
  const Matroid m = Matroid::from_bases(3, 2, {Subset{1, 2}, Subset{1, 3}});
  const WeightVector p = parallel_projection(WeightVector::zero(m), 2, 3);
  CHECK(p.matroid() == Matroid::from_bases(2, 2, {Subset{1, 2}}));
  CHECK(p == WeightVector::zero(p.matroid()));
  CHECK(lineality_dim(m) == lineality_dim(p.matroid()) + 1);

  CHECK(error_of([] { parallel_projection(WeightVector::zero(uniform(2, 4)), 1, 2); }) == ErrorCode::NotParallel);

  // relabeling: deleting element 2 of {1, 2, 3} with 2 parallel to 3 keeps 3 as the new 2
  const Matroid r = Matroid::from_bases(3, 2, {Subset{1, 2}, Subset{1, 3}});
  const WeightVector rw = weights(r, {5, 7});
  const WeightVector rp = parallel_projection(rw, 3, 2);
  CHECK(rp.matroid() == Matroid::from_bases(2, 2, {Subset{1, 2}}));
  CHECK(rp[0] == 7);
}

TEST_CASE("parallel projection preserves valuations and sign vectors") {
  gen::Rng rng(37);
  const Matroid u24 = uniform(2, 4);
  const Matroid big = add_parallel(u24, 4);
  CHECK(lineality_dim(big) == lineality_dim(u24) + 1);
  const Fan f = enumerate_fan(u24);
  const auto small_rel = relations(u24, RelationFilter::SkipAllInfinite);
  const auto big_rel = relations(big, RelationFilter::SkipAllInfinite);
  for (int it = 0; it < 120; ++it) {
    const auto& c = f.cones[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(f.cones.size()) - 1))];
    const WeightVector w0(u24, gen::cone_point(rng, c));
    const WeightVector w = gen::lineality_shift(rng, extend_parallel(w0, 4, big, gen::rational(rng, 4, 3)));
    REQUIRE(is_valuated(w).valuated);
    const WeightVector p = parallel_projection(w, 4, 5);
    CHECK(p.matroid() == u24);
    CHECK(is_valuated(p).valuated);
    CHECK(equal_modulo_lineality(p, w0));
    // relations avoiding element 5 keep their minimizers
    const auto sp = sign_vector(p);
    const auto sw = sign_vector(w);
    std::map<std::pair<Subset::Bits, Subset::Bits>, TermSet> by_key;
    for (std::size_t i = 0; i < big_rel.size(); ++i) {
      by_key[{big_rel[i].s.bits(), big_rel[i].quad_set().bits()}] = sw[i];
    }
    for (std::size_t i = 0; i < small_rel.size(); ++i) {
      CHECK(by_key.at({small_rel[i].s.bits(), small_rel[i].quad_set().bits()}) == sp[i]);
    }
    CHECK(sp == sign_vector(w0));
  }
}
