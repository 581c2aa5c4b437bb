#include "doctest.h"
#include "efsm/error.hpp"
#include "efsm/model.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace efsm;

namespace {

ModelConfig one_dim(double eps = 0.3) {
  ModelConfig c;
  c.dimension = 1;
  c.eps = eps;
  return c;
}

Observation obs(Vector v, std::size_t t = 0) { return {std::move(v), t}; }

}  // namespace

TEST_CASE("the first observation always creates state 1") {
  EfsmModel m(ModelConfig{});
  CHECK(m.state_count() == 0);
  const ClusteringOutcome o = m.step_clustering(obs({10, 5, 5}));
  CHECK(o.kind == ClusteringOutcome::Kind::created);
  CHECK(o.id == 1);
  CHECK(m.state_count() == 1);
  CHECK(m.clusters()[0].potential == 1.0);
  CHECK(m.clusters()[0].center == Vector{10, 5, 5});
  CHECK(m.transitions().states() == 1);
}

TEST_CASE("low-potential input is assigned without structural change") {
  EfsmModel m(one_dim());
  m.step_clustering(obs({0.0}));
  const ClusteringOutcome o = m.step_clustering(obs({10.0}));
  CHECK(o.kind == ClusteringOutcome::Kind::assigned);
  CHECK(m.state_count() == 1);
}

TEST_CASE("both conditions replace the closest center") {
  // t = 3: P(5) = 2 / (2 + 25 + 25) exceeds the center's 2 / (2 + 0.85 * 100),
  // and |5 - 0| < eps.
  EfsmModel m(one_dim(6.0));
  m.step_clustering(obs({0.0}));
  m.step_clustering(obs({10.0}));
  const ClusteringOutcome o = m.step_clustering(obs({5.0}));
  CHECK(o.kind == ClusteringOutcome::Kind::center_replaced);
  CHECK(o.id == 1);
  CHECK(m.state_count() == 1);
  CHECK(m.clusters()[0].center == Vector{5.0});
  CHECK(m.clusters()[0].potential ==
        doctest::Approx(oracle::potential_from_history({{0.0}, {10.0}}, {5.0})).epsilon(1e-12));
  CHECK(m.clusters()[0].id == 1);
}

TEST_CASE("condition 1 alone creates a state and expands the matrices") {
  EfsmModel m(one_dim(0.3));
  m.step_clustering(obs({0.0}));
  m.step_clustering(obs({10.0}));
  const ClusteringOutcome o = m.step_clustering(obs({5.0}));
  CHECK(o.kind == ClusteringOutcome::Kind::created);
  CHECK(o.id == 2);
  CHECK(m.state_count() == 2);
  CHECK(m.transitions().states() == 2);
  CHECK(m.next_cluster_id() == 3);
}

TEST_CASE("clustering rejects bad observations") {
  EfsmModel m(ModelConfig{});
  CHECK_THROWS_AS(m.step_clustering(obs({1.0, 2.0})), Error);
  CHECK_THROWS_AS(m.step_clustering(obs({1.0, NAN, 2.0})), Error);
  CHECK_THROWS_AS(m.step_clustering(obs({1.0, INFINITY, 2.0})), Error);
  CHECK(m.state_count() == 0);
}

TEST_CASE("recognition") {
  SUBCASE("no states") {
    EfsmModel m(ModelConfig{});
    try {
      (void)m.recognize(obs({1, 2, 3}));
      FAIL("expected no_states");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_states);
    }
  }
  SUBCASE("single cluster") {
    EfsmModel m = fixture::with_clusters({{0.0, 0.0, 0.0}}, 1.0);
    CHECK(m.recognize(obs({40, -3, 9})).probs == Vector{1.0});
  }
  SUBCASE("midpoint between two equal clusters") {
    EfsmModel m = fixture::with_clusters({{0.0}, {2.0}}, 1.0);
    const StateEstimate e = m.recognize(obs({1.0}));
    CHECK(e.probs[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e.probs[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("at a center that center is the unique maximum") {
    EfsmModel m = fixture::with_clusters({{0.0, 0.0}, {3.0, 0.0}, {0.0, 3.0}}, 2.0);
    const StateEstimate e = m.recognize(obs({3.0, 0.0}));
    CHECK(e.argmax() == 1);
    CHECK(e.probs[1] > e.probs[0]);
    CHECK(e.probs[1] > e.probs[2]);
  }
  SUBCASE("hand-evaluated similarity") {
    // var = 1: eta = exp(-0.25), exp(-2.25).
    EfsmModel m = fixture::with_clusters({{0.0}, {2.0}}, 1.0);
    const StateEstimate e = m.recognize(obs({0.5}));
    const double a = std::exp(-0.25), b = std::exp(-2.25);
    CHECK(e.probs[0] == doctest::Approx(a / (a + b)).epsilon(1e-14));
  }
  SUBCASE("far from every center the distribution stays defined") {
    EfsmModel m = fixture::with_clusters({{0.0}, {2.0}}, 1e-3);
    const StateEstimate e = m.recognize(obs({1e4}));
    CHECK(is_simplex(e.probs));
    CHECK(e.argmax() == 1);
  }
}

TEST_CASE("scalar variance is the floored per-dimension mean") {
  Cluster c = Cluster::seeded(1, Vector{0.0, 0.0}, 1.0);
  CHECK(c.scalar_variance(1e-3) == 1e-3);
  c.add_member(Vector{2.0, 0.0});
  c.add_member(Vector{4.0, 0.0});
  // Members 0, 2, 4: variance 8/3 in x, 0 (floored) in y.
  CHECK(c.spread(1e-3)[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(c.spread(1e-3)[1] == 1e-3);
  CHECK(c.scalar_variance(1e-3) == doctest::Approx((8.0 / 3.0 + 1e-3) / 2).epsilon(1e-15));
}

TEST_CASE("assignment rules") {
  ModelConfig cfg;
  SUBCASE("nearest center") {
    cfg.assignment = AssignmentRule::nearest_center;
    EfsmModel m = fixture::with_clusters({{0.0}, {10.0}}, 1.0, cfg);
    // The estimate points at state 1, but the observation is nearer state 2.
    m.assign(obs({7.0}), StateEstimate{{0.9, 0.1}});
    CHECK(m.clusters()[0].member_count == 2);
    CHECK(m.clusters()[1].member_count == 3);
  }
  SUBCASE("max similarity") {
    cfg.assignment = AssignmentRule::max_similarity;
    EfsmModel m = fixture::with_clusters({{0.0}, {10.0}}, 1.0, cfg);
    m.assign(obs({7.0}), StateEstimate{{0.9, 0.1}});
    CHECK(m.clusters()[0].member_count == 3);
    CHECK(m.clusters()[1].member_count == 2);
  }
}

TEST_CASE("marginal matrix averages the actions") {
  const Matrix p1 = fixture::matrix({{0.9, 0.1}, {0.3, 0.7}});
  const Matrix p2 = fixture::matrix({{0.5, 0.5}, {0.1, 0.9}});
  const EfsmModel m = fixture::with_transitions({p1, p2});
  const Matrix pm = m.marginal_matrix();
  CHECK(pm(0, 0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(pm(0, 1) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(pm(1, 0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(pm(1, 1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(m.transition_matrix(1) == p1);
}

TEST_CASE("marginal of a single action or identical actions") {
  const Matrix p = fixture::matrix({{0.6, 0.4}, {0.25, 0.75}});
  CHECK(fixture::with_transitions({p}).marginal_matrix() == fixture::with_transitions({p}).transition_matrix(1));
  const Matrix pm = fixture::with_transitions({p, p, p}).marginal_matrix();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(pm(i, j) == doctest::Approx(p(i, j)).epsilon(1e-15));
}

TEST_CASE("one-step prediction") {
  const Matrix p = fixture::matrix({{0.6, 0.3, 0.1}, {0.2, 0.5, 0.3}, {0.0, 0.1, 0.9}});
  const EfsmModel m = fixture::with_transitions({p, Matrix::identity(3)});
  SUBCASE("identity keeps the distribution") {
    const StateEstimate cur{{0.2, 0.5, 0.3}};
    CHECK(m.predict_next(2, cur) == cur);
  }
  SUBCASE("one-hot picks the row of the prior state") {
    const StateEstimate out = m.predict_next(1, StateEstimate{{0, 1, 0}});
    for (std::size_t j = 0; j < 3; ++j) CHECK(out.probs[j] == doctest::Approx(p(1, j)).epsilon(1e-15));
  }
  SUBCASE("mixture is the transpose product") {
    const StateEstimate out = m.predict_next(1, StateEstimate{{0.5, 0.5, 0.0}});
    CHECK(out.probs[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(out.probs[1] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(out.probs[2] == doctest::Approx(0.2).epsilon(1e-15));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(m.predict_next(1, StateEstimate{{1.0, 0.0}}), Error);
    CHECK_THROWS_AS(m.predict_next(3, StateEstimate{{1.0, 0.0, 0.0}}), Error);
    CHECK_THROWS_AS(m.predict_k(1, StateEstimate{{1.0, 0.0, 0.0}}, 0), Error);
  }
}

TEST_CASE("first prediction starts from the uniform distribution") {
  const Matrix p1 = fixture::matrix({{1.0, 0.0}, {1.0, 0.0}});
  const Matrix p2 = fixture::matrix({{0.0, 1.0}, {0.5, 0.5}});
  const EfsmModel m = fixture::with_transitions({p1, p2});
  // P* = [[0.5, 0.5], [0.75, 0.25]]; P*ᵀ [0.5, 0.5] = [0.625, 0.375].
  const StateEstimate e = m.predict_from_uniform();
  CHECK(e.probs[0] == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(e.probs[1] == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("k-step prediction") {
  SUBCASE("identity marginal leaves the one-step result") {
    const EfsmModel m = fixture::with_transitions({Matrix::identity(3)});
    const StateEstimate cur{{0.1, 0.6, 0.3}};
    CHECK(m.predict_k(1, cur, 2) == m.predict_next(1, cur));
    CHECK(m.predict_k(1, cur, 1) == m.predict_next(1, cur));
  }
  SUBCASE("long horizons approach the stationary distribution") {
    const oracle::Mat raw = {{0.5, 0.3, 0.2}, {0.1, 0.6, 0.3}, {0.4, 0.1, 0.5}};
    const oracle::Vec pi = oracle::stationary_distribution(raw);
    const EfsmModel m = fixture::with_transitions({fixture::matrix(raw)});
    const StateEstimate out = m.predict_k(1, StateEstimate{{1, 0, 0}}, 200);
    for (std::size_t j = 0; j < 3; ++j) CHECK(out.probs[j] == doctest::Approx(pi[j]).epsilon(1e-10));
  }
}

TEST_CASE("tick identifies the previous action across a state creation") {
  ModelConfig cfg;
  cfg.dimension = 1;
  cfg.phi = 0.5;
  EfsmModel m(cfg);
  const auto first = m.tick(obs({0.0}), std::nullopt);
  CHECK(first.outcome.kind == ClusteringOutcome::Kind::created);
  CHECK(first.estimate.probs == Vector{1.0});
  m.tick(obs({10.0}), 3);
  const auto third = m.tick(obs({5.0}), 4);
  REQUIRE(third.outcome.kind == ClusteringOutcome::Kind::created);
  // The previous estimate had one state; it is padded before identification.
  CHECK(m.transitions().states() == 2);
  CHECK(m.transitions().audit().worst < 1e-12);
  CHECK(m.last_estimate() == third.estimate);
  m.reset_episode();
  CHECK_FALSE(m.last_estimate().has_value());
}

TEST_CASE("identical streams give identical models") {
  auto feed = [] {
    EfsmModel m(ModelConfig{});
    auto g = oracle::rng(11);
    std::optional<int> action;
    for (int t = 0; t < 2000; ++t) {
      m.tick(obs(oracle::random_vector(g, 3, 0.0, 30.0)), action);
      action = 1 + t % 17;
    }
    return m;
  };
  CHECK(feed() == feed());
}

TEST_CASE("configuration validation") {
  ModelConfig c;
  c.phi = 1.5;
  CHECK_THROWS_AS(EfsmModel{c}, Error);
  c = {};
  c.eps_bar = 0.0;
  CHECK_THROWS_AS(EfsmModel{c}, Error);
  c = {};
  c.normalization.scale = {1.0, 0.0, 1.0};
  c.normalization.offset = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(EfsmModel{c}, Error);
}

TEST_CASE("normalization is applied before clustering") {
  ModelConfig c;
  c.normalization.offset = {10.0, 0.0, 0.0};
  c.normalization.scale = {2.0, 1.0, 4.0};
  EfsmModel m(c);
  m.step_clustering(obs({14.0, 1.0, 8.0}));
  CHECK(m.clusters()[0].center == Vector{2.0, 1.0, 2.0});
}
