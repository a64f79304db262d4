#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "lira/costrat_orbits.hpp"
#include "lira/costratified.hpp"

using namespace lira;
using Catch::Matchers::ContainsSubstring;

namespace {

// Independent dimension oracle: count Gelfand-Tsetlin patterns with the given
// top row by enumerating interlacing rows.
long long gt_count(const std::vector<int>& lambda) {
  if (lambda.size() <= 1) return 1;
  std::vector<int> mu(lambda.size() - 1);
  long long total = 0;
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == mu.size()) {
      total += gt_count(mu);
      return;
    }
    for (int v = lambda[pos + 1]; v <= lambda[pos]; ++v) {
      mu[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

TEST_CASE("highest-weight monomials enumerate level decompositions") {
  CHECK(highest_weight_monomials(2, 3) ==
        std::vector<std::vector<int>>{{3, 0}, {1, 1}});
  CHECK(highest_weight_monomials(1, 4) == std::vector<std::vector<int>>{{4}});
  CHECK(highest_weight_monomials(3, 2) ==
        std::vector<std::vector<int>>{{2, 0, 0}, {0, 1, 0}});
  CHECK(highest_weight_monomials(2, 0) == std::vector<std::vector<int>>{{0, 0}});
  for (const auto& m : highest_weight_monomials(3, 6)) {
    int level = 0;
    for (size_t j = 0; j < m.size(); ++j) level += (int)(j + 1) * m[j];
    CHECK(level == 6);
  }
}

TEST_CASE("weight vectors are doubled partial sums") {
  CHECK(monomial_weight({2}, 2) == std::vector<int>{4, 0});
  CHECK(monomial_weight({0, 1}, 2) == std::vector<int>{2, 2});
  CHECK(monomial_weight({1, 1}, 2) == std::vector<int>{4, 2});
  CHECK(monomial_weight({2, 0, 0}, 3) == std::vector<int>{4, 0, 0});
}

TEST_CASE("the product formula agrees with pattern counting") {
  std::vector<std::vector<int>> weights{
      {0, 0}, {2, 0}, {4, 0}, {6, 0}, {2, 2}, {4, 2}, {6, 2}, {6, 4},
      {2, 0, 0}, {4, 2, 0}, {2, 2, 0}, {6, 2, 2}, {4, 4, 2}};
  for (const auto& lam : weights) {
    INFO("lambda = " << lam[0]);
    CHECK(weyl_dim(lam) == gt_count(lam));
  }
  CHECK(weyl_dim({4, 2}) == 3);
  CHECK(weyl_dim({2, 2}) == 1);
  CHECK(weyl_dim({4, 2, 0}) == 27);
}

TEST_CASE("reduced space dimensions") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(reduced_space_dim(1, 1, k) == 1);
    CHECK(reduced_space_dim(2, 1, k) == 2 * k + 1);
  }
  CHECK(reduced_space_dim(2, 2, 2) == 6);
  CHECK(reduced_space_dim(2, 2, 3) == 10);
  CHECK(reduced_space_dim(3, 2, 2) == 21);
}

TEST_CASE("restriction profiles split total = image + kernel") {
  RestrictionProfile p1 = restriction_profile(2, 2, 1);
  CHECK(p1.total == 3);
  CHECK(p1.image == 3);
  CHECK(p1.kernel == 0);
  RestrictionProfile p2 = restriction_profile(2, 2, 2);
  CHECK(p2.total == 6);
  CHECK(p2.image == 5);
  CHECK(p2.kernel == 1);
  RestrictionProfile p3 = restriction_profile(2, 2, 3);
  CHECK(p3.total == 10);
  CHECK(p3.image == 7);
  CHECK(p3.kernel == 3);
  // The surviving blocks match the one-particle system.
  for (int k = 1; k <= 3; ++k)
    CHECK(restriction_profile(2, 2, k).image == reduced_space_dim(2, 1, k));
}

TEST_CASE("invariant dimensions equal reduced dimensions at doubled degree") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int s = 1; s <= ell; ++s)
      for (int k = 1; k <= 3; ++k) {
        INFO("ell=" << ell << " s=" << s << " k=" << k);
        CHECK(invariant_dim(ell, s, (uint32_t)(2 * k)) == reduced_space_dim(ell, s, k));
        CHECK(invariant_dim(ell, s, (uint32_t)(2 * k - 1)) == 0);
      }
  CHECK(invariant_dim(3, 2, 4) == reduced_space_dim(3, 2, 2));
  CHECK(invariant_dim(2, 2, 0) == 1);
}

TEST_CASE("invariant computation guards its feasible range") {
  CHECK_THROWS_AS(invariant_dim(4, 2, 2), UnsupportedError);
  CHECK_THROWS_AS(invariant_dim(1, 1, 12), UnsupportedError);
  CHECK_THROWS_AS(costratified_chain(4, 1), UnsupportedError);
  CHECK_THROWS_AS(costratified_chain(2, 13), UnsupportedError);
}

TEST_CASE("the reduced-space chain is a costratified space") {
  Costratified C = costratified_chain(2, 2);
  CHECK(C.strata == std::vector<std::string>{"S1", "S2"});
  CHECK(C.dims == std::vector<int>{5, 6});
  CHECK(C.index("S2") == 1);
  CHECK(C.index("nope") == -1);
  Report rep = verify_costratified(C);
  INFO(rep.text());
  CHECK(rep.ok());

  // The single structure map is the identity block onto the surviving part.
  const Mat& m = C.maps.at({1, 0});
  REQUIRE(m.rows == 5);
  REQUIRE(m.cols == 6);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(m.at(r, c) == (r == c ? Scalar(1) : Scalar(0)));

  Costratified C3 = costratified_chain(3, 2);
  CHECK(C3.dims == std::vector<int>{15, 21, 21});
  Report rep3 = verify_costratified(C3);
  INFO(rep3.text());
  CHECK(rep3.ok());
  CHECK_THAT(rep3.text(), ContainsSubstring("1 triangles"));
}

TEST_CASE("functoriality catches a perturbed composite") {
  Costratified C = costratified_chain(3, 2);
  C.maps.at({2, 0}).at(0, 0) = Scalar(2);
  Report rep = verify_costratified(C);
  REQUIRE_FALSE(rep.ok());
  CHECK_THAT(rep.first_failure()->name, ContainsSubstring("functoriality"));
  CHECK_THAT(rep.first_failure()->witness, ContainsSubstring("S3 -> S2 -> S1"));
}

TEST_CASE("operator families must intertwine with the structure maps") {
  Costratified C = costratified_chain(2, 2);
  C.op_labels = {"H"};
  Mat h1 = Mat::identity(5);
  for (int t = 0; t < 5; ++t) h1.at(t, t) = Scalar(3);
  Mat h2 = Mat::identity(6);
  for (int t = 0; t < 5; ++t) h2.at(t, t) = Scalar(3);
  h2.at(5, 5) = Scalar(7);  // acts differently on the kernel block only
  C.ops[0] = {h1};
  C.ops[1] = {h2};
  Report ok = verify_costratified(C);
  INFO(ok.text());
  CHECK(ok.ok());
  CHECK_THAT(ok.text(), ContainsSubstring("intertwine"));

  h2.at(0, 0) = Scalar(7);  // now it disagrees on a surviving direction
  C.ops[1] = {h2};
  Report bad = verify_costratified(C);
  REQUIRE_FALSE(bad.ok());
  CHECK_THAT(bad.first_failure()->name, ContainsSubstring("intertwine"));

  C.ops.erase(1);
  Report missing = verify_costratified(C);
  REQUIRE_FALSE(missing.ok());
  CHECK_THAT(missing.first_failure()->name, ContainsSubstring("complete"));
}

TEST_CASE("poset violations are rejected") {
  Costratified C;
  C.strata = {"A", "B"};
  C.dims = {1, 1};
  C.order = {{0, 1}, {1, 0}};
  C.maps.emplace(std::make_pair(1, 0), Mat::identity(1));
  C.maps.emplace(std::make_pair(0, 1), Mat::identity(1));
  Report rep = verify_costratified(C);
  REQUIRE_FALSE(rep.ok());
  CHECK_THAT(rep.first_failure()->name, ContainsSubstring("poset"));

  Costratified D = costratified_chain(2, 1);
  D.maps.clear();
  Report rep2 = verify_costratified(D);
  REQUIRE_FALSE(rep2.ok());
  CHECK_THAT(rep2.first_failure()->name, ContainsSubstring("structure map"));

  Costratified E = costratified_chain(2, 1);
  E.maps.emplace(std::make_pair(0, 0), Mat::identity(3));
  E.maps.at({0, 0}).at(0, 0) = Scalar(2);
  Report rep3 = verify_costratified(E);
  REQUIRE_FALSE(rep3.ok());
  CHECK_THAT(rep3.first_failure()->name, ContainsSubstring("declared maps match"));

  auto leq = order_closure(costratified_chain(3, 1));
  CHECK(leq[0][2]);
  CHECK_FALSE(leq[2][0]);
  CHECK(leq[1][1]);
}

TEST_CASE("chain dimensions follow the restriction profiles") {
  for (int k = 0; k <= 3; ++k) {
    Costratified C = costratified_chain(2, k);
    REQUIRE(C.dims.size() == 2);
    CHECK(C.dims[0] == (int)reduced_space_dim(2, 1, k));
    CHECK(C.dims[1] == (int)reduced_space_dim(2, 2, k));
    CHECK(verify_costratified(C).ok());
  }
}
