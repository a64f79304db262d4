#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "lira/quotient.hpp"

using namespace lira;
using Catch::Matchers::ContainsSubstring;

namespace {

Algebra cone() {
  return Algebra::presented({"r", "x1", "x2"}, {"r", "x1", "x2"}, {"r^2 - x1^2 - x2^2"});
}

}  // namespace

TEST_CASE("cone relation rewrites to normal form") {
  Algebra A = cone();
  REQUIRE(A.completion().confluent);
  CHECK(A.is_zero_mod(A.parse("r^2 - x1^2 - x2^2")));
  CHECK(A.normal_form(A.parse("r^2")) == A.parse("x1^2 + x2^2"));
  CHECK(A.equal_mod(A.parse("r^3"), A.parse("r*x1^2 + r*x2^2")));
  CHECK(A.equal_mod(A.parse("r^4"), A.parse("(x1^2 + x2^2)^2")));
  CHECK_FALSE(A.is_zero_mod(A.var("r")));
  CHECK(A.graded());
}

TEST_CASE("normal form is idempotent and multiplicative on the cone") {
  Algebra A = cone();
  auto window = A.monomial_window(2);
  REQUIRE(window.size() == 9);  // 1; r,x1,x2; x1^2,x1*x2,x2^2,r*x1,r*x2
  for (const auto& ma : window)
    for (const auto& mb : window) {
      Poly a = Poly::monomial(A.nvars(), ma, Scalar(1));
      Poly b = Poly::monomial(A.nvars(), mb, Scalar(1));
      Poly nf = A.normal_form(a * b);
      CHECK(A.normal_form(nf) == nf);
      CHECK(A.normal_form(A.normal_form(a) * A.normal_form(b)) == nf);
    }
}

TEST_CASE("completion closes critical pairs") {
  // x^2 -> y^2 and x*y -> 0 overlap on x^2*y; the closure needs y^3 -> 0.
  Algebra A = Algebra::presented({"x", "y"}, {"x", "y"}, {"x^2 - y^2", "x*y"});
  REQUIRE(A.completion().confluent);
  CHECK(A.completion().rules_added > 0);
  CHECK(A.is_zero_mod(A.parse("y^3")));
  CHECK(A.is_zero_mod(A.parse("x^2*y")));
  CHECK(A.monomial_basis(2).size() == 1);  // y^2 only
  CHECK(A.monomial_basis(3).empty());
  CHECK(A.monomial_window(6).size() == 4);  // 1, x, y, y^2
}

TEST_CASE("bounded completion reports failure instead of looping") {
  CompletionBounds tight;
  tight.max_rule_degree = 2;  // the needed rule y^3 -> 0 exceeds this
  Algebra A = Algebra::presented({"x", "y"}, {"x", "y"}, {"x^2 - y^2", "x*y"}, tight);
  CHECK_FALSE(A.completion().confluent);
  CHECK_FALSE(A.completion().message.empty());
}

TEST_CASE("requotient layers extra relations over a base presentation") {
  Algebra base = cone();
  std::vector<Poly> rels = base.relations();
  rels.push_back(base.var("x2"));
  Algebra A = Algebra::requotient(base, rels);
  REQUIRE(A.completion().confluent);
  CHECK(A.names() == base.names());
  CHECK(A.is_zero_mod(A.parse("x2")));
  CHECK(A.equal_mod(A.parse("r^2"), A.parse("x1^2")));
  CHECK_FALSE(base.is_zero_mod(base.var("x2")));  // the base is untouched
}

TEST_CASE("monomial basis counts graded slices") {
  Algebra A = cone();
  CHECK(A.monomial_basis(0).size() == 1);
  CHECK(A.monomial_basis(1).size() == 3);
  CHECK(A.monomial_basis(2).size() == 5);  // r^2 is reducible
  CHECK(A.monomial_basis(3).size() == 7);  // 2d+1 functions on the cone
  CHECK(A.monomial_basis(4).size() == 9);
  for (const auto& m : A.monomial_basis(3)) {
    CHECK(mono_degree(m) == 3);
    CHECK(A.mono_irreducible(m));
  }
  Algebra F = Algebra::free({"x", "y"});
  CHECK(F.monomial_basis(5).size() == 6);
  CHECK(F.monomial_window(3).size() == 10);
  CHECK_FALSE(Algebra::presented({"x", "y"}, {"x", "y"}, {"x^2 - y"}).graded());
}

TEST_CASE("variable declarations are validated") {
  CHECK_THROWS_AS(Algebra::presented({"i"}, {"i"}, {}), ParseError);
  CHECK_THROWS_AS(Algebra::presented({"x", "x"}, {"x", "x"}, {}), ParseError);
  CHECK_THROWS_AS(Algebra::presented({"x", "y"}, {"x"}, {}), ParseError);
  CHECK_THROWS_AS(Algebra::presented({"x", "y"}, {"x", "z"}, {}), ParseError);
  CHECK_THROWS_AS(cone().slot("q"), ParseError);
  CHECK(cone().slot("x2") == 2);
}

TEST_CASE("derivations descend exactly when they kill the relations") {
  Algebra A = cone();

  Derivation bad = Derivation::zero(A);  // d/dx1 does not preserve the cone
  bad.images[(size_t)A.slot("x1")] = A.one();
  auto w = bad.ill_defined_witness(A);
  REQUIRE(w.has_value());
  CHECK_THAT(*w, ContainsSubstring("does not preserve relation"));

  Derivation rot = Derivation::zero(A);  // rotation: well defined
  rot.images[(size_t)A.slot("x1")] = -A.var("x2");
  rot.images[(size_t)A.slot("x2")] = A.var("x1");
  CHECK_FALSE(rot.ill_defined_witness(A).has_value());
  CHECK(rot.apply(A, A.parse("x1^2")) == A.parse("-2*x1*x2"));

  Derivation euler = Derivation::zero(A);  // kills the relation only mod the ideal
  for (int s = 0; s < A.nvars(); ++s) euler.images[(size_t)s] = A.var(s);
  CHECK_FALSE(euler.ill_defined_witness(A).has_value());
}

TEST_CASE("derivation algebra on the line") {
  Algebra A = Algebra::free({"x"});
  Derivation ddx = Derivation::zero(A);
  ddx.images[0] = A.one();
  Derivation xddx = scale(A, A.var("x"), ddx);
  CHECK(xddx.apply(A, A.parse("x^3")) == A.parse("3*x^3"));
  CHECK(derivation_equal(A, commutator(A, ddx, xddx), ddx));
  CHECK(derivation_equal(A, xddx - xddx, Derivation::zero(A)));
  CHECK(derivation_equal(A, ddx + ddx, scale(A, A.constant(Scalar(2)), ddx)));
  CHECK(derivation_str(A, xddx) == "(x -> x)");
}
