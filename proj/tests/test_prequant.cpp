#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "lira/builtins.hpp"
#include "lira/prequant.hpp"

using namespace lira;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("quantized coordinates act as the standard operators") {
  Prequantum Q = plane_prequantum();  // theta = p dq
  const Algebra& A = Q.P.A;
  Poly q = A.var("q"), p = A.var("p");

  // q-hat = -i d/dp + q, p-hat = i d/dq.
  Operator qh = quantize(Q, q), ph = quantize(Q, p);
  CHECK(qh(A.one()) == q);
  CHECK(qh(p) == A.parse("q*p - i"));
  CHECK(ph(A.one()).is_zero());
  CHECK(ph(q) == A.parse("i"));
  CHECK(ph(p * q) == A.parse("i*p"));

  // i[q-hat, p-hat] = identity = quantize({q,p}).
  Operator comm = op_commutator(qh, ph);
  auto w = op_mismatch_witness(
      A, [&](const Poly& v) { return Scalar::i() * comm(v); },
      quantize(Q, Q.P.bracket(q, p)), 4);
  CHECK_FALSE(w.has_value());
}

TEST_CASE("constants quantize to scalar multiplication") {
  Prequantum Q = plane_prequantum();
  const Algebra& A = Q.P.A;
  Operator ch = quantize(Q, A.constant(Scalar(2, 3)));
  for (const char* src : {"1", "q", "p^2", "q*p^3"}) {
    Poly v = A.parse(src);
    CHECK(ch(v) == Scalar(2, 3) * v);
  }
}

TEST_CASE("extension elements act through chi") {
  Prequantum Q = plane_prequantum();
  const Algebra& A = Q.P.A;
  // chi(a, 0) = i*a*Id.
  Operator ca = prequant_op(Q, ExtElement{A.var("q"), Q.P.zero_diff()});
  CHECK(ca(A.var("p")) == A.parse("i*q*p"));
  // chi(0, dq) = pi#(dq) = d/dp (theta pairs to zero on it).
  Operator cq = prequant_op(Q, ExtElement{A.zero(), Q.P.gen_diff(0)});
  CHECK(cq(A.var("p")) == A.one());
  CHECK(cq(A.var("q")).is_zero());
  CHECK(theta_pairing(Q, anchor_sharp(Q.P, Q.P.gen_diff(0))).is_zero());
  CHECK(theta_pairing(Q, anchor_sharp(Q.P, Q.P.gen_diff(1))) == A.parse("-p"));
}

TEST_CASE("the Dirac condition holds for the standard potential") {
  Prequantum Q = plane_prequantum();
  const Algebra& A = Q.P.A;
  Poly q = A.var("q"), p = A.var("p");
  std::vector<std::pair<Poly, Poly>> pairs{
      {q, p}, {q * q, p}, {q * p, p * p}};
  Report rep = check_dirac(Q, pairs, 4);
  INFO(rep.text());
  CHECK(rep.ok());
  CHECK(rep.items.size() == 4);  // constants + three pairs
  for (const auto& it : rep.items) CHECK(it.status == Status::pass);
}

TEST_CASE("the flipped potential fails with an orientation hint") {
  Prequantum Q = plane_prequantum();
  Q.theta[0] = -Q.theta[0];  // theta = -p dq
  const Algebra& A = Q.P.A;
  Report rep = check_dirac(Q, {{A.var("q"), A.var("p")}}, 3);
  REQUIRE_FALSE(rep.ok());
  const CheckItem* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK_THAT(f->name, ContainsSubstring("Dirac condition for (q, p)"));
  CHECK_THAT(f->witness, ContainsSubstring("on 1: 3 vs 1"));
  CHECK_THAT(f->witness, ContainsSubstring("the pair passes with -theta"));
}

TEST_CASE("a potential with the opposite curvature fails") {
  Prequantum Q = plane_prequantum();
  Q.theta[0] = Q.P.A.zero();
  Q.theta[1] = Q.P.A.var("q");  // theta = q dp
  Report rep = check_dirac(Q, {{Q.P.A.var("q"), Q.P.A.var("p")}}, 3);
  REQUIRE_FALSE(rep.ok());
  CHECK_THAT(rep.first_failure()->witness, ContainsSubstring("-theta"));
}

TEST_CASE("full prequantum verification of the plane") {
  Report rep = verify_prequantum(plane_prequantum(), 3);
  INFO(rep.text());
  CHECK(rep.ok());
  std::string text = rep.text();
  CHECK_THAT(text, ContainsSubstring("algebra elements act as i*a*Id"));
  CHECK_THAT(text, ContainsSubstring("connection Leibniz rule"));
  CHECK_THAT(text, ContainsSubstring("chi is a Lie morphism into operators"));
  CHECK_THAT(text, ContainsSubstring("Lie morphism into the extension [exact]"));
  CHECK_THAT(text, ContainsSubstring("Dirac condition for (q, p)"));
}

TEST_CASE("theta must cover every generator differential") {
  Prequantum Q = plane_prequantum();
  Q.theta.pop_back();
  Report rep = verify_prequantum(Q, 2);
  REQUIRE_FALSE(rep.ok());
  CHECK_THAT(rep.first_failure()->name, ContainsSubstring("one coefficient per generator"));
}
