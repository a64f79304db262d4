#pragma once

// Built-in example structures: the polynomial line/plane with coordinate
// vector fields, sl2 over the scalars, the symplectic plane with its
// standard potential, the complex plane with conjugation, a log-symplectic
// plane, and the cone algebra Q[x1,x2,r]/(r^2 - x1^2 - x2^2) carrying the
// rotation-invariant Poisson structure.

#include <string>
#include <vector>

#include "lie_rinehart.hpp"
#include "poisson.hpp"
#include "prequant.hpp"

namespace lira {

// Q[x1..xn] with the full module of coordinate vector fields.
inline LieRinehart de_rham(int n) {
  LieRinehart L;
  std::vector<std::string> vars;
  for (int k = 1; k <= n; ++k) vars.push_back("x" + std::to_string(k));
  L.A = Algebra::free(vars);
  for (int s = 0; s < n; ++s) {
    L.basis.push_back("d/dx" + std::to_string(s + 1));
    Derivation d = Derivation::zero(L.A);
    d.images[(size_t)s] = L.A.one();
    L.anchors.push_back(d);
  }
  return L;
}

// sl2 over the ground field: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieRinehart sl2() {
  LieRinehart L;
  L.A = Algebra::scalars();
  L.basis = {"e", "f", "h"};
  for (int k = 0; k < 3; ++k) L.anchors.push_back(Derivation::zero(L.A));
  auto unit = [&](int b, Scalar c) {
    LElement el;
    el.emplace(b, L.A.constant(std::move(c)));
    return el;
  };
  L.table.emplace(std::make_pair(0, 1), unit(2, Scalar(1)));    // [e,f] = h
  L.table.emplace(std::make_pair(0, 2), unit(0, Scalar(-2)));   // [e,h] = -2e
  L.table.emplace(std::make_pair(1, 2), unit(1, Scalar(2)));    // [f,h] = 2f
  return L;
}

// The symplectic plane: {q, p} = 1.
inline Poisson poisson_plane() {
  Poisson P;
  P.A = Algebra::free({"q", "p"});
  P.table.emplace(std::make_pair(0, 1), P.A.one());
  return P;
}

// theta = p dq, the standard potential.
inline Prequantum plane_prequantum() {
  Prequantum Q;
  Q.P = poisson_plane();
  Q.theta = Q.P.zero_diff();
  Q.theta[0] = Q.P.A.var("p");
  return Q;
}

// Q[z, zbar] with {z, zbar} = -2i and conjugation swapping the generators.
inline Poisson complex_plane() {
  Poisson P;
  P.A = Algebra::free({"z", "zbar"});
  P.table.emplace(std::make_pair(0, 1), P.A.constant(Scalar(0, -2)));
  P.involution = {1, 0};
  return P;
}

// {x, y} = x: the log-symplectic plane; x is a Casimir on the locus x = 0.
inline Poisson log_plane() {
  Poisson P;
  P.A = Algebra::free({"x", "y"});
  P.table.emplace(std::make_pair(0, 1), P.A.var("x"));
  return P;
}

inline Poisson zero_poisson(int n) {
  Poisson P;
  std::vector<std::string> vars;
  for (int k = 1; k <= n; ++k) vars.push_back("x" + std::to_string(k));
  P.A = Algebra::free(vars);
  return P;
}

// The cone: Q[x1,x2,r] / (r^2 - x1^2 - x2^2), precedence r > x1 > x2, with
// {x1,x2} = 2r, {x1,r} = 2x2, {x2,r} = -2x1 and the submodule rule
// r dr -> x1 dx1 + x2 dx2.
inline Poisson exotic_plane() {
  Poisson P;
  P.A = Algebra::presented({"r", "x1", "x2"}, {"r", "x1", "x2"}, {"r^2 - x1^2 - x2^2"});
  P.table.emplace(std::make_pair(0, 1), P.A.parse("-2*x2"));  // {r, x1}
  P.table.emplace(std::make_pair(0, 2), P.A.parse("2*x1"));   // {r, x2}
  P.table.emplace(std::make_pair(1, 2), P.A.parse("2*r"));    // {x1, x2}
  ModuleRule rule;
  rule.lead_mono = Mono{1, 0, 0};
  rule.lead_gen = 0;
  rule.tail = {P.A.zero(), P.A.var("x1"), P.A.var("x2")};
  P.module_rules.push_back(std::move(rule));
  return P;
}

// Same cone with the sign of {x2, r} flipped: generator Jacobi still holds,
// but the bracket no longer preserves the relation ideal.
inline Poisson exotic_plane_corrupted() {
  Poisson P = exotic_plane();
  P.table[std::make_pair(0, 2)] = P.A.parse("-2*x1");  // {r, x2} = -2*x1
  return P;
}

}  // namespace lira
