#pragma once

// Lie-Rinehart pairs: a commutative algebra A together with a Lie algebra L
// that is an A-module and acts on A by derivations (the anchor), subject to
// the two compatibility laws
//   [x, a*y] = x(a)*y + a*[x, y]        and        (a*x)(b) = a*(x(b)).
// L is presented by a finite free basis with anchor and bracket tables.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quotient.hpp"
#include "report.hpp"

namespace lira {

// Element of L: basis index -> coefficient in A.
using LElement = std::map<int, Poly>;

struct LieRinehart {
  Algebra A;
  std::vector<std::string> basis;
  std::vector<Derivation> anchors;                  // one per basis element
  std::map<std::pair<int, int>, LElement> table;    // brackets [e_i, e_j] for i < j

  int rank() const { return (int)basis.size(); }

  LElement gen(int i) const { return {{i, A.one()}}; }

  // [e_i, e_j] for any pair, with antisymmetry built in.
  LElement bracket_basis(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table.find({i, j});
    if (it == table.end()) return {};
    LElement out = it->second;
    if (flip)
      for (auto& [k, c] : out) c = -c;
    return out;
  }
};

inline void lel_add_term(const LieRinehart& L, LElement& x, int i, const Poly& c) {
  auto it = x.find(i);
  if (it == x.end()) {
    Poly n = L.A.normal_form(c);
    if (!n.is_zero()) x.emplace(i, std::move(n));
  } else {
    it->second = L.A.normal_form(it->second + c);
    if (it->second.is_zero()) x.erase(it);
  }
}

inline LElement lel_add(const LieRinehart& L, const LElement& x, const LElement& y) {
  LElement out = x;
  for (const auto& [i, c] : y) lel_add_term(L, out, i, c);
  return out;
}

inline LElement lel_sub(const LieRinehart& L, const LElement& x, const LElement& y) {
  LElement out = x;
  for (const auto& [i, c] : y) lel_add_term(L, out, i, -c);
  return out;
}

inline LElement lel_scale(const LieRinehart& L, const Poly& a, const LElement& x) {
  LElement out;
  for (const auto& [i, c] : x) {
    Poly n = L.A.normal_form(a * c);
    if (!n.is_zero()) out.emplace(i, std::move(n));
  }
  return out;
}

inline bool lel_is_zero(const LElement& x) { return x.empty(); }

inline bool lel_equal(const LieRinehart& L, const LElement& x, const LElement& y) {
  return lel_is_zero(lel_sub(L, x, y));
}

inline std::string lel_str(const LieRinehart& L, const LElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + L.A.str(c) + ")*" + L.basis[(size_t)i];
  }
  return out;
}

// Anchor of a general element: sum of coefficient-scaled basis anchors.
inline Derivation anchor_eval(const LieRinehart& L, const LElement& x) {
  Derivation d = Derivation::zero(L.A);
  for (const auto& [i, c] : x) d = d + scale(L.A, c, L.anchors[(size_t)i]);
  for (auto& img : d.images) img = L.A.normal_form(img);
  return d;
}

inline Poly anchor_apply(const LieRinehart& L, const LElement& x, const Poly& a) {
  Poly out = L.A.zero();
  for (const auto& [i, c] : x) out += c * L.anchors[(size_t)i].apply(L.A, a);
  return L.A.normal_form(out);
}

// Bracket of general elements via the Leibniz expansion:
//   [a*x, b*y] = a*b*[x,y] + a*x(b)*y - b*y(a)*x   for basis x, y.
inline LElement bracket_eval(const LieRinehart& L, const LElement& x, const LElement& y) {
  LElement out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      LElement base = L.bracket_basis(i, j);
      for (const auto& [k, c] : base) lel_add_term(L, out, k, a * b * c);
      lel_add_term(L, out, j, a * L.anchors[(size_t)i].apply(L.A, b));
      lel_add_term(L, out, i, -(b * L.anchors[(size_t)j].apply(L.A, a)));
    }
  }
  return out;
}

inline uint32_t table_degree(const LieRinehart& L) {
  int d = 0;
  for (const auto& anc : L.anchors)
    for (const auto& img : anc.images) d = std::max(d, img.degree());
  for (const auto& [key, el] : L.table)
    for (const auto& [k, c] : el) d = std::max(d, c.degree());
  return (uint32_t)std::max(d, 0);
}

// Structural verification: anchors descend to the quotient, the two
// compatibility laws hold on basis elements against all irreducible
// monomials up to the degree bound, the bracket satisfies the Jacobi
// identity, and the anchor is a morphism into derivations.
inline Report verify_lie_rinehart(const LieRinehart& L, uint32_t deg_bound) {
  Report rep;
  const Algebra& A = L.A;
  uint32_t bound = std::max(deg_bound, table_degree(L));
  int n = L.rank();

  if (!A.completion().confluent) {
    rep.fail("relation rewrite system is confluent", A.completion().message);
    return rep;
  }
  rep.pass("relation rewrite system is confluent");

  for (int i = 0; i < n; ++i) {
    auto w = L.anchors[(size_t)i].ill_defined_witness(A);
    rep.check("anchor(" + L.basis[(size_t)i] + ") preserves the relation ideal", !w.has_value(),
              w.value_or(""));
  }

  auto window = A.monomial_window(bound);

  // [x, a*y] = x(a)*y + a*[x, y]
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      std::string witness;
      for (const auto& m : window) {
        Poly a = Poly::monomial(A.nvars(), m, Scalar(1));
        LElement lhs = bracket_eval(L, L.gen(i), lel_scale(L, a, L.gen(j)));
        LElement rhs = lel_add(L, lel_scale(L, L.anchors[(size_t)i].apply(A, a), L.gen(j)),
                               lel_scale(L, a, bracket_eval(L, L.gen(i), L.gen(j))));
        if (!lel_equal(L, lhs, rhs)) {
          ok = false;
          witness = "a = " + A.str(a) + ", difference = " + lel_str(L, lel_sub(L, lhs, rhs));
          break;
        }
      }
      rep.check("Leibniz law [" + L.basis[(size_t)i] + ", a*" + L.basis[(size_t)j] + "]", ok,
                witness);
      if (!ok && rep.failures() > 16) return rep;
    }
  }

  // (a*x)(b) = a*(x(b))
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    std::string witness;
    for (const auto& ma : window) {
      Poly a = Poly::monomial(A.nvars(), ma, Scalar(1));
      for (const auto& mb : window) {
        Poly b = Poly::monomial(A.nvars(), mb, Scalar(1));
        Poly lhs = anchor_apply(L, lel_scale(L, a, L.gen(i)), b);
        Poly rhs = A.normal_form(a * anchor_apply(L, L.gen(i), b));
        if (!A.equal_mod(lhs, rhs)) {
          ok = false;
          witness = "a = " + A.str(a) + ", b = " + A.str(b) + ", difference = " +
                    A.str(A.normal_form(lhs - rhs));
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("module law (a*" + L.basis[(size_t)i] + ")(b) = a*(" + L.basis[(size_t)i] + "(b))",
              ok, witness);
  }

  // Jacobi identity on basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        LElement s = bracket_eval(L, L.bracket_basis(i, j), L.gen(k));
        s = lel_add(L, s, bracket_eval(L, L.bracket_basis(j, k), L.gen(i)));
        s = lel_add(L, s, bracket_eval(L, L.bracket_basis(k, i), L.gen(j)));
        rep.check("Jacobi identity on (" + L.basis[(size_t)i] + ", " + L.basis[(size_t)j] + ", " +
                      L.basis[(size_t)k] + ")",
                  lel_is_zero(s), "residue = " + lel_str(L, s));
      }

  // anchor([x, y]) = [anchor(x), anchor(y)] as derivations.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Derivation lhs = anchor_eval(L, L.bracket_basis(i, j));
      Derivation rhs = commutator(A, L.anchors[(size_t)i], L.anchors[(size_t)j]);
      rep.check("anchor is a Lie morphism on (" + L.basis[(size_t)i] + ", " +
                    L.basis[(size_t)j] + ")",
                derivation_equal(A, lhs, rhs),
                "anchor of bracket = " + derivation_str(A, lhs) + ", commutator = " +
                    derivation_str(A, rhs));
    }

  return rep;
}

}  // namespace lira
