#pragma once

// Poisson algebras presented by generator brackets, and the induced
// Lie-Rinehart structure on formal differentials:
//
//   bracket of differentials   [a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}
//   anchor                     (pi# w)(f) = sum_i w_i {x_i, f}
//   two-form                   pi(du, dv) = {u, v}
//
// and the induced central extension A + Omega^1 with bracket
//   [(a,w1),(b,w2)] = (pi#(w1)(b) - pi#(w2)(a) - pi(w1,w2), [w1,w2]).
//
// Identities in the differentials module are certified at one of three
// levels: exact (componentwise in the free module), module rules (difference
// reduces to zero under the declared submodule rewrite rules), or anchor
// image (equality after applying pi#). Reports record the level used.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "lie_rinehart.hpp"
#include "linalg.hpp"
#include "quotient.hpp"
#include "report.hpp"

namespace lira {

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients per generator differential: w = sum_i w[i] * d(x_i).
using Differential = std::vector<Poly>;

// Rewrite rule for the submodule cutting the differentials module out of the
// free module: lead_mono * d(x_lead_gen) -> tail.
struct ModuleRule {
  Mono lead_mono;
  int lead_gen = 0;
  Differential tail;
};

struct Poisson {
  Algebra A;
  std::map<std::pair<int, int>, Poly> table;  // {x_i, x_j} for i < j
  std::vector<ModuleRule> module_rules;
  std::vector<int> involution;  // slot permutation; empty when undeclared

  Poly gen_bracket(int i, int j) const {
    if (i == j) return A.zero();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table.find({i, j});
    Poly out = it == table.end() ? A.zero() : it->second;
    return flip ? -out : out;
  }

  // Biderivation extension of the generator table.
  Poly bracket(const Poly& a, const Poly& b) const {
    Poly out = A.zero();
    for (int i = 0; i < A.nvars(); ++i) {
      Poly da = a.derivative(i);
      if (da.is_zero()) continue;
      for (int j = 0; j < A.nvars(); ++j) {
        if (i == j) continue;
        Poly db = b.derivative(j);
        if (db.is_zero()) continue;
        out += da * db * gen_bracket(i, j);
      }
    }
    return A.normal_form(out);
  }

  Differential zero_diff() const { return Differential((size_t)A.nvars(), A.zero()); }

  Differential gen_diff(int i) const {
    Differential w = zero_diff();
    w[(size_t)i] = A.one();
    return w;
  }
};

inline Differential d_of(const Poisson& P, const Poly& f) {
  Differential w = P.zero_diff();
  for (int s = 0; s < P.A.nvars(); ++s) w[(size_t)s] = f.derivative(s);
  return w;
}

inline Differential diff_add(const Poisson& P, const Differential& a, const Differential& b) {
  Differential out = a;
  for (size_t s = 0; s < out.size(); ++s) out[s] = P.A.normal_form(out[s] + b[s]);
  return out;
}

inline Differential diff_sub(const Poisson& P, const Differential& a, const Differential& b) {
  Differential out = a;
  for (size_t s = 0; s < out.size(); ++s) out[s] = P.A.normal_form(out[s] - b[s]);
  return out;
}

inline Differential diff_scale(const Poisson& P, const Poly& a, const Differential& w) {
  Differential out = w;
  for (auto& c : out) c = P.A.normal_form(a * c);
  return out;
}

inline bool diff_is_zero(const Differential& w) {
  for (const auto& c : w)
    if (!c.is_zero()) return false;
  return true;
}

inline std::string diff_str(const Poisson& P, const Differential& w) {
  std::string out;
  for (size_t s = 0; s < w.size(); ++s) {
    if (w[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + P.A.str(w[s]) + ")*d(" + P.A.names()[s] + ")";
  }
  return out.empty() ? "0" : out;
}

// One reduction pass per reducible term; sound for submodule membership
// because each step subtracts a multiple of a rule (lead - tail).
inline Differential module_reduce(const Poisson& P, Differential w) {
  if (P.module_rules.empty()) return w;
  for (auto& c : w) c = P.A.normal_form(c);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : P.module_rules) {
      Mono hit;
      Scalar coeff;
      for (const auto& [m, c] : w[(size_t)rule.lead_gen].terms())
        if (mono_divides(rule.lead_mono, m)) {
          hit = m;
          coeff = c;
          break;
        }
      if (coeff.is_zero()) continue;
      Poly q = Poly::monomial(P.A.nvars(), mono_div(hit, rule.lead_mono), coeff);
      w[(size_t)rule.lead_gen].add_term(hit, -coeff);
      for (size_t s = 0; s < w.size(); ++s)
        w[s] = P.A.normal_form(w[s] + q * rule.tail[s]);
      changed = true;
      break;
    }
  }
  return w;
}

inline Poly poisson_form(const Poisson& P, const Differential& w1, const Differential& w2) {
  Poly out = P.A.zero();
  for (int i = 0; i < P.A.nvars(); ++i) {
    if (w1[(size_t)i].is_zero()) continue;
    for (int j = 0; j < P.A.nvars(); ++j) {
      if (i == j || w2[(size_t)j].is_zero()) continue;
      out += w1[(size_t)i] * w2[(size_t)j] * P.gen_bracket(i, j);
    }
  }
  return P.A.normal_form(out);
}

inline Derivation anchor_sharp(const Poisson& P, const Differential& w) {
  Derivation d = Derivation::zero(P.A);
  for (int s = 0; s < P.A.nvars(); ++s) {
    Poly img = P.A.zero();
    for (int i = 0; i < P.A.nvars(); ++i) {
      if (i == s || w[(size_t)i].is_zero()) continue;
      img += w[(size_t)i] * P.gen_bracket(i, s);
    }
    d.images[(size_t)s] = P.A.normal_form(img);
  }
  return d;
}

// Bracket of formal differentials, extended bilinearly from
// [a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}, with d{u,v} expanded by
// the chain rule over generator differentials.
inline Differential differentials_bracket(const Poisson& P, const Differential& w1,
                                          const Differential& w2) {
  Differential out = P.zero_diff();
  for (int i = 0; i < P.A.nvars(); ++i) {
    const Poly& a = w1[(size_t)i];
    if (a.is_zero()) continue;
    Poly xi = P.A.var(i);
    for (int j = 0; j < P.A.nvars(); ++j) {
      const Poly& b = w2[(size_t)j];
      if (b.is_zero()) continue;
      Poly xj = P.A.var(j);
      out[(size_t)j] += a * P.bracket(xi, b);
      out[(size_t)i] += b * P.bracket(a, xj);
      Poly ab = a * b;
      Poly br = P.gen_bracket(i, j);
      if (!br.is_zero())
        for (int k = 0; k < P.A.nvars(); ++k) out[(size_t)k] += ab * br.derivative(k);
    }
  }
  for (auto& c : out) c = P.A.normal_form(c);
  return out;
}

inline Derivation hamiltonian_field(const Poisson& P, const Poly& f) {
  return anchor_sharp(P, d_of(P, f));
}

// ---------------------------------------------------------------------------
// Certification levels for identities in the differentials module.

enum class CertLevel { exact, module_rules, anchor_image, failed };

inline const char* cert_level_str(CertLevel l) {
  switch (l) {
    case CertLevel::exact: return "exact";
    case CertLevel::module_rules: return "module rules";
    case CertLevel::anchor_image: return "anchor image";
    default: return "failed";
  }
}

inline CertLevel diff_equal_leveled(const Poisson& P, const Differential& lhs,
                                    const Differential& rhs) {
  Differential d = diff_sub(P, lhs, rhs);
  if (diff_is_zero(d)) return CertLevel::exact;
  if (!P.module_rules.empty() && diff_is_zero(module_reduce(P, d)))
    return CertLevel::module_rules;
  Derivation img = anchor_sharp(P, d);
  for (const auto& c : img.images)
    if (!c.is_zero()) return CertLevel::failed;
  return CertLevel::anchor_image;
}

inline CertLevel weaker(CertLevel a, CertLevel b) { return a > b ? a : b; }

// ---------------------------------------------------------------------------
// Verifiers.

inline Report verify_poisson(const Poisson& P, uint32_t deg_bound) {
  Report rep;
  const Algebra& A = P.A;
  if (!A.completion().confluent) {
    rep.fail("relation rewrite system is confluent", A.completion().message);
    return rep;
  }
  rep.pass("relation rewrite system is confluent");

  int n = A.nvars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Poly s = P.bracket(P.gen_bracket(i, j), A.var(k)) +
                 P.bracket(P.gen_bracket(j, k), A.var(i)) +
                 P.bracket(P.gen_bracket(k, i), A.var(j));
        s = A.normal_form(s);
        rep.check("Jacobi identity on (" + A.names()[(size_t)i] + ", " + A.names()[(size_t)j] +
                      ", " + A.names()[(size_t)k] + ")",
                  s.is_zero(), "residue = " + A.str(s));
      }

  for (const auto& rel : A.relations())
    for (int j = 0; j < n; ++j) {
      Poly s = P.bracket(rel, A.var(j));
      rep.check("bracket of relation " + A.str(rel) + " with " + A.names()[(size_t)j] +
                    " vanishes",
                s.is_zero(), "residue = " + A.str(s));
    }

  {
    auto window = A.monomial_window(std::min<uint32_t>(deg_bound, 2));
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i) {
      Poly xi = A.var(i);
      for (const auto& mb : window) {
        Poly b = Poly::monomial(n, mb, Scalar(1));
        for (const auto& mc : window) {
          Poly c = Poly::monomial(n, mc, Scalar(1));
          Poly lhs = P.bracket(xi, A.normal_form(b * c));
          Poly rhs = A.normal_form(b * P.bracket(xi, c) + P.bracket(xi, b) * c);
          if (!A.equal_mod(lhs, rhs)) {
            ok = false;
            witness = "{" + A.str(xi) + ", " + A.str(b) + "*" + A.str(c) + "}: difference = " +
                      A.str(A.normal_form(lhs - rhs));
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.check("bracket is a derivation in each argument (monomial window)", ok, witness);
  }

  {
    auto window = A.monomial_window(std::min<uint32_t>(deg_bound, 3));
    bool ok = true;
    std::string witness;
    for (const auto& ma : window) {
      Poly a = Poly::monomial(n, ma, Scalar(1));
      for (const auto& mb : window) {
        Poly b = Poly::monomial(n, mb, Scalar(1));
        Poly s = A.normal_form(P.bracket(a, b) + P.bracket(b, a));
        if (!s.is_zero()) {
          ok = false;
          witness = "{" + A.str(a) + "," + A.str(b) + "} + {" + A.str(b) + "," + A.str(a) +
                    "} = " + A.str(s);
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("bracket is antisymmetric (monomial window)", ok, witness);
  }

  if (!P.involution.empty()) {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        Poly lhs = P.bracket(A.var(P.involution[(size_t)i]), A.var(P.involution[(size_t)j]));
        Poly rhs = P.gen_bracket(i, j).rename_slots(P.involution).conj_coeffs();
        if (!A.equal_mod(lhs, rhs)) {
          ok = false;
          witness = "generators " + A.names()[(size_t)i] + ", " + A.names()[(size_t)j];
          break;
        }
      }
    rep.check("involution is compatible with the bracket", ok, witness);
  }

  return rep;
}

// The differentials module carries a Lie-Rinehart structure over A with
// anchor pi#; this checks the laws with certification levels.
inline Report verify_differentials(const Poisson& P, uint32_t deg_bound) {
  Report rep;
  const Algebra& A = P.A;
  int n = A.nvars();
  CertLevel overall = CertLevel::exact;

  for (int i = 0; i < n; ++i) {
    Derivation d = anchor_sharp(P, P.gen_diff(i));
    auto w = d.ill_defined_witness(A);
    rep.check("anchor of d(" + A.names()[(size_t)i] + ") preserves the relation ideal",
              !w.has_value(), w.value_or(""));
  }

  auto window = A.monomial_window(deg_bound);
  {
    bool ok = true;
    std::string witness;
    CertLevel level = CertLevel::exact;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Differential wi = P.gen_diff(i), wj = P.gen_diff(j);
        Derivation di = anchor_sharp(P, wi);
        for (const auto& m : window) {
          Poly a = Poly::monomial(n, m, Scalar(1));
          Differential lhs = differentials_bracket(P, wi, diff_scale(P, a, wj));
          Differential rhs = diff_add(P, diff_scale(P, di.apply(A, a), wj),
                                      diff_scale(P, a, differentials_bracket(P, wi, wj)));
          CertLevel l = diff_equal_leveled(P, lhs, rhs);
          level = weaker(level, l);
          if (l == CertLevel::failed) {
            ok = false;
            witness = "[d(" + A.names()[(size_t)i] + "), a*d(" + A.names()[(size_t)j] +
                      ")] with a = " + A.str(a) + ": difference = " +
                      diff_str(P, diff_sub(P, lhs, rhs));
            break;
          }
        }
      }
    overall = weaker(overall, level);
    rep.check(std::string("Leibniz law in the differentials module [") +
                  cert_level_str(level) + "]",
              ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    CertLevel level = CertLevel::exact;
    auto coeff_window = A.monomial_window(std::min<uint32_t>(deg_bound, 2));
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = j + 1; k < n && ok; ++k)
          for (int slot = 0; slot < 3 && ok; ++slot)
            for (const auto& m : coeff_window) {
              Poly a = Poly::monomial(n, m, Scalar(1));
              Differential u = P.gen_diff(i), v = P.gen_diff(j), w = P.gen_diff(k);
              if (slot == 0)
                u = diff_scale(P, a, u);
              else if (slot == 1)
                v = diff_scale(P, a, v);
              else
                w = diff_scale(P, a, w);
              Differential s = differentials_bracket(P, differentials_bracket(P, u, v), w);
              s = diff_add(P, s, differentials_bracket(P, differentials_bracket(P, v, w), u));
              s = diff_add(P, s, differentials_bracket(P, differentials_bracket(P, w, u), v));
              CertLevel l = diff_equal_leveled(P, s, P.zero_diff());
              level = weaker(level, l);
              if (l == CertLevel::failed) {
                ok = false;
                witness = "Jacobi on (d" + A.names()[(size_t)i] + ", d" + A.names()[(size_t)j] +
                          ", d" + A.names()[(size_t)k] + ") with coefficient " + A.str(a) +
                          " in slot " + std::to_string(slot) + ": residue = " + diff_str(P, s);
              }
            }
    if (n < 3) {
      rep.pass("Jacobi identity in the differentials module [vacuous: rank below 3]");
    } else {
      overall = weaker(overall, level);
      rep.check(std::string("Jacobi identity in the differentials module [") +
                    cert_level_str(level) + "]",
                ok, witness);
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Derivation lhs = anchor_sharp(P, differentials_bracket(P, P.gen_diff(i), P.gen_diff(j)));
      Derivation rhs =
          commutator(A, anchor_sharp(P, P.gen_diff(i)), anchor_sharp(P, P.gen_diff(j)));
      rep.check("anchor is a Lie morphism on (d" + A.names()[(size_t)i] + ", d" +
                    A.names()[(size_t)j] + ")",
                derivation_equal(A, lhs, rhs),
                "anchor of bracket = " + derivation_str(A, lhs) + ", commutator = " +
                    derivation_str(A, rhs));
    }

  {
    bool ok = true;
    std::string witness;
    auto coeff_window = A.monomial_window(std::min<uint32_t>(deg_bound, 2));
    for (int i = 0; i < n && ok; ++i)
      for (const auto& m : coeff_window) {
        Poly a = Poly::monomial(n, m, Scalar(1));
        Derivation lhs = anchor_sharp(P, diff_scale(P, a, P.gen_diff(i)));
        Derivation rhs = scale(A, a, anchor_sharp(P, P.gen_diff(i)));
        if (!derivation_equal(A, lhs, rhs)) {
          ok = false;
          witness = "a = " + A.str(a) + ", generator d" + A.names()[(size_t)i];
          break;
        }
      }
    rep.check("anchor is A-linear (monomial window)", ok, witness);
  }

  rep.pass(std::string("certification level: ") + cert_level_str(overall));
  return rep;
}

// ---------------------------------------------------------------------------
// The central extension A + Omega^1.

struct ExtElement {
  Poly a;
  Differential w;
};

inline ExtElement ext_bracket(const Poisson& P, const ExtElement& x, const ExtElement& y) {
  ExtElement out;
  out.a = P.A.normal_form(anchor_sharp(P, x.w).apply(P.A, y.a) -
                          anchor_sharp(P, y.w).apply(P.A, x.a) - poisson_form(P, x.w, y.w));
  out.w = differentials_bracket(P, x.w, y.w);
  return out;
}

inline std::string ext_str(const Poisson& P, const ExtElement& x) {
  return "(" + P.A.str(x.a) + ", " + diff_str(P, x.w) + ")";
}

inline Report verify_extension(const Poisson& P, uint32_t deg_bound) {
  Report rep;
  const Algebra& A = P.A;
  int n = A.nvars();

  {
    auto window = A.monomial_window(deg_bound);
    bool ok = true;
    std::string witness;
    for (const auto& ma : window) {
      for (const auto& mb : window) {
        ExtElement x{Poly::monomial(n, ma, Scalar(1)), P.zero_diff()};
        ExtElement y{Poly::monomial(n, mb, Scalar(1)), P.zero_diff()};
        ExtElement br = ext_bracket(P, x, y);
        if (!br.a.is_zero() || !diff_is_zero(br.w)) {
          ok = false;
          witness = "[(a,0),(b,0)] = " + ext_str(P, br) + " for a = " + A.str(x.a) +
                    ", b = " + A.str(y.a);
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("algebra part brackets to zero (centrality of the kernel)", ok, witness);
  }

  {
    // Against the closed form [(a,du),(b,dv)] = ({u,b} + {a,v} - {u,v}, d{u,v}).
    auto window = A.monomial_window(std::min<uint32_t>(deg_bound, 2));
    bool ok = true;
    std::string witness;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        for (const auto& ma : window) {
          Poly a = Poly::monomial(n, ma, Scalar(1));
          for (const auto& mb : window) {
            Poly b = Poly::monomial(n, mb, Scalar(1));
            ExtElement lhs =
                ext_bracket(P, ExtElement{a, P.gen_diff(u)}, ExtElement{b, P.gen_diff(v)});
            Poly uv = P.gen_bracket(u, v);
            Poly a_closed = A.normal_form(P.bracket(A.var(u), b) + P.bracket(a, A.var(v)) - uv);
            Differential w_closed = d_of(P, uv);
            if (!A.equal_mod(lhs.a, a_closed) ||
                diff_equal_leveled(P, lhs.w, w_closed) == CertLevel::failed) {
              ok = false;
              witness = "((" + A.str(a) + ", d" + A.names()[(size_t)u] + "), (" + A.str(b) +
                        ", d" + A.names()[(size_t)v] + "))";
              break;
            }
          }
        }
    rep.check("bracket matches the closed form on pure differentials", ok, witness);
  }

  {
    // Jacobi over a pool of extension elements.
    std::vector<ExtElement> pool;
    for (int i = 0; i < n; ++i) pool.push_back({A.zero(), P.gen_diff(i)});
    for (const auto& m : A.monomial_window(std::min<uint32_t>(deg_bound, 2)))
      pool.push_back({Poly::monomial(n, m, Scalar(1)), P.zero_diff()});
    for (const auto& m : A.monomial_window(1))
      for (int i = 0; i < n; ++i)
        pool.push_back({A.zero(), diff_scale(P, Poly::monomial(n, m, Scalar(1)), P.gen_diff(i))});

    bool ok = true;
    std::string witness;
    CertLevel level = CertLevel::exact;
    size_t checked = 0;
    for (size_t x = 0; x < pool.size() && ok; ++x)
      for (size_t y = x + 1; y < pool.size() && ok; ++y)
        for (size_t z = y + 1; z < pool.size() && ok; ++z) {
          ExtElement s = ext_bracket(P, ext_bracket(P, pool[x], pool[y]), pool[z]);
          ExtElement t = ext_bracket(P, ext_bracket(P, pool[y], pool[z]), pool[x]);
          ExtElement u = ext_bracket(P, ext_bracket(P, pool[z], pool[x]), pool[y]);
          Poly a_sum = A.normal_form(s.a + t.a + u.a);
          Differential w_sum = diff_add(P, diff_add(P, s.w, t.w), u.w);
          CertLevel l = diff_equal_leveled(P, w_sum, P.zero_diff());
          ++checked;
          if (!a_sum.is_zero()) {
            ok = false;
            witness = "algebra component of Jacobi on (" + ext_str(P, pool[x]) + ", " +
                      ext_str(P, pool[y]) + ", " + ext_str(P, pool[z]) + ") = " + A.str(a_sum);
          } else if (l == CertLevel::failed) {
            ok = false;
            witness = "differential component of Jacobi on (" + ext_str(P, pool[x]) + ", " +
                      ext_str(P, pool[y]) + ", " + ext_str(P, pool[z]) + ")";
          } else {
            level = weaker(level, l);
          }
        }
    rep.check("Jacobi identity on the extension (" + std::to_string(checked) + " triples) [" +
                  cert_level_str(level) + "]",
              ok, witness);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Polarizations: A-submodules of the differentials closed under the bracket.

inline Report check_polarization(const Poisson& P, const std::vector<Differential>& gens,
                                 uint32_t deg_bound) {
  Report rep;
  const Algebra& A = P.A;
  int n = A.nvars();

  int gen_deg = 0;
  for (const auto& g : gens)
    for (const auto& c : g) gen_deg = std::max(gen_deg, c.degree());

  auto window = A.monomial_window(deg_bound);

  // Membership columns: reduced coordinates of m * g_t for every window
  // monomial m; a bracket lies in the span iff appending it does not raise
  // the rank.
  uint32_t big = 2 * deg_bound + (uint32_t)gen_deg + 2;
  auto big_window = A.monomial_window(big);
  std::map<std::pair<int, Mono>, int> coord;
  auto coord_of = [&](int gen, const Mono& m) {
    return coord.emplace(std::make_pair(gen, m), (int)coord.size()).first->second;
  };
  std::vector<SparseVec> span_rows;
  for (const auto& g : gens)
    for (const auto& m : big_window) {
      Differential prod = module_reduce(P, diff_scale(P, Poly::monomial(n, m, Scalar(1)), g));
      SparseVec row;
      for (int s = 0; s < n; ++s)
        for (const auto& [mm, cc] : prod[(size_t)s].terms())
          row.emplace_back(coord_of(s, mm), cc);
      if (!row.empty()) span_rows.push_back(std::move(row));
    }

  auto in_span = [&](const Differential& w) -> bool {
    Differential red = module_reduce(P, w);
    if (diff_is_zero(red)) return true;
    SparseVec extra;
    for (int s = 0; s < n; ++s)
      for (const auto& [mm, cc] : red[(size_t)s].terms()) extra.emplace_back(coord_of(s, mm), cc);
    SparseMat base((int)coord.size());
    for (const auto& r : span_rows) base.add_row(r);
    int r1 = std::move(base).rank();
    SparseMat aug((int)coord.size());
    for (const auto& r : span_rows) aug.add_row(r);
    aug.add_row(std::move(extra));
    int r2 = std::move(aug).rank();
    return r1 == r2;
  };

  bool ok = true;
  std::string witness;
  size_t checked = 0;
  for (size_t s = 0; s < gens.size() && ok; ++s)
    for (size_t t = s; t < gens.size() && ok; ++t)
      for (const auto& ma : window) {
        Poly a = Poly::monomial(n, ma, Scalar(1));
        for (const auto& mb : window) {
          Poly b = Poly::monomial(n, mb, Scalar(1));
          Differential br = differentials_bracket(P, diff_scale(P, a, gens[s]),
                                                  diff_scale(P, b, gens[t]));
          ++checked;
          if (!in_span(br)) {
            ok = false;
            witness = "[" + A.str(a) + "*g" + std::to_string(s + 1) + ", " + A.str(b) + "*g" +
                      std::to_string(t + 1) + "] = " + diff_str(P, br) +
                      " is not an A-combination of the generators (coefficient degree " +
                      std::to_string(big) + ")";
            break;
          }
        }
      }
  rep.check("bracket closure of the polarization (" + std::to_string(checked) + " brackets)", ok,
            witness);
  return rep;
}

// ---------------------------------------------------------------------------
// The free-module chart of the differentials as a Lie-Rinehart pair, the
// Poisson two-form, and Poisson cohomology.

inline LieRinehart differentials_chart(const Poisson& P) {
  LieRinehart L;
  L.A = P.A;
  int n = P.A.nvars();
  for (int i = 0; i < n; ++i) {
    L.basis.push_back("d(" + P.A.names()[(size_t)i] + ")");
    L.anchors.push_back(anchor_sharp(P, P.gen_diff(i)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Differential br = differentials_bracket(P, P.gen_diff(i), P.gen_diff(j));
      LElement el;
      for (int k = 0; k < n; ++k)
        if (!br[(size_t)k].is_zero()) el.emplace(k, br[(size_t)k]);
      if (!el.empty()) L.table.emplace(std::make_pair(i, j), std::move(el));
    }
  return L;
}

inline AltForm poisson_two_form(const Poisson& P) {
  AltForm w;
  w.p = 2;
  int n = P.A.nvars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly c = P.A.normal_form(P.gen_bracket(i, j));
      if (!c.is_zero()) w.comp.emplace(std::vector<int>{i, j}, std::move(c));
    }
  return w;
}

// d(pi) = 0 in the alternating-forms complex over the differentials chart.
inline Report check_two_form_cocycle(const Poisson& P) {
  Report rep;
  LieRinehart L = differentials_chart(P);
  AltForm dpi = rinehart_d(L, poisson_two_form(P));
  std::string witness;
  if (!dpi.comp.empty()) {
    const auto& [tuple, c] = *dpi.comp.begin();
    witness = "d(pi) has a nonzero component with value " + P.A.str(c);
  }
  rep.check("the Poisson two-form is a cocycle", dpi.comp.empty(), witness);
  return rep;
}

// Poisson cohomology = alternating-forms cohomology of the differentials
// module; only available when that module is free (no algebra relations).
inline CohomTable poisson_cohomology(const Poisson& P, int p_max, int weight_lo, int weight_hi) {
  if (!P.A.relations().empty())
    throw UnsupportedError(
        "Poisson cohomology requires a free differentials module; the algebra has " +
        std::to_string(P.A.relations().size()) +
        " relation(s), so the differentials module is presented, not free");
  return cohomology_dims(differentials_chart(P), p_max, weight_lo, weight_hi);
}

// ---------------------------------------------------------------------------
// Bounded ideal membership for vanishing-locus checks: reduction to zero
// modulo rules completed from the relation ideal plus the given generators
// certifies membership.

inline std::optional<std::string> ideal_membership_witness(const Algebra& A,
                                                           const std::vector<Poly>& ideal_gens,
                                                           const Poly& f) {
  std::vector<Poly> rels = A.relations();
  rels.insert(rels.end(), ideal_gens.begin(), ideal_gens.end());
  Algebra Q = Algebra::requotient(A, rels);
  Poly r = Q.normal_form(f);
  if (r.is_zero()) return std::nullopt;
  std::string msg = "residue " + A.str(r);
  if (!Q.completion().confluent) msg += " (completion incomplete: " + Q.completion().message + ")";
  return msg;
}

}  // namespace lira
