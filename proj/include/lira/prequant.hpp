#pragma once

// Prequantization of a Poisson algebra on the rank-one free module: a
// one-form theta turns the central extension A + Omega^1 into operators
//
//   chi(a, w) = pi#(w) + i*(a + theta(pi#(w)))*Id
//
// and observables into
//
//   quantize(f) = -i * X_f + theta(X_f) * Id + f * Id,     X_f = pi#(df).
//
// The Dirac condition  i*[quantize(f), quantize(g)] = quantize({f,g})  holds
// exactly when theta is a potential for the Poisson structure; the verifier
// checks it on monomial windows and reports an orientation hint when a sign
// flip of theta would fix a failing pair.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "poisson.hpp"
#include "report.hpp"

namespace lira {

struct Prequantum {
  Poisson P;
  Differential theta;
};

// Operators on the rank-one free module, i.e. maps A -> A. Closures borrow
// the owning Prequantum; keep it alive while operators are in use.
using Operator = std::function<Poly(const Poly&)>;

inline Poly theta_pairing(const Prequantum& Q, const Derivation& X) {
  Poly out = Q.P.A.zero();
  for (size_t s = 0; s < Q.theta.size(); ++s) out += Q.theta[s] * X.images[s];
  return Q.P.A.normal_form(out);
}

inline Operator prequant_op(const Prequantum& Q, const ExtElement& x) {
  Derivation X = anchor_sharp(Q.P, x.w);
  Poly shift = Q.P.A.normal_form(x.a + theta_pairing(Q, X));
  const Algebra* A = &Q.P.A;
  return [A, X, shift](const Poly& v) {
    return A->normal_form(X.apply(*A, v) + Scalar::i() * (shift * v));
  };
}

inline Operator quantize(const Prequantum& Q, const Poly& f) {
  Derivation X = hamiltonian_field(Q.P, f);
  Poly shift = Q.P.A.normal_form(theta_pairing(Q, X) + f);
  const Algebra* A = &Q.P.A;
  return [A, X, shift](const Poly& v) {
    return A->normal_form(Scalar(0, -1) * X.apply(*A, v) + shift * v);
  };
}

inline Operator op_commutator(Operator f, Operator g) {
  return [f, g](const Poly& v) { return f(g(v)) - g(f(v)); };
}

inline std::optional<std::string> op_mismatch_witness(const Algebra& A, const Operator& f,
                                                      const Operator& g, uint32_t deg_bound) {
  for (const auto& m : A.monomial_window(deg_bound)) {
    Poly v = Poly::monomial(A.nvars(), m, Scalar(1));
    Poly lhs = A.normal_form(f(v));
    Poly rhs = A.normal_form(g(v));
    if (!A.equal_mod(lhs, rhs))
      return "on " + A.str(v) + ": " + A.str(lhs) + " vs " + A.str(rhs);
  }
  return std::nullopt;
}

// i * [quantize(f), quantize(g)] = quantize({f, g}) on a monomial window.
inline Report check_dirac(const Prequantum& Q, const std::vector<std::pair<Poly, Poly>>& pairs,
                          uint32_t deg_bound) {
  Report rep;
  const Algebra& A = Q.P.A;
  if (!A.completion().confluent) {
    rep.fail("relation rewrite system is confluent", A.completion().message);
    return rep;
  }

  {
    Operator chat = quantize(Q, A.constant(Scalar(2, 3)));
    auto w = op_mismatch_witness(
        A, chat, [&](const Poly& v) { return Scalar(2, 3) * v; }, deg_bound);
    rep.check("constants quantize to scalar multiplication", !w.has_value(), w.value_or(""));
  }

  for (const auto& [f, g] : pairs) {
    Operator fhat = quantize(Q, f);
    Operator ghat = quantize(Q, g);
    Operator lhs = [&](const Poly& v) { return Scalar::i() * op_commutator(fhat, ghat)(v); };
    Operator rhs = quantize(Q, Q.P.bracket(f, g));
    auto w = op_mismatch_witness(A, lhs, rhs, deg_bound);
    std::string name = "Dirac condition for (" + A.str(f) + ", " + A.str(g) + ")";
    if (w.has_value()) {
      Prequantum flipped{Q.P, Q.theta};
      for (auto& c : flipped.theta) c = -c;
      Operator ff = quantize(flipped, f), fg = quantize(flipped, g);
      Operator flhs = [&](const Poly& v) { return Scalar::i() * op_commutator(ff, fg)(v); };
      auto wf = op_mismatch_witness(A, flhs, quantize(flipped, Q.P.bracket(f, g)), deg_bound);
      std::string extra =
          wf.has_value() ? "" : " [hint: the pair passes with -theta; orientation mismatch]";
      rep.fail(name, *w + extra);
    } else {
      rep.pass(name);
    }
  }
  return rep;
}

inline Report verify_prequantum(const Prequantum& Q, uint32_t deg_bound) {
  Report rep;
  const Algebra& A = Q.P.A;
  int n = A.nvars();
  if (!A.completion().confluent) {
    rep.fail("relation rewrite system is confluent", A.completion().message);
    return rep;
  }
  if ((int)Q.theta.size() != n) {
    rep.fail("theta has one coefficient per generator differential",
             std::to_string(Q.theta.size()) + " coefficients for " + std::to_string(n) +
                 " generators");
    return rep;
  }

  auto window = A.monomial_window(deg_bound);
  auto small_window = A.monomial_window(std::min<uint32_t>(deg_bound, 2));

  {
    bool ok = true;
    std::string witness;
    for (const auto& m : small_window) {
      Poly a = Poly::monomial(n, m, Scalar(1));
      Operator op = prequant_op(Q, ExtElement{a, Q.P.zero_diff()});
      auto w = op_mismatch_witness(
          A, op, [&](const Poly& v) { return Scalar::i() * (a * v); }, deg_bound);
      if (w.has_value()) {
        ok = false;
        witness = "chi(" + A.str(a) + ", 0) " + *w;
        break;
      }
    }
    rep.check("algebra elements act as i*a*Id", ok, witness);
  }

  std::vector<ExtElement> pool;
  for (int i = 0; i < n; ++i) pool.push_back({A.zero(), Q.P.gen_diff(i)});
  for (const auto& m : A.monomial_window(1))
    pool.push_back({Poly::monomial(n, m, Scalar(1)), Q.P.zero_diff()});
  for (int i = 0; i < n && i < 2; ++i)
    pool.push_back({A.zero(), diff_scale(Q.P, A.var(i), Q.P.gen_diff(i))});

  {
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      Operator op = prequant_op(Q, x);
      Derivation X = anchor_sharp(Q.P, x.w);
      for (const auto& mb : small_window) {
        Poly b = Poly::monomial(n, mb, Scalar(1));
        auto w = op_mismatch_witness(
            A, [&](const Poly& v) { return op(A.normal_form(b * v)); },
            [&](const Poly& v) { return X.apply(A, b) * v + b * op(v); },
            std::min<uint32_t>(deg_bound, 2));
        if (w.has_value()) {
          ok = false;
          witness = "chi" + ext_str(Q.P, x) + " against b = " + A.str(b) + ": " + *w;
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("action satisfies the connection Leibniz rule", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (size_t x = 0; x < pool.size() && ok; ++x)
      for (size_t y = x + 1; y < pool.size(); ++y) {
        Operator lhs = prequant_op(Q, ext_bracket(Q.P, pool[x], pool[y]));
        Operator ox = prequant_op(Q, pool[x]);
        Operator oy = prequant_op(Q, pool[y]);
        auto w = op_mismatch_witness(A, lhs, op_commutator(ox, oy),
                                     std::min<uint32_t>(deg_bound, 3));
        if (w.has_value()) {
          ok = false;
          witness = "chi of bracket vs commutator on " + ext_str(Q.P, pool[x]) + ", " +
                    ext_str(Q.P, pool[y]) + ": " + *w;
          break;
        }
      }
    rep.check("chi is a Lie morphism into operators", ok, witness);
  }

  {
    // iota(a) = (a, da) is a Lie morphism into the extension.
    bool ok = true;
    std::string witness;
    CertLevel level = CertLevel::exact;
    for (const auto& ma : small_window) {
      Poly a = Poly::monomial(n, ma, Scalar(1));
      for (const auto& mb : small_window) {
        Poly b = Poly::monomial(n, mb, Scalar(1));
        ExtElement lhs = ext_bracket(Q.P, ExtElement{a, d_of(Q.P, a)}, ExtElement{b, d_of(Q.P, b)});
        Poly br = Q.P.bracket(a, b);
        if (!A.equal_mod(lhs.a, br)) {
          ok = false;
          witness = "algebra part for (" + A.str(a) + ", " + A.str(b) + "): " + A.str(lhs.a) +
                    " vs " + A.str(br);
          break;
        }
        CertLevel l = diff_equal_leveled(Q.P, lhs.w, d_of(Q.P, br));
        level = weaker(level, l);
        if (l == CertLevel::failed) {
          ok = false;
          witness = "differential part for (" + A.str(a) + ", " + A.str(b) + ")";
          break;
        }
      }
      if (!ok) break;
    }
    rep.check(std::string("a -> (a, da) is a Lie morphism into the extension [") +
                  cert_level_str(ok ? level : CertLevel::failed) + "]",
              ok, witness);
  }

  {
    std::vector<std::pair<Poly, Poly>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(A.var(i), A.var(j));
    rep.merge(check_dirac(Q, pairs, std::min<uint32_t>(deg_bound, 3)));
  }

  return rep;
}

}  // namespace lira
