// Acceptance gate: one timed line per headline guarantee. Every check is an
// exact (rational / Gaussian-rational) identity; the budgets bound wall time.
// Exit code is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "lira/builtins.hpp"
#include "lira/cohomology.hpp"
#include "lira/costrat_orbits.hpp"
#include "lira/costratified.hpp"
#include "lira/enveloping.hpp"
#include "lira/lie_rinehart.hpp"
#include "lira/poisson.hpp"
#include "lira/prequant.hpp"
#include "lira/quotient.hpp"
#include "lira/report.hpp"

using namespace lira;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void note(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
}

void record(Outcome& o, const std::string& what) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
}

std::string first_fail(const Report& rep) {
  const CheckItem* f = rep.first_failure();
  if (!f) return "unknown failure";
  return f->witness.empty() ? f->name : f->name + ": " + f->witness;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

// Monomials of exact degree w in r commuting letters.
long long mono_exact(long long r, long long w) { return binom(w + r - 1, r - 1); }

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + LIRA_CLI_BIN + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status)) return {-1, out};
  return {WEXITSTATUS(status), out};
}

// Contraction, sum, scaling, and comparison of alternating forms, kept local
// so the homotopy oracle is independent of the library's cohomology ranks.
AltForm contract(const LieRinehart& L, const LElement& v, const AltForm& w) {
  AltForm out;
  out.p = w.p - 1;
  for (const auto& t : basis_tuples(L.rank(), w.p - 1)) {
    Poly c = alt_eval_first(L, w, v, t);
    if (!c.is_zero()) out.comp.emplace(t, c);
  }
  return out;
}

AltForm alt_sum(const LieRinehart& L, const AltForm& a, const AltForm& b) {
  AltForm out = a;
  for (const auto& [t, c] : b.comp) alt_add(L, out, t, c);
  return out;
}

AltForm alt_scale(const AltForm& w, const Scalar& c) {
  AltForm out = w;
  for (auto& [t, v] : out.comp) v = v * Poly::constant(v.nvars(), c);
  return out;
}

bool alt_equal(const LieRinehart& L, const AltForm& a, const AltForm& b) {
  if (a.p != b.p) return false;
  for (const auto& t : basis_tuples(L.rank(), a.p))
    if (!L.A.normal_form(alt_eval(L, a, t) - alt_eval(L, b, t)).is_zero()) return false;
  return true;
}

// --- the ten criteria ---

Outcome exotic_plane_verifies() {
  Outcome o;
  Poisson P = exotic_plane();
  Report rep = verify_poisson(P, 3);
  note(o, rep.ok(), first_fail(rep));
  std::string text = rep.text();
  note(o, text.find("Jacobi identity") != std::string::npos, "no Jacobi item in the report");
  note(o, text.find("bracket of relation") != std::string::npos,
       "no relation-compatibility item");
  // The bracket annihilates the defining relation termwise, not just mod the
  // ideal: sum_i dR/dx_i * {x_i, x_s} is the zero polynomial for every s.
  Poly R = P.A.parse("r^2 - x1^2 - x2^2");
  for (int s = 0; s < P.A.nvars(); ++s) {
    Poly raw = P.A.zero();
    for (int i = 0; i < P.A.nvars(); ++i) raw += R.derivative(i) * P.gen_bracket(i, s);
    note(o, raw.is_zero(), "termwise bracket with the relation survives at " + P.A.names()[s]);
  }
  return o;
}

Outcome hamiltonian_flow_fixes_locus() {
  Outcome o;
  Poisson P = exotic_plane();
  const Algebra& A = P.A;
  Derivation H = hamiltonian_field(P, A.parse("(x1 + r)/2"));
  Derivation expect{{A.parse("x2"), A.parse("-x2"), A.parse("x1 + r")}};
  note(o, derivation_equal(A, H, expect), "flow is " + derivation_str(A, H));
  std::vector<Poly> locus{A.parse("x2"), A.parse("x1 + r")};
  for (size_t s = 0; s < H.images.size(); ++s) {
    auto w = ideal_membership_witness(A, locus, H.images[s]);
    note(o, !w.has_value(),
         "image of " + A.names()[s] + " leaves the locus ideal: " + (w ? *w : ""));
  }
  return o;
}

Outcome differentials_and_extension_verify() {
  Outcome o;
  auto run = [&](const char* label, const Poisson& P) {
    Report rd = verify_differentials(P, 4);
    Report re = verify_extension(P, 4);
    note(o, rd.ok(), std::string(label) + " differentials: " + first_fail(rd));
    note(o, re.ok(), std::string(label) + " extension: " + first_fail(re));
    for (const auto& it : rd.items)
      if (it.name.find("certification level") != std::string::npos)
        record(o, std::string(label) + " " + it.name);
    for (const auto& it : re.items)
      if (it.name.find('[') != std::string::npos)
        record(o, std::string(label) + " extension Jacobi " +
                      it.name.substr(it.name.find('[')));
  };
  run("plane", poisson_plane());
  run("exotic", exotic_plane());
  return o;
}

Outcome pbw_bases_independent() {
  Outcome o;
  // Independent count: words of length <= filtration in rank letters, times
  // coefficient monomials of degree <= the bound.
  auto oracle = [](long long rank, long long nvars, long long filt, long long coeff) {
    long long words = 0;
    for (long long w = 0; w <= filt; ++w) words += mono_exact(rank, w);
    return words * binom(coeff + nvars, nvars);
  };
  Report rw = check_pbw(de_rham(1), 2, 4);
  note(o, rw.ok(), "line operators: " + first_fail(rw));
  note(o, rw.text().find("(count " + std::to_string(oracle(1, 1, 2, 4)) + ")") !=
              std::string::npos,
       "line operator count is not " + std::to_string(oracle(1, 1, 2, 4)));
  Report rs = check_pbw(sl2(), 3, 2);
  note(o, rs.ok(), "sl2: " + first_fail(rs));
  note(o, rs.text().find("(count " + std::to_string(oracle(3, 0, 3, 2)) + ")") !=
              std::string::npos,
       "sl2 count is not " + std::to_string(oracle(3, 0, 3, 2)));
  return o;
}

Outcome cohomology_matches_oracles() {
  Outcome o;
  // (a) coordinate fields: only constants survive, certified by the Euler
  // contraction homotopy h = i_E with d h + h d = (degree + p) id.
  for (int n = 1; n <= 2; ++n) {
    LieRinehart L = de_rham(n);
    CohomTable t = cohomology_dims(L, n, 0, 6);
    for (const auto& r : t.rows) {
      int expect = (r.p == 0 && r.weight == 0) ? 1 : 0;
      note(o, r.dim_h == expect,
           "de-rham n=" + std::to_string(n) + " p=" + std::to_string(r.p) + " weight=" +
               std::to_string(r.weight) + ": H has dim " + std::to_string(r.dim_h));
    }
    LElement euler;
    for (int i = 0; i < n; ++i) euler[i] = L.A.var(i);
    for (int p = 1; p <= n; ++p)
      for (const auto& tuple : basis_tuples(n, p))
        for (const auto& m : L.A.monomial_window(2)) {
          AltForm w;
          w.p = p;
          w.comp.emplace(tuple, Poly::monomial(L.A.nvars(), m, Scalar(1)));
          AltForm lhs = alt_sum(L, rinehart_d(L, contract(L, euler, w)),
                                contract(L, euler, rinehart_d(L, w)));
          AltForm rhs = alt_scale(w, Scalar((int)mono_degree(m) + p));
          note(o, alt_equal(L, lhs, rhs), "Euler homotopy fails on an n=" +
                                              std::to_string(n) + " " + std::to_string(p) +
                                              "-form");
        }
  }
  // (b) sl2: table vs a brute-force rank computation over the tuple bases.
  {
    LieRinehart L = sl2();
    CohomTable t = cohomology_dims(L, 3, 0, 0);
    auto tuples2 = basis_tuples(3, 2);
    SparseMat M((int)tuples2.size());
    for (int g = 0; g < 3; ++g) {
      AltForm w;
      w.p = 1;
      w.comp.emplace(std::vector<int>{g}, L.A.one());
      AltForm dw = rinehart_d(L, w);
      SparseVec row;
      for (size_t k = 0; k < tuples2.size(); ++k) {
        auto it = dw.comp.find(tuples2[k]);
        if (it != dw.comp.end()) row.emplace_back((int)k, it->second.constant_value());
      }
      M.add_row(std::move(row));
    }
    int r1 = std::move(M).rank();
    bool d2_zero = true;
    for (const auto& tpl : tuples2) {
      AltForm w;
      w.p = 2;
      w.comp.emplace(tpl, L.A.one());
      if (!rinehart_d(L, w).comp.empty()) d2_zero = false;
    }
    note(o, d2_zero, "sl2: d is nonzero on two-forms");
    int expect[4] = {1, (int)binom(3, 1) - r1, (int)binom(3, 2) - 0 - r1, 1};
    for (int p = 0; p <= 3; ++p)
      note(o, t.h(p, 0) == expect[p],
           "sl2 H^" + std::to_string(p) + " is " + std::to_string(t.h(p, 0)) + ", oracle says " +
               std::to_string(expect[p]));
  }
  // (c) the symplectic plane transports to the coordinate fields of the plane.
  {
    CohomTable pt = poisson_cohomology(poisson_plane(), 2, 0, 6);
    CohomTable dt = cohomology_dims(de_rham(2), 2, 0, 6);
    note(o, pt.shift == dt.shift && pt.rows.size() == dt.rows.size(),
         "plane tables have different shapes");
    for (size_t k = 0; k < pt.rows.size() && k < dt.rows.size(); ++k) {
      const auto& a = pt.rows[k];
      const auto& b = dt.rows[k];
      note(o,
           a.p == b.p && a.weight == b.weight && a.dim_cochains == b.dim_cochains &&
               a.dim_cocycles == b.dim_cocycles && a.dim_boundaries == b.dim_boundaries &&
               a.dim_h == b.dim_h,
           "plane tables differ at row " + std::to_string(k));
    }
  }
  // (d) d o d = 0 on every computed window.
  for (auto& [label, rep] :
       std::vector<std::pair<std::string, Report>>{
           {"de-rham:1", check_d_squared(de_rham(1), 1, 0, 6)},
           {"de-rham:2", check_d_squared(de_rham(2), 2, 0, 6)},
           {"sl2", check_d_squared(sl2(), 3, 0, 0)},
           {"exotic chart", check_d_squared(differentials_chart(exotic_plane()), 2, 0, 2)}})
    note(o, rep.ok(), label + ": " + first_fail(rep));
  // (e) the structure two-form is a cocycle for every built-in bracket.
  {
    std::vector<std::pair<std::string, Poisson>> builtins{{"plane", poisson_plane()},
                                                          {"complex", complex_plane()},
                                                          {"log", log_plane()},
                                                          {"zero", zero_poisson(2)},
                                                          {"exotic", exotic_plane()}};
    for (const auto& [label, P] : builtins) {
      Report rep = check_two_form_cocycle(P);
      note(o, rep.ok(), label + " two-form: " + first_fail(rep));
    }
  }
  return o;
}

Outcome quantization_matches_brackets() {
  Outcome o;
  Prequantum Q = plane_prequantum();
  const Algebra& A = Q.P.A;
  std::vector<std::pair<Poly, Poly>> pairs{{A.parse("q"), A.parse("p")},
                                           {A.parse("q^2"), A.parse("p")},
                                           {A.parse("q*p"), A.parse("p^2")}};
  Report rep = check_dirac(Q, pairs, 4);
  note(o, rep.ok(), first_fail(rep));
  note(o, rep.text().find("constants quantize") != std::string::npos,
       "no constants item in the report");
  return o;
}

Outcome invariants_equal_reduced_dims() {
  Outcome o;
  for (int ell = 1; ell <= 2; ++ell)
    for (int s = 1; s <= ell; ++s)
      for (int k = 1; k <= 3; ++k) {
        std::string at =
            "(" + std::to_string(ell) + "," + std::to_string(s) + "," + std::to_string(k) + ")";
        note(o, invariant_dim(ell, s, (uint32_t)(2 * k)) == reduced_space_dim(ell, s, k),
             "even-degree invariants differ at " + at);
        note(o, invariant_dim(ell, s, (uint32_t)(2 * k - 1)) == 0,
             "odd-degree invariants are nonzero at " + at);
        if (ell == 2 && s == 1)
          note(o, reduced_space_dim(2, 1, k) == 2 * k + 1, "line orbit count differs at " + at);
      }
  note(o, reduced_space_dim(2, 2, 2) == 6, "two-particle level-two dimension is not 6");
  return o;
}

Outcome costratified_chain_consistent() {
  Outcome o;
  for (int k = 1; k <= 3; ++k) {
    Costratified C = costratified_chain(2, k);
    long long kernel = 0;
    for (const auto& m : highest_weight_monomials(2, k))
      if (m[1] > 0) kernel += weyl_dim(monomial_weight(m, 2));
    note(o, C.dims.size() == 2 && C.dims[0] == C.dims[1] - kernel,
         "k=" + std::to_string(k) + ": restriction does not drop exactly the top blocks");
    Report rep = verify_costratified(C);
    note(o, rep.ok(), "k=" + std::to_string(k) + ": " + first_fail(rep));
  }
  return o;
}

Outcome polarizations_close() {
  Outcome o;
  Poisson C = complex_plane();
  Report rc = check_polarization(C, {C.gen_diff(C.A.slot("z"))}, 3);
  note(o, rc.ok(), "holomorphic polarization: " + first_fail(rc));
  Poisson P = poisson_plane();
  Report rp = check_polarization(P, {P.gen_diff(P.A.slot("q"))}, 3);
  note(o, rp.ok(), "vertical polarization: " + first_fail(rp));
  return o;
}

Outcome corrupted_inputs_rejected() {
  Outcome o;
  const char* bad[] = {"bad_exotic_bracket.json", "bad_theta.json", "bad_costrat.json",
                       "bad_jacobi.json"};
  for (const char* f : bad) {
    auto [code, out] = run_cli(std::string("verify ") + LIRA_DATA_DIR + "/" + f);
    note(o, code == 1, std::string(f) + " exited with " + std::to_string(code));
    size_t pos = out.find("[FAIL]");
    note(o, pos != std::string::npos && out.find(": ", pos) != std::string::npos,
         std::string(f) + " printed no witness");
  }
  auto [code, out] = run_cli(std::string("verify ") + LIRA_DATA_DIR + "/exotic_plane.json");
  note(o, code == 0 && out.find("all checks passed") != std::string::npos,
       "the control input does not pass");
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  int num = 0;
  auto criterion = [&](const char* name, long long budget_ms, Outcome (*fn)()) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (ms > budget_ms) note(o, false, "exceeded the time budget");
    std::printf("[%s] %2d. %s (%lld ms, budget %lld ms)%s%s\n", o.ok ? "PASS" : "FAIL", ++num,
                name, ms, budget_ms, o.detail.empty() ? "" : " -- ", o.detail.c_str());
    if (!o.ok) ++failed;
  };

  criterion("exotic plane Poisson structure verifies exactly", 1000, exotic_plane_verifies);
  criterion("hamiltonian flow of the invariant preserves the singular locus", 1000,
            hamiltonian_flow_fixes_locus);
  criterion("differential calculus and extension verify at degree 4", 10000,
            differentials_and_extension_verify);
  criterion("enveloping-algebra bases match the symmetric count", 30000, pbw_bases_independent);
  criterion("cohomology tables agree with independent oracles", 60000,
            cohomology_matches_oracles);
  criterion("quantization satisfies the bracket correspondence", 10000,
            quantization_matches_brackets);
  criterion("invariant dimensions equal reduced-space dimensions", 120000,
            invariants_equal_reduced_dims);
  criterion("costratified chain dimensions and functoriality", 5000,
            costratified_chain_consistent);
  criterion("polarizations close under the bracket", 5000, polarizations_close);
  criterion("corrupted descriptions are rejected with witnesses", 30000,
            corrupted_inputs_rejected);

  std::printf("%d of %d criteria failed\n", failed, num);
  return failed;
}
