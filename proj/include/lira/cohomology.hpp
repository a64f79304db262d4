#pragma once

// Alternating-forms complex of a Lie-Rinehart pair: A-multilinear
// alternating functions on L with values in A, with the differential
//
//   (d w)(x_0..x_p) = sum_i (-1)^i x_i( w(.. x_i^ ..) )
//                   + sum_{i<j} (-1)^{i+j} w([x_i,x_j], .. x_i^ .. x_j^ ..)
//
// For the derivations of a polynomial algebra this is the algebraic de Rham
// complex; for a Lie algebra over the ground field it is Chevalley-Eilenberg;
// for the differentials of a Poisson algebra it computes Poisson cohomology.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lie_rinehart.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace lira {

// Components on strictly increasing basis tuples; absent tuples are zero.
struct AltForm {
  int p = 0;
  std::map<std::vector<int>, Poly> comp;
};

inline void alt_add(const LieRinehart& L, AltForm& w, const std::vector<int>& idx,
                    const Poly& c) {
  auto it = w.comp.find(idx);
  if (it == w.comp.end()) {
    Poly n = L.A.normal_form(c);
    if (!n.is_zero()) w.comp.emplace(idx, std::move(n));
  } else {
    it->second = L.A.normal_form(it->second + c);
    if (it->second.is_zero()) w.comp.erase(it);
  }
}

// Value on an arbitrary tuple: sort with sign, zero on repeats.
inline Poly alt_eval(const LieRinehart& L, const AltForm& w, std::vector<int> idx) {
  int sign = 1;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return L.A.zero();
      if (idx[a] > idx[b]) {
        std::swap(idx[a], idx[b]);
        sign = -sign;
      }
    }
  auto it = w.comp.find(idx);
  if (it == w.comp.end()) return L.A.zero();
  return sign == 1 ? it->second : -it->second;
}

// Value extended A-multilinearly in the first slot.
inline Poly alt_eval_first(const LieRinehart& L, const AltForm& w, const LElement& x,
                           const std::vector<int>& rest) {
  Poly out = L.A.zero();
  for (const auto& [i, c] : x) {
    std::vector<int> idx;
    idx.reserve(rest.size() + 1);
    idx.push_back(i);
    idx.insert(idx.end(), rest.begin(), rest.end());
    out += c * alt_eval(L, w, std::move(idx));
  }
  return L.A.normal_form(out);
}

namespace detail {

inline void increasing_tuples(int n, int p, std::vector<int>& cur, int min_v,
                              std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (int v = min_v; v < n; ++v) {
    cur.push_back(v);
    increasing_tuples(n, p, cur, v + 1, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> basis_tuples(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::increasing_tuples(n, p, cur, 0, out);
  return out;
}

inline AltForm rinehart_d(const LieRinehart& L, const AltForm& w) {
  AltForm out;
  out.p = w.p + 1;
  for (const auto& tuple : basis_tuples(L.rank(), w.p + 1)) {
    Poly val = L.A.zero();
    for (size_t i = 0; i < tuple.size(); ++i) {
      std::vector<int> rest;
      rest.reserve(tuple.size() - 1);
      for (size_t t = 0; t < tuple.size(); ++t)
        if (t != i) rest.push_back(tuple[t]);
      Poly inner = alt_eval(L, w, rest);
      Poly term = L.anchors[(size_t)tuple[i]].apply(L.A, inner);
      if (i % 2) term = -term;
      val += term;
    }
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j) {
        std::vector<int> rest;
        rest.reserve(tuple.size() - 2);
        for (size_t t = 0; t < tuple.size(); ++t)
          if (t != i && t != j) rest.push_back(tuple[t]);
        Poly term = alt_eval_first(L, w, L.bracket_basis(tuple[i], tuple[j]), rest);
        if ((i + j) % 2) term = -term;  // (-1)^{i+j}
        val += term;
      }
    alt_add(L, out, tuple, val);
  }
  return out;
}

// Uniform grading shift of the structure tables: every nonzero anchor image
// of a generator is homogeneous of degree 1 + u and every nonzero bracket
// coefficient is homogeneous of degree u. Weight of a component (tuple I,
// poly of degree t) is t - p*u, and d preserves weight.
struct GradingInfo {
  bool graded = false;
  int shift = 0;
  std::string reason;
};

inline GradingInfo grading_info(const LieRinehart& L) {
  if (!L.A.graded()) return {false, 0, "algebra relations are not homogeneous"};
  bool have = false;
  int u = 0;
  auto consider = [&](const Poly& p, int degree_offset, const std::string& what) -> std::string {
    if (p.is_zero()) return "";
    if (!p.is_homogeneous()) return what + " is not homogeneous";
    int cand = p.degree() - degree_offset;
    if (!have) {
      have = true;
      u = cand;
      return "";
    }
    if (cand != u)
      return what + " has degree shift " + std::to_string(cand) +
             ", expected " + std::to_string(u);
    return "";
  };
  for (size_t i = 0; i < L.anchors.size(); ++i)
    for (int s = 0; s < L.A.nvars(); ++s) {
      std::string err = consider(L.anchors[i].images[(size_t)s], 1,
                                 "anchor(" + L.basis[i] + ")(" + L.A.names()[(size_t)s] + ")");
      if (!err.empty()) return {false, 0, err};
    }
  for (const auto& [key, el] : L.table)
    for (const auto& [k, c] : el) {
      std::string err = consider(c, 0,
                                 "bracket [" + L.basis[(size_t)key.first] + "," +
                                     L.basis[(size_t)key.second] + "] coefficient");
      if (!err.empty()) return {false, 0, err};
    }
  return {true, have ? u : 0, ""};
}

struct CohomRow {
  int p = 0;
  int weight = 0;
  int dim_cochains = 0;
  int dim_cocycles = 0;
  int dim_boundaries = 0;
  int dim_h = 0;
};

struct CohomTable {
  int shift = 0;
  std::vector<CohomRow> rows;

  int h(int p, int weight) const {
    for (const auto& r : rows)
      if (r.p == p && r.weight == weight) return r.dim_h;
    return 0;
  }
};

struct GradingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Basis of the weight-w slice in form degree p, and the matrix of d on it.
struct Slice {
  std::vector<std::pair<std::vector<int>, Mono>> basis;
  std::map<std::pair<std::vector<int>, Mono>, int> index;
};

inline Slice weight_slice(const LieRinehart& L, int p, int weight, int shift) {
  Slice s;
  int deg = weight + p * shift;
  if (deg >= 0) {
    auto tuples = basis_tuples(L.rank(), p);
    auto monos = L.A.monomial_basis((uint32_t)deg);
    for (const auto& t : tuples)
      for (const auto& m : monos) {
        s.index.emplace(std::make_pair(t, m), (int)s.basis.size());
        s.basis.emplace_back(t, m);
      }
  }
  return s;
}

// Rank of d restricted to the weight-w slice of degree p.
inline int d_rank(const LieRinehart& L, const Slice& dom, const Slice& cod, int p) {
  if (dom.basis.empty() || cod.basis.empty()) return 0;
  SparseMat M((int)cod.basis.size());
  for (const auto& [tuple, mono] : dom.basis) {
    AltForm w;
    w.p = p;
    w.comp.emplace(tuple, Poly::monomial(L.A.nvars(), mono, Scalar(1)));
    AltForm dw = rinehart_d(L, w);
    SparseVec row;
    for (const auto& [t2, poly] : dw.comp)
      for (const auto& [m2, c2] : poly.terms()) {
        auto it = cod.index.find(std::make_pair(t2, m2));
        if (it == cod.index.end())
          throw GradingError("differential left the weight slice; tables are not graded");
        row.emplace_back(it->second, c2);
      }
    M.add_row(std::move(row));
  }
  return std::move(M).rank();
}

}  // namespace detail

// Cohomology dimensions for form degrees 0..p_max and weights in
// [weight_lo, weight_hi]. Requires graded-compatible tables.
inline CohomTable cohomology_dims(const LieRinehart& L, int p_max, int weight_lo,
                                  int weight_hi) {
  GradingInfo g = grading_info(L);
  if (!g.graded) throw GradingError("structure tables are not graded-compatible: " + g.reason);
  if (!L.A.completion().confluent)
    throw GradingError("relation rewrite system is not confluent: " + L.A.completion().message);
  CohomTable table;
  table.shift = g.shift;
  for (int weight = weight_lo; weight <= weight_hi; ++weight) {
    std::vector<detail::Slice> slices;
    slices.reserve((size_t)p_max + 2);
    for (int p = 0; p <= p_max + 1; ++p)
      slices.push_back(detail::weight_slice(L, p, weight, g.shift));
    std::vector<int> ranks((size_t)p_max + 1, 0);
    for (int p = 0; p <= p_max; ++p)
      ranks[(size_t)p] = detail::d_rank(L, slices[(size_t)p], slices[(size_t)p + 1], p);
    for (int p = 0; p <= p_max; ++p) {
      CohomRow row;
      row.p = p;
      row.weight = weight;
      row.dim_cochains = (int)slices[(size_t)p].basis.size();
      row.dim_cocycles = row.dim_cochains - ranks[(size_t)p];
      row.dim_boundaries = p == 0 ? 0 : ranks[(size_t)p - 1];
      row.dim_h = row.dim_cocycles - row.dim_boundaries;
      table.rows.push_back(row);
    }
  }
  return table;
}

// d(d(w)) = 0 for every basis form of the given degrees and weights.
inline Report check_d_squared(const LieRinehart& L, int p_max, int weight_lo, int weight_hi) {
  Report rep;
  GradingInfo g = grading_info(L);
  if (!g.graded) {
    rep.fail("structure tables are graded-compatible", g.reason);
    return rep;
  }
  for (int p = 0; p <= p_max; ++p) {
    bool ok = true;
    std::string witness;
    for (int weight = weight_lo; weight <= weight_hi && ok; ++weight) {
      auto slice = detail::weight_slice(L, p, weight, g.shift);
      for (const auto& [tuple, mono] : slice.basis) {
        AltForm w;
        w.p = p;
        w.comp.emplace(tuple, Poly::monomial(L.A.nvars(), mono, Scalar(1)));
        AltForm ddw = rinehart_d(L, rinehart_d(L, w));
        if (!ddw.comp.empty()) {
          ok = false;
          witness = "basis form at weight " + std::to_string(weight) + " has d(d(w)) with " +
                    std::to_string(ddw.comp.size()) + " nonzero components";
          break;
        }
      }
    }
    rep.check("d o d = 0 on " + std::to_string(p) + "-forms", ok, witness);
  }
  return rep;
}

}  // namespace lira
