#pragma once

// Dimension-level comparison of symplectic reduction and quantization for
// systems of s particles in dimension ell at total oscillator level k.
//
// Classical side: the reduced space decomposes into blocks indexed by
// monomials (m_1, ..., m_s) with sum j*m_j = k; the block for m carries the
// irreducible of highest weight lambda_i = 2 * sum_{j >= i} m_j, whose
// dimension is given by the product formula. Quantum side: the dimension of
// degree-2k polynomial invariants of O(s) acting on s copies of R^ell,
// computed as the kernel of the stacked infinitesimal-rotation derivations
// together with one reflection. The two counts agree; the library computes
// both independently so the agreement is a check, not an input.

#include <map>
#include <string>
#include <vector>

#include "costratified.hpp"
#include "linalg.hpp"
#include "poisson.hpp"  // UnsupportedError
#include "poly.hpp"

namespace lira {

// Solutions of sum_{j=1..s} j*m_j = k, listed with m_1 descending.
inline std::vector<std::vector<int>> highest_weight_monomials(int s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> m((size_t)s, 0);
  // Recurse on positions 1..s with the remaining budget; position 1 is
  // filled greedily downward so m_1 descends across the listing.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == s) {
      if (remaining == 0) out.push_back(m);
      return;
    }
    int j = pos + 1;  // 1-based weight of this position
    if (pos == s - 1) {
      if (remaining % j == 0) {
        m[(size_t)pos] = remaining / j;
        out.push_back(m);
        m[(size_t)pos] = 0;
      }
      return;
    }
    for (int e = remaining / j; e >= 0; --e) {
      m[(size_t)pos] = e;
      self(self, pos + 1, remaining - e * j);
    }
    m[(size_t)pos] = 0;
  };
  if (s > 0 && k >= 0) rec(rec, 0, k);
  return out;
}

// lambda_i = 2 * sum_{j >= i} m_j, padded with zeros up to length ell.
inline std::vector<int> monomial_weight(const std::vector<int>& m, int ell) {
  std::vector<int> lambda((size_t)ell, 0);
  int acc = 0;
  for (int i = (int)m.size() - 1; i >= 0; --i) {
    acc += m[(size_t)i];
    if (i < ell) lambda[(size_t)i] = 2 * acc;
  }
  return lambda;
}

// Product formula: dim = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline long long weyl_dim(const std::vector<int>& lambda) {
  Rational dim = 1;
  int n = (int)lambda.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= Rational(lambda[(size_t)i] - lambda[(size_t)j] + j - i, j - i);
  Integer num = boost::multiprecision::numerator(dim);
  Integer den = boost::multiprecision::denominator(dim);
  if (den != 1) throw std::logic_error("dimension product formula did not clear denominators");
  return num.convert_to<long long>();
}

inline long long reduced_space_dim(int ell, int s, int k) {
  long long total = 0;
  for (const auto& m : highest_weight_monomials(s, k)) total += weyl_dim(monomial_weight(m, ell));
  return total;
}

// Blocks killed by passing to one particle fewer: those with m_s > 0.
inline long long restriction_kernel_dim(int ell, int s, int k) {
  long long total = 0;
  for (const auto& m : highest_weight_monomials(s, k))
    if (m.back() > 0) total += weyl_dim(monomial_weight(m, ell));
  return total;
}

struct RestrictionProfile {
  long long total = 0, image = 0, kernel = 0;
};

inline RestrictionProfile restriction_profile(int ell, int s, int k) {
  RestrictionProfile p;
  p.total = reduced_space_dim(ell, s, k);
  p.kernel = restriction_kernel_dim(ell, s, k);
  p.image = p.total - p.kernel;
  return p;
}

namespace detail {

inline void enumerate_degree(int nvars, uint32_t d, Mono& m, int slot, std::vector<Mono>& out) {
  if (slot == nvars - 1) {
    m[(size_t)slot] = d;
    out.push_back(m);
    m[(size_t)slot] = 0;
    return;
  }
  for (uint32_t e = 0; e <= d; ++e) {
    m[(size_t)slot] = e;
    enumerate_degree(nvars, d - e, m, slot + 1, out);
  }
  m[(size_t)slot] = 0;
}

inline std::vector<Mono> monomials_of_degree(int nvars, uint32_t d) {
  std::vector<Mono> out;
  Mono m((size_t)nvars, 0);
  if (nvars > 0) enumerate_degree(nvars, d, m, 0, out);
  else if (d == 0) out.push_back(m);
  return out;
}

}  // namespace detail

// Dimension of degree-d polynomial invariants of O(s) acting diagonally on
// s copies of R^ell. Variables x_{a,i} (row a < s, copy i < ell); the group
// is generated infinitesimally by the rotations
//   D_{ab} = sum_i ( x_{a,i} d/dx_{b,i} - x_{b,i} d/dx_{a,i} ),  a < b,
// plus the reflection negating row 0. The invariant dimension is the kernel
// dimension of the stacked maps (all D_{ab}, reflection - identity).
inline long long invariant_dim(int ell, int s, uint32_t d) {
  if (s < 1 || ell < 1) throw UnsupportedError("invariant_dim needs s >= 1 and ell >= 1");
  if (s * ell > 6 || d > 10)
    throw UnsupportedError("invariant_dim is exhaustive over degree-" + std::to_string(d) +
                           " monomials in " + std::to_string(s * ell) +
                           " variables; bounded to s*ell <= 6 and degree <= 10");
  int nv = s * ell;
  auto var = [ell](int a, int i) { return a * ell + i; };
  auto monos = detail::monomials_of_degree(nv, d);
  std::map<Mono, int> index;
  for (size_t t = 0; t < monos.size(); ++t) index.emplace(monos[t], (int)t);
  long long n_monos = (long long)monos.size();

  int gens = s * (s - 1) / 2;
  SparseMat M((int)((gens + 1) * n_monos));
  for (size_t t = 0; t < monos.size(); ++t) {
    const Mono& mono = monos[t];
    SparseVec row;
    int g = 0;
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b, ++g) {
        for (int i = 0; i < ell; ++i) {
          // x_{a,i} d/dx_{b,i}
          if (mono[(size_t)var(b, i)] > 0) {
            Mono img = mono;
            img[(size_t)var(b, i)] -= 1;
            img[(size_t)var(a, i)] += 1;
            row.emplace_back(g * (int)n_monos + index.at(img),
                             Scalar((long long)mono[(size_t)var(b, i)]));
          }
          // - x_{b,i} d/dx_{a,i}
          if (mono[(size_t)var(a, i)] > 0) {
            Mono img = mono;
            img[(size_t)var(a, i)] -= 1;
            img[(size_t)var(b, i)] += 1;
            row.emplace_back(g * (int)n_monos + index.at(img),
                             Scalar(-(long long)mono[(size_t)var(a, i)]));
          }
        }
      }
    uint32_t row0_degree = 0;
    for (int i = 0; i < ell; ++i) row0_degree += mono[(size_t)var(0, i)];
    if (row0_degree % 2 == 1)
      row.emplace_back(gens * (int)n_monos + (int)t, Scalar(-2));  // (-1)^deg - 1
    M.add_row(std::move(row));
  }
  return n_monos - std::move(M).rank();
}

// The chain of reduced spaces for 1 <= s <= ell at level k, with the block
// projections as structure maps: a costratified vector space.
inline Costratified costratified_chain(int ell, int k) {
  if (ell < 1 || ell > 3 || k < 0 || k > 12)
    throw UnsupportedError("costratified_chain is built for 1 <= ell <= 3 and 0 <= k <= 12");
  Costratified C;
  std::vector<std::vector<std::vector<int>>> monos((size_t)ell + 1);
  std::vector<std::vector<long long>> offsets((size_t)ell + 1);
  for (int s = 1; s <= ell; ++s) {
    C.strata.push_back("S" + std::to_string(s));
    monos[(size_t)s] = highest_weight_monomials(s, k);
    long long off = 0;
    for (const auto& m : monos[(size_t)s]) {
      offsets[(size_t)s].push_back(off);
      off += weyl_dim(monomial_weight(m, ell));
    }
    C.dims.push_back((int)off);
  }
  for (int lo = 1; lo <= ell; ++lo)
    for (int hi = lo + 1; hi <= ell; ++hi) C.order.emplace_back(lo - 1, hi - 1);

  for (int hi = 1; hi <= ell; ++hi)
    for (int lo = 1; lo < hi; ++lo) {
      Mat m(C.dims[(size_t)lo - 1], C.dims[(size_t)hi - 1]);
      for (size_t src = 0; src < monos[(size_t)hi].size(); ++src) {
        const auto& mono = monos[(size_t)hi][src];
        bool truncatable = true;
        for (int j = lo; j < hi; ++j)
          if (mono[(size_t)j] != 0) truncatable = false;
        if (!truncatable) continue;
        std::vector<int> cut(mono.begin(), mono.begin() + lo);
        size_t dst = 0;
        while (dst < monos[(size_t)lo].size() && monos[(size_t)lo][dst] != cut) ++dst;
        long long block = weyl_dim(monomial_weight(mono, ell));
        for (long long t = 0; t < block; ++t)
          m.at((int)(offsets[(size_t)lo][dst] + t), (int)(offsets[(size_t)hi][src] + t)) =
              Scalar(1);
      }
      C.maps.emplace(std::make_pair(hi - 1, lo - 1), std::move(m));
    }
  return C;
}

}  // namespace lira
