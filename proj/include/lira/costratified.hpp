#pragma once

// Costratified vector spaces: a finite poset of strata, a vector space per
// stratum, and a structure map for every strict comparison, contravariant in
// the order. Verification covers poset sanity, map shapes, functoriality of
// composites, and (when declared) intertwining of operator families.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"

namespace lira {

struct Costratified {
  std::vector<std::string> strata;
  // Declared comparisons (lo, hi) meaning strata[lo] <= strata[hi]; the
  // verifier works with the reflexive-transitive closure.
  std::vector<std::pair<int, int>> order;
  std::vector<int> dims;
  // Structure map for hi >= lo, directed hi -> lo: shape dims[lo] x dims[hi].
  std::map<std::pair<int, int>, Mat> maps;
  std::vector<std::string> op_labels;
  std::map<int, std::vector<Mat>> ops;  // per stratum, aligned with op_labels

  int index(const std::string& name) const {
    for (size_t k = 0; k < strata.size(); ++k)
      if (strata[k] == name) return (int)k;
    return -1;
  }
};

// Reflexive-transitive closure as a boolean matrix: leq[lo][hi].
inline std::vector<std::vector<bool>> order_closure(const Costratified& C) {
  size_t n = C.strata.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t k = 0; k < n; ++k) leq[k][k] = true;
  for (const auto& [lo, hi] : C.order) leq[(size_t)lo][(size_t)hi] = true;
  for (size_t m = 0; m < n; ++m)
    for (size_t a = 0; a < n; ++a)
      if (leq[a][m])
        for (size_t b = 0; b < n; ++b)
          if (leq[m][b]) leq[a][b] = true;
  return leq;
}

inline Report verify_costratified(const Costratified& C) {
  Report rep;
  size_t n = C.strata.size();
  if (C.dims.size() != n) {
    rep.fail("each stratum has a declared dimension",
             std::to_string(C.dims.size()) + " dimensions for " + std::to_string(n) + " strata");
    return rep;
  }

  auto leq = order_closure(C);
  {
    bool ok = true;
    std::string witness;
    for (size_t a = 0; a < n && ok; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (leq[a][b] && leq[b][a]) {
          ok = false;
          witness = C.strata[a] + " and " + C.strata[b] + " are mutually comparable";
          break;
        }
    rep.check("the order relation is a poset", ok, witness);
    if (!ok) return rep;
  }

  auto map_of = [&](size_t hi, size_t lo) -> const Mat* {
    auto it = C.maps.find({(int)hi, (int)lo});
    return it == C.maps.end() ? nullptr : &it->second;
  };

  {
    bool ok = true;
    std::string witness;
    for (size_t hi = 0; hi < n && ok; ++hi)
      for (size_t lo = 0; lo < n; ++lo) {
        if (lo == hi || !leq[lo][hi]) continue;
        const Mat* m = map_of(hi, lo);
        if (!m) {
          ok = false;
          witness = "missing structure map " + C.strata[hi] + " -> " + C.strata[lo];
        } else if (m->rows != C.dims[lo] || m->cols != C.dims[hi]) {
          ok = false;
          witness = "map " + C.strata[hi] + " -> " + C.strata[lo] + " has shape " +
                    std::to_string(m->rows) + "x" + std::to_string(m->cols) + ", expected " +
                    std::to_string(C.dims[lo]) + "x" + std::to_string(C.dims[hi]);
        }
        if (!ok) break;
      }
    rep.check("every comparison has a structure map of the right shape", ok, witness);
    if (!ok) return rep;
  }

  {
    bool ok = true;
    std::string witness;
    for (const auto& [key, m] : C.maps) {
      auto [hi, lo] = key;
      if (hi == lo && !m.is_identity()) {
        ok = false;
        witness = "declared self-map on " + C.strata[(size_t)hi] + " is not the identity";
        break;
      }
      if (hi != lo && !leq[(size_t)lo][(size_t)hi]) {
        ok = false;
        witness = "map " + C.strata[(size_t)hi] + " -> " + C.strata[(size_t)lo] +
                  " declared for incomparable strata";
        break;
      }
    }
    rep.check("declared maps match the order relation", ok, witness);
    if (!ok) return rep;
  }

  {
    bool ok = true;
    std::string witness;
    size_t checked = 0;
    for (size_t hi = 0; hi < n && ok; ++hi)
      for (size_t mid = 0; mid < n && ok; ++mid) {
        if (mid == hi || !leq[mid][hi]) continue;
        for (size_t lo = 0; lo < n; ++lo) {
          if (lo == mid || lo == hi || !leq[lo][mid]) continue;
          ++checked;
          Mat composite = (*map_of(mid, lo)) * (*map_of(hi, mid));
          if (!(composite == *map_of(hi, lo))) {
            ok = false;
            witness = "through " + C.strata[mid] + ": composite " + C.strata[hi] + " -> " +
                      C.strata[mid] + " -> " + C.strata[lo] + " differs from the direct map";
            break;
          }
        }
      }
    rep.check("functoriality of composites (" + std::to_string(checked) + " triangles)", ok,
              witness);
  }

  if (!C.op_labels.empty()) {
    bool ok = true;
    std::string witness;
    for (size_t k = 0; k < n && ok; ++k) {
      auto it = C.ops.find((int)k);
      if (it == C.ops.end() || it->second.size() != C.op_labels.size()) {
        ok = false;
        witness = "stratum " + C.strata[k] + " does not carry all declared operators";
        break;
      }
      for (size_t t = 0; t < it->second.size(); ++t) {
        const Mat& op = it->second[t];
        if (op.rows != C.dims[k] || op.cols != C.dims[k]) {
          ok = false;
          witness = "operator " + C.op_labels[t] + " on " + C.strata[k] + " is not square of size " +
                    std::to_string(C.dims[k]);
          break;
        }
      }
    }
    rep.check("operator families are complete and well-shaped", ok, witness);

    if (ok) {
      std::string w2;
      size_t checked = 0;
      for (size_t hi = 0; hi < n && ok; ++hi)
        for (size_t lo = 0; lo < n && ok; ++lo) {
          if (lo == hi || !leq[lo][hi]) continue;
          const Mat& m = *map_of(hi, lo);
          for (size_t t = 0; t < C.op_labels.size(); ++t) {
            ++checked;
            Mat lhs = m * C.ops.at((int)hi)[t];
            Mat rhs = C.ops.at((int)lo)[t] * m;
            if (!(lhs == rhs)) {
              ok = false;
              w2 = "operator " + C.op_labels[t] + " does not intertwine with " +
                   C.strata[hi] + " -> " + C.strata[lo];
              break;
            }
          }
        }
      rep.check("structure maps intertwine the operator families (" + std::to_string(checked) +
                    " squares)",
                ok, w2);
    }
  }

  return rep;
}

}  // namespace lira
