#pragma once

// Universal enveloping algebra of a Lie-Rinehart pair, in PBW normal form:
// every element is a sum of terms (coefficient in A) * (non-decreasing word
// of basis letters). Straightening rewrites
//   e * a   ->  a * e + e(a)               (coefficients move left)
//   e_j e_i ->  e_i e_j + [e_j, e_i]       (j > i)
// until only normal terms remain.

#include <algorithm>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lie_rinehart.hpp"
#include "linalg.hpp"

namespace lira {

using Word = std::vector<int>;

struct UElement {
  std::map<Word, Poly> terms;

  bool is_zero() const { return terms.empty(); }

  int filtration_degree() const {
    int d = -1;
    for (const auto& [w, c] : terms) d = std::max(d, (int)w.size());
    return d;
  }

  // Terms of exact word length k (image in the associated graded piece).
  std::map<Word, Poly> graded_part(size_t k) const {
    std::map<Word, Poly> out;
    for (const auto& [w, c] : terms)
      if (w.size() == k) out.emplace(w, c);
    return out;
  }
};

inline void ue_add_term(const LieRinehart& L, UElement& u, const Word& w, const Poly& c) {
  auto it = u.terms.find(w);
  if (it == u.terms.end()) {
    Poly n = L.A.normal_form(c);
    if (!n.is_zero()) u.terms.emplace(w, std::move(n));
  } else {
    it->second = L.A.normal_form(it->second + c);
    if (it->second.is_zero()) u.terms.erase(it);
  }
}

inline UElement ue_zero() { return {}; }

inline UElement ue_from_poly(const LieRinehart& L, const Poly& a) {
  UElement u;
  ue_add_term(L, u, {}, a);
  return u;
}

inline UElement ue_one(const LieRinehart& L) { return ue_from_poly(L, L.A.one()); }

inline UElement ue_gen(const LieRinehart& L, int i) {
  UElement u;
  ue_add_term(L, u, {i}, L.A.one());
  return u;
}

inline UElement ue_add(const LieRinehart& L, const UElement& a, const UElement& b) {
  UElement out = a;
  for (const auto& [w, c] : b.terms) ue_add_term(L, out, w, c);
  return out;
}

inline UElement ue_sub(const LieRinehart& L, const UElement& a, const UElement& b) {
  UElement out = a;
  for (const auto& [w, c] : b.terms) ue_add_term(L, out, w, -c);
  return out;
}

inline bool ue_equal(const LieRinehart& L, const UElement& a, const UElement& b) {
  return ue_sub(L, a, b).terms.empty();
}

namespace detail {

// A pending product: coefficient * interleaved letters and coefficients.
using Atom = std::variant<int, Poly>;
struct PendingTerm {
  Poly coeff;
  std::vector<Atom> body;
};

// First-inversion strategy = 0, last-inversion = 1. Both must agree when the
// structure tables are consistent; the unit tests exercise that.
inline void straighten_into(const LieRinehart& L, Poly coeff, std::vector<Atom> body,
                            UElement& out, int strategy = 0) {
  std::vector<PendingTerm> work;
  work.push_back({std::move(coeff), std::move(body)});
  while (!work.empty()) {
    PendingTerm t = std::move(work.back());
    work.pop_back();

    // Fold leading coefficients into the front coefficient.
    size_t start = 0;
    while (start < t.body.size() && std::holds_alternative<Poly>(t.body[start])) {
      t.coeff = t.coeff * std::get<Poly>(t.body[start]);
      ++start;
    }
    if (start) t.body.erase(t.body.begin(), t.body.begin() + (long)start);
    if (t.coeff.is_zero() || L.A.is_zero_mod(t.coeff)) continue;

    // Find a rewrite site: a coefficient to the right of a letter, two
    // adjacent coefficients (which simply merge), or an out-of-order adjacent
    // letter pair.
    enum class Site { coeff, merge, swap };
    size_t site = t.body.size();
    Site site_kind = Site::coeff;
    for (size_t k = 0; k + 1 < t.body.size(); ++k) {
      bool found = false;
      if (std::holds_alternative<Poly>(t.body[k + 1])) {
        found = true;
        site = k;
        site_kind = std::holds_alternative<Poly>(t.body[k]) ? Site::merge : Site::coeff;
      } else if (std::holds_alternative<int>(t.body[k]) &&
                 std::get<int>(t.body[k]) > std::get<int>(t.body[k + 1])) {
        found = true;
        site = k;
        site_kind = Site::swap;
      }
      if (found && strategy == 0) break;
    }

    if (site == t.body.size()) {
      Word w;
      w.reserve(t.body.size());
      for (const auto& a : t.body) w.push_back(std::get<int>(a));
      ue_add_term(L, out, w, t.coeff);
      continue;
    }

    if (site_kind == Site::merge) {
      PendingTerm merged{t.coeff, {}};
      merged.body.reserve(t.body.size() - 1);
      merged.body.insert(merged.body.end(), t.body.begin(), t.body.begin() + (long)site);
      merged.body.push_back(std::get<Poly>(t.body[site]) * std::get<Poly>(t.body[site + 1]));
      merged.body.insert(merged.body.end(), t.body.begin() + (long)site + 2, t.body.end());
      work.push_back(std::move(merged));
    } else if (site_kind == Site::coeff) {
      // ... e b ...  ->  ... b e ...  +  ... e(b) ...
      int e = std::get<int>(t.body[site]);
      Poly b = std::get<Poly>(t.body[site + 1]);
      PendingTerm moved{t.coeff, t.body};
      std::swap(moved.body[site], moved.body[site + 1]);
      work.push_back(std::move(moved));
      Poly eb = L.anchors[(size_t)e].apply(L.A, b);
      if (!eb.is_zero()) {
        PendingTerm acted{t.coeff, {}};
        acted.body.reserve(t.body.size() - 1);
        acted.body.insert(acted.body.end(), t.body.begin(), t.body.begin() + (long)site);
        acted.body.push_back(eb);
        acted.body.insert(acted.body.end(), t.body.begin() + (long)site + 2, t.body.end());
        work.push_back(std::move(acted));
      }
    } else {
      // ... e_j e_i ...  ->  ... e_i e_j ...  +  ... [e_j, e_i] ...
      int j = std::get<int>(t.body[site]);
      int i = std::get<int>(t.body[site + 1]);
      PendingTerm swapped{t.coeff, t.body};
      std::swap(swapped.body[site], swapped.body[site + 1]);
      work.push_back(std::move(swapped));
      for (const auto& [m, bm] : L.bracket_basis(j, i)) {
        PendingTerm br{t.coeff, {}};
        br.body.reserve(t.body.size());
        br.body.insert(br.body.end(), t.body.begin(), t.body.begin() + (long)site);
        br.body.push_back(bm);
        br.body.push_back(m);
        br.body.insert(br.body.end(), t.body.begin() + (long)site + 2, t.body.end());
        work.push_back(std::move(br));
      }
    }
  }
}

}  // namespace detail

// Straightens a product c_1 e_{l_1} c_2 e_{l_2} ... into PBW normal form.
inline UElement pbw_normal_form(const LieRinehart& L,
                                const std::vector<std::pair<Poly, int>>& seq,
                                int strategy = 0) {
  std::vector<detail::Atom> body;
  body.reserve(seq.size() * 2);
  for (const auto& [c, l] : seq) {
    body.emplace_back(c);
    body.emplace_back(l);
  }
  UElement out;
  detail::straighten_into(L, L.A.one(), std::move(body), out, strategy);
  return out;
}

inline UElement ue_mul(const LieRinehart& L, const UElement& u, const UElement& v) {
  UElement out;
  for (const auto& [wu, cu] : u.terms) {
    for (const auto& [wv, cv] : v.terms) {
      std::vector<detail::Atom> body;
      body.reserve(wu.size() + wv.size() + 1);
      for (int l : wu) body.emplace_back(l);
      body.emplace_back(cv);
      for (int l : wv) body.emplace_back(l);
      detail::straighten_into(L, cu, std::move(body), out);
    }
  }
  return out;
}

inline std::string ue_str(const LieRinehart& L, const UElement& u) {
  if (u.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : u.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + L.A.str(c) + ")";
    for (int l : w) out += "*" + L.basis[(size_t)l];
  }
  return out;
}

namespace detail {

inline void sorted_words(int rank, int len, Word& cur, int min_letter, std::vector<Word>& out) {
  if ((int)cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int l = min_letter; l < rank; ++l) {
    cur.push_back(l);
    sorted_words(rank, len, cur, l, out);
    cur.pop_back();
  }
}

inline bool next_permutation_word(Word& w) { return std::next_permutation(w.begin(), w.end()); }

}  // namespace detail

// The PBW window check: for every irreducible monomial a of degree at most
// coeff_degree and every non-decreasing word of length at most filtration,
// the symmetrized product a * sym(e_{i_1} ... e_{i_k}) is straightened; its
// image in the associated graded must be of exact length k, and the whole
// family must be linearly independent there (exact rank over the rationals).
inline Report check_pbw(const LieRinehart& L, int filtration, uint32_t coeff_degree) {
  Report rep;
  if (!L.A.completion().confluent) {
    rep.fail("relation rewrite system is confluent", L.A.completion().message);
    return rep;
  }
  auto window = L.A.monomial_window(coeff_degree);

  // Column labels: (word, coefficient monomial).
  std::map<std::pair<Word, Mono>, int> columns;
  auto column = [&](const Word& w, const Mono& m) {
    return columns.emplace(std::make_pair(w, m), (int)columns.size()).first->second;
  };

  std::vector<SparseVec> rows;
  bool filtration_ok = true;
  std::string filtration_witness;

  for (int k = 0; k <= filtration; ++k) {
    std::vector<Word> words;
    Word cur;
    detail::sorted_words(L.rank(), k, cur, 0, words);
    for (const auto& w : words) {
      for (const auto& m : window) {
        Poly a = Poly::monomial(L.A.nvars(), m, Scalar(1));
        UElement sym;
        Word perm = w;
        do {
          std::vector<std::pair<Poly, int>> seq;
          seq.reserve(perm.size());
          for (size_t t = 0; t < perm.size(); ++t)
            seq.emplace_back(t == 0 ? a : L.A.one(), perm[t]);
          if (seq.empty())
            sym = ue_add(L, sym, ue_from_poly(L, a));
          else
            sym = ue_add(L, sym, pbw_normal_form(L, seq));
        } while (detail::next_permutation_word(perm));

        if (sym.filtration_degree() > k && filtration_ok) {
          filtration_ok = false;
          filtration_witness = "word length " + std::to_string(k) +
                               " produced filtration degree " +
                               std::to_string(sym.filtration_degree());
        }
        SparseVec row;
        for (const auto& [wt, ct] : sym.graded_part((size_t)k))
          for (const auto& [mt, st] : ct.terms()) row.emplace_back(column(wt, mt), st);
        rows.push_back(std::move(row));
      }
    }
  }

  rep.check("straightening stays in the filtration", filtration_ok, filtration_witness);

  SparseMat M(std::max(1, (int)columns.size()));
  size_t expected = rows.size();
  for (auto& r : rows) M.add_row(std::move(r));
  int rank = std::move(M).rank();
  rep.check("symmetrized monomials are independent in the associated graded (count " +
                std::to_string(expected) + ")",
            (size_t)rank == expected,
            "rank " + std::to_string(rank) + " of " + std::to_string(expected));
  return rep;
}

}  // namespace lira
