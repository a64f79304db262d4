#pragma once

// Commutative algebra presented by generators and relations, with normal
// forms computed by a terminating rewrite system. Relations are turned into
// rules "leading monomial -> lower-order tail"; a bounded critical-pair
// completion either certifies confluence or reports that it gave up, never
// silently.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace lira {

struct Rule {
  Mono lead;  // monic: lead stands for the monomial with coefficient 1
  Poly tail;  // lead is congruent to tail; every tail term is grlex-smaller
};

struct CompletionReport {
  bool confluent = false;
  int pairs_checked = 0;
  int rules_added = 0;
  std::string message;
};

struct CompletionBounds {
  uint32_t max_rule_degree = 16;
  size_t max_rules = 64;
};

class Algebra {
 public:
  Algebra() = default;

  // vars: declaration order used for display. order: precedence list, most
  // significant first; defaults to vars.
  static Algebra presented(const std::vector<std::string>& vars,
                           const std::vector<std::string>& order,
                           const std::vector<std::string>& relation_srcs,
                           CompletionBounds bounds = {}) {
    Algebra A;
    A.init_vars(vars, order);
    for (const auto& src : relation_srcs) A.relations_.push_back(A.parse(src));
    A.build_rules(bounds);
    return A;
  }

  static Algebra free(const std::vector<std::string>& vars) {
    return presented(vars, vars, {});
  }

  // The ground field: zero generators.
  static Algebra scalars() { return free({}); }

  // Same generators and order as base, quotiented by the given relation
  // polynomials (expressed in base's slots).
  static Algebra requotient(const Algebra& base, std::vector<Poly> rels,
                            CompletionBounds bounds = {}) {
    Algebra A;
    A.names_ = base.names_;
    A.slot_ = base.slot_;
    for (auto& r : rels)
      if (!r.is_zero()) A.relations_.push_back(std::move(r));
    A.build_rules(bounds);
    return A;
  }

  int nvars() const { return (int)names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::map<std::string, int>& slots() const { return slot_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const CompletionReport& completion() const { return completion_; }

  int slot(const std::string& name) const {
    auto it = slot_.find(name);
    if (it == slot_.end()) throw ParseError("unknown variable \"" + name + "\"");
    return it->second;
  }

  Poly parse(const std::string& src) const { return parse_poly(src, slot_, nvars()); }
  std::string str(const Poly& p) const { return poly_str(p, names_); }

  Poly zero() const { return Poly(nvars()); }
  Poly one() const { return Poly::constant(nvars(), Scalar(1)); }
  Poly constant(Scalar c) const { return Poly::constant(nvars(), std::move(c)); }
  Poly var(int s) const { return Poly::variable(nvars(), s); }
  Poly var(const std::string& name) const { return var(slot(name)); }

  // Reduces to the unique irreducible representative (unique when the rule
  // system is confluent). Each step rewrites the largest reducible term.
  Poly normal_form(Poly p) const {
    while (true) {
      bool reduced = false;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rule* r = find_rule(it->first);
        if (!r) continue;
        Mono q = mono_div(it->first, r->lead);
        Scalar c = it->second;
        Poly quot = Poly::monomial(nvars(), q, c);
        p.add_term(it->first, -c);
        p += quot * r->tail;
        reduced = true;
        break;
      }
      if (!reduced) return p;
    }
  }

  bool is_zero_mod(const Poly& p) const { return normal_form(p).is_zero(); }
  bool equal_mod(const Poly& a, const Poly& b) const { return is_zero_mod(a - b); }

  bool mono_irreducible(const Mono& m) const { return find_rule(m) == nullptr; }

  // Irreducible monomials of exact degree d: a basis of the degree-d slice
  // when the presentation is graded and confluent.
  std::vector<Mono> monomial_basis(uint32_t d) const {
    std::vector<Mono> out;
    Mono m(nvars(), 0);
    enumerate(m, 0, d, out);
    return out;
  }

  // Irreducible monomials of degree <= maxdeg, ascending degree.
  std::vector<Mono> monomial_window(uint32_t maxdeg) const {
    std::vector<Mono> out;
    for (uint32_t d = 0; d <= maxdeg; ++d) {
      auto layer = monomial_basis(d);
      out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
  }

  bool graded() const {
    for (const auto& r : relations_)
      if (!r.is_homogeneous()) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;  // slot order = precedence order
  std::map<std::string, int> slot_;
  std::vector<Poly> relations_;
  std::vector<Rule> rules_;
  CompletionReport completion_;

  void init_vars(const std::vector<std::string>& vars, const std::vector<std::string>& order) {
    const std::vector<std::string>& prec = order.empty() ? vars : order;
    if (prec.size() != vars.size())
      throw ParseError("variable order must be a permutation of the variable list");
    names_ = prec;
    for (size_t k = 0; k < names_.size(); ++k) {
      if (names_[k] == "i") throw ParseError("\"i\" is reserved for the imaginary unit");
      if (!slot_.emplace(names_[k], (int)k).second)
        throw ParseError("duplicate variable \"" + names_[k] + "\"");
    }
    for (const auto& v : vars)
      if (!slot_.count(v)) throw ParseError("order list does not mention variable \"" + v + "\"");
  }

  const Rule* find_rule(const Mono& m) const {
    for (const auto& r : rules_)
      if (mono_divides(r.lead, m)) return &r;
    return nullptr;
  }

  static std::optional<Rule> rule_from(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    Mono lead = p.leading_mono();
    Scalar lc = p.leading_coeff();
    Poly tail = (Scalar(-1) / lc) * p;
    tail.add_term(lead, Scalar(1));  // tail = lead - p/lc
    return Rule{std::move(lead), std::move(tail)};
  }

  void build_rules(const CompletionBounds& bounds) {
    for (const auto& rel : relations_) {
      if (auto r = rule_from(rel)) rules_.push_back(std::move(*r));
    }
    complete(bounds);
  }

  // Critical-pair completion with hard bounds. On success all critical pairs
  // reduce to zero, so normal forms are canonical.
  void complete(const CompletionBounds& bounds) {
    std::deque<std::pair<size_t, size_t>> queue;
    for (size_t a = 0; a < rules_.size(); ++a)
      for (size_t b = a + 1; b < rules_.size(); ++b) queue.emplace_back(a, b);
    int checked = 0, added = 0;
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      ++checked;
      if (mono_coprime(rules_[a].lead, rules_[b].lead)) continue;
      Mono l = mono_lcm(rules_[a].lead, rules_[b].lead);
      Poly pa = Poly::monomial(nvars(), mono_div(l, rules_[a].lead), Scalar(1)) * rules_[a].tail;
      Poly pb = Poly::monomial(nvars(), mono_div(l, rules_[b].lead), Scalar(1)) * rules_[b].tail;
      Poly s = normal_form(pa - pb);
      if (s.is_zero()) continue;
      if (mono_degree(s.leading_mono()) > bounds.max_rule_degree ||
          rules_.size() >= bounds.max_rules) {
        completion_ = {false, checked, added,
                       "completion aborted: bounds exceeded while processing critical pair "
                       "(rule degree limit " +
                           std::to_string(bounds.max_rule_degree) + ", rule count limit " +
                           std::to_string(bounds.max_rules) + ")"};
        return;
      }
      auto nr = rule_from(s);
      size_t idx = rules_.size();
      rules_.push_back(std::move(*nr));
      ++added;
      for (size_t k = 0; k < idx; ++k) queue.emplace_back(k, idx);
    }
    completion_ = {true, checked, added, "confluent"};
  }

  void enumerate(Mono& m, int slot, uint32_t remaining, std::vector<Mono>& out) const {
    if (slot == nvars()) {
      if (remaining == 0 && mono_irreducible(m)) out.push_back(m);
      return;
    }
    if (slot == nvars() - 1) {
      m[slot] = remaining;
      if (mono_irreducible(m)) out.push_back(m);
      m[slot] = 0;
      return;
    }
    for (uint32_t e = 0; e <= remaining; ++e) {
      m[slot] = e;
      enumerate(m, slot + 1, remaining - e, out);
    }
    m[slot] = 0;
  }
};

// A derivation of the algebra, given by its images on generators. Extended
// to polynomials by the Leibniz rule; results are kept in normal form.
struct Derivation {
  std::vector<Poly> images;  // per slot

  static Derivation zero(const Algebra& A) {
    return Derivation{std::vector<Poly>((size_t)A.nvars(), A.zero())};
  }

  Poly apply(const Algebra& A, const Poly& p) const {
    Poly out = A.zero();
    for (const auto& [m, c] : p.terms()) {
      for (int s = 0; s < A.nvars(); ++s) {
        if (m[s] == 0 || images[s].is_zero()) continue;
        Mono n = m;
        n[s] -= 1;
        out += Poly::monomial(A.nvars(), n, c * Scalar((long long)m[s])) * images[s];
      }
    }
    return A.normal_form(out);
  }

  // A derivation descends to the quotient iff it kills every relation.
  std::optional<std::string> ill_defined_witness(const Algebra& A) const {
    for (const auto& rel : A.relations()) {
      Poly img = apply(A, rel);
      if (!img.is_zero())
        return "derivation does not preserve relation " + A.str(rel) + ": image " + A.str(img);
    }
    return std::nullopt;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    Derivation r = a;
    for (size_t k = 0; k < r.images.size(); ++k) r.images[k] += b.images[k];
    return r;
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    Derivation r = a;
    for (size_t k = 0; k < r.images.size(); ++k) r.images[k] -= b.images[k];
    return r;
  }
};

inline Derivation scale(const Algebra& A, const Poly& a, const Derivation& d) {
  Derivation r = d;
  for (auto& img : r.images) img = A.normal_form(a * img);
  return r;
}

// Commutator of derivations, evaluated on generators.
inline Derivation commutator(const Algebra& A, const Derivation& x, const Derivation& y) {
  Derivation r = Derivation::zero(A);
  for (int s = 0; s < A.nvars(); ++s)
    r.images[s] = A.normal_form(x.apply(A, y.images[s]) - y.apply(A, x.images[s]));
  return r;
}

inline bool derivation_equal(const Algebra& A, const Derivation& x, const Derivation& y) {
  for (int s = 0; s < A.nvars(); ++s)
    if (!A.equal_mod(x.images[s], y.images[s])) return false;
  return true;
}

inline std::string derivation_str(const Algebra& A, const Derivation& d) {
  std::string out = "(";
  for (int s = 0; s < A.nvars(); ++s) {
    if (s) out += ", ";
    out += A.names()[s] + " -> " + A.str(d.images[s]);
  }
  return out + ")";
}

}  // namespace lira
