#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qserre/expr.hpp"
#include "qserre/ratf.hpp"

namespace qserre {

/// Exponent tuple of a PBW monomial, one entry per variable. Entries may be
/// negative only for invertible variables.
using Expo = std::vector<int>;

inline Expo zero_expo(size_t n) { return Expo(n, 0); }

inline Expo unit_expo(size_t n, size_t i, int e = 1) {
  Expo out(n, 0);
  out[i] = e;
  return out;
}

/// Sum of |exponents|, the word length of a (Laurent) monomial.
inline int expo_length(const Expo& e) {
  int out = 0;
  for (int x : e) out += x < 0 ? -x : x;
  return out;
}

/// Element of a skew-PBW algebra with coefficients in C: finite term map from
/// exponent tuples to nonzero coefficients. Structural equality.
template <class C>
struct BasicElement {
  std::map<Expo, C> terms;

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }

  void add_term(const Expo& e, const C& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const BasicElement& a, const BasicElement& b) { return !(a == b); }
  friend bool operator<(const BasicElement& a, const BasicElement& b) {
    return a.terms < b.terms;
  }

  BasicElement& operator+=(const BasicElement& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator-(const BasicElement& a) {
    BasicElement out;
    for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
    return out;
  }

  template <class S>
  BasicElement scaled(const S& c) const {
    BasicElement out;
    for (const auto& [e, v] : terms) out.add_term(e, v * c);
    return out;
  }

  /// True when the element is a scalar multiple of 1.
  bool is_scalar() const {
    if (terms.empty()) return true;
    if (terms.size() != 1) return false;
    return expo_length(terms.begin()->first) == 0;
  }
  C scalar_value() const {
    if (terms.empty()) return C{};
    return terms.begin()->second;
  }
};

using Element = BasicElement<RatF>;

template <class C>
BasicElement<C> element_monomial(const Expo& e, const C& c) {
  BasicElement<C> out;
  out.add_term(e, c);
  return out;
}

/// Ordered-variable skew-PBW presentation: X_j X_i = q(j,i) X_i X_j + c(j,i)
/// for j > i, with per-variable invertibility flags and (e1,e2)-weights.
/// Structural invariants are enforced at construction; confluence is checked
/// separately by validate_spec.
class AlgebraSpec {
 public:
  AlgebraSpec(std::vector<std::string> vars, std::vector<bool> invertible,
              std::map<std::pair<int, int>, RatF> q, std::map<std::pair<int, int>, Element> c,
              std::vector<std::array<int, 2>> weights)
      : vars_(std::move(vars)),
        invertible_(std::move(invertible)),
        weights_(std::move(weights)) {
    const int n = static_cast<int>(vars_.size());
    if (static_cast<int>(invertible_.size()) != n || static_cast<int>(weights_.size()) != n)
      throw std::invalid_argument("AlgebraSpec: field sizes disagree");
    q_.assign(n * n, RatF{});
    c_.assign(n * n, Element{});
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        auto it = q.find({j, i});
        if (it == q.end() || it->second.is_zero())
          throw std::invalid_argument("AlgebraSpec: missing or zero q(" + std::to_string(j + 1) +
                                      "," + std::to_string(i + 1) + ")");
        q_[j * n + i] = it->second;
      }
    for (const auto& [ji, corr] : c) {
      const auto [j, i] = ji;
      if (j <= i || j >= n || i < 0) throw std::invalid_argument("AlgebraSpec: bad correction key");
      for (const auto& [e, coeff] : corr.terms) {
        if (static_cast<int>(e.size()) != n)
          throw std::invalid_argument("AlgebraSpec: correction exponent arity");
        if (expo_length(e) >= 2)
          throw std::invalid_argument("AlgebraSpec: correction word length must be < 2");
        for (int t = 0; t < n; ++t) {
          if (e[t] != 0 && !(i < t && t < j))
            throw std::invalid_argument(
                "AlgebraSpec: correction variable not strictly between the swapped pair");
          if (e[t] < 0) throw std::invalid_argument("AlgebraSpec: negative correction exponent");
        }
        const auto we = weight_of(e);
        const std::array<int, 2> expect{weights_[i][0] + weights_[j][0],
                                        weights_[i][1] + weights_[j][1]};
        if (we != expect)
          throw std::invalid_argument("AlgebraSpec: correction not weight-homogeneous for pair (" +
                                      std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
      }
      c_[j * n + i] = corr;
    }
  }

  int size() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  bool invertible(int i) const { return invertible_[i]; }
  const std::vector<bool>& invertible_flags() const { return invertible_; }
  const std::vector<std::array<int, 2>>& weights() const { return weights_; }

  /// Scalar in X_j X_i = q(j,i) X_i X_j + c(j,i); requires j > i.
  const RatF& q(int j, int i) const { return q_[j * size() + i]; }
  const Element& c(int j, int i) const { return c_[j * size() + i]; }

  std::array<int, 2> weight_of(const Expo& e) const {
    std::array<int, 2> out{0, 0};
    for (size_t i = 0; i < e.size(); ++i) {
      out[0] += e[i] * weights_[i][0];
      out[1] += e[i] * weights_[i][1];
    }
    return out;
  }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.vars_ == b.vars_ && a.invertible_ == b.invertible_ && a.q_ == b.q_ &&
           a.c_ == b.c_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  std::vector<bool> invertible_;
  std::vector<RatF> q_;
  std::vector<Element> c_;
  std::vector<std::array<int, 2>> weights_;
};

namespace detail {

/// Normalize X^alpha * X_g^{sgn} into `out` (scaled by coeff). Corrections
/// recurse on strictly smaller interface distance, so this terminates for
/// every spec accepted by the AlgebraSpec constructor.
template <class C>
void mono_rmul(const AlgebraSpec& spec, const Expo& alpha, const C& coeff, int g, int sgn,
               BasicElement<C>& out) {
  const int n = spec.size();
  int j = -1;
  for (int t = n - 1; t > g; --t)
    if (alpha[t] != 0) {
      j = t;
      break;
    }
  if (j < 0) {
    Expo na = alpha;
    na[g] += sgn;
    if (na[g] < 0 && !spec.invertible(g))
      throw std::logic_error("negative exponent on non-invertible variable " + spec.var_name(g));
    out.add_term(na, coeff);
    return;
  }
  const int m = alpha[j];
  const RatF& q = spec.q(j, g);
  const Element& corr = spec.c(j, g);
  if (corr.is_zero()) {
    Expo ap = alpha;
    ap[j] = 0;
    BasicElement<C> sub;
    mono_rmul(spec, ap, coeff * q.pow(m * sgn), g, sgn, sub);
    for (auto& [e, v] : sub.terms) {
      Expo key = e;
      key[j] += m;
      out.add_term(key, v);
    }
    return;
  }
  if (m < 0)
    throw std::logic_error("inverted variable with additive correction is unsupported");
  Expo am = alpha;
  am[j] = m - 1;
  if (sgn > 0) {
    // X^am (X_j X_g) = q (X^am X_g) X_j + X^am c
    BasicElement<C> sub;
    mono_rmul(spec, am, coeff * q, g, 1, sub);
    for (auto& [e, v] : sub.terms) {
      Expo key = e;
      key[j] += 1;
      out.add_term(key, v);
    }
    for (const auto& [ce, cv] : corr.terms) {
      int t = -1;
      for (int u = 0; u < n; ++u)
        if (ce[u] != 0) t = u;
      if (t < 0) {
        out.add_term(am, coeff * cv);
      } else {
        mono_rmul(spec, am, coeff * cv, t, 1, out);
      }
    }
    return;
  }
  // X_j X_g^{-1} = q^{-1} X_g^{-1} X_j - q^{-1} X_g^{-1} c X_g^{-1}
  const RatF qinv = q.inv();
  BasicElement<C> sub;
  mono_rmul(spec, am, coeff * qinv, g, -1, sub);
  for (auto& [e, v] : sub.terms) {
    Expo key = e;
    key[j] += 1;
    out.add_term(key, v);
  }
  for (const auto& [ce, cv] : corr.terms) {
    int t = -1;
    for (int u = 0; u < n; ++u)
      if (ce[u] != 0) t = u;
    BasicElement<C> e1;
    mono_rmul(spec, am, coeff * (-(cv * qinv)), g, -1, e1);
    BasicElement<C> e2;
    if (t < 0) {
      e2 = std::move(e1);
    } else {
      for (const auto& [e, v] : e1.terms) mono_rmul(spec, e, v, t, 1, e2);
    }
    for (const auto& [e, v] : e2.terms) mono_rmul(spec, e, v, g, -1, out);
  }
}

}  // namespace detail

/// Right-multiply a normalized element by a single generator power X_g^{sgn}.
template <class C>
BasicElement<C> rmul_gen(const AlgebraSpec& spec, const BasicElement<C>& a, int g, int sgn) {
  BasicElement<C> out;
  for (const auto& [e, v] : a.terms) detail::mono_rmul(spec, e, v, g, sgn, out);
  return out;
}

/// PBW-normal product. Associative for every spec passing validate_spec.
template <class C>
BasicElement<C> mul(const AlgebraSpec& spec, const BasicElement<C>& a, const BasicElement<C>& b) {
  BasicElement<C> out;
  for (const auto& [beta, cb] : b.terms) {
    BasicElement<C> cur = a.scaled(cb);
    for (int i = 0; i < spec.size(); ++i) {
      const int e = beta[i];
      const int sgn = e > 0 ? 1 : -1;
      for (int k = 0; k < (e > 0 ? e : -e); ++k) cur = rmul_gen(spec, cur, i, sgn);
    }
    out += cur;
  }
  return out;
}

template <class C>
BasicElement<C> mul(const AlgebraSpec& spec, const BasicElement<C>& a, const BasicElement<C>& b,
                    const BasicElement<C>& c) {
  return mul(spec, mul(spec, a, b), c);
}

template <class C>
BasicElement<C> commutator(const AlgebraSpec& spec, const BasicElement<C>& a,
                           const BasicElement<C>& b) {
  return mul(spec, a, b) - mul(spec, b, a);
}

template <class C>
BasicElement<C> element_pow(const AlgebraSpec& spec, const BasicElement<C>& a, int e);

inline Element element_one(const AlgebraSpec& spec) {
  return element_monomial(zero_expo(spec.size()), RatF(1));
}

inline Element element_var(const AlgebraSpec& spec, int i, int e = 1) {
  if (e < 0 && !spec.invertible(i))
    throw std::invalid_argument("variable " + spec.var_name(i) + " is not invertible");
  return element_monomial(unit_expo(spec.size(), i, e), RatF(1));
}

/// Inverse of a single-term element supported on invertible variables.
inline Element invert_unit(const AlgebraSpec& spec, const Element& a) {
  if (a.size() != 1) throw std::invalid_argument("invert_unit: element is not a monomial");
  const auto& [e, c] = *a.terms.begin();
  if (c.is_zero()) throw division_by_zero{};
  for (int i = 0; i < spec.size(); ++i)
    if (e[i] != 0 && !spec.invertible(i))
      throw std::invalid_argument("invert_unit: variable " + spec.var_name(i) +
                                  " is not invertible");
  Expo neg = e;
  for (auto& x : neg) x = -x;
  // (c X^e)^{-1} = (c*phi)^{-1} X^{-e} where X^e X^{-e} = phi.
  const Element prod = mul(spec, element_monomial(e, RatF(1)), element_monomial(neg, RatF(1)));
  if (!prod.is_scalar()) throw std::logic_error("invert_unit: X^e X^-e not scalar");
  const RatF phi = prod.scalar_value();
  return element_monomial(neg, (c * phi).inv());
}

template <class C>
BasicElement<C> element_pow(const AlgebraSpec& spec, const BasicElement<C>& a, int e) {
  if (e < 0) throw std::invalid_argument("element_pow: negative exponent on general element");
  BasicElement<C> out = element_monomial(zero_expo(spec.size()), C(1));
  for (int k = 0; k < e; ++k) out = mul(spec, out, a);
  return out;
}

/// Monomial weight and termwise homogeneity. A zero or weight-mixed element
/// reports nullopt.
inline std::optional<std::array<int, 2>> is_homogeneous(const AlgebraSpec& spec,
                                                        const Element& a) {
  std::optional<std::array<int, 2>> w;
  for (const auto& [e, c] : a.terms) {
    const auto we = spec.weight_of(e);
    if (!w)
      w = we;
    else if (*w != we)
      return std::nullopt;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Confluence (diamond-lemma overlap check on length-3 words)
// ---------------------------------------------------------------------------

struct ConfluenceFailure {
  int k, j, i;          // overlap word X_k X_j X_i, k > j > i (0-based indices)
  Element via_kj;       // normal form resolving the (k,j) redex first
  Element via_ji;       // normal form resolving the (j,i) redex first
};

struct ConfluenceReport {
  std::vector<ConfluenceFailure> failures;
  int triples_checked = 0;
  bool ok() const { return failures.empty(); }
};

/// Right side of the rewrite rule for X_j X_i (j > i).
inline Element rewrite_rhs(const AlgebraSpec& spec, int j, int i) {
  Expo e = zero_expo(spec.size());
  e[i] = 1;
  e[j] += 1;
  Element out = element_monomial(e, spec.q(j, i));
  out += spec.c(j, i);
  return out;
}

/// Diamond-lemma check: for every k > j > i the two resolutions of
/// X_k X_j X_i normalize identically.
inline ConfluenceReport validate_spec(const AlgebraSpec& spec) {
  ConfluenceReport report;
  const int n = spec.size();
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        ++report.triples_checked;
        const Element a = mul(spec, rewrite_rhs(spec, k, j), element_var(spec, i));
        const Element b = mul(spec, element_var(spec, k), rewrite_rhs(spec, j, i));
        if (a != b) report.failures.push_back({k, j, i, a, b});
      }
  return report;
}

// ---------------------------------------------------------------------------
// Ore data
// ---------------------------------------------------------------------------

struct OreData {
  int j = 0;                      // 0-based variable index the data belongs to
  std::vector<Element> tau;       // images of X_0 .. X_{j-1}
  std::vector<Element> delta;     // images of X_0 .. X_{j-1}
  std::vector<std::string> issues;
  bool consistent() const { return issues.empty(); }
};

/// Read tau_j / delta_j off the spec (X_j X_i = tau_j(X_i) X_j + delta_j(X_i))
/// and verify tau_j is a relation-preserving endomorphism and delta_j a
/// tau_j-skew derivation on the subalgebra generated by X_0..X_{j-1}.
inline OreData ore_data(const AlgebraSpec& spec, int j) {
  if (j < 1 || j >= spec.size()) throw std::invalid_argument("ore_data: index out of range");
  OreData out;
  out.j = j;
  for (int i = 0; i < j; ++i) {
    out.tau.push_back(element_var(spec, i).scaled(spec.q(j, i)));
    out.delta.push_back(spec.c(j, i));
  }
  auto tau_of = [&](const Element& x) {
    // multiplicative extension to subalgebra elements with support < j
    Element img;
    for (const auto& [e, c] : x.terms) {
      Element term = element_monomial(zero_expo(spec.size()), c);
      for (int t = 0; t < j; ++t)
        for (int k = 0; k < std::abs(e[t]); ++k)
          term = mul(spec, term, e[t] > 0 ? out.tau[t] : invert_unit(spec, out.tau[t]));
      img += term;
    }
    return img;
  };
  auto delta_of_corr = [&](const Element& corr) {
    Element img;
    for (const auto& [e, c] : corr.terms) {
      int t = -1;
      for (int u = 0; u < spec.size(); ++u)
        if (e[u] != 0) t = u;
      if (t >= 0) img += out.delta[t].scaled(c);
    }
    return img;
  };
  for (int a = 1; a < j; ++a)
    for (int b = 0; b < a; ++b) {
      const RatF& qab = spec.q(a, b);
      const Element& cab = spec.c(a, b);
      const Element lhs_tau = mul(spec, tau_of(element_var(spec, a)), tau_of(element_var(spec, b)));
      const Element rhs_tau =
          mul(spec, tau_of(element_var(spec, b)), tau_of(element_var(spec, a))).scaled(qab) +
          tau_of(cab);
      if (lhs_tau != rhs_tau)
        out.issues.push_back("tau_" + std::to_string(j + 1) + " breaks relation (" +
                             std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
      // delta(X_a X_b) = delta(X_a) X_b + tau(X_a) delta(X_b), applied to
      // X_a X_b - q X_b X_a - c = 0
      const Element lhs = mul(spec, out.delta[a], element_var(spec, b)) +
                          mul(spec, tau_of(element_var(spec, a)), out.delta[b]);
      const Element rhs = (mul(spec, out.delta[b], element_var(spec, a)) +
                           mul(spec, tau_of(element_var(spec, b)), out.delta[a]))
                              .scaled(qab) +
                          delta_of_corr(cab);
      if (lhs != rhs)
        out.issues.push_back("delta_" + std::to_string(j + 1) + " breaks relation (" +
                             std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial enumeration and counting
// ---------------------------------------------------------------------------

/// PBW monomials: non-invertible exponents are >= 0 with total degree bound;
/// invertible exponents range over [-laurent_window, laurent_window].
inline std::vector<Expo> enumerate_monomials(const AlgebraSpec& spec, int degbound,
                                             int laurent_window) {
  std::vector<Expo> out;
  Expo cur = zero_expo(spec.size());
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == spec.size()) {
      out.push_back(cur);
      return;
    }
    if (spec.invertible(i)) {
      for (int e = -laurent_window; e <= laurent_window; ++e) {
        cur[i] = e;
        self(self, i + 1, used);
      }
      cur[i] = 0;
    } else {
      for (int e = 0; used + e <= degbound; ++e) {
        cur[i] = e;
        self(self, i + 1, used + e);
      }
      cur[i] = 0;
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Count of PBW monomials in the non-invertible variables with total degree
/// <= n (invertible variables do not contribute).
inline std::uint64_t dimension_count(const AlgebraSpec& spec, int n) {
  std::uint64_t count = 0;
  for (const auto& e : enumerate_monomials(spec, n, 0)) {
    (void)e;
    ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Printing / parsing
// ---------------------------------------------------------------------------

inline std::string monomial_str(const AlgebraSpec& spec, const Expo& e) {
  std::string out;
  for (int i = 0; i < spec.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += spec.var_name(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

inline std::string element_str(const AlgebraSpec& spec, const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms) {
    std::string cs = c.str();
    const bool wrap = c.num().size() > 1 && c.den().is_one();
    if (wrap) cs = "(" + cs + ")";
    const std::string mono = monomial_str(spec, e);
    std::string piece;
    if (mono.empty())
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else if (cs == "-1")
      piece = "-" + mono;
    else
      piece = cs + " * " + mono;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

/// Expression-evaluation context producing elements of a fixed spec. Symbols
/// resolve to variables, r/s scalars, or caller-registered named elements.
struct ElementContext {
  using Value = Element;
  const AlgebraSpec& spec;
  std::map<std::string, Element> named;

  explicit ElementContext(const AlgebraSpec& s) : spec(s) {}

  Value from_integer(const mpz_class& v) {
    return element_monomial(zero_expo(spec.size()), RatF(v));
  }
  Value symbol(const std::string& name) {
    if (name == "r") return element_monomial(zero_expo(spec.size()), RatF::r());
    if (name == "s") return element_monomial(zero_expo(spec.size()), RatF::s());
    if (auto it = named.find(name); it != named.end()) return it->second;
    const int i = spec.var_index(name);
    if (i < 0) throw parse_error("unknown symbol '" + name + "'");
    return element_var(spec, i);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return qserre::mul(spec, a, b); }
  Value neg(const Value& a) { return -a; }
  Value div(const Value& a, const Value& b) {
    if (!b.is_scalar() || b.is_zero()) {
      if (b.size() == 1) return qserre::mul(spec, a, invert_unit(spec, b));
      throw parse_error("division only by scalars or invertible monomials");
    }
    return a.scaled(b.scalar_value().inv());
  }
  Value pow(const Value& a, long e) {
    if (e >= 0) return element_pow(spec, a, static_cast<int>(e));
    Element inv = invert_unit(spec, a);
    return element_pow(spec, inv, static_cast<int>(-e));
  }
};

inline Element parse_element(const AlgebraSpec& spec, std::string_view src,
                             const std::map<std::string, Element>& named = {}) {
  ElementContext ctx(spec);
  ctx.named = named;
  return eval_expr(parse_expr(src), ctx);
}

}  // namespace qserre
