#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qserre {

struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("division by zero") {}
};

struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Graded-lexicographic order with r > s, as a strict greater-than so that
/// map iteration starts at the leading term.
struct GrlexGreater {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

namespace detail {

/// Dense univariate polynomial over Z, index = degree in s.
using Poly1 = std::vector<mpz_class>;

inline void p1_trim(Poly1& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly1 p1_add(const Poly1& a, const Poly1& b) {
  Poly1 out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  p1_trim(out);
  return out;
}

inline Poly1 p1_neg(Poly1 a) {
  for (auto& c : a) c = -c;
  return a;
}

inline Poly1 p1_mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  p1_trim(out);
  return out;
}

inline Poly1 p1_scale(Poly1 a, const mpz_class& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

inline mpz_class p1_content(const Poly1& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline Poly1 p1_divexact_scalar(Poly1 a, const mpz_class& c) {
  for (auto& x : a) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw std::logic_error("p1_divexact_scalar: not exact");
    x = q;
  }
  return a;
}

/// Exact division a / b over Z[s]; throws if not exact.
inline Poly1 p1_divexact(Poly1 a, const Poly1& b) {
  if (b.empty()) throw division_by_zero{};
  Poly1 q;
  while (!a.empty()) {
    if (a.size() < b.size()) throw std::logic_error("p1_divexact: not exact");
    const size_t k = a.size() - b.size();
    mpz_class qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    if (rem != 0) throw std::logic_error("p1_divexact: leading coeff not divisible");
    if (q.size() < k + 1) q.resize(k + 1);
    q[k] = qc;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= qc * b[i];
    p1_trim(a);
  }
  return q;
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a = q*b + prem.
inline Poly1 p1_prem(Poly1 a, const Poly1& b) {
  if (b.empty()) throw division_by_zero{};
  const mpz_class lcb = b.back();
  while (a.size() >= b.size()) {
    const size_t k = a.size() - b.size();
    const mpz_class lca = a.back();
    for (auto& c : a) c *= lcb;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= lca * b[i];
    p1_trim(a);
  }
  return a;
}

inline Poly1 p1_gcd_impl(Poly1 a, Poly1 b) {
  auto norm_sign = [](Poly1 p) {
    if (!p.empty() && sgn(p.back()) < 0)
      for (auto& c : p) c = -c;
    return p;
  };
  if (a.empty()) return norm_sign(b);
  if (b.empty()) return norm_sign(a);
  mpz_class ca = p1_content(a), cb = p1_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly1 A = p1_divexact_scalar(a, ca), B = p1_divexact_scalar(b, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    Poly1 R = p1_prem(A, B);
    if (!R.empty()) R = p1_divexact_scalar(R, sgn(R.back()) < 0 ? -p1_content(R) : p1_content(R));
    A = std::move(B);
    B = std::move(R);
  }
  A = norm_sign(A);
  return p1_scale(A, cg);
}

}  // namespace detail

/// Bivariate polynomial over Z in the parameters r and s, canonical term map
/// (no zero coefficients). Equality is structural.
class Poly2 {
 public:
  using Key = std::pair<int, int>;  // (deg r, deg s)
  using Terms = std::map<Key, mpz_class, GrlexGreater>;

  Poly2() = default;
  Poly2(long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_[{0, 0}] = v;
  }
  explicit Poly2(const mpz_class& v) {
    if (v != 0) terms_[{0, 0}] = v;
  }
  static Poly2 monomial(const mpz_class& coeff, int dr, int ds) {
    Poly2 p;
    if (coeff != 0) p.terms_[{dr, ds}] = coeff;
    return p;
  }
  static Poly2 r(int e = 1) { return monomial(1, e, 0); }
  static Poly2 s(int e = 1) { return monomial(1, 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }

  /// Leading term under grlex r > s.
  const std::pair<const Key, mpz_class>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
  }
  int lc_sign() const { return terms_.empty() ? 0 : sgn(terms_.begin()->second); }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
  /// Arbitrary strict total order (for use as container key).
  friend bool operator<(const Poly2& a, const Poly2& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (GrlexGreater{}(ia->first, ib->first)) return true;
      if (GrlexGreater{}(ib->first, ia->first)) return false;
      const int c = cmp(ia->second, ib->second);
      if (c != 0) return c < 0;
    }
    return ib != b.terms_.end();
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(const Poly2& a) {
    Poly2 out;
    for (const auto& [k, v] : a.terms_) out.terms_[k] = -v;
    return out;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_)
        out.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return out;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  Poly2 pow(unsigned e) const {
    Poly2 out(1), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) out *= base;
      if (e > 1) base *= base;
    }
    return out;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [k, v] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  /// Exact division; throws std::logic_error if not divisible.
  friend Poly2 divexact(Poly2 a, const Poly2& b) {
    if (b.is_zero()) throw division_by_zero{};
    Poly2 q;
    while (!a.is_zero()) {
      const auto& [ka, va] = a.leading();
      const auto& [kb, vb] = b.leading();
      const int dr = ka.first - kb.first, ds = ka.second - kb.second;
      if (dr < 0 || ds < 0) throw std::logic_error("divexact: monomial not divisible");
      mpz_class qc, rem;
      mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      if (rem != 0) throw std::logic_error("divexact: coefficient not divisible");
      Poly2 t = monomial(qc, dr, ds);
      q += t;
      a -= t * b;
    }
    return q;
  }

  /// gcd via content/primitive-part recursion, viewing the polynomial in r
  /// over Z[s]; the r-direction runs a subresultant PRS. Result has positive
  /// leading coefficient under grlex.
  friend Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return b.lc_sign() < 0 ? -b : b;
    if (b.is_zero()) return a.lc_sign() < 0 ? -a : a;
    if (a.is_monomial() && b.is_monomial()) {
      const auto& [ka, va] = a.leading();
      const auto& [kb, vb] = b.leading();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      return monomial(g, std::min(ka.first, kb.first), std::min(ka.second, kb.second));
    }
    auto A = a.by_r_degree(), B = b.by_r_degree();
    detail::Poly1 contA = content_r(A), contB = content_r(B);
    detail::Poly1 contG = detail::p1_gcd_impl(contA, contB);
    divide_r(A, contA);
    divide_r(B, contB);
    if (A.size() < B.size()) std::swap(A, B);
    // subresultant PRS in r over Z[s]
    detail::Poly1 g = {1}, h = {1};
    while (!B.empty()) {
      const int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
      auto R = prem_r(A, B);
      A = std::move(B);
      if (R.empty()) {
        B.clear();
        break;
      }
      // B = R / (g * h^delta)
      detail::Poly1 div = g;
      for (int t = 0; t < delta; ++t) div = detail::p1_mul(div, h);
      B = std::move(R);
      divide_r(B, div);
      g = A.back();
      if (delta > 0) {
        // h = g^delta / h^(delta-1)
        detail::Poly1 num = {1};
        for (int t = 0; t < delta; ++t) num = detail::p1_mul(num, g);
        for (int t = 0; t < delta - 1; ++t) num = detail::p1_divexact(num, h);
        h = std::move(num);
      }
    }
    {
      auto c = content_r(A);
      if (detail::Poly1 lead = A.back(); !lead.empty() && sgn(lead.back()) < 0)
        c = detail::p1_neg(c);
      divide_r(A, c);
    }
    auto G = from_r(A) * from_r({contG});
    return G.lc_sign() < 0 ? -G : G;
  }

  friend Poly2 lcm(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2{};
    return divexact(a * b, gcd(a, b));
  }

  mpq_class eval(const mpq_class& r0, const mpq_class& s0) const {
    mpq_class out = 0;
    for (const auto& [k, v] : terms_) {
      mpq_class t(v);
      for (int i = 0; i < k.first; ++i) t *= r0;
      for (int i = 0; i < k.second; ++i) t *= s0;
      out += t;
    }
    return out;
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.first + terms_.begin()->first.second;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      mpz_class c = v;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      std::string mono;
      if (k.first > 0) mono += "r" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second > 0)
        mono += std::string(mono.empty() ? "" : "*") + "s" +
                (k.second > 1 ? "^" + std::to_string(k.second) : "");
      if (mono.empty())
        out += c.get_str();
      else if (c == 1)
        out += mono;
      else
        out += c.get_str() + "*" + mono;
    }
    return out;
  }

 private:
  void add_term(const Key& k, const mpz_class& v) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (v != 0) terms_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // r-major representation: index = degree in r, value = coefficient in Z[s]
  using RMajor = std::vector<detail::Poly1>;

  RMajor by_r_degree() const {
    RMajor out;
    for (const auto& [k, v] : terms_) {
      if (static_cast<size_t>(k.first) >= out.size()) out.resize(k.first + 1);
      auto& p = out[k.first];
      if (static_cast<size_t>(k.second) >= p.size()) p.resize(k.second + 1);
      p[k.second] = v;
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }
  static Poly2 from_r(const RMajor& m) {
    Poly2 out;
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[i].size(); ++j)
        if (m[i][j] != 0) out.terms_[{static_cast<int>(i), static_cast<int>(j)}] = m[i][j];
    return out;
  }
  static detail::Poly1 content_r(const RMajor& m) {
    detail::Poly1 g;
    for (const auto& p : m) g = detail::p1_gcd_impl(g, p);
    return g;
  }
  static void divide_r(RMajor& m, const detail::Poly1& c) {
    for (auto& p : m)
      if (!p.empty()) p = detail::p1_divexact(p, c);
    while (!m.empty() && m.back().empty()) m.pop_back();
  }
  /// Canonical pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + rem.
  static RMajor prem_r(RMajor a, const RMajor& b) {
    const detail::Poly1 lcb = b.back();
    int scale_left = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (a.size() >= b.size()) {
      const size_t k = a.size() - b.size();
      const detail::Poly1 lca = a.back();
      for (auto& p : a) p = detail::p1_mul(p, lcb);
      --scale_left;
      for (size_t i = 0; i < b.size(); ++i)
        a[k + i] = detail::p1_add(a[k + i], detail::p1_neg(detail::p1_mul(lca, b[i])));
      while (!a.empty() && a.back().empty()) a.pop_back();
    }
    for (; scale_left > 0; --scale_left)
      for (auto& p : a) p = detail::p1_mul(p, lcb);
    return a;
  }

  Terms terms_;
};

}  // namespace qserre
