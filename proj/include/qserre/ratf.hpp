#pragma once

#include <gmpxx.h>

#include <string>

#include "qserre/poly2.hpp"

namespace qserre {

/// Element of Q(r,s) as a reduced fraction of integer-coefficient bivariate
/// polynomials. Invariants: den != 0, gcd(num, den) = 1, den's leading
/// coefficient under grlex r > s is positive. Equality is structural.
class RatF {
 public:
  RatF() : num_(), den_(1) {}
  RatF(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatF(const mpz_class& v) : num_(v), den_(1) {}
  RatF(Poly2 num, Poly2 den = Poly2(1)) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  RatF(const mpq_class& v) : num_(Poly2(mpz_class(v.get_num()))), den_(Poly2(mpz_class(v.get_den()))) {
    reduce();
  }

  static RatF r(int e = 1) { return e >= 0 ? RatF(Poly2::r(e)) : RatF(Poly2(1), Poly2::r(-e)); }
  static RatF s(int e = 1) { return e >= 0 ? RatF(Poly2::s(e)) : RatF(Poly2(1), Poly2::s(-e)); }
  /// r^a s^b for arbitrary integer exponents.
  static RatF rs(int a, int b) {
    Poly2 num = Poly2::monomial(1, a > 0 ? a : 0, b > 0 ? b : 0);
    Poly2 den = Poly2::monomial(1, a < 0 ? -a : 0, b < 0 ? -b : 0);
    return RatF(std::move(num), std::move(den));
  }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Number of stored polynomial terms; used as a pivoting heuristic.
  size_t complexity() const { return num_.size() + den_.size(); }

  friend bool operator==(const RatF& a, const RatF& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatF& a, const RatF& b) { return !(a == b); }
  friend bool operator<(const RatF& a, const RatF& b) {
    if (a.num_ < b.num_) return true;
    if (b.num_ < a.num_) return false;
    return a.den_ < b.den_;
  }

  // Sums and products cancel cross-gcds first (the mpq strategy), so gcd
  // operands stay at the size of the stored values, not their products.
  friend RatF operator+(const RatF& a, const RatF& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Poly2 g1 = gcd(a.den_, b.den_);
    if (g1.is_one()) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const Poly2 den0 = divexact(a.den_, g1), den1 = divexact(b.den_, g1);
    const Poly2 t = a.num_ * den1 + b.num_ * den0;
    if (t.is_zero()) return RatF{};
    const Poly2 g2 = gcd(t, g1);
    return raw(divexact(t, g2), den0 * divexact(b.den_, g2));
  }
  friend RatF operator-(const RatF& a, const RatF& b) { return a + (-b); }
  friend RatF operator-(const RatF& a) {
    RatF out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RatF operator*(const RatF& a, const RatF& b) {
    if (a.is_zero() || b.is_zero()) return RatF{};
    const Poly2 g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return raw(divexact(a.num_, g1) * divexact(b.num_, g2),
               divexact(a.den_, g2) * divexact(b.den_, g1));
  }
  friend RatF operator/(const RatF& a, const RatF& b) {
    if (b.is_zero()) throw division_by_zero{};
    if (a.is_zero()) return RatF{};
    const Poly2 g1 = gcd(a.num_, b.num_), g2 = gcd(b.den_, a.den_);
    return raw(divexact(a.num_, g1) * divexact(b.den_, g2),
               divexact(a.den_, g2) * divexact(b.num_, g1));
  }
  RatF& operator+=(const RatF& o) { return *this = *this + o; }
  RatF& operator-=(const RatF& o) { return *this = *this - o; }
  RatF& operator*=(const RatF& o) { return *this = *this * o; }
  RatF& operator/=(const RatF& o) { return *this = *this / o; }

  RatF inv() const {
    if (is_zero()) throw division_by_zero{};
    return RatF(den_, num_);
  }

  RatF pow(int e) const {
    if (e == 0) return RatF(1);
    if (e < 0) return inv().pow(-e);
    RatF out = RatF(num_.pow(e), den_.pow(e));
    return out;
  }

  mpq_class eval(const mpq_class& r0, const mpq_class& s0) const {
    const mpq_class d = den_.eval(r0, s0);
    if (d == 0)
      throw pole_error("denominator vanishes at (r,s) = (" + r0.get_str() + ", " + s0.get_str() +
                       ")");
    mpq_class out = num_.eval(r0, s0) / d;
    out.canonicalize();
    return out;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    const std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
  }

 private:
  /// Already-coprime numerator/denominator; only fixes the sign convention.
  static RatF raw(Poly2 num, Poly2 den) {
    RatF out;
    if (den.lc_sign() < 0) {
      num = -num;
      den = -den;
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
  }

  void reduce() {
    if (den_.is_zero()) throw division_by_zero{};
    if (num_.is_zero()) {
      den_ = Poly2(1);
      return;
    }
    if (den_.is_one()) return;
    const Poly2 g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    if (den_.lc_sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly2 num_, den_;
};

}  // namespace qserre
