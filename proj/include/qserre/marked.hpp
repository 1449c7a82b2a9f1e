#pragma once

#include <array>
#include <map>
#include <string>

#include "qserre/ratf.hpp"

namespace qserre {

/// Scalar carrying four formal unit markers (gamma1, gamma2, lambda1,
/// lambda2) with integer exponents over Q(r,s): a Laurent polynomial in the
/// markers. Automorphism scans run over these so that gamma-independence is
/// observed rather than assumed. Zero iff every coefficient is zero.
class MarkedRatF {
 public:
  using Exponents = std::array<int, 4>;
  enum Marker { kGamma1 = 0, kGamma2 = 1, kLambda1 = 2, kLambda2 = 3 };

  MarkedRatF() = default;
  MarkedRatF(long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) terms_[{0, 0, 0, 0}] = RatF(v);
  }
  MarkedRatF(const RatF& v) {  // NOLINT(google-explicit-constructor)
    if (!v.is_zero()) terms_[{0, 0, 0, 0}] = v;
  }
  static MarkedRatF marker(Marker m, int power = 1, const RatF& coeff = RatF(1)) {
    MarkedRatF out;
    Exponents e{0, 0, 0, 0};
    e[m] = power;
    if (!coeff.is_zero()) out.terms_[e] = coeff;
    return out;
  }

  const std::map<Exponents, RatF>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0} &&
           terms_.begin()->second.is_one();
  }

  friend bool operator==(const MarkedRatF& a, const MarkedRatF& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MarkedRatF& a, const MarkedRatF& b) { return !(a == b); }

  MarkedRatF& operator+=(const MarkedRatF& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend MarkedRatF operator+(MarkedRatF a, const MarkedRatF& b) { return a += b; }
  friend MarkedRatF operator-(const MarkedRatF& a) {
    MarkedRatF out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MarkedRatF operator-(MarkedRatF a, const MarkedRatF& b) { return a += -b; }
  friend MarkedRatF operator*(const MarkedRatF& a, const MarkedRatF& b) {
    MarkedRatF out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
  }
  friend MarkedRatF operator*(const MarkedRatF& a, const RatF& c) {
    MarkedRatF out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, v * c);
    return out;
  }
  MarkedRatF& operator*=(const MarkedRatF& o) { return *this = *this * o; }

  /// Inverse of a single-term scalar (marker monomial times a nonzero value).
  MarkedRatF inv() const {
    if (terms_.size() != 1) throw division_by_zero{};
    const auto& [e, c] = *terms_.begin();
    MarkedRatF out;
    out.terms_[{-e[0], -e[1], -e[2], -e[3]}] = c.inv();
    return out;
  }

  /// Specialize the markers to concrete values.
  RatF substitute(const std::array<RatF, 4>& vals) const {
    RatF out;
    for (const auto& [e, c] : terms_) {
      RatF term = c;
      for (int m = 0; m < 4; ++m) term *= vals[m].pow(e[m]);
      out += term;
    }
    return out;
  }

  std::string str() const {
    static const char* names[4] = {"gamma1", "gamma2", "lambda1", "lambda2"};
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string piece = c.str();
      for (int m = 0; m < 4; ++m) {
        if (e[m] == 0) continue;
        piece += std::string("*") + names[m];
        if (e[m] != 1) piece += "^" + std::to_string(e[m]);
      }
      out += (out.empty() ? "" : " + ") + piece;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const RatF& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Exponents, RatF> terms_;
};

}  // namespace qserre
