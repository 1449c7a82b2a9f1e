#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "qserre/algebra.hpp"

namespace qserre {

/// Element of the tensor square of a PBW algebra with coefficients in C.
/// Multiplication is componentwise: (a (x) b)(c (x) d) = ac (x) bd.
template <class C>
struct BasicTensor {
  std::map<std::pair<Expo, Expo>, C> terms;

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }

  void add_term(const Expo& l, const Expo& r, const C& c) {
    if (c.is_zero()) return;
    const auto key = std::make_pair(l, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const BasicTensor& a, const BasicTensor& b) { return !(a == b); }

  BasicTensor& operator+=(const BasicTensor& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }

  template <class S>
  BasicTensor scaled(const S& c) const {
    BasicTensor out;
    for (const auto& [k, v] : terms) out.add_term(k.first, k.second, v * c);
    return out;
  }
};

using TensorElt = BasicTensor<RatF>;

template <class C>
BasicTensor<C> tensor_of(const BasicElement<C>& a, const BasicElement<C>& b) {
  BasicTensor<C> out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.add_term(ea, eb, ca * cb);
  return out;
}

template <class C>
BasicTensor<C> tensor_mul(const AlgebraSpec& spec, const BasicTensor<C>& a,
                          const BasicTensor<C>& b) {
  BasicTensor<C> out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const auto left = mul(spec, element_monomial(ka.first, ca),
                            element_monomial(kb.first, C(1)));
      const auto right = mul(spec, element_monomial(ka.second, C(1)),
                             element_monomial(kb.second, cb));
      for (const auto& [el, cl] : left.terms)
        for (const auto& [er, cr] : right.terms) out.add_term(el, er, cl * cr);
    }
  return out;
}

/// Triple tensors, needed only for the coassociativity check.
template <class C>
struct BasicTensor3 {
  std::map<std::tuple<Expo, Expo, Expo>, C> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Expo& a, const Expo& b, const Expo& c, const C& v) {
    if (v.is_zero()) return;
    const auto key = std::make_tuple(a, b, c);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const BasicTensor3& a, const BasicTensor3& b) {
    return a.terms == b.terms;
  }

  BasicTensor3& operator-=(const BasicTensor3& o) {
    for (const auto& [k, c] : o.terms)
      add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return *this;
  }
};

using Tensor3Elt = BasicTensor3<RatF>;

}  // namespace qserre
