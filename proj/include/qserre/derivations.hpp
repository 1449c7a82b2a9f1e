#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qserre/catalog.hpp"
#include "qserre/linalg.hpp"

namespace qserre {

/// Generator assignment X_i -> images[i]. Must pass is_derivation before
/// being applied to arbitrary elements through the Leibniz rule.
struct Derivation {
  std::vector<Element> images;

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.images == b.images;
  }
};

struct LeibnizReport {
  struct Entry {
    int j, i;
    Element residual;
  };
  std::vector<Entry> entries;

  bool valid() const {
    for (const auto& e : entries)
      if (!e.residual.is_zero()) return false;
    return true;
  }
};

/// Apply the Leibniz rule to every defining relation: the assignment extends
/// to a derivation iff all residuals vanish.
inline LeibnizReport is_derivation(const AlgebraSpec& spec, const Derivation& d) {
  LeibnizReport report;
  for (int j = 1; j < spec.size(); ++j)
    for (int i = 0; i < j; ++i) {
      const Element xi = element_var(spec, i), xj = element_var(spec, j);
      const RatF& q = spec.q(j, i);
      Element res = mul(spec, d.images[j], xi) + mul(spec, xj, d.images[i]) -
                    (mul(spec, d.images[i], xj) + mul(spec, xi, d.images[j])).scaled(q);
      for (const auto& [ce, cv] : spec.c(j, i).terms)
        for (int t = 0; t < spec.size(); ++t)
          if (ce[t] != 0) res -= d.images[t].scaled(cv);
      report.entries.push_back({j, i, std::move(res)});
    }
  return report;
}

/// d(X^a) by the Leibniz rule (non-negative exponents only).
inline Element apply_derivation(const AlgebraSpec& spec, const Derivation& d, const Element& x) {
  Element out;
  for (const auto& [e, c] : x.terms) {
    for (int i = 0; i < spec.size(); ++i)
      if (e[i] < 0)
        throw std::invalid_argument("apply_derivation: negative exponents unsupported");
    // d(m) = sum over letter positions: prefix * d(X_i) * suffix
    Expo prefix = zero_expo(spec.size());
    for (int i = 0; i < spec.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        Expo pre = prefix;
        pre[i] += k;
        Expo suf = zero_expo(spec.size());
        suf[i] = e[i] - k - 1;
        for (int t = i + 1; t < spec.size(); ++t) suf[t] = e[t];
        out += mul(spec, mul(spec, element_monomial(pre, c), d.images[i]),
                   element_monomial(suf, RatF(1)));
      }
      prefix[i] = e[i];
    }
  }
  return out;
}

/// ad_t: X_i -> [t, X_i]. Always a derivation.
inline Derivation inner(const AlgebraSpec& spec, const Element& t) {
  Derivation d;
  for (int i = 0; i < spec.size(); ++i)
    d.images.push_back(commutator(spec, t, element_var(spec, i)));
  return d;
}

/// D1: (X1, X2, X3, 0).
inline Derivation derivation_d1(const AlgebraSpec& u) {
  return {{element_var(u, 0), element_var(u, 1), element_var(u, 2), Element{}}};
}

/// D2 as printed in the source text: (0, X2, X3, X4). Not a derivation.
inline Derivation derivation_d2_printed(const AlgebraSpec& u) {
  return {{Element{}, element_var(u, 1), element_var(u, 2), element_var(u, 3)}};
}

/// D2 corrected: (0, X2, 2 X3, X4).
inline Derivation derivation_d2(const AlgebraSpec& u) {
  return {{Element{}, element_var(u, 1), element_var(u, 2).scaled(RatF(2)),
           element_var(u, 3)}};
}

namespace detail {

/// Column description of the Leibniz linear system: unknown coefficient of
/// monomial `mono` inside d(X_var).
struct DerivationUnknown {
  int var;
  Expo mono;
};

/// Rows of the Leibniz system for the given unknowns, indexed by
/// (relation pair, PBW monomial).
inline Matrix leibniz_matrix(const AlgebraSpec& spec,
                             const std::vector<DerivationUnknown>& unknowns,
                             std::map<std::pair<std::pair<int, int>, Expo>, size_t>* row_index_out =
                                 nullptr) {
  std::map<std::pair<std::pair<int, int>, Expo>, size_t> rows;
  std::vector<std::map<size_t, RatF>> cols(unknowns.size());
  for (size_t ui = 0; ui < unknowns.size(); ++ui) {
    const auto& [v, mono] = unknowns[ui];
    const Element m = element_monomial(mono, RatF(1));
    for (int j = 1; j < spec.size(); ++j)
      for (int i = 0; i < j; ++i) {
        const RatF& q = spec.q(j, i);
        Element contrib;
        if (v == j)
          contrib += mul(spec, m, element_var(spec, i)) -
                     mul(spec, element_var(spec, i), m).scaled(q);
        if (v == i)
          contrib += mul(spec, element_var(spec, j), m) -
                     mul(spec, m, element_var(spec, j)).scaled(q);
        for (const auto& [ce, cv] : spec.c(j, i).terms)
          if (ce[v] != 0) contrib -= m.scaled(cv);
        for (const auto& [e, c] : contrib.terms) {
          const auto key = std::make_pair(std::make_pair(j, i), e);
          auto [it, inserted] = rows.emplace(key, rows.size());
          cols[ui][it->second] = c;
        }
      }
  }
  Matrix out(rows.size(), unknowns.size());
  for (size_t ui = 0; ui < unknowns.size(); ++ui)
    for (const auto& [ri, c] : cols[ui]) out[ri][ui] = c;
  if (row_index_out) *row_index_out = std::move(rows);
  return out;
}

inline std::vector<Expo> monomials_of_weight(const AlgebraSpec& spec,
                                             const std::array<int, 2>& w, int degbound,
                                             int laurent_window) {
  std::vector<Expo> out;
  for (auto& e : enumerate_monomials(spec, degbound, laurent_window))
    if (spec.weight_of(e) == w) out.push_back(std::move(e));
  return out;
}

}  // namespace detail

/// The scaling ansatz D(X_i) = alpha_i X_i: basis of the admissible
/// (alpha_1..alpha_4) vectors.
inline std::vector<Vec> scaling_constraints(const AlgebraSpec& spec) {
  std::vector<detail::DerivationUnknown> unknowns;
  for (int i = 0; i < spec.size(); ++i) unknowns.push_back({i, unit_expo(spec.size(), i)});
  return nullspace(detail::leibniz_matrix(spec, unknowns));
}

/// Basis of the weight-w derivations with image degree <= degbound.
inline std::vector<Derivation> derivation_space(const AlgebraSpec& spec,
                                                const std::array<int, 2>& w, int degbound) {
  std::vector<detail::DerivationUnknown> unknowns;
  for (int i = 0; i < spec.size(); ++i) {
    const auto wi = spec.weight_of(unit_expo(spec.size(), i));
    const std::array<int, 2> target{wi[0] + w[0], wi[1] + w[1]};
    for (auto& m : detail::monomials_of_weight(spec, target, degbound, 0))
      unknowns.push_back({i, std::move(m)});
  }
  std::vector<Derivation> basis;
  if (unknowns.empty()) return basis;
  for (const auto& v : nullspace(detail::leibniz_matrix(spec, unknowns))) {
    Derivation d;
    d.images.assign(spec.size(), Element{});
    for (size_t ui = 0; ui < unknowns.size(); ++ui)
      d.images[unknowns[ui].var].add_term(unknowns[ui].mono, v[ui]);
    basis.push_back(std::move(d));
  }
  return basis;
}

struct WeightScanRow {
  std::array<int, 2> w;
  size_t dim_derivations = 0;
  size_t dim_inner = 0;
  size_t outer = 0;
};

struct HH1Scan {
  std::vector<WeightScanRow> rows;
  size_t total_outer = 0;
  int window = 0, degbound = 0;
};

/// Outer dimension dim((Der + Inn)/Inn) at one weight shift. Inner images of
/// degree degbound+1 are accommodated in a common coordinate space.
inline WeightScanRow hh1_weight(const AlgebraSpec& spec, const std::array<int, 2>& w,
                                int degbound) {
  WeightScanRow row;
  row.w = w;
  const auto der = derivation_space(spec, w, degbound);
  row.dim_derivations = der.size();

  std::map<std::pair<int, Expo>, size_t> coords;
  auto vec_of = [&](const Derivation& d) {
    std::map<size_t, RatF> v;
    for (int i = 0; i < spec.size(); ++i)
      for (const auto& [e, c] : d.images[i].terms) {
        auto [it, inserted] = coords.emplace(std::make_pair(i, e), coords.size());
        v[it->second] = c;
      }
    return v;
  };
  std::vector<std::map<size_t, RatF>> inner_vecs, der_vecs;
  for (const auto& t : detail::monomials_of_weight(spec, w, degbound, 0))
    inner_vecs.push_back(vec_of(inner(spec, element_monomial(t, RatF(1)))));
  for (const auto& d : der) der_vecs.push_back(vec_of(d));

  auto to_matrix = [&](const std::vector<std::map<size_t, RatF>>& lists) {
    Matrix m(lists.size(), coords.size());
    for (size_t i = 0; i < lists.size(); ++i)
      for (const auto& [ci, c] : lists[i]) m[i][ci] = c;
    return m;
  };
  std::vector<std::map<size_t, RatF>> all = inner_vecs;
  all.insert(all.end(), der_vecs.begin(), der_vecs.end());
  const size_t rank_inner = rank(to_matrix(inner_vecs));
  const size_t rank_all = rank(to_matrix(all));
  row.dim_inner = rank_inner;
  row.outer = rank_all - rank_inner;
  return row;
}

inline HH1Scan hh1_scan(const AlgebraSpec& spec, int window, int degbound) {
  HH1Scan scan;
  scan.window = window;
  scan.degbound = degbound;
  for (int w1 = -window; w1 <= window; ++w1)
    for (int w2 = -window; w2 <= window; ++w2) {
      scan.rows.push_back(hh1_weight(spec, {w1, w2}, degbound));
      scan.total_outer += scan.rows.back().outer;
    }
  return scan;
}

// ---------------------------------------------------------------------------
// Decomposition D = ad_t + mu1 D1 + mu2 D2
// ---------------------------------------------------------------------------

struct Decomposition {
  Element t;
  RatF mu1, mu2;
  bool unique = false;  // t unique up to an additive constant, mu's unique
};

/// Exact solve for (t, mu1, mu2) with deg t <= degbound, split per weight
/// shift. Returns nullopt when no solution exists within the bound.
inline std::optional<Decomposition> decompose(const AlgebraSpec& spec, const Derivation& d,
                                              int degbound) {
  const Derivation d1 = derivation_d1(spec), d2 = derivation_d2(spec);
  // split the defect images by weight shift
  std::map<std::array<int, 2>, std::vector<Element>> defect;
  for (int i = 0; i < spec.size(); ++i) {
    const auto wi = spec.weight_of(unit_expo(spec.size(), i));
    for (const auto& [e, c] : d.images[i].terms) {
      const auto we = spec.weight_of(e);
      const std::array<int, 2> shift{we[0] - wi[0], we[1] - wi[1]};
      auto& imgs = defect[shift];
      if (imgs.empty()) imgs.assign(spec.size(), Element{});
      imgs[i].add_term(e, c);
    }
  }
  defect[{0, 0}];  // the mu-block is always solved, even for inner d
  for (auto& [w, imgs] : defect)
    if (imgs.empty()) imgs.assign(spec.size(), Element{});

  Decomposition out;
  out.unique = true;
  for (const auto& [w, imgs] : defect) {
    const auto ts = detail::monomials_of_weight(spec, w, degbound, 0);
    const bool zero_shift = (w == std::array<int, 2>{0, 0});

    std::map<std::pair<int, Expo>, size_t> coords;
    auto add_coords = [&](const std::vector<Element>& images) {
      for (int i = 0; i < spec.size(); ++i)
        for (const auto& [e, c] : images[i].terms)
          coords.emplace(std::make_pair(i, e), coords.size());
    };
    std::vector<std::vector<Element>> col_images;
    for (const auto& t : ts) col_images.push_back(inner(spec, element_monomial(t, RatF(1))).images);
    if (zero_shift) {
      col_images.push_back(d1.images);
      col_images.push_back(d2.images);
    }
    for (const auto& ci : col_images) add_coords(ci);
    add_coords(imgs);

    Matrix m(coords.size(), col_images.size());
    for (size_t ci = 0; ci < col_images.size(); ++ci)
      for (int i = 0; i < spec.size(); ++i)
        for (const auto& [e, c] : col_images[ci][i].terms)
          m[coords.at(std::make_pair(i, e))][ci] = c;
    Vec b(coords.size());
    for (int i = 0; i < spec.size(); ++i)
      for (const auto& [e, c] : imgs[i].terms) b[coords.at(std::make_pair(i, e))] = c;

    const auto sol = solve(m, b);
    if (!sol) return std::nullopt;
    // kernel: at shift 0 exactly the constant t (ad_1 = 0); elsewhere none
    const size_t expected_kernel = [&] {
      size_t k = 0;
      for (const auto& t : ts)
        if (expo_length(t) == 0) ++k;
      return k;
    }();
    if (sol->homogeneous.size() != expected_kernel) out.unique = false;
    for (size_t ci = 0; ci < ts.size(); ++ci) out.t.add_term(ts[ci], sol->particular[ci]);
    if (zero_shift) {
      out.mu1 = sol->particular[ts.size()];
      out.mu2 = sol->particular[ts.size() + 1];
    }
  }
  // drop any constant part of t; ad_t is insensitive to it
  out.t.terms.erase(zero_expo(spec.size()));
  return out;
}

}  // namespace qserre
