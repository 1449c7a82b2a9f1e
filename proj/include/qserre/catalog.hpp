#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qserre/algebra.hpp"
#include "qserre/free_algebra.hpp"
#include "qserre/linalg.hpp"

namespace qserre {

/// A concrete algebra from the catalog: validated spec plus the designated
/// images of e1, e2 (which must satisfy both Serre relators) and the
/// generating set used for centrality scans.
struct NamedAlgebra {
  std::string name;
  AlgebraSpec spec;
  Element e1, e2;
  std::vector<Element> central_gens;
  std::map<std::string, Element> named;

  Element parse(std::string_view src) const { return parse_element(spec, src, named); }
  std::string str(const Element& a) const { return element_str(spec, a); }
};

/// Residuals of the two Serre relators evaluated at (a, b); zero iff the pair
/// satisfies the defining relations of U.
inline std::array<Element, 2> serre_residuals(const AlgebraSpec& spec, const Element& a,
                                              const Element& b) {
  const auto rel = serre_relators();
  return {to_pbw(spec, rel[0], a, b), to_pbw(spec, rel[1], a, b)};
}

namespace detail {

inline std::map<std::pair<int, int>, RatF> u_q_block(int off) {
  std::map<std::pair<int, int>, RatF> q;
  q[{off + 1, off + 0}] = RatF::s(-2);
  q[{off + 2, off + 0}] = RatF::rs(-2, -2);
  q[{off + 2, off + 1}] = RatF::rs(-1, -1);
  q[{off + 3, off + 0}] = RatF::r(-2);
  q[{off + 3, off + 1}] = RatF::s(-2);
  q[{off + 3, off + 2}] = RatF::rs(-1, -1);
  return q;
}

inline std::map<std::pair<int, int>, Element> u_c_block(int off, int n) {
  std::map<std::pair<int, int>, Element> c;
  c[{off + 3, off + 0}] = element_monomial(unit_expo(n, off + 1), RatF::r(-2)).scaled(RatF(-1));
  c[{off + 3, off + 1}] = element_monomial(unit_expo(n, off + 2), RatF(1));
  return c;
}

inline std::vector<std::array<int, 2>> u_weights() { return {{1, 0}, {1, 1}, {1, 2}, {0, 1}}; }

inline NamedAlgebra finish_build(std::string name, AlgebraSpec spec, int e1_index, int e2_index,
                                 std::vector<int> central) {
  const auto conf = validate_spec(spec);
  if (!conf.ok()) throw std::logic_error("catalog algebra " + name + " is not confluent");
  Element e1 = element_var(spec, e1_index), e2 = element_var(spec, e2_index);
  const auto res = serre_residuals(spec, e1, e2);
  if (!res[0].is_zero() || !res[1].is_zero())
    throw std::logic_error("catalog algebra " + name +
                           ": designated generators violate the Serre relators");
  std::vector<Element> cg;
  for (int g : central) cg.push_back(element_var(spec, g));
  return NamedAlgebra{std::move(name), std::move(spec), std::move(e1), std::move(e2),
                      std::move(cg), {}};
}

}  // namespace detail

/// U = U+_{r,s}(B2) in the PBW presentation X1..X4.
inline NamedAlgebra build_u() {
  AlgebraSpec spec({"X1", "X2", "X3", "X4"}, {false, false, false, false}, detail::u_q_block(0),
                   detail::u_c_block(0, 4), detail::u_weights());
  return detail::finish_build("u", std::move(spec), 0, 3, {0, 3});
}

/// Associated graded algebra: same scalars, corrections zeroed.
inline NamedAlgebra build_gr_u() {
  AlgebraSpec spec({"X1", "X2", "X3", "X4"}, {false, false, false, false}, detail::u_q_block(0),
                   {}, detail::u_weights());
  return detail::finish_build("gru", std::move(spec), 0, 3, {0, 3});
}

/// Quantum torus Q4 on T1..T4 (pure q-commutation, all variables invertible).
inline NamedAlgebra build_q4();

/// Localization chain: B4, B3, B2 invert the leading 1, 2, 3 variables of U.
inline NamedAlgebra build_b(int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("build_b: k must be 2, 3 or 4");
  const int inverted = 5 - k;
  std::vector<bool> inv(4, false);
  for (int i = 0; i < inverted; ++i) inv[i] = true;
  AlgebraSpec spec({"X1", "X2", "X3", "X4"}, inv, detail::u_q_block(0), detail::u_c_block(0, 4),
                   detail::u_weights());
  return detail::finish_build("b" + std::to_string(k), std::move(spec), 0, 3, {0, 3});
}

/// lambda = r / ((r^2 - s^2)(r - s)), the embedding's normalizing scalar.
inline RatF lambda_value() {
  const RatF r = RatF::r(), s = RatF::s();
  return r / ((r * r - s * s) * (r - s));
}

/// Image of X4 in the quantum torus:
/// lambda * (T4 + (s^4 - r^2 s^2) T2^-1 T3 + (r^-1 s - 1) T2 T1^-1).
inline Element embedding_x4_image(const AlgebraSpec& q4, const RatF& lambda,
                                  const RatF& c2 = RatF::rs(-1, 1) - RatF(1)) {
  const Element t4 = element_var(q4, 3);
  const Element t2i_t3 = mul(q4, element_var(q4, 1, -1), element_var(q4, 2));
  const Element t2_t1i = mul(q4, element_var(q4, 1), element_var(q4, 0, -1));
  const RatF s = RatF::s(), r = RatF::r();
  Element v = t4 + t2i_t3.scaled(s.pow(4) - r.pow(2) * s.pow(2)) + t2_t1i.scaled(c2);
  return v.scaled(lambda);
}

inline NamedAlgebra build_q4() {
  AlgebraSpec spec({"T1", "T2", "T3", "T4"}, {true, true, true, true}, detail::u_q_block(0), {},
                   detail::u_weights());
  NamedAlgebra alg = detail::finish_build("q4", std::move(spec), 0, 3, {0});
  // The designated e2 of the torus is the embedded image of X4, not T4.
  alg.e2 = embedding_x4_image(alg.spec, lambda_value());
  const auto res = serre_residuals(alg.spec, alg.e1, alg.e2);
  if (!res[0].is_zero() || !res[1].is_zero())
    throw std::logic_error("q4: embedded generators violate the Serre relators");
  alg.central_gens = {alg.e1, alg.e2};
  return alg;
}

namespace detail {

/// Group-like adjunction: q-scalars of the X-variables against an invertible
/// weight-(0,0) generator are derived from the generator's commutation with
/// e1 and e2 through the X-weights. mu1, mu2 satisfy g e_l = mu_l e_l g.
inline void add_grouplike_scalars(std::map<std::pair<int, int>, RatF>& q, int gl_index,
                                  int x_offset, const RatF& mu1, const RatF& mu2) {
  const auto wts = u_weights();
  for (int i = 0; i < 4; ++i) {
    // X g = mu1^{-w1} mu2^{-w2} g X
    q[{x_offset + i, gl_index}] = mu1.pow(-wts[i][0]) * mu2.pow(-wts[i][1]);
  }
}

}  // namespace detail

/// U^{>=0}: group-likes w1, w2 adjoined to U.
///   w1 e1 = r^2 s^-2 e1 w1, w1 e2 = s^2 e2 w1,
///   w2 e1 = r^-2 e1 w2,     w2 e2 = r s^-1 e2 w2.
inline NamedAlgebra build_ugeq0() {
  auto q = detail::u_q_block(2);
  q[{1, 0}] = RatF(1);
  detail::add_grouplike_scalars(q, 0, 2, RatF::rs(2, -2), RatF::s(2));
  detail::add_grouplike_scalars(q, 1, 2, RatF::r(-2), RatF::rs(1, -1));
  std::vector<std::array<int, 2>> w = {{0, 0}, {0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 1}};
  AlgebraSpec spec({"w1", "w2", "X1", "X2", "X3", "X4"},
                   {true, true, false, false, false, false}, q, detail::u_c_block(2, 6), w);
  NamedAlgebra alg = detail::finish_build("ugeq0", std::move(spec), 2, 5, {2, 5, 0, 1});
  return alg;
}

/// The augmented Hopf algebra V: group-likes k1, k2 adjoined to U.
///   k1 e1 = s^-2 e1 k1, k1 e2 = r s e2 k1,
///   k2 e1 = r^-1 s^-1 e1 k2, k2 e2 = r e2 k2.
inline NamedAlgebra build_vcheck() {
  auto q = detail::u_q_block(2);
  q[{1, 0}] = RatF(1);
  detail::add_grouplike_scalars(q, 0, 2, RatF::s(-2), RatF::rs(1, 1));
  detail::add_grouplike_scalars(q, 1, 2, RatF::rs(-1, -1), RatF::r(1));
  std::vector<std::array<int, 2>> w = {{0, 0}, {0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 1}};
  AlgebraSpec spec({"k1", "k2", "X1", "X2", "X3", "X4"},
                   {true, true, false, false, false, false}, q, detail::u_c_block(2, 6), w);
  NamedAlgebra alg = detail::finish_build("vcheck", std::move(spec), 2, 5, {2, 5, 0, 1});
  return alg;
}

/// W = X3 + (s^-2 - r^-1 s^-1) X2 X4 as an element of U.
inline Element element_W(const NamedAlgebra& u) {
  const Element x2x4 = mul(u.spec, element_var(u.spec, 1), element_var(u.spec, 3));
  return element_var(u.spec, 2) + x2x4.scaled(RatF::s(-2) - RatF::rs(-1, -1));
}

/// Z' = X1 W - s^4 W X1 as an element of U.
inline Element element_Zprime(const NamedAlgebra& u) {
  const Element w = element_W(u);
  const Element x1 = element_var(u.spec, 0);
  return mul(u.spec, x1, w) - mul(u.spec, w, x1).scaled(RatF::s(4));
}

/// One verified commutation identity a b = coeff b a + extra.
struct IdentityCheck {
  std::string id;
  Element residual;
  bool ok() const { return residual.is_zero(); }
};

/// The eight W / Z' identities, evaluated by PBW normalization.
inline std::vector<IdentityCheck> verify_w_identities(const NamedAlgebra& u) {
  const AlgebraSpec& S = u.spec;
  const Element W = element_W(u), Z = element_Zprime(u);
  const Element X1 = element_var(S, 0), X2 = element_var(S, 1), X3 = element_var(S, 2),
                X4 = element_var(S, 3);
  const RatF r = RatF::r(), s = RatF::s();
  std::vector<IdentityCheck> out;
  auto check = [&](std::string id, const Element& a, const Element& b, const RatF& q,
                   const Element& extra) {
    out.push_back({std::move(id), mul(S, a, b) - mul(S, b, a).scaled(q) - extra});
  };
  const Element zero;
  check("X1W", X1, W, r.pow(2) * s.pow(2),
        mul(S, X2, X2).scaled(RatF(1) - RatF::rs(-1, 1)));
  check("X2W", X2, W, s.pow(2), zero);
  check("X3W", X3, W, RatF(1), zero);
  check("X4W", X4, W, s.pow(-2), zero);
  check("X1Zp", X1, Z, r.pow(2) * s.pow(2), zero);
  check("X2Zp", X2, Z, RatF(1), zero);
  check("X3Zp", X3, Z, RatF::rs(-2, -2), zero);
  check("X4Zp", X4, Z, RatF::rs(-2, -2), zero);
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms and the embedding into the quantum torus
// ---------------------------------------------------------------------------

/// Generator assignment between catalog algebras. verify() must succeed
/// before apply() may be trusted on arbitrary elements.
struct Morphism {
  const NamedAlgebra* source = nullptr;
  const NamedAlgebra* target = nullptr;
  std::vector<Element> images;

  struct Issue {
    std::string relation;
    Element residual;
  };

  /// Relation-preservation: every source rewrite relation and both Serre
  /// relators must map to zero.
  std::vector<Issue> verify() const {
    std::vector<Issue> issues;
    const AlgebraSpec& S = source->spec;
    const AlgebraSpec& T = target->spec;
    for (int j = 1; j < S.size(); ++j)
      for (int i = 0; i < j; ++i) {
        Element res = mul(T, images[j], images[i]) -
                      mul(T, images[i], images[j]).scaled(S.q(j, i)) - apply(S.c(j, i));
        if (!res.is_zero())
          issues.push_back({"(" + S.var_name(j) + "," + S.var_name(i) + ")", std::move(res)});
      }
    const Element ie1 = apply(source->e1), ie2 = apply(source->e2);
    const auto serre = serre_residuals(T, ie1, ie2);
    if (!serre[0].is_zero()) issues.push_back({"serre1", serre[0]});
    if (!serre[1].is_zero()) issues.push_back({"serre2", serre[1]});
    return issues;
  }

  Element apply(const Element& x) const {
    const AlgebraSpec& T = target->spec;
    Element out;
    for (const auto& [e, c] : x.terms) {
      Element term = element_one(T).scaled(c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const Element img = e[i] > 0 ? images[i] : invert_unit(T, images[i]);
        for (int k = 0; k < std::abs(e[i]); ++k) term = mul(T, term, img);
      }
      out += term;
    }
    return out;
  }
};

/// The monomorphism U -> Q4: X1,X2,X3 -> T1,T2,T3 and X4 -> lambda(...).
inline Morphism embedding_I(const NamedAlgebra& u, const NamedAlgebra& q4) {
  Morphism m{&u, &q4, {}};
  m.images = {element_var(q4.spec, 0), element_var(q4.spec, 1), element_var(q4.spec, 2),
              embedding_x4_image(q4.spec, lambda_value())};
  return m;
}

/// Re-derive lambda by leaving it symbolic: impose X1 X4 = r^2 X4 X1 + X2 on
/// the embedded images and solve the resulting linear condition. Also reports
/// whether the solution is unique (homogeneous space of dimension 0).
struct LambdaSolution {
  std::optional<RatF> lambda;
  bool unique = false;
  std::string note;
};

inline LambdaSolution solve_lambda(const NamedAlgebra& q4,
                                   const RatF& c2 = RatF::rs(-1, 1) - RatF(1)) {
  const AlgebraSpec& Q = q4.spec;
  const Element V = embedding_x4_image(Q, RatF(1), c2);
  const Element T1 = element_var(Q, 0), T2 = element_var(Q, 1);
  // lambda * (T1 V - r^2 V T1) = T2
  const Element E = mul(Q, T1, V) - mul(Q, V, T1).scaled(RatF::r(2));
  std::map<Expo, size_t> index;
  for (const auto& [e, c] : E.terms) index.emplace(e, index.size());
  for (const auto& [e, c] : T2.terms) index.emplace(e, index.size());
  Matrix m(index.size(), 1);
  Vec b(index.size());
  for (const auto& [e, c] : E.terms) m[index.at(e)][0] = c;
  for (const auto& [e, c] : T2.terms) b[index.at(e)] = c;
  const auto sol = solve(m, b);
  if (!sol) return {std::nullopt, false, "no scalar makes the embedding relation-preserving"};
  return {sol->particular[0], sol->homogeneous.empty(), ""};
}

/// With W'' = T3 + (s^-2 - r^-1 s^-1) T2 I(X4) and Z'' = T1 W'' - s^4 W'' T1,
/// the torus element T2^-1 Z'' T1^-1 must equal T4 exactly, and W'', Z'' must
/// be the embedded images of W, Z'.
struct T4Consistency {
  Element residual_t4;   // T2^-1 Z'' T1^-1 - T4
  Element residual_w;    // I(W) - W''
  Element residual_z;    // I(Z') - Z''
  bool ok() const {
    return residual_t4.is_zero() && residual_w.is_zero() && residual_z.is_zero();
  }
};

inline T4Consistency t4_consistency(const NamedAlgebra& u, const NamedAlgebra& q4,
                                    const Morphism& I) {
  const AlgebraSpec& Q = q4.spec;
  const Element T1 = element_var(Q, 0), T2 = element_var(Q, 1), T3 = element_var(Q, 2),
                T4 = element_var(Q, 3);
  const Element ix4 = I.images[3];
  const Element wpp = T3 + mul(Q, T2, ix4).scaled(RatF::s(-2) - RatF::rs(-1, -1));
  const Element zpp = mul(Q, T1, wpp) - mul(Q, wpp, T1).scaled(RatF::s(4));
  T4Consistency out;
  out.residual_t4 =
      mul(Q, mul(Q, element_var(Q, 1, -1), zpp), element_var(Q, 0, -1)) - T4;
  out.residual_w = I.apply(element_W(u)) - wpp;
  out.residual_z = I.apply(element_Zprime(u)) - zpp;
  return out;
}

// ---------------------------------------------------------------------------
// Center scans
// ---------------------------------------------------------------------------

/// Basis of {z : [z, g] = 0 for every designated generator g} over the
/// monomial window (total degree <= degbound on polynomial variables,
/// |exponent| <= laurent_window on invertible ones). Solved exactly per
/// weight component.
inline std::vector<Element> center_scan(const NamedAlgebra& alg, int degbound,
                                        int laurent_window = 3) {
  const AlgebraSpec& S = alg.spec;
  std::map<std::array<int, 2>, std::vector<Expo>> groups;
  for (auto& e : enumerate_monomials(S, degbound, laurent_window))
    groups[S.weight_of(e)].push_back(std::move(e));
  std::vector<Element> basis;
  for (const auto& [w, monos] : groups) {
    std::map<std::pair<size_t, Expo>, size_t> rows;
    std::vector<std::map<size_t, RatF>> cols(monos.size());
    for (size_t ui = 0; ui < monos.size(); ++ui) {
      const Element zm = element_monomial(monos[ui], RatF(1));
      for (size_t gi = 0; gi < alg.central_gens.size(); ++gi) {
        const Element res = commutator(S, zm, alg.central_gens[gi]);
        for (const auto& [e, c] : res.terms) {
          const auto key = std::make_pair(gi, e);
          auto [it, inserted] = rows.emplace(key, rows.size());
          cols[ui][it->second] = c;
        }
      }
    }
    Matrix m(rows.size(), monos.size());
    for (size_t ui = 0; ui < monos.size(); ++ui)
      for (const auto& [ri, c] : cols[ui]) m[ri][ui] = c;
    for (const auto& v : nullspace(m)) {
      Element z;
      for (size_t ui = 0; ui < monos.size(); ++ui) z.add_term(monos[ui], v[ui]);
      basis.push_back(std::move(z));
    }
  }
  return basis;
}

/// The exponent conditions a gr-U monomial X1^a X2^b X3^c X4^d must satisfy
/// to commute with the images of e1 and e2: values of
/// (2b+2c, 2c+2d, 2a+c, 2b+c).
inline std::array<long, 4> graded_center_system(long a, long b, long c, long d) {
  return {2 * b + 2 * c, 2 * c + 2 * d, 2 * a + c, 2 * b + c};
}

/// The system above has full rank 4, so the only integer solution is zero.
inline bool graded_center_system_only_zero() {
  Matrix m(4, 4);
  const long rows[4][4] = {{0, 2, 2, 0}, {0, 0, 2, 2}, {2, 0, 1, 0}, {0, 2, 1, 0}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) m[i][j] = RatF(rows[i][j]);
  return rank(m) == 4;
}

/// Full catalog, built and validated once.
struct Catalog {
  NamedAlgebra u, gru, b4, b3, b2, q4, ugeq0, vcheck;
  Morphism I;

  static Catalog build() {
    Catalog c{build_u(), build_gr_u(), build_b(4), build_b(3), build_b(2),
              build_q4(), build_ugeq0(), build_vcheck(), {}};
    c.I = embedding_I(c.u, c.q4);
    for (NamedAlgebra* alg : {&c.u, &c.b4, &c.b3, &c.b2}) {
      alg->named["W"] = element_W(*alg);
      alg->named["Zp"] = element_Zprime(*alg);
      alg->named["lambda"] = element_one(alg->spec).scaled(lambda_value());
    }
    c.q4.named["lambda"] = element_one(c.q4.spec).scaled(lambda_value());
    return c;
  }

  const NamedAlgebra* by_name(const std::string& n) const {
    if (n == "u") return &u;
    if (n == "gru") return &gru;
    if (n == "b4") return &b4;
    if (n == "b3") return &b3;
    if (n == "b2") return &b2;
    if (n == "q4") return &q4;
    if (n == "ugeq0") return &ugeq0;
    if (n == "vcheck") return &vcheck;
    return nullptr;
  }
};

}  // namespace qserre
