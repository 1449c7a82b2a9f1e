#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qserre/algebra.hpp"
#include "qserre/linalg.hpp"
#include "qserre/ratf.hpp"

namespace qserre {

/// Word over the alphabet {e1, e2}, letters 0 and 1.
using Word = std::vector<std::uint8_t>;

/// Element of the free associative algebra on e1, e2 over Q(r,s).
/// Multiplication is word concatenation extended bilinearly.
struct FreeElt {
  std::map<Word, RatF> terms;

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }

  void add_term(const Word& w, const RatF& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend bool operator==(const FreeElt& a, const FreeElt& b) { return a.terms == b.terms; }
  friend bool operator!=(const FreeElt& a, const FreeElt& b) { return !(a == b); }

  FreeElt& operator+=(const FreeElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  FreeElt& operator-=(const FreeElt& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
  friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }
  friend FreeElt operator-(const FreeElt& a) {
    FreeElt out;
    for (const auto& [w, c] : a.terms) out.terms.emplace(w, -c);
    return out;
  }
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b) {
    FreeElt out;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    return out;
  }
  FreeElt scaled(const RatF& c) const {
    FreeElt out;
    for (const auto& [w, v] : terms) out.add_term(w, v * c);
    return out;
  }

  int max_word_length() const {
    size_t m = 0;
    for (const auto& [w, c] : terms) m = std::max(m, w.size());
    return static_cast<int>(m);
  }
};

inline FreeElt free_one() {
  FreeElt out;
  out.add_term({}, RatF(1));
  return out;
}

inline FreeElt free_gen(int letter) {
  FreeElt out;
  out.add_term({static_cast<std::uint8_t>(letter)}, RatF(1));
  return out;
}

/// (e1-count, e2-count) of a word.
inline std::array<int, 2> word_weight(const Word& w) {
  std::array<int, 2> out{0, 0};
  for (auto l : w) ++out[l];
  return out;
}

inline std::optional<std::array<int, 2>> free_is_homogeneous(const FreeElt& x) {
  std::optional<std::array<int, 2>> w;
  for (const auto& [word, c] : x.terms) {
    const auto ww = word_weight(word);
    if (!w)
      w = ww;
    else if (*w != ww)
      return std::nullopt;
  }
  return w;
}

/// The two q-Serre relators of degrees (2,1) and (1,3):
///   R1 = e1^2 e2 - (r^2+s^2) e1 e2 e1 + r^2 s^2 e2 e1^2
///   R2 = e1 e2^3 - (r^2+rs+s^2) e2 e1 e2^2 + rs(r^2+rs+s^2) e2^2 e1 e2 - r^3 s^3 e2^3 e1
inline std::array<FreeElt, 2> serre_relators() {
  const FreeElt e1 = free_gen(0), e2 = free_gen(1);
  const RatF r = RatF::r(), s = RatF::s();
  FreeElt r1 = e1 * e1 * e2 - (e1 * e2 * e1).scaled(r * r + s * s) +
               (e2 * e1 * e1).scaled(r * r * s * s);
  const RatF p = r * r + r * s + s * s;
  FreeElt r2 = e1 * e2 * e2 * e2 - (e2 * e1 * e2 * e2).scaled(p) +
               (e2 * e2 * e1 * e2).scaled(r * s * p) -
               (e2 * e2 * e2 * e1).scaled(r.pow(3) * s.pow(3));
  return {r1, r2};
}

/// Standard generator images inside the free algebra:
/// X1 = e1, X2 = e3 = e1 e2 - r^2 e2 e1, X3 = e2 e3 - s^-2 e3 e2, X4 = e2,
/// W = X3 + (s^-2 - r^-1 s^-1) X2 X4, Zp = X1 W - s^4 W X1.
struct FreeImages {
  FreeElt e1, e2, e3, X1, X2, X3, X4, W, Zp;
  FreeImages() {
    e1 = free_gen(0);
    e2 = free_gen(1);
    e3 = e1 * e2 - (e2 * e1).scaled(RatF::r().pow(2));
    X1 = e1;
    X2 = e3;
    X3 = e2 * e3 - (e3 * e2).scaled(RatF::s().pow(-2));
    X4 = e2;
    W = X3 + (X2 * X4).scaled(RatF::s().pow(-2) - RatF::rs(-1, -1));
    Zp = X1 * W - (W * X1).scaled(RatF::s().pow(4));
  }
};

/// Expression context over the free algebra symbols e1, e2, e3, X1..X4, W, Zp.
struct FreeContext {
  using Value = FreeElt;
  FreeImages img;

  Value from_integer(const mpz_class& v) {
    FreeElt out;
    out.add_term({}, RatF(v));
    return out;
  }
  Value symbol(const std::string& name) {
    if (name == "r") return free_one().scaled(RatF::r());
    if (name == "s") return free_one().scaled(RatF::s());
    if (name == "e1") return img.e1;
    if (name == "e2") return img.e2;
    if (name == "e3") return img.e3;
    if (name == "X1") return img.X1;
    if (name == "X2") return img.X2;
    if (name == "X3") return img.X3;
    if (name == "X4") return img.X4;
    if (name == "W") return img.W;
    if (name == "Zp") return img.Zp;
    throw parse_error("unknown free-algebra symbol '" + name + "'");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value div(const Value& a, const Value& b) {
    if (b.size() == 1 && b.terms.begin()->first.empty())
      return a.scaled(b.terms.begin()->second.inv());
    throw parse_error("free-algebra division only by scalars");
  }
  Value pow(const Value& a, long e) {
    if (e < 0) {
      if (a.size() == 1 && a.terms.begin()->first.empty())
        return free_one().scaled(a.terms.begin()->second.pow(static_cast<int>(e)));
      throw parse_error("negative powers of words are not defined in the free algebra");
    }
    FreeElt out = free_one();
    for (long k = 0; k < e; ++k) out = out * a;
    return out;
  }
};

inline FreeElt expand(std::string_view src) {
  FreeContext ctx;
  return eval_expr(parse_expr(src), ctx);
}

/// Image of a free-algebra element in a PBW algebra under e1 -> img1, e2 -> img2.
inline Element to_pbw(const AlgebraSpec& spec, const FreeElt& x, const Element& img1,
                      const Element& img2) {
  Element out;
  for (const auto& [w, c] : x.terms) {
    Element term = element_one(spec).scaled(c);
    for (auto l : w) term = mul(spec, term, l == 0 ? img1 : img2);
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded-degree two-sided-ideal membership
// ---------------------------------------------------------------------------

struct CertificatePart {
  Word left;
  int relator;  // 0 or 1
  Word right;
  RatF coeff;
};

/// Verifiable witness: sum of coeff * left * R_relator * right.
struct MembershipCertificate {
  std::vector<CertificatePart> parts;

  FreeElt expansion() const {
    const auto rel = serre_relators();
    FreeElt out;
    for (const auto& p : parts) {
      FreeElt lw, rw;
      lw.add_term(p.left, RatF(1));
      rw.add_term(p.right, RatF(1));
      out += (lw * rel[p.relator] * rw).scaled(p.coeff);
    }
    return out;
  }
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipCertificate> certificate;
};

namespace detail {

inline void enumerate_words(int n1, int n2, Word& cur, std::vector<Word>& out) {
  if (n1 == 0 && n2 == 0) {
    out.push_back(cur);
    return;
  }
  if (n1 > 0) {
    cur.push_back(0);
    enumerate_words(n1 - 1, n2, cur, out);
    cur.pop_back();
  }
  if (n2 > 0) {
    cur.push_back(1);
    enumerate_words(n1, n2 - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Word> words_of_weight(int n1, int n2) {
  std::vector<Word> out;
  Word cur;
  if (n1 >= 0 && n2 >= 0) enumerate_words(n1, n2, cur, out);
  return out;
}

}  // namespace detail

/// Decide whether x lies in the span of padded relators u R_i v with
/// |u| + deg R_i + |v| <= degbound. Relators are weight-homogeneous, so each
/// weight component of x is solved independently; for homogeneous x this is
/// genuine ideal membership in that degree. A returned certificate has been
/// re-expanded and checked against the query.
inline MembershipResult ideal_member(const FreeElt& x, int degbound) {
  if (x.max_word_length() > degbound)
    throw std::invalid_argument("ideal_member: degbound smaller than the query degree");
  if (x.is_zero()) return {true, MembershipCertificate{}};

  const auto rel = serre_relators();
  const std::array<std::array<int, 2>, 2> relw = {{{2, 1}, {1, 3}}};

  // split the query by weight
  std::map<std::array<int, 2>, FreeElt> comps;
  for (const auto& [w, c] : x.terms) comps[word_weight(w)].add_term(w, c);

  MembershipCertificate cert;
  for (const auto& [wt, comp] : comps) {
    const auto words = detail::words_of_weight(wt[0], wt[1]);
    std::map<Word, size_t> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

    // columns: padded relators of this weight
    std::vector<std::tuple<Word, int, Word>> pads;
    std::vector<Vec> cols;
    for (int ri = 0; ri < 2; ++ri) {
      const int m1 = wt[0] - relw[ri][0], m2 = wt[1] - relw[ri][1];
      if (m1 < 0 || m2 < 0) continue;
      for (int u1 = 0; u1 <= m1; ++u1)
        for (int u2 = 0; u2 <= m2; ++u2)
          for (const auto& u : detail::words_of_weight(u1, u2))
            for (const auto& v : detail::words_of_weight(m1 - u1, m2 - u2)) {
              FreeElt lw, rw;
              lw.add_term(u, RatF(1));
              rw.add_term(v, RatF(1));
              const FreeElt padded = lw * rel[ri] * rw;
              Vec col(words.size());
              for (const auto& [w, c] : padded.terms) col[index.at(w)] = c;
              cols.push_back(std::move(col));
              pads.emplace_back(u, ri, v);
            }
    }
    Vec target(words.size());
    for (const auto& [w, c] : comp.terms) target[index.at(w)] = c;

    if (cols.empty()) return {false, std::nullopt};
    Matrix m(words.size(), cols.size());
    for (size_t i = 0; i < words.size(); ++i)
      for (size_t jc = 0; jc < cols.size(); ++jc) m[i][jc] = cols[jc][i];
    const auto sol = solve(m, target);
    if (!sol) return {false, std::nullopt};
    for (size_t jc = 0; jc < cols.size(); ++jc) {
      if (sol->particular[jc].is_zero()) continue;
      const auto& [u, ri, v] = pads[jc];
      cert.parts.push_back({u, ri, v, sol->particular[jc]});
    }
  }
  if (cert.expansion() != x) throw std::logic_error("ideal_member: certificate failed re-check");
  return {true, cert};
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (auto l : w) {
    if (!out.empty()) out += " ";
    out += l == 0 ? "e1" : "e2";
  }
  return out;
}

inline std::string free_str(const FreeElt& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms) {
    std::string cs = c.str();
    const bool wrap = c.num().size() > 1 && c.den().is_one();
    if (wrap) cs = "(" + cs + ")";
    std::string piece;
    if (w.empty())
      piece = cs;
    else if (cs == "1")
      piece = word_str(w);
    else if (cs == "-1")
      piece = "-" + word_str(w);
    else
      piece = cs + " * " + word_str(w);
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

}  // namespace qserre
