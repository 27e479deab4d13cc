#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "f4l/rational.hpp"

namespace f4l {

using Json = nlohmann::ordered_json;

/// Sparse univariate Laurent polynomial in q over Rational.
/// Invariant: no stored coefficient is zero.
class UniPoly {
 public:
  using Terms = std::map<int, Rational>;

  UniPoly() = default;
  UniPoly(long long c) { add_term(0, Rational(c)); }
  UniPoly(const Rational& c) { add_term(0, c); }
  static UniPoly monomial(int e, Rational c = Rational(1)) {
    UniPoly p;
    p.add_term(e, c);
    return p;
  }
  static UniPoly q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_laurent() const { return !terms_.empty() && terms_.begin()->first < 0; }

  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int low_exp() const {
    if (is_zero()) throw std::domain_error("low_exp of zero polynomial");
    return terms_.begin()->first;
  }
  int high_exp() const {
    if (is_zero()) throw std::domain_error("high_exp of zero polynomial");
    return terms_.rbegin()->first;
  }
  const Rational& lead_coeff() const {
    if (is_zero()) throw std::domain_error("lead_coeff of zero polynomial");
    return terms_.rbegin()->second;
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  UniPoly operator-() const {
    UniPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(const Rational& c, const UniPoly& p) {
    UniPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^k (k may be negative).
  UniPoly shifted(int k) const {
    UniPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Evaluate at q = t; t must be nonzero if negative exponents occur.
  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational p(1);
      int n = e >= 0 ? e : -e;
      for (int k = 0; k < n; ++k) p *= t;
      if (e < 0) p = Rational(1) / p;
      acc += c * p;
    }
    return acc;
  }

  std::string str(const char* var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c;
      if (!first) {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
      }
      first = false;
      const bool unit = (a == Rational(1));
      if (e == 0) {
        os << a.str();
      } else {
        if (!unit) os << a.str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Sparse bivariate Laurent polynomial in u, v over Rational.
/// Invariant: no stored coefficient is zero; term keys are unique, so the
/// representation is canonical and operator== decides polynomial equality.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (e_u, e_v)
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;
  BiPoly(long long c) { add_term(0, 0, Rational(c)); }
  BiPoly(const Rational& c) { add_term(0, 0, c); }
  static BiPoly monomial(int eu, int ev, Rational c = Rational(1)) {
    BiPoly p;
    p.add_term(eu, ev, c);
    return p;
  }
  static BiPoly u() { return monomial(1, 0); }
  static BiPoly v() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int eu, int ev, const Rational& c) {
    if (c.is_zero()) return;
    Key k{eu, ev};
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly times_monomial(int eu, int ev) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + eu, k.second + ev}, c);
    return r;
  }

  // Minimal exponents clamped at zero: the monomial clearing the Laurent part.
  int min_eu() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    return m;
  }
  int min_ev() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
  }

  BiPoly swapped_uv() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
  }

  /// Substitute u -> q^a, v -> q^b.
  UniPoly substitute_powers(int a, int b) const {
    UniPoly r;
    for (const auto& [k, c] : terms_) r.add_term(a * k.first + b * k.second, c);
    return r;
  }

  Rational eval(const Rational& tu, const Rational& tv) const {
    auto pw = [](const Rational& t, int e) {
      Rational p(1);
      int n = e >= 0 ? e : -e;
      for (int k = 0; k < n; ++k) p *= t;
      if (e < 0) p = Rational(1) / p;
      return p;
    };
    Rational acc(0);
    for (const auto& [k, c] : terms_) acc += c * pw(tu, k.first) * pw(tv, k.second);
    return acc;
  }

  std::string str(const char* un = "u", const char* vn = "v") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Rational a = c;
      if (!first) {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
      }
      first = false;
      const bool unit = (a == Rational(1));
      if (k.first == 0 && k.second == 0) {
        os << a.str();
        continue;
      }
      if (!unit) os << a.str() << "*";
      bool need_star = false;
      if (k.first != 0) {
        os << un;
        if (k.first != 1) os << "^" << k.first;
        need_star = true;
      }
      if (k.second != 0) {
        if (need_star) os << "*";
        os << vn;
        if (k.second != 1) os << "^" << k.second;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Unreduced fraction of bivariate polynomials; equality is decided by
/// cross-multiplication, never by reduction to lowest terms.
struct BiFrac {
  BiPoly num;
  BiPoly den;

  BiFrac(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("degenerate fraction");
  }
};

inline bool frac_eq(const BiFrac& a, const BiFrac& b) {
  if (a.den.is_zero() || b.den.is_zero()) throw std::domain_error("degenerate fraction");
  return a.num * b.den == b.num * a.den;
}

// ---- univariate division, gcd ----

/// Quotient and remainder of genuine (non-Laurent) polynomials.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_laurent() || b.is_laurent()) throw std::domain_error("divmod needs genuine polynomials");
  UniPoly q, r = a;
  const int db = b.high_exp();
  const Rational lb = b.lead_coeff();
  while (!r.is_zero() && r.high_exp() >= db) {
    const Rational c = r.lead_coeff() / lb;
    const int e = r.high_exp() - db;
    const UniPoly m = UniPoly::monomial(e, c);
    q += m;
    r -= m * b;
  }
  return {q, r};
}

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: inexact division");
  return q;
}

/// Monic gcd of genuine polynomials over the rationals.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  auto monic = [](UniPoly p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.lead_coeff()) * p;
  };
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = b;
    b = monic(r);
  }
  return a;
}

inline UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  return exact_div(a * b, gcd(a, b));
}

/// Split p = q^k * core with core a genuine polynomial, core(0) != 0.
inline std::pair<int, UniPoly> split_low(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("split_low of zero polynomial");
  const int k = p.low_exp();
  return {k, p.shifted(-k)};
}

/// The nonzero term of minimal exponent.
inline std::pair<Rational, int> lowest_term(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("lowest_term of zero polynomial");
  return {p.terms().begin()->second, p.low_exp()};
}

/// Quotient of univariate polynomials after specialisation. Normalised so
/// that den is genuine with constant term 1; num may be Laurent. den == 1
/// means the quotient is a (Laurent) polynomial.
struct UniQuot {
  UniPoly num;
  UniPoly den;

  bool is_polynomial() const { return den == UniPoly(1); }
};

inline std::pair<Rational, int> lowest_term(const UniQuot& f) {
  if (f.num.is_zero()) throw std::domain_error("lowest_term of zero quotient");
  // den has constant term 1, so the lowest term comes from num alone.
  return lowest_term(f.num);
}

namespace detail {

/// Exact division of P by the binomial u^bu - v^av (bu, av > 0), if possible.
/// P must be genuine. Rewrites u^bu -> v^av term by term.
inline std::optional<BiPoly> div_binomial(const BiPoly& p, int bu, int av) {
  BiPoly rem = p, quot;
  for (;;) {
    std::optional<BiPoly::Key> pick;
    for (const auto& [k, c] : rem.terms())
      if (k.first >= bu) {
        pick = k;
        break;
      }
    if (!pick) break;
    const Rational c = rem.terms().at(*pick);
    quot.add_term(pick->first - bu, pick->second, c);
    rem.add_term(pick->first, pick->second, -c);
    rem.add_term(pick->first - bu, pick->second + av, c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

}  // namespace detail

/// Specialise a bivariate fraction at u -> q^a, v -> q^b (a, b > 0) and
/// reduce the result by univariate gcd. When the denominator is annihilated
/// by the substitution, numerator and denominator are first divided exactly
/// by the kernel binomial u^(b/g) - v^(a/g); a numerator that does not cancel
/// signals a genuine pole and is an error.
inline UniQuot specialize(const BiFrac& f, int a, int b) {
  if (a <= 0 || b <= 0) throw std::domain_error("specialize: exponents must be positive");
  if (f.den.is_zero()) throw std::domain_error("degenerate fraction");

  // Clear Laurent exponents by the same monomial on both sides.
  const int mu = std::min(f.num.min_eu(), f.den.min_eu());
  const int mv = std::min(f.num.min_ev(), f.den.min_ev());
  BiPoly num = f.num.times_monomial(-mu, -mv);
  BiPoly den = f.den.times_monomial(-mu, -mv);

  const int g = std::gcd(a, b);
  const int bu = b / g, av = a / g;
  while (den.substitute_powers(a, b).is_zero()) {
    auto dq = detail::div_binomial(den, bu, av);
    if (!dq) throw std::domain_error("specialize: denominator vanishes");
    auto nq = detail::div_binomial(num, bu, av);
    if (!nq) throw std::domain_error("specialize: denominator vanishes under substitution");
    den = *dq;
    num = *nq;
  }

  UniPoly n = num.substitute_powers(a, b);
  UniPoly d = den.substitute_powers(a, b);
  if (n.is_zero()) return {UniPoly(), UniPoly(1)};

  auto [kn, cn] = split_low(n);
  auto [kd, cd] = split_low(d);
  const UniPoly common = gcd(cn, cd);
  cn = exact_div(cn, common);
  cd = exact_div(cd, common);
  const Rational c0 = cd.coeff(0);  // nonzero by construction
  cn = (Rational(1) / c0) * cn;
  cd = (Rational(1) / c0) * cd;
  return {cn.shifted(kn - kd), cd};
}

// ---- JSON serialisation ----

inline void to_json(Json& j, const Rational& x) { j = x.frac_str(); }

/// [[e, "num/den"], ...] sorted by exponent.
inline void to_json(Json& j, const UniPoly& p) {
  j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back(Json::array({e, c.frac_str()}));
}

/// [[e_u, e_v, "num/den"], ...] sorted lexicographically by exponents.
inline void to_json(Json& j, const BiPoly& p) {
  j = Json::array();
  for (const auto& [k, c] : p.terms())
    j.push_back(Json::array({k.first, k.second, c.frac_str()}));
}

inline void to_json(Json& j, const BiFrac& f) {
  j = Json{{"num", f.num}, {"den", f.den}};
}

inline void to_json(Json& j, const UniQuot& f) {
  j = Json{{"num", f.num}, {"den", f.den}, {"polynomial", f.is_polynomial()}};
}

}  // namespace f4l
