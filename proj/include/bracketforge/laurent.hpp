#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bracketforge {

using BigInt = boost::multiprecision::cpp_int;

// Variable tag for a Laurent polynomial. TQuarter means the stored exponent
// counts quarter-powers of t, so x^4 == t, x^-4 == t^-1. Jones polynomials of
// knots always land on exponents divisible by 4.
enum class Var { A, TQuarter };

inline const char* var_name(Var v) { return v == Var::A ? "A" : "t^(1/4)"; }

class Laurent {
public:
  explicit Laurent(Var v = Var::A) : var_(v) {}

  static Laurent zero(Var v) { return Laurent(v); }

  static Laurent constant(Var v, BigInt c) {
    Laurent p(v);
    if (c != 0) p.terms_[0] = std::move(c);
    return p;
  }

  static Laurent mono(Var v, BigInt c, int exp) {
    Laurent p(v);
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
  }

  Var var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int min_deg() const {
    require_nonzero("min_deg");
    return terms_.begin()->first;
  }
  int max_deg() const {
    require_nonzero("max_deg");
    return terms_.rbegin()->first;
  }
  // max_deg - min_deg, in stored exponent units.
  int span() const {
    require_nonzero("span");
    return max_deg() - min_deg();
  }

  BigInt coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& terms() const { return terms_; }

  void add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  // Multiply by the monomial c * x^exp in place.
  Laurent& mono_mul(const BigInt& c, int exp) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    std::map<int, BigInt> out;
    for (auto& [e, k] : terms_) out.emplace(e + exp, k * c);
    terms_ = std::move(out);
    return *this;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_var(b);
    Laurent r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Evaluate at x = +1 or x = -1 (enough for determinant-style checks).
  BigInt eval_pm1(int x) const {
    if (x != 1 && x != -1) throw std::invalid_argument("eval_pm1: x must be +-1");
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += (x == 1 || e % 2 == 0) ? c : -c;
    return s;
  }

  // Canonical text form, ascending exponents: "-A^-4 + 2 + A^4".
  // TQuarter polynomials render in t; their exponents must be multiples of 4.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string sym = var_ == Var::A ? "A" : "t";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      int shown = e;
      if (var_ == Var::TQuarter) {
        if (e % 4 != 0)
          throw std::domain_error("to_string: t-exponent not a multiple of 4");
        shown = e / 4;
      }
      if (shown == 0) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str();
        out += sym;
        if (shown != 1) out += "^" + std::to_string(shown);
      }
    }
    return out;
  }

private:
  void require_nonzero(const char* what) const {
    if (terms_.empty())
      throw std::domain_error(std::string(what) + ": zero polynomial");
  }
  void check_var(const Laurent& o) const {
    if (var_ != o.var_)
      throw std::invalid_argument(std::string("variable mismatch: ") +
                                  var_name(var_) + " vs " + var_name(o.var_));
  }

  Var var_;
  std::map<int, BigInt> terms_;
};

// <D> in A  ->  V_K(t) with t^(1/4)-unit exponents: multiply by (-A)^(-3w)
// and substitute A = t^(-1/4). Term-by-term that is
//   c * A^e  ->  (-1)^w * c * t^((3w - e)/4).
inline Laurent normalize_to_jones(const Laurent& bracket, int writhe) {
  if (bracket.var() != Var::A)
    throw std::invalid_argument("normalize_to_jones: expected a bracket in A");
  Laurent v(Var::TQuarter);
  bool flip = (writhe % 2) != 0;
  for (const auto& [e, c] : bracket.terms())
    v.add_term(3 * writhe - e, flip ? BigInt(-c) : c);
  return v;
}

// Jones polynomials of knots live on integer powers of t.
inline void require_integral_t(const Laurent& jones) {
  if (jones.var() != Var::TQuarter)
    throw std::invalid_argument("expected a Jones polynomial in t");
  for (const auto& [e, c] : jones.terms())
    if (e % 4 != 0)
      throw std::domain_error("Jones exponent " + std::to_string(e) +
                              "/4 is not an integer; input was not a knot");
}

// Span of a Jones polynomial in whole t units.
inline int jones_span_t(const Laurent& jones) {
  require_integral_t(jones);
  return jones.span() / 4;
}

// V(-1); its absolute value is the knot determinant.
inline BigInt jones_eval_minus1(const Laurent& jones) {
  require_integral_t(jones);
  BigInt s = 0;
  for (const auto& [e, c] : jones.terms()) s += (e / 4) % 2 ? BigInt(-c) : c;
  return s;
}

}  // namespace bracketforge
