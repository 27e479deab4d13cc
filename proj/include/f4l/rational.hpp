#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

namespace f4l {

using Int = boost::multiprecision::cpp_int;

namespace detail {
// Expression templates off: every operation yields a plain value, which is
// what Eigen and ordered containers expect from a scalar.
using RationalRep = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
}  // namespace detail

/// Exact rational scalar. Always normalised: positive denominator, coprime
/// numerator/denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : rep_(n) {}
  Rational(long long n, long long d) : rep_(n) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    rep_ /= d;
  }
  explicit Rational(Int n) : rep_(detail::RationalRep(std::move(n))) {}
  Rational(Int n, Int d) : rep_(detail::RationalRep(std::move(n))) {
    if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
    rep_ /= detail::RationalRep(std::move(d));
  }

  Int numerator() const { return boost::multiprecision::numerator(rep_); }
  Int denominator() const { return boost::multiprecision::denominator(rep_); }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return rep_.sign(); }

  Rational& operator+=(const Rational& o) { rep_ += o.rep_; return *this; }
  Rational& operator-=(const Rational& o) { rep_ -= o.rep_; return *this; }
  Rational& operator*=(const Rational& o) { rep_ *= o.rep_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    rep_ /= o.rep_;
    return *this;
  }
  Rational operator-() const {
    Rational r;
    r.rep_ = -rep_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.rep_.compare(b.rep_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }
  /// Always "n/d", the serialisation form.
  std::string frac_str() const { return numerator().str() + "/" + denominator().str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  detail::RationalRep rep_;
};

inline long long to_long(const Rational& x) {
  if (!x.is_integer()) throw std::domain_error("to_long: not an integer");
  return x.numerator().convert_to<long long>();
}

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

}  // namespace f4l

namespace Eigen {
template <>
struct NumTraits<f4l::Rational> : GenericNumTraits<f4l::Rational> {
  typedef f4l::Rational Real;
  typedef f4l::Rational NonInteger;
  typedef f4l::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return f4l::Rational(0); }
  static inline Real dummy_precision() { return f4l::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
