#ifndef GENRIGID_SCALAR_HPP
#define GENRIGID_SCALAR_HPP

// Scalar fields used throughout the library: exact rationals (GMP), exact
// Gaussian rationals Q(i) stored as a pair of rationals, and double-precision
// complex numbers with an explicit tolerance policy.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genrigid {

using Rational = mpq_class;

/// num/den in canonical form (mpq requires canonical operands).
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}
using Complex = std::complex<double>;

/// Thrown for malformed inputs: bad scalar strings, mode mismatches, shape errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a computation would exceed the configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerical decision (rank, clustering) cannot be made reliably.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScalarMode { ExactRational, ExactGaussianRational, FloatComplex };

inline std::string_view mode_name(ScalarMode m) {
  switch (m) {
    case ScalarMode::ExactRational: return "exact-rational";
    case ScalarMode::ExactGaussianRational: return "exact-gaussian";
    case ScalarMode::FloatComplex: return "float";
  }
  return "?";
}

inline ScalarMode parse_mode(std::string_view s) {
  if (s == "exact-rational" || s == "rational") return ScalarMode::ExactRational;
  if (s == "exact-gaussian" || s == "exact" || s == "gaussian") return ScalarMode::ExactGaussianRational;
  if (s == "float") return ScalarMode::FloatComplex;
  throw InputError("unknown scalar mode '" + std::string(s) + "'");
}

/// Float-mode decision knobs. Exact modes ignore this entirely.
///
/// `tau` is the relative rank threshold: a singular value counts when it
/// exceeds tau times the largest one. Eigenvalue clustering uses the separate
/// radius `cluster_factor * tau * |M|`.
struct Tolerance {
  double tau = 1e-10;
  double cluster_factor = 1e3;

  double cluster_radius(double norm) const { return cluster_factor * tau * norm; }
};

inline Tolerance validated(Tolerance t) {
  if (!(t.tau > 0.0)) throw InputError("float tolerance must be positive");
  if (!(t.cluster_factor > 0.0)) throw InputError("cluster factor must be positive");
  return t;
}

class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

/// Exact scalar used for all group and intertwiner computations.
using Exact = GaussRational;

inline GaussRational imag_unit() { return {Rational(0), Rational(1)}; }

// ---------------------------------------------------------------------------
// Parsing and formatting of exact scalars: "p/q", "p/q+r/s i", "i", "-2i", ...

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

inline Rational parse_rational_token(const std::string& tok) {
  if (tok.empty() || tok == "+") return Rational(1);
  if (tok == "-") return Rational(-1);
  std::string t = tok;
  if (t.front() == '+') t.erase(0, 1);
  // Decimal literals like "0.25" are accepted and converted exactly.
  if (auto dot = t.find('.'); dot != std::string::npos) {
    if (t.find('/') != std::string::npos) throw InputError("bad rational '" + tok + "'");
    bool neg = !t.empty() && t.front() == '-';
    std::string digits = neg ? t.substr(1) : t;
    dot = digits.find('.');
    std::string intpart = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    std::string all = intpart + frac;
    if (all.empty() || all.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad rational '" + tok + "'");
    mpz_class num(all, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw InputError("bad rational '" + tok + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

}  // namespace detail

inline Rational parse_rational(std::string_view s) {
  std::string t = detail::strip_spaces(s);
  if (t.empty()) throw InputError("empty rational");
  return detail::parse_rational_token(t);
}

inline GaussRational parse_gauss(std::string_view s) {
  std::string t = detail::strip_spaces(s);
  if (t.empty()) throw InputError("empty scalar");
  if (t.back() != 'i') return GaussRational(detail::parse_rational_token(t));
  t.pop_back();
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), detail::parse_rational_token(t)};
  return {detail::parse_rational_token(t.substr(0, split)),
          detail::parse_rational_token(t.substr(split))};
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const GaussRational& z) {
  if (z.is_real()) return z.re().get_str();
  std::string im;
  if (z.im() == 1) im = "";
  else if (z.im() == -1) im = "-";
  else im = z.im().get_str();
  if (sgn(z.re()) == 0) return im + "i";
  std::string out = z.re().get_str();
  if (sgn(z.im()) > 0) out += "+";
  if (im.empty() || im == "-") return out + im + "i";
  return out + im + " i";
}

inline std::string to_string(const Complex& z) {
  return "[" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

// ---------------------------------------------------------------------------
// Field traits. Algorithms are written once against this interface.

template <class S>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::ExactRational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_parts(const Rational& re, const Rational& im) {
    if (sgn(im) != 0) throw InputError("non-real scalar in exact-rational mode");
    return re;
  }
  static Rational conj(const Rational& a) { return a; }
  static bool is_zero(const Rational& a, double = 0.0) { return sgn(a) == 0; }
  static double abs(const Rational& a) { return std::fabs(a.get_d()); }
  static Complex to_complex(const Rational& a) { return {a.get_d(), 0.0}; }
  static Rational real_part(const Rational& a) { return a; }
  static Rational imag_part(const Rational&) { return Rational(0); }
  static Rational parse(std::string_view s) { return parse_rational(s); }
};

template <>
struct Field<GaussRational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::ExactGaussianRational;
  static GaussRational zero() { return {}; }
  static GaussRational one() { return GaussRational(1); }
  static GaussRational from_int(long v) { return GaussRational(v); }
  static GaussRational from_parts(const Rational& re, const Rational& im) { return {re, im}; }
  static GaussRational conj(const GaussRational& a) { return a.conj(); }
  static bool is_zero(const GaussRational& a, double = 0.0) { return a.is_zero(); }
  static double abs(const GaussRational& a) { return std::hypot(a.re().get_d(), a.im().get_d()); }
  static Complex to_complex(const GaussRational& a) { return {a.re().get_d(), a.im().get_d()}; }
  static Rational real_part(const GaussRational& a) { return a.re(); }
  static Rational imag_part(const GaussRational& a) { return a.im(); }
  static GaussRational parse(std::string_view s) { return parse_gauss(s); }
};

template <>
struct Field<Complex> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::FloatComplex;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_parts(const Rational& re, const Rational& im) { return {re.get_d(), im.get_d()}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static bool is_zero(const Complex& a, double eps) { return std::abs(a) <= eps; }
  static double abs(const Complex& a) { return std::abs(a); }
  static Complex to_complex(const Complex& a) { return a; }
  static Complex parse(std::string_view s) {
    GaussRational g = parse_gauss(s);
    return to_complex_(g);
  }

 private:
  static Complex to_complex_(const GaussRational& g) { return {g.re().get_d(), g.im().get_d()}; }
};

template <class S>
concept ExactScalar = Field<S>::exact;

template <class S>
concept FloatScalar = !Field<S>::exact;

/// Converts between scalar fields. Exact -> float rounds; float -> exact is
/// exact (every double is a dyadic rational).
template <class To, class From>
To convert_scalar(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, Complex>) {
    return Field<From>::to_complex(x);
  } else if constexpr (std::is_same_v<From, Complex>) {
    return Field<To>::from_parts(Rational(x.real()), Rational(x.imag()));
  } else {
    return Field<To>::from_parts(Field<From>::real_part(x), Field<From>::imag_part(x));
  }
}

}  // namespace genrigid

#endif  // GENRIGID_SCALAR_HPP
