#pragma once

// Exact coefficient field Q(i)(q0): rational functions in the half-power symbol q0
// (q = q0^2, lambda = q - q^-1) with Gaussian-rational coefficients.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace qweyl {

using Complex = std::complex<double>;

/// a + b i with a, b rational.
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long value) : re(value), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Dense polynomial in q0 over Q(i); coefficient k multiplies q0^k. No trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(GaussRational constant);
  static Poly monomial(GaussRational c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const GaussRational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const GaussRational& lead() const { return coeffs_.back(); }
  const std::vector<GaussRational>& coeffs() const { return coeffs_; }

  /// Number of factors q0 dividing this polynomial (0 for the zero polynomial).
  int low_order() const;
  /// Multiplies by q0^k, k may be negative as long as q0^-k divides.
  Poly shifted(int k) const;
  Poly conj() const;
  Poly reversed() const;
  Poly scaled(const GaussRational& c) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
  /// Exact quotient; b must divide a.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd (zero only if both are zero).
  static Poly gcd(Poly a, Poly b);

  Complex eval(Complex at) const;
  double l1_norm() const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;
};

/// Evaluation point q0 = e^{i phi/2}.
class NumericContext {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  /// Default point phi = pi/3.
  NumericContext();
  /// Throws InvalidContext unless |phi| < pi, phi not in {0, +-pi/2} and tolerance > 0.
  explicit NumericContext(double phi, double tolerance = kDefaultTolerance);

  double phi() const { return phi_; }
  double tolerance() const { return tolerance_; }
  Complex q0() const;
  Complex q() const;

 private:
  double phi_;
  double tolerance_;
};

/// Element of Q(i)(q0) in canonical form q0^shift * num / den with num(0) != 0,
/// den(0) != 0, den monic and gcd(num, den) = 1. Zero is (0, 0, 1).
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational value);  // NOLINT(google-explicit-constructor)
  Scalar(int shift, Poly num, Poly den);

  static Scalar rational(long p, long q);
  static Scalar i();
  static Scalar q0();
  static Scalar q();
  static Scalar lambda();
  /// q0^k.
  static Scalar q0_pow(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  int shift() const { return shift_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  Scalar inverse() const;
  Scalar pow(int k) const;
  /// Involution fixing rationals with i -> -i and q0 -> q0^-1.
  Scalar star() const;
  Scalar mul_q0_pow(int k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes q0 = e^{i phi/2}. Throws PoleAtEvaluationPoint when the denominator
  /// vanishes there within the context tolerance.
  Complex eval(const NumericContext& ctx) const;
  Complex eval_at(Complex q0, double tolerance) const;

  /// Text in the scalar literal grammar; parses back to the same value.
  std::string to_string() const;

 private:
  void normalize();
  int shift_ = 0;
  Poly num_;
  Poly den_;
};

Scalar scalar_star(const Scalar& c);
Complex scalar_eval(const Scalar& c, const NumericContext& ctx);

}  // namespace qweyl
