#include "qweyl/coeff.hpp"

#include <cmath>
#include <numbers>

#include "qweyl/errors.hpp"

namespace qweyl {

// ---- GaussRational ----

GaussRational GaussRational::inverse() const {
  mpq_class norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(i)");
  return {re / norm, -im / norm};
}

std::string GaussRational::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = im.get_str() + "*i";
  }
  if (sgn(re) == 0) return imag;
  if (sgn(im) < 0) {
    mpq_class m = -im;
    return "(" + re.get_str() + " - " + (m == 1 ? std::string("i") : m.get_str() + "*i") + ")";
  }
  return "(" + re.get_str() + " + " + imag + ")";
}

// ---- Poly ----

Poly::Poly(GaussRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(GaussRational c, int degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, GaussRational());
  p.coeffs_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Poly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return is_zero() ? 0 : k;
}

Poly Poly::shifted(int k) const {
  Poly r;
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), GaussRational());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  } else {
    r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
  }
  return r;
}

Poly Poly::conj() const {
  Poly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.conj());
  return r;
}

Poly Poly::reversed() const {
  Poly r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.trim();
  return r;
}

Poly Poly::scaled(const GaussRational& c) const {
  Poly r;
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return scaled(lead().inverse());
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Poly& s = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) r.coeffs_[k] = r.coeffs_[k] + s.coeffs_[k];
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r;
  r.coeffs_.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussRational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  remainder = a;
  quotient = Poly();
  if (a.degree() < b.degree()) return;
  quotient.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, GaussRational());
  const GaussRational inv_lead = b.lead().inverse();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const int shift = remainder.degree() - b.degree();
    GaussRational factor = remainder.lead() * inv_lead;
    for (int k = 0; k <= b.degree(); ++k) {
      auto& slot = remainder.coeffs_[static_cast<std::size_t>(k + shift)];
      slot = slot - factor * b[k];
    }
    // leading coefficient is now exactly zero
    remainder.coeffs_.pop_back();
    remainder.trim();
    quotient.coeffs_[static_cast<std::size_t>(shift)] = std::move(factor);
  }
  quotient.trim();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  Poly q;
  Poly r;
  divmod(a, b, q, r);
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q;
    Poly r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Complex Poly::eval(Complex at) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_complex();
  return acc;
}

double Poly::l1_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c.to_complex());
  return s;
}

// ---- NumericContext ----

NumericContext::NumericContext() : NumericContext(std::numbers::pi / 3.0) {}

NumericContext::NumericContext(double phi, double tolerance) : phi_(phi), tolerance_(tolerance) {
  if (!(std::abs(phi) < std::numbers::pi)) throw InvalidContext("phi must satisfy |phi| < pi");
  // q^4 = 1 exactly at phi in {0, +-pi/2}; reject a neighbourhood too small to matter.
  if (std::abs(std::sin(2.0 * phi)) < 1e-12) throw InvalidContext("phi must avoid q^4 = 1");
  if (!(tolerance > 0.0)) throw InvalidContext("tolerance must be positive");
}

Complex NumericContext::q0() const { return std::polar(1.0, phi_ / 2.0); }
Complex NumericContext::q() const { return std::polar(1.0, phi_); }

// ---- Scalar ----

Scalar::Scalar() : den_(GaussRational(1)) {}

Scalar::Scalar(long value) : num_(GaussRational(value)), den_(GaussRational(1)) {}

Scalar::Scalar(GaussRational value) : num_(std::move(value)), den_(GaussRational(1)) {}

Scalar::Scalar(int shift, Poly num, Poly den) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  // Pull q0 factors out of the denominator into the shift.
  const int d0 = den_.low_order();
  if (d0 > 0) {
    den_ = den_.shifted(-d0);
    shift_ -= d0;
  }
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Poly(GaussRational(1));
    return;
  }
  const int n0 = num_.low_order();
  if (n0 > 0) {
    num_ = num_.shifted(-n0);
    shift_ += n0;
  }
  if (!den_.is_one()) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
    if (!den_.lead().is_one()) {
      const GaussRational inv = den_.lead().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
}

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  mpq_class r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return Scalar(GaussRational(r, 0));
}

Scalar Scalar::i() { return Scalar(GaussRational(0, 1)); }
Scalar Scalar::q0() { return q0_pow(1); }
Scalar Scalar::q() { return q0_pow(2); }

Scalar Scalar::q0_pow(int k) {
  Scalar s(1);
  s.shift_ = k;
  return s;
}

Scalar Scalar::lambda() {
  // q0^2 - q0^-2 = q0^-2 (q0^4 - 1)
  Poly num = Poly::monomial(GaussRational(1), 4) - Poly(GaussRational(1));
  return Scalar(-2, num, Poly(GaussRational(1)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  const GaussRational inv = r.den_.lead().inverse();
  r.num_ = r.num_.scaled(inv);
  r.den_ = r.den_.scaled(inv);
  return r;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar Scalar::star() const {
  if (is_zero()) return *this;
  // q0^s N(q0)/D(q0) -> q0^{-s} conj(N)(1/q0)/conj(D)(1/q0)
  Scalar r;
  r.shift_ = -shift_ - num_.degree() + den_.degree();
  r.num_ = num_.conj().reversed();
  r.den_ = den_.conj().reversed();
  const GaussRational inv = r.den_.lead().inverse();
  r.num_ = r.num_.scaled(inv);
  r.den_ = r.den_.scaled(inv);
  return r;
}

Scalar Scalar::mul_q0_pow(int k) const {
  Scalar r = *this;
  if (!r.is_zero()) r.shift_ += k;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  Poly a = num_.shifted(shift_ - s);
  Poly b = o.num_.shifted(o.shift_ - s);
  shift_ = s;
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    Poly g = Poly::gcd(den_, o.den_);
    Poly l1 = Poly::exact_div(den_, g);
    Poly l2 = Poly::exact_div(o.den_, g);
    num_ = a * l2 + b * l1;
    den_ = den_ * l2;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  r.num_ = -r.num_;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  Scalar r;
  r.shift_ = a.shift_ + b.shift_;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    return r;
  }
  Poly g1 = b.den_.is_one() ? Poly(GaussRational(1)) : Poly::gcd(a.num_, b.den_);
  Poly g2 = a.den_.is_one() ? Poly(GaussRational(1)) : Poly::gcd(b.num_, a.den_);
  r.num_ = Poly::exact_div(a.num_, g1) * Poly::exact_div(b.num_, g2);
  r.den_ = Poly::exact_div(a.den_, g2) * Poly::exact_div(b.den_, g1);
  const GaussRational& lead = r.den_.lead();
  if (!lead.is_one()) {
    const GaussRational inv = lead.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Complex Scalar::eval_at(Complex q0, double tolerance) const {
  if (is_zero()) return 0.0;
  const Complex d = den_.eval(q0);
  if (std::abs(d) < tolerance * std::max(1.0, den_.l1_norm())) {
    throw PoleAtEvaluationPoint("denominator " + Scalar(0, den_, Poly(GaussRational(1))).to_string() +
                                " vanishes at the evaluation point");
  }
  return std::pow(q0, shift_) * num_.eval(q0) / d;
}

Complex Scalar::eval(const NumericContext& ctx) const { return eval_at(ctx.q0(), ctx.tolerance()); }

namespace {

std::string laurent_to_string(const Poly& p, int shift) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussRational& c = p[k];
    if (c.is_zero()) continue;
    const int e = k + shift;
    std::string term;
    if (e == 0) {
      term = c.to_string();
    } else {
      const std::string power = e == 1 ? "q0" : "q0^" + std::to_string(e);
      if (c.is_one()) {
        term = power;
      } else if (c == GaussRational(-1)) {
        term = "-" + power;
      } else {
        term = c.to_string() + "*" + power;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace

std::string Scalar::to_string() const {
  if (den_.is_one()) return laurent_to_string(num_, shift_);
  return "(" + laurent_to_string(num_, shift_) + ")/(" + laurent_to_string(den_, 0) + ")";
}

Scalar scalar_star(const Scalar& c) { return c.star(); }

Complex scalar_eval(const Scalar& c, const NumericContext& ctx) { return c.eval(ctx); }

}  // namespace qweyl
