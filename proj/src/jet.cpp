#include "oscint/jet.hpp"

#include <cmath>
#include <string>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw DomainError("jet order " + std::to_string(order) + " outside [0, " +
                      std::to_string(kMaxJetOrder) + "]");
  }
}

void check_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("jet order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

Jet::Jet(int order, double value) : order_(order) {
  check_order(order);
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(order, x0);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::from_coeffs(std::span<const double> coeffs) {
  if (coeffs.empty()) throw DomainError("jet needs at least one coefficient");
  Jet j(static_cast<int>(coeffs.size()) - 1, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) j.c_[i] = coeffs[i];
  return j;
}

double Jet::derivative(int l) const {
  if (l < 0 || l > order_) throw DomainError("derivative order outside jet");
  double factorial = 1.0;
  for (int i = 2; i <= l; ++i) factorial *= i;
  return c_[static_cast<std::size_t>(l)] * factorial;
}

std::vector<double> Jet::derivatives() const {
  std::vector<double> out(static_cast<std::size_t>(order_) + 1);
  double factorial = 1.0;
  for (int l = 0; l <= order_; ++l) {
    if (l >= 2) factorial *= l;
    out[static_cast<std::size_t>(l)] = c_[static_cast<std::size_t>(l)] * factorial;
  }
  return out;
}

bool Jet::is_finite() const noexcept {
  for (int l = 0; l <= order_; ++l) {
    if (!std::isfinite(c_[static_cast<std::size_t>(l)])) return false;
  }
  return true;
}

Jet& Jet::operator+=(const Jet& other) {
  check_same_order(*this, other);
  for (int l = 0; l <= order_; ++l) (*this)[l] += other[l];
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  check_same_order(*this, other);
  for (int l = 0; l <= order_; ++l) (*this)[l] -= other[l];
  return *this;
}

Jet& Jet::operator*=(const Jet& other) {
  *this = *this * other;
  return *this;
}

Jet& Jet::operator+=(double c) noexcept {
  c_[0] += c;
  return *this;
}

Jet& Jet::operator-=(double c) noexcept {
  c_[0] -= c;
  return *this;
}

Jet& Jet::operator*=(double c) noexcept {
  for (int l = 0; l <= order_; ++l) (*this)[l] *= c;
  return *this;
}

Jet operator-(Jet a) {
  a *= -1.0;
  return a;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  check_same_order(a, b);
  const int s = a.order();
  Jet out = Jet::zero(s);
  // Cauchy product; the Leibniz rule in Taylor-coefficient form.
  for (int n = 0; n <= s; ++n) {
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) sum += a[j] * b[n - j];
    out[n] = sum;
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

Jet operator+(Jet a, double c) { return a += c; }
Jet operator+(double c, Jet a) { return a += c; }
Jet operator-(Jet a, double c) { return a -= c; }
Jet operator-(double c, const Jet& a) { return -a + c; }
Jet operator*(Jet a, double c) { return a *= c; }
Jet operator*(double c, Jet a) { return a *= c; }
Jet operator/(Jet a, double c) { return a *= 1.0 / c; }
Jet operator/(double c, const Jet& a) { return recip(a) * c; }

Jet exp(const Jet& a) {
  const int s = a.order();
  Jet e = Jet::zero(s);
  e[0] = std::exp(a[0]);
  // e' = e a'  =>  n e_n = sum_{j=1..n} j a_j e_{n-j}
  for (int n = 1; n <= s; ++n) {
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) sum += j * a[j] * e[n - j];
    e[n] = sum / n;
  }
  if (!e.is_finite()) throw OverflowError("jet exp overflow at a0 = " + std::to_string(a[0]));
  return e;
}

Jet recip(const Jet& a) {
  if (a[0] == 0.0) throw DomainError("jet reciprocal of zero constant term");
  const int s = a.order();
  Jet r = Jet::zero(s);
  const double inv = 1.0 / a[0];
  r[0] = inv;
  for (int n = 1; n <= s; ++n) {
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) sum += a[j] * r[n - j];
    r[n] = -sum * inv;
  }
  return r;
}

namespace {

void sincos_jet(const Jet& a, Jet& sn, Jet& cs) {
  const int s = a.order();
  sn = Jet::zero(s);
  cs = Jet::zero(s);
  sn[0] = std::sin(a[0]);
  cs[0] = std::cos(a[0]);
  for (int n = 1; n <= s; ++n) {
    double ssum = 0.0;
    double csum = 0.0;
    for (int j = 1; j <= n; ++j) {
      ssum += j * a[j] * cs[n - j];
      csum += j * a[j] * sn[n - j];
    }
    sn[n] = ssum / n;
    cs[n] = -csum / n;
  }
}

}  // namespace

Jet sin(const Jet& a) {
  Jet sn;
  Jet cs;
  sincos_jet(a, sn, cs);
  return sn;
}

Jet cos(const Jet& a) {
  Jet sn;
  Jet cs;
  sincos_jet(a, sn, cs);
  return cs;
}

Jet sqr(const Jet& a) { return a * a; }

Jet pow(const Jet& a, int exponent) {
  if (exponent < 0) return recip(pow(a, -exponent));
  Jet result = Jet::constant(1.0, a.order());
  Jet base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::vector<double> derivatives(const JetFunction& f, double x, int order) {
  return f(Jet::variable(x, order)).derivatives();
}

}  // namespace oscint
