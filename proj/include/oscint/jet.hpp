#pragma once

/**
 * @file jet.hpp
 * @brief Truncated Taylor series ("jets") of fixed, runtime-selected order.
 *
 * A jet of order s at x0 stores c[l] = f^(l)(x0) / l! for l = 0..s.
 * Arithmetic on jets propagates these coefficients exactly (up to rounding),
 * so composing elementary operations on Jet::variable(x0, s) yields every
 * derivative of the composition at x0 up to order s.
 *
 * Storage is inline (no heap), which keeps dense-grid norm estimation cheap.
 */

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace oscint {

inline constexpr int kMaxJetOrder = 15;

class Jet {
 public:
  Jet() = default;

  /// Constant jet of the given order.
  Jet(int order, double value);

  /// The identity map at x0: (x0, 1, 0, ..., 0).
  static Jet variable(double x0, int order);
  static Jet constant(double c, int order) { return Jet(order, c); }
  static Jet from_coeffs(std::span<const double> coeffs);
  static Jet zero(int order) { return Jet(order, 0.0); }

  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }

  /// Taylor coefficient f^(l)(x0)/l!.
  double operator[](int l) const noexcept { return c_[static_cast<std::size_t>(l)]; }
  double& operator[](int l) noexcept { return c_[static_cast<std::size_t>(l)]; }

  std::span<const double> coeffs() const noexcept {
    return {c_.data(), static_cast<std::size_t>(order_) + 1};
  }

  /// f^(l)(x0) = l! * c[l].
  double derivative(int l) const;

  /// (f(x0), f'(x0), ..., f^(order)(x0)).
  std::vector<double> derivatives() const;

  bool is_finite() const noexcept;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Jet& other);
  Jet& operator+=(double c) noexcept;
  Jet& operator-=(double c) noexcept;
  Jet& operator*=(double c) noexcept;

 private:
  int order_ = 0;
  std::array<double, kMaxJetOrder + 1> c_{};
};

Jet operator-(Jet a);
Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double c);
Jet operator+(double c, Jet a);
Jet operator-(Jet a, double c);
Jet operator-(double c, const Jet& a);
Jet operator*(Jet a, double c);
Jet operator*(double c, Jet a);
Jet operator/(Jet a, double c);
Jet operator/(double c, const Jet& a);

/// exp of a jet. Throws OverflowError if a coefficient is not finite.
Jet exp(const Jet& a);

/// 1/a. Throws DomainError when the constant term is zero.
Jet recip(const Jet& a);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sqr(const Jet& a);
Jet pow(const Jet& a, int exponent);

/// A map that can be evaluated on jets, hence differentiated to any order.
using JetFunction = std::function<Jet(const Jet&)>;

/// (f(x), f'(x), ..., f^(order)(x)) via one jet evaluation.
std::vector<double> derivatives(const JetFunction& f, double x, int order);

}  // namespace oscint
