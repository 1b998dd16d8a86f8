#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace oscint {

using Complex = std::complex<double>;
using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(double)>;

/// Closed bounded interval [a, b] with a < b.
class Interval {
 public:
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Function class the error is measured in: H^s (Sobolev) or C^s (sup-norm).
enum class Space { HS, CS };

std::string_view to_string(Space space);
Space parse_space(std::string_view text);

}  // namespace oscint
