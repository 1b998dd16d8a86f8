#include "oscint/types.hpp"

#include <cmath>
#include <sstream>

#include "oscint/errors.hpp"

namespace oscint {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    std::ostringstream msg;
    msg << "invalid interval [" << a << ", " << b << "]";
    throw DomainError(msg.str());
  }
}

std::string_view to_string(Space space) { return space == Space::HS ? "hs" : "cs"; }

Space parse_space(std::string_view text) {
  if (text == "hs" || text == "HS") return Space::HS;
  if (text == "cs" || text == "CS") return Space::CS;
  throw DomainError("unknown space '" + std::string(text) + "' (expected hs or cs)");
}

}  // namespace oscint
