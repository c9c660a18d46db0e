#include "liecoh/rational.hpp"

#include <ostream>

namespace liecoh {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liecoh
