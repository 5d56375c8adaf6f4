#pragma once

// Stream operators so doctest can show values in failed checks.

#include <ostream>

#include "acell/cellalg.hpp"
#include "acell/laurent.hpp"
#include "acell/symfunc.hpp"

namespace acell {

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SchurExpansion& e) { return os << e.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CellElement& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GLWeight& w) { return os << w.to_string(); }

}  // namespace acell
