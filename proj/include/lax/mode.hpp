#pragma once

#include <string>

namespace lax {

enum class Mode { Rational, Trig };

inline std::string to_string(Mode m) { return m == Mode::Rational ? "rational" : "trig"; }

}  // namespace lax
