#pragma once

#include <string>

namespace bodysphere {

/// Shortest-form-independent, locale-independent rendering with 17 significant digits.
std::string format_double(double v);

}  // namespace bodysphere
