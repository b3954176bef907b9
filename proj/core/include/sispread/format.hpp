#pragma once

#include <string>

namespace sispread {

/// Shortest decimal form that parses back to exactly `x`.
std::string format_shortest(double x);

/// printf "%.<digits>g".
std::string format_sig(double x, int digits = 9);

}  // namespace sispread
