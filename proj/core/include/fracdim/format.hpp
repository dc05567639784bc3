#pragma once

#include <string>

namespace fracdim {

/// Decimal text of `value` with 17 significant digits ("%.17g"), which
/// round-trips every finite double. Non-finite values print as nan/inf/-inf.
std::string format_number(double value);

}  // namespace fracdim
