#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fracdim::cli {

// Exit codes: 0 success, 1 failed verification, 2 usage or input error.
int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracdim::cli
