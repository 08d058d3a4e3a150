#pragma once

#include <ostream>

namespace rpv::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 internal error.
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rpv::cli
