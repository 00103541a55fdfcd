#pragma once

/// @file cli.hpp
/// The qbraid command line, callable in-process.
///
/// Exit codes: 0 all requested checks passed, 1 a mathematical check failed,
/// 2 usage or fixture format error.

#include <ostream>

namespace qbraid {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbraid
