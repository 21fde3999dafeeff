#pragma once

#include <iosfwd>

namespace ifam::cli {

/// Runs one subcommand. Returns the process exit code: 0 success, 1 a
/// verification failed, 2 usage or input error.
int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ifam::cli
