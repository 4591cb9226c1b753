#ifndef EXHAUSTION_CLI_HPP
#define EXHAUSTION_CLI_HPP

#include <ostream>

namespace exhaustion::cli {

/// Runs the `exhaust` command line. Exit codes: 0 converged/ok,
/// 2 non-converged estimate, 3 input or parse error, 4 non-finite
/// integrand sample. The EXH_THREADS environment variable caps engine
/// parallelism (unset or 0 keeps everything serial).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace exhaustion::cli

#endif
