#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace hilbertia {

inline constexpr const char* kVersion = "0.1.0";

/// Set asynchronously (e.g. from a SIGINT handler); long enumerations stop
/// at the next candidate and report what they have.
std::atomic<bool>& interrupt_flag();

/// Runs one CLI invocation; args excludes the program name. Returns 0 on
/// success, 1 on a domain error, 2 on a usage error (diagnostics on err).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertia
