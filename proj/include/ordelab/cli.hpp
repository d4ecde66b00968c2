#pragma once

namespace ordelab {

// Exit codes: 0 on success, 1 for negative mathematical outcomes (no cone,
// no surjection, failed recurrence, inconsistent pipeline), 2 for usage and
// input errors.
int run_cli(int argc, const char* const* argv);

}  // namespace ordelab
