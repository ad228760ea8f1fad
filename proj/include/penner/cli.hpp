#pragma once

#include <string>
#include <vector>

namespace penner {

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
    std::string out;
    std::string err;
};

/// Runs one CLI invocation; args exclude the program name.
///
///   check                         Penner validation and bipartition
///   complex --cocore V --power M [--eval-n N]
///   paths   --cocore V --power M
///   matrix  --kind {signed,unsigned,weighted} [--n N] [--t T] [--power M]
///   entropy [--m-max M] [--tol E] [--t T ...] [--allow-non-penner]
///   verify  [--seed S] [--cases K]
///
/// Global flags: --spec FILE, --json.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace penner
