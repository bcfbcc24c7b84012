#pragma once

#include <ostream>
#include <span>
#include <string>

namespace tdroute::cli {

/// Process exit codes. Every engine outcome maps to exactly one of these.
enum ExitCode : int {
  kOk = 0,
  kError = 1,  // usage, parse, or invalid-input errors
  kUnreachable = 2,
  kNonFifo = 3,
  kTruncated = 4,
};

/// Environment variable consulted for the horizon when --horizon is absent.
inline constexpr const char* kHorizonEnv = "TDROUTE_HORIZON";

/// Runs one command. `args` excludes the program name.
///
///   route       --graph G --source N [--target N] --t0 T --algo A
///               [--allow-wait] [--horizon T] [--max-states N]
///   check-fifo  --graph G [--edge ID]
///   expand      --graph G --source N --t0 T [--target N] [--allow-wait]
///               [--horizon T] [--max-states N] [--dot]
///   bench       --suite {random-fifo|pseudo-poly} [--sizes a,b,..] [--seed S]
///   export      [--name NAME]
///
/// G is a graph file path or the name of a built-in corpus instance.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tdroute::cli
