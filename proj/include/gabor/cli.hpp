#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gabor::cli {

/// Exit codes of gaborctl.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kSchemaError = 2,
  kPreconditionError = 3,
};

/// Runs gaborctl with argv-style arguments (program name excluded).
/// Reports go to out; one-line machine-parsable errors go to err as
/// "error kind=<Kind> message=<text>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gabor::cli
