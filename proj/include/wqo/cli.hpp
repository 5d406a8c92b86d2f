#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqo::cli {

/// Runs the command line; returns the process exit status.
/// compare: 0 related, 1 unrelated, 2 error.
/// whistle: 0 whistled, 1 stream exhausted, 2 error.
/// census, bench: 0 ok, 1 audit failure, 2 error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wqo::cli
