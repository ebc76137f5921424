#pragma once

#include <iosfwd>

namespace qline::analysis {

/// Exit codes: 0 success, 1 usage error, 2 bad config or failed run.
/// Report files are written only after every result has been computed.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qline::analysis
