#pragma once

#include <ostream>

namespace cyclo {

/// Entry point of the `cyclo` tool. Exit status: 0 ran and passed (or a
/// decision was rendered), 1 checks failed, 2 usage error, 3 budget
/// exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo
