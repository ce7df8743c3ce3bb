#pragma once

namespace seaweed::cli {

// Parses argv and dispatches to a subcommand.  Exit codes: 0 on success,
// 2 on usage or validation problems, 3 when a mathematical cross-check
// disagrees (which a correct build never produces).
int run(int argc, char** argv);

}  // namespace seaweed::cli
