#pragma once

namespace ghc {

// Exit status: 0 success, 1 usage error, 2 invalid or ambiguous code book,
// 3 I/O failure, 4 malformed container.
int run_cli(int argc, const char* const* argv);

}  // namespace ghc
