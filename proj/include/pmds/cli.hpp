#pragma once

#include <iosfwd>
#include <string>

#include "pmds/graph.hpp"

namespace pmds::cli {

/// Entry point of the `pmds` tool. Data goes to `out`, diagnostics to `err`.
/// Returns the process exit code (0 iff nothing was written to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Loads `--in`: an edge-list path, or a synthetic graph spec
///   gen:gnp:<n>:<q>        Erdős–Rényi G(n, q)
///   gen:gnm:<n>:<m>        Erdős–Rényi G(n, m)
///   gen:powerlaw:<n>:<q>   Chung–Lu power law with mean pair probability q
/// drawn with `seed`.
Graph load_input(const std::string& input, unsigned long long seed);

}  // namespace pmds::cli
