#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "projcoh/group.hpp"

namespace projcoh::cli {

/// Exit-code convention: mathematically false outcomes (a class that is not
/// trivial, inequivalent cocycles) exit 1 so shell pipelines can branch on
/// them; malformed input and usage errors exit 2.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// Group spec: `zn:<k>`, `znxzn:<k>`, `dihedral:<k>`, `q8`, `sym:<k>`, or
/// `@<path>` to a Cayley-table file. Throws ParseError naming the offending
/// token.
FiniteGroup parse_group_spec(const std::string& spec);

/// Full command dispatch (args exclude the program name). Streams receive
/// what stdout/stderr would.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projcoh::cli
