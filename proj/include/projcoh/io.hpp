#pragma once

#include <iosfwd>
#include <string>

#include "projcoh/cochain.hpp"
#include "projcoh/group.hpp"

namespace projcoh {

/// Cayley-table text format: line 1 = n; then n lines of n space-separated
/// element indices. '#' starts a comment anywhere on a line; blank lines are
/// skipped. The parsed table goes through the full from_cayley_table validator.
FiniteGroup read_group(std::istream& in, const std::string& name = "fromfile");
void write_group(std::ostream& out, const FiniteGroup& g);

/// Cochain text format: line 1 = "degree modulus"; line 2 = group order n
/// (must match the group supplied alongside); then n^degree values in
/// lexicographic order, first argument most significant. Same comment rules.
Cochain read_cochain(std::istream& in, const FiniteGroup& g);
void write_cochain(std::ostream& out, const Cochain& c);

FiniteGroup read_group_file(const std::string& path, const std::string& name = "");
Cochain read_cochain_file(const std::string& path, const FiniteGroup& g);
void write_group_file(const std::string& path, const FiniteGroup& g);

}  // namespace projcoh
