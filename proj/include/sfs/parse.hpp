#pragma once

#include <string_view>
#include <variant>

#include "sfs/pretzel.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

using ParsedInput = std::variant<SeifertData, OddPretzel>;

/// "SFS(g=<int>; e=<int>; r1, ..., rk)" or "P(c1, ..., ck)", whitespace-insensitive.
/// Throws ParseError with a 0-based offset; zero fibers and even strands are rejected.
ParsedInput parse_input(std::string_view text);

SeifertData parse_seifert(std::string_view text);
OddPretzel parse_pretzel(std::string_view text);

}  // namespace sfs
