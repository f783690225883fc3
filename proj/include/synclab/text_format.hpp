#pragma once

#include <string>
#include <string_view>

#include "synclab/automaton.hpp"

namespace synclab {

/// Reads the line format
///
///     n <int>
///     gen <name> <img1> ... <imgn>
///
/// with 1-indexed images, whitespace separation, and `#` comment lines.
/// Blank lines are ignored. Generator order is preserved. Throws ParseError
/// with the offending line number.
Automaton parse_automaton(std::string_view text);

/// Inverse of parse_automaton.
std::string render_automaton(const Automaton& automaton);

}  // namespace synclab
