#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "largecover/instances.hpp"

namespace largecover {

// Set-system text: "p setsystem <n> <m> <s>" followed by m lines of 0-based
// element indices (an empty line is the empty set). Lines starting with 'c'
// are comments.
SetSystemInstance parse_set_system(std::istream& in);
SetSystemInstance parse_set_system(std::string_view text);
std::string serialize_set_system(const SetSystemInstance& inst);

// DIMACS-like graph: "p edge <n> <m>" then m lines "e <u> <v>", 1-based.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph(std::string_view text);
std::string serialize_graph(const SimpleGraph& g);

// "p linsat <rows> <cols> <t>", then one bitstring per column (character k is
// row k), one bitstring for b, then one line of column weights.
LinSatInstance parse_linsat(std::istream& in);
LinSatInstance parse_linsat(std::string_view text);
std::string serialize_linsat(const LinSatInstance& inst);

std::string read_file(const std::string& path);

}  // namespace largecover
