#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "monoflat/circuit.hpp"

namespace monoflat {

/// Parse failure in a netlist or TM description; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented netlist:
//   input NAME | const NAME (0|1) | and NAME A B | or NAME A B | not NAME A | output NAME
// Definitions must appear in topological order; `#` starts a comment.
Circuit parse_netlist(std::string_view text);
Circuit read_netlist_file(const std::string& path);

/// Canonical text: gate definitions in order, then output lines; single
/// spaces, LF-terminated.
std::string emit_netlist(const Circuit& c);

/// Graphviz digraph, one node per gate and one edge per operand. Output
/// gates are drawn with a double border.
std::string emit_dot(const Circuit& c);

}  // namespace monoflat
