// Lattice text format and DOT export.
//
// The file format freezes the embedding: cover order is semantic, so
// parse/emit round-trips are bit-exact. Down lists are not serialized;
// they are derived from the up lists through the left-of order.
//
//   n=7
//   0: up=[1,2] label=0
//   1: up=[4,3] label=a1
//   ...
//
// Blank lines and lines starting with '#' are ignored on input.
#pragma once

#include "latt/diagram.hpp"

namespace latt {

class ParseError : public LatticeError {
 public:
  ParseError(int line, const std::string& what)
      : LatticeError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

LatticeDiagram parse_lattice(const std::string& text);
std::string emit_lattice(const LatticeDiagram& d);

// Layered drawing: one rank per height, elements ordered left to right by
// the embedding, with invisible ordering edges. Optional kernel classes are
// rendered as dashed groupings. Output is stable across runs.
std::string emit_dot(const Lattice& L,
                     const std::vector<std::vector<Elem>>* kernelClasses = nullptr);

}  // namespace latt
