// Cells of a planar diagram: interior faces read off the rotation system,
// each bounded by a left and a right chain with common endpoints and empty
// inside. 4-cells (covering squares drawn as faces) and pairs of them that
// share their top and one interior atom drive the whole expansion theory.
#pragma once

#include "latt/diagram.hpp"

namespace latt {

struct Cell {
  Elem bottom = kNone, top = kNone;
  std::vector<Elem> leftChain;   // bottom .. top inclusive
  std::vector<Elem> rightChain;  // bottom .. top inclusive

  bool is_4cell() const { return leftChain.size() == 3 && rightChain.size() == 3; }
  Elem left_atom() const { return leftChain[1]; }
  Elem right_atom() const { return rightChain[1]; }
  std::vector<Elem> elements() const;
  bool operator==(const Cell& o) const {
    return leftChain == o.leftChain && rightChain == o.rightChain;
  }
};

// A is the left cell, B the right one; they share top and the atom u
// (A's right atom == B's left atom), and nothing else.
struct UpperAdjacentPair {
  Cell A, B;
  Elem top = kNone;
  Elem u = kNone;  // shared interior atom
  Elem v = kNone;  // A's left-chain atom
  Elem w = kNone;  // B's right-chain atom
};

// All interior faces as cells, ordered by (bottom id, left atom id).
std::vector<Cell> enumerate_cells(const Lattice& L);

bool is_4cell_lattice(const Lattice& L);

// Pre: is_4cell_lattice. True iff any two cells with equal bottoms have
// equal tops; on 4-cell lattices this is equivalent to semimodularity.
bool cell_criterion_semimodular(const Lattice& L);

// Ordered by (top id, u id).
std::vector<UpperAdjacentPair> upper_adjacent_pairs(const Lattice& L);

// Pairs whose top is maximal among all pair tops in the lattice order.
std::vector<UpperAdjacentPair> maximal_upper_adjacent_pairs(const Lattice& L);

int count_pairs(const Lattice& L);

}  // namespace latt
