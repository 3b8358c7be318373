// Chains, chain products with the standard grid embedding, corner removal,
// and the decomposition of a planar distributive lattice as a grid with a
// left and a right corner removed.
#pragma once

#include "latt/diagram.hpp"

namespace latt {

enum class Side { Left, Right };

// k-element chain 0 < 1 < ... < k-1.
LatticeDiagram chain(int k);

// C_m x C_n with element <i,j> at id i*n+j. The first coordinate is drawn
// to the left: up(<i,j>) = [<i+1,j>, <i,j+1>], so the left boundary climbs
// the i-axis first. Labels are "(i,j)".
LatticeDiagram product_of_chains(int m, int n);

// Removes a doubly irreducible element x (never the bottom or top) from a
// valid diagram, splicing the cover l < u through the gap when no other
// element witnesses l < u. Throws if x is not doubly irreducible.
LatticeDiagram remove_element(const Lattice& L, Elem x);

// Applies `steps` single-element corner removals on the given boundary.
// Each step removes the doubly irreducible element of maximal height on the
// current boundary chain (on a fresh grid this is <1_C, 0_D> resp. its
// mirror). Throws "no doubly irreducible boundary element" when stuck.
LatticeDiagram remove_corner(const Lattice& L, Side side, int steps);

// Doubly irreducible elements on the left/right boundary chain, excluding
// bottom and top.
std::vector<Elem> removable_boundary_elements(const Lattice& L, Side side);

struct GridDecomposition {
  int m = 0, n = 0;                  // chain sizes of the grid C_m x C_n
  std::vector<Elem> leftCornerTrace;  // removed elements, as pristine grid ids
  std::vector<Elem> rightCornerTrace;
  std::vector<Elem> witness;  // replayed-lattice element -> input element
};

// Decomposes a planar distributive lattice as a grid minus a left and a
// right corner. Throws "not distributive" otherwise, and the hard error
// "no decomposition found" if the extraction fails on distributive input.
GridDecomposition recognize_grid_minus_corners(const Lattice& L);

// Replays a decomposition from the pristine grid; verifies every removal is
// doubly irreducible on the recorded boundary at its step.
LatticeDiagram replay_decomposition(const GridDecomposition& g);

}  // namespace latt
