// Slimness and eyes. An eye is a middle atom of a covering M3 (three or
// more elements sharing both a lower cover o and an upper cover i); a
// covering M3 exists iff some (o, i) has at least three such common
// neighbors, since their pairwise joins and meets are forced to i and o.
#pragma once

#include "latt/cells.hpp"
#include "latt/diagram.hpp"

namespace latt {

struct EyeRecord {
  Elem removed = kNone;    // id of the eye in the input diagram
  Elem bottom = kNone;     // host cell frame, in result ids
  Elem top = kNone;
  Elem leftAtom = kNone;   // a, left of c
  Elem rightAtom = kNone;  // c
  int position = 0;        // index among the eyes sharing this cell
};

// (o, i, common cover-neighbors left to right) with at least 3 neighbors.
std::vector<std::tuple<Elem, Elem, std::vector<Elem>>> covering_m3s(const Lattice& L);

bool is_slim(const Lattice& L);

// Removes eyes (leftmost-bottom first) until slim. Records replay forward:
// applying add_eye(host, position) in record order rebuilds the input up to
// isomorphism.
std::pair<LatticeDiagram, std::vector<EyeRecord>> slim(const Lattice& L);

// Inserts a doubly irreducible element into the interior of a 4-cell at the
// given left-to-right position among the eyes already present between the
// cell's atoms. The new element gets id L.size().
LatticeDiagram add_eye(const Lattice& L, const Cell& cell, int position);

}  // namespace latt
