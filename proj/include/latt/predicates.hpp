// Structural predicates on validated lattices. Modularity and
// distributivity come in two algebraically equivalent routes: forbidden
// sublattice search (primary) and the identity laws over all triples
// (cross-oracle); both are exposed so tests can compare them.
#pragma once

#include "latt/diagram.hpp"

namespace latt {

// True iff whenever a and b both cover o with a != b, the join a|b covers
// both; checked exhaustively over cover pairs.
bool is_semimodular(const Lattice& L);

// Absence of an N5 sublattice (pentagon), via the classic criterion:
// nonmodular iff there are a and b < c with a^b = a^c and a|b = a|c.
bool is_modular(const Lattice& L);

// No N5 and no M3 sublattice.
bool is_distributive(const Lattice& L);

bool has_n5_sublattice(const Lattice& L);
bool has_m3_sublattice(const Lattice& L);

// Identity-law formulations, O(n^3) over triples.
bool is_modular_by_identity(const Lattice& L);
bool is_distributive_by_identity(const Lattice& L);

}  // namespace latt
