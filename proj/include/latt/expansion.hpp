// One-step expansion: for a maximal upper-adjacent pair U of a slim
// semimodular lattice L, the side chains C/D climbing from the pair's top,
// the boundary anchors v+/w+, the four intervals T = [c0,1], B = [0,u],
// I = [v+,c+], J = [w+,d+] covering L, and the expanded lattice
// Lbar = Tx{1} u Bx{0} u Ix{a} u Jx{b} inside L x C2^2, which projects back
// onto L cover-preservingly and has one fewer upper-adjacent pair.
#pragma once

#include "latt/cells.hpp"
#include "latt/diagram.hpp"
#include "latt/homs.hpp"

namespace latt {

struct SideChains {
  std::vector<Elem> c, d;            // c_0..c_k and d_0..d_l, c_0 = d_0 = 1_U
  std::vector<Cell> cellsC, cellsD;  // witnessing 4-cells, one per climb step
};

struct Anchors {
  Elem vPlus = kNone, wPlus = kNone, cPlus = kNone, dPlus = kNone;
};

struct ExpansionContext {
  UpperAdjacentPair U;
  SideChains chains;
  Anchors anchors;
  Bits T, B, I, J;  // element sets of the four intervals
  std::vector<std::pair<Elem, Elem>> bridgesI, bridgesJ;  // x < y, x in B
};

// gamma coordinates of the four blocks in C2^2: B=0, I=alpha, J=beta, T=1.
enum class Block : uint8_t { B = 0, I = 1, J = 2, T = 3 };

struct ExpandedLattice {
  Lattice lattice;              // Lbar with its constructed embedding
  std::vector<Block> blockOf;   // per Lbar element
  std::vector<Elem> preimage;   // per Lbar element, its L element
  LatticeMap projection;        // Lbar -> L, <a,gamma> -> a
};

// Chains per the side-chain definition; the chain extends by the leftmost
// (rightmost) upper cover exactly as long as the witnessing 4-cell to the
// side of the new edge exists. Throws "pair not in lattice".
SideChains build_side_chains(const Lattice& L, const UpperAdjacentPair& U);

// v+ = minimal left-boundary element not below u, w+ mirror, c+/d+ = chain
// tops. Throws "pair not maximal".
Anchors compute_anchors(const Lattice& L, const UpperAdjacentPair& U,
                        const SideChains& chains);

// Full context; every interval identity is verified and a violation throws
// LemmaViolation (it would falsify the decomposition lemma).
ExpansionContext decompose(const Lattice& L, const UpperAdjacentPair& U);

// Expansion at a chosen maximal pair, or at the first maximal pair in
// (top, u) order (`index` rotates that choice). Pre: slim, semimodular,
// non-modular; throws "already modular" when there is no pair.
ExpandedLattice one_step_expansion_at(const Lattice& L, const UpperAdjacentPair& U);
ExpandedLattice one_step_expansion(const Lattice& L, size_t index = 0);

struct FullExpansion {
  Lattice result;                      // planar distributive D
  LatticeMap phi;                      // D -> L, surjective cover-preserving
  std::vector<ExpandedLattice> steps;  // one per eliminated pair
};

// Iterates one-step expansions until no pair remains; the number of steps
// never exceeds the initial pair count and the result is slim, modular and
// distributive.
FullExpansion full_expansion(const Lattice& L);

// Inverse direction, used by the census: all ways to read M as the
// expansion of a smaller lattice. Each fold names the seam cell, carries
// the collapse table M -> folded, and is certified by re-expanding.
struct Fold {
  LatticeDiagram folded;
  std::vector<Elem> collapse;  // M element -> folded element
  Elem pairTop = kNone, pairU = kNone;  // the re-expanded pair, in folded ids
};
std::vector<Fold> enumerate_inverse_expansions(const Lattice& M);

}  // namespace latt
