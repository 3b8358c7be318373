// Join-homomorphism machinery: predicates, the cover-lifting construction,
// quotient checks, and bounded exhaustive enumeration of surjective
// join-homomorphisms (driven by values on join-irreducibles).
#pragma once

#include "latt/diagram.hpp"

#include <cstdint>

namespace latt {

class LatticeMap {
 public:
  // Throws "mismatched diagrams" if the table is not total on the source
  // or maps outside the target.
  LatticeMap(Lattice source, Lattice target, std::vector<Elem> table);

  const Lattice& source() const { return src_; }
  const Lattice& target() const { return tgt_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  bool surjective() const { return surjective_; }
  bool join_preserving() const { return joinPreserving_; }
  bool cover_preserving() const { return coverPreserving_; }

  std::vector<Elem> fiber(Elem y) const;
  // Non-trivial and trivial kernel classes, grouped by image element id.
  std::vector<std::vector<Elem>> kernel_classes() const;

 private:
  Lattice src_, tgt_;
  std::vector<Elem> table_;
  bool surjective_ = false, joinPreserving_ = false, coverPreserving_ = false;
};

bool is_join_homomorphism(const LatticeMap& f);

// Pre: f is a join-homomorphism (throws "not a join-homomorphism").
bool is_cover_preserving(const LatticeMap& f);

// For a cover x < y in the target of a cover-preserving join-homomorphism,
// returns (a, b) with a the largest element of the fiber over x and b a
// minimal element of the fiber over y above a; a < b is a cover.
std::pair<Elem, Elem> lift_cover(const LatticeMap& f, Elem x, Elem y);

// All surjective join-homomorphisms source -> target, deterministic order.
// `nodeBudget` caps the backtracking tree; exceeding it throws
// "search too large".
std::vector<LatticeMap> enumerate_join_surjections(const Lattice& src,
                                                   const Lattice& tgt,
                                                   uint64_t nodeBudget = 50'000'000);

// Pre: f surjective cover-preserving join-homomorphism with semimodular
// source. Returns is_semimodular(target); false falsifies the quotient
// lemma and is treated as a hard diagnostic by the callers.
bool quotient_semimodularity_check(const LatticeMap& f);

// First apply f, then g.
LatticeMap compose(const LatticeMap& f, const LatticeMap& g);

// Cover lists of the quotient of src by the kernel of `table` (classes are
// fibers; order via [x] <= [y] iff x|y ~ y). Element i of the quotient is
// the class whose image id is the i-th smallest used image id.
std::pair<int, std::vector<std::vector<Elem>>> quotient_by_kernel(
    const Lattice& src, const std::vector<Elem>& table);

}  // namespace latt
