// Canonical forms. The lattice code identifies a diagram's underlying
// lattice up to isomorphism and ignores the embedding entirely; the
// embedding variant additionally freezes the left-to-right cover orders.
#pragma once

#include "latt/diagram.hpp"

#include <compare>

namespace latt {

struct CanonicalCode {
  std::vector<uint8_t> bytes;
  bool embedding = false;  // true for the embedding-preserving variant

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
};

// Iterated (height, degree) color refinement followed by a backtracking
// minimum-matrix search over color-respecting relabelings.
CanonicalCode canonical_form(const Lattice& L);

// Same code, computed from bare cover lists with no embedding or planarity
// requirement; used for quotients and for the exhaustive enumeration.
CanonicalCode canonical_code_abstract(int n, const std::vector<std::vector<Elem>>& up);

// BFS relabeling from the bottom along ordered up lists; equal codes iff
// there is an isomorphism preserving the embedding.
CanonicalCode canonical_form_embedding(const Lattice& L);

bool is_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace latt
