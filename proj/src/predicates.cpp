#include "latt/predicates.hpp"

namespace latt {

bool is_semimodular(const Lattice& L) {
  for (Elem o = 0; o < L.size(); ++o) {
    auto ups = L.up(o);
    for (size_t i = 0; i < ups.size(); ++i)
      for (size_t j = i + 1; j < ups.size(); ++j) {
        Elem a = ups[i], b = ups[j];
        Elem s = L.join(a, b);
        if (!L.covers(a, s) || !L.covers(b, s)) return false;
      }
  }
  return true;
}

bool has_n5_sublattice(const Lattice& L) {
  const int n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (b == c || !L.leq(b, c)) continue;  // need b < c
        if (L.leq(a, b) || L.leq(b, a) || L.leq(a, c) || L.leq(c, a)) continue;
        if (L.meet(a, b) == L.meet(a, c) && L.join(a, b) == L.join(a, c))
          return true;
      }
  return false;
}

bool has_m3_sublattice(const Lattice& L) {
  const int n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (L.leq(a, b) || L.leq(b, a)) continue;
      Elem o = L.meet(a, b), i = L.join(a, b);
      for (Elem c = b + 1; c < n; ++c) {
        if (L.leq(a, c) || L.leq(c, a) || L.leq(b, c) || L.leq(c, b)) continue;
        if (L.meet(a, c) == o && L.meet(b, c) == o && L.join(a, c) == i &&
            L.join(b, c) == i)
          return true;
      }
    }
  return false;
}

bool is_modular(const Lattice& L) { return !has_n5_sublattice(L); }

bool is_distributive(const Lattice& L) {
  return !has_n5_sublattice(L) && !has_m3_sublattice(L);
}

bool is_modular_by_identity(const Lattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (!L.leq(x, z)) continue;
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return false;
      }
  return true;
}

bool is_distributive_by_identity(const Lattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

}  // namespace latt
