#include "latt/grid.hpp"

#include "latt/canonical.hpp"
#include "latt/predicates.hpp"

#include <algorithm>
#include <map>

namespace latt {

LatticeDiagram chain(int k) {
  if (k < 1) throw LatticeError("chain size must be positive");
  LatticeDiagram d;
  d.n = k;
  d.up.resize(k);
  d.down.resize(k);
  for (int i = 0; i + 1 < k; ++i) {
    d.up[i] = {i + 1};
    d.down[i + 1] = {i};
  }
  return d;
}

LatticeDiagram product_of_chains(int m, int n) {
  if (m < 1 || n < 1) throw LatticeError("chain sizes must be positive");
  LatticeDiagram d;
  d.n = m * n;
  d.up.resize(d.n);
  d.down.resize(d.n);
  d.labels.resize(d.n);
  auto id = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      d.labels[id(i, j)] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i + 1 < m) d.up[id(i, j)].push_back(id(i + 1, j));
      if (j + 1 < n) d.up[id(i, j)].push_back(id(i, j + 1));
      // lower covers left to right: <i,j-1> lies down-left, <i-1,j> down-right
      if (j > 0) d.down[id(i, j)].push_back(id(i, j - 1));
      if (i > 0) d.down[id(i, j)].push_back(id(i - 1, j));
    }
  return d;
}

LatticeDiagram remove_element(const Lattice& L, Elem x) {
  L.check_elem(x);
  if (x == L.bottom() || x == L.top()) throw LatticeError("would remove 0 or 1");
  if (!L.doubly_irreducible(x)) throw LatticeError("element not doubly irreducible");
  const Elem l = L.down(x)[0], u = L.up(x)[0];

  LatticeDiagram d = L.diagram();
  // Does some other element witness l < u?
  bool witnessed = false;
  for (Elem z = 0; z < L.size(); ++z)
    if (z != x && z != l && z != u && L.leq(l, z) && L.leq(z, u)) witnessed = true;

  auto& lu = d.up[l];
  auto it = std::find(lu.begin(), lu.end(), x);
  if (witnessed)
    lu.erase(it);
  else
    *it = u;
  auto& ud = d.down[u];
  auto jt = std::find(ud.begin(), ud.end(), x);
  if (witnessed)
    ud.erase(jt);
  else
    *jt = l;

  // Compress ids.
  LatticeDiagram out;
  out.n = d.n - 1;
  out.up.resize(out.n);
  out.down.resize(out.n);
  if (!d.labels.empty()) out.labels.resize(out.n);
  auto remap = [x](Elem e) { return e < x ? e : e - 1; };
  for (Elem e = 0; e < d.n; ++e) {
    if (e == x) continue;
    for (Elem y : d.up[e]) out.up[remap(e)].push_back(remap(y));
    for (Elem y : d.down[e]) out.down[remap(e)].push_back(remap(y));
    if (!d.labels.empty()) out.labels[remap(e)] = d.labels[e];
  }
  return out;
}

std::vector<Elem> removable_boundary_elements(const Lattice& L, Side side) {
  auto chain = side == Side::Left ? L.left_boundary() : L.right_boundary();
  std::vector<Elem> out;
  for (Elem x : chain)
    if (x != L.bottom() && x != L.top() && L.doubly_irreducible(x))
      out.push_back(x);
  return out;
}

LatticeDiagram remove_corner(const Lattice& L, Side side, int steps) {
  LatticeDiagram d = L.diagram();
  for (int s = 0; s < steps; ++s) {
    Lattice cur(d, trusted);
    auto cand = removable_boundary_elements(cur, side);
    if (cand.empty()) throw LatticeError("no doubly irreducible boundary element");
    Elem pick = cand[0];
    for (Elem x : cand)
      if (cur.height(x) > cur.height(pick)) pick = x;
    d = remove_element(cur, pick);
  }
  return d;
}

namespace {

// Grid-id bookkeeping while removing elements from a (copy of a) grid.
struct GridState {
  LatticeDiagram d;
  std::vector<Elem> gridId;  // current id -> pristine grid id

  explicit GridState(const LatticeDiagram& grid) : d(grid) {
    gridId.resize(d.n);
    for (Elem i = 0; i < d.n; ++i) gridId[i] = i;
  }
  void remove(const Lattice& L, Elem x) {
    d = remove_element(L, x);
    gridId.erase(gridId.begin() + x);
  }
};

}  // namespace

GridDecomposition recognize_grid_minus_corners(const Lattice& L) {
  if (!is_distributive(L)) throw LatticeError("not distributive");

  // Join-irreducibles split into the chains they form along the two
  // boundaries; they index the minimal bounding grid.
  std::vector<Elem> P, Q;
  {
    auto lb = L.left_boundary();
    std::vector<char> onLeft(L.size(), 0);
    for (Elem x : lb) onLeft[x] = 1;
    for (Elem x = 0; x < L.size(); ++x) {
      if (!L.join_irreducible(x)) continue;
      if (onLeft[x])
        P.push_back(x);
      else
        Q.push_back(x);
    }
    auto byHeight = [&](Elem a, Elem b) { return L.height(a) < L.height(b); };
    std::sort(P.begin(), P.end(), byHeight);
    std::sort(Q.begin(), Q.end(), byHeight);
    for (size_t i = 0; i + 1 < Q.size(); ++i)
      if (!L.leq(Q[i], Q[i + 1]))
        throw LatticeError("no decomposition found: join-irreducibles not two chains");
  }

  const int p = (int)P.size(), q = (int)Q.size();
  GridDecomposition g;
  g.m = p + 1;
  g.n = q + 1;
  auto gid = [&](int i, int j) { return i * g.n + j; };

  // Embed L into the grid and mark the image.
  std::vector<Elem> coordOf(L.size());
  std::map<Elem, Elem> preimage;  // grid id -> L element
  for (Elem x = 0; x < L.size(); ++x) {
    int ci = 0, cj = 0;
    for (int i = 0; i < p; ++i)
      if (L.leq(P[i], x)) ++ci;
    for (int j = 0; j < q; ++j)
      if (L.leq(Q[j], x)) ++cj;
    coordOf[x] = gid(ci, cj);
    if (preimage.count(coordOf[x]))
      throw LatticeError("no decomposition found: embedding not injective");
    preimage[coordOf[x]] = x;
  }

  // Strip non-image elements from the boundaries, left first.
  LatticeDiagram grid = product_of_chains(g.m, g.n);
  GridState st(grid);
  std::vector<char> inImage(grid.n, 0);
  for (Elem x = 0; x < L.size(); ++x) inImage[coordOf[x]] = 1;

  bool progress = true;
  while ((int)st.d.n > L.size() && progress) {
    progress = false;
    for (Side side : {Side::Left, Side::Right}) {
      for (;;) {
        Lattice cur(st.d, trusted);
        auto cand = removable_boundary_elements(cur, side);
        Elem pick = kNone;
        for (Elem x : cand)
          if (!inImage[st.gridId[x]] &&
              (pick == kNone || cur.height(x) > cur.height(pick)))
            pick = x;
        if (pick == kNone) break;
        (side == Side::Left ? g.leftCornerTrace : g.rightCornerTrace)
            .push_back(st.gridId[pick]);
        st.remove(cur, pick);
        progress = true;
      }
    }
  }
  if ((int)st.d.n != L.size())
    throw LemmaViolation("no decomposition found on distributive input");

  // Witness and final verification against the input.
  g.witness.resize(st.d.n);
  for (Elem i = 0; i < st.d.n; ++i) g.witness[i] = preimage.at(st.gridId[i]);
  Lattice replayed(st.d, trusted);
  for (Elem i = 0; i < st.d.n; ++i)
    for (Elem j = 0; j < st.d.n; ++j)
      if (replayed.leq(i, j) != L.leq(g.witness[i], g.witness[j]))
        throw LemmaViolation("decomposition witness is not an isomorphism");
  LatticeDiagram rep = replay_decomposition(g);
  if (rep.up != st.d.up || rep.down != st.d.down)
    throw LemmaViolation("decomposition replay mismatch");
  return g;
}

LatticeDiagram replay_decomposition(const GridDecomposition& g) {
  GridState st(product_of_chains(g.m, g.n));
  for (Side side : {Side::Left, Side::Right}) {
    const auto& trace = side == Side::Left ? g.leftCornerTrace : g.rightCornerTrace;
    for (Elem target : trace) {
      Lattice cur(st.d, trusted);
      Elem x = kNone;
      for (Elem i = 0; i < (int)st.gridId.size(); ++i)
        if (st.gridId[i] == target) x = i;
      if (x == kNone) throw LatticeError("replay: unknown grid element");
      auto cand = removable_boundary_elements(cur, side);
      if (std::find(cand.begin(), cand.end(), x) == cand.end())
        throw LatticeError("replay: element not doubly irreducible on boundary");
      st.remove(cur, x);
    }
  }
  return st.d;
}

}  // namespace latt
