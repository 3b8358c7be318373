#include "latt/slimming.hpp"

#include <algorithm>
#include <tuple>

namespace latt {

std::vector<std::tuple<Elem, Elem, std::vector<Elem>>> covering_m3s(
    const Lattice& L) {
  std::vector<std::tuple<Elem, Elem, std::vector<Elem>>> out;
  for (Elem o = 0; o < L.size(); ++o) {
    // group upper covers of o by their single shared top candidate
    for (Elem i = 0; i < L.size(); ++i) {
      if (o == i) continue;
      std::vector<Elem> common;
      for (Elem x : L.up(o))
        if (L.covers(x, i)) common.push_back(x);
      if (common.size() >= 3) out.push_back({o, i, common});
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (L.height(std::get<0>(a)) != L.height(std::get<0>(b)))
      return L.height(std::get<0>(a)) < L.height(std::get<0>(b));
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  return out;
}

bool is_slim(const Lattice& L) { return covering_m3s(L).empty(); }

std::pair<LatticeDiagram, std::vector<EyeRecord>> slim(const Lattice& L) {
  auto m3s = covering_m3s(L);
  const LatticeDiagram& d = L.diagram();

  std::vector<char> dead(d.n, 0);
  struct Pending {
    Elem removed, bottom, top, leftAtom, rightAtom;
    int hBottom, position;
  };
  std::vector<Pending> pending;
  for (auto& [o, i, X] : m3s) {
    for (size_t j = 1; j + 1 < X.size(); ++j) {
      dead[X[j]] = 1;
      pending.push_back({X[j], o, i, X.front(), X.back(), L.height(o), (int)j - 1});
    }
  }
  // Eye removal never splices a new cover: the cell frame stays between o
  // and i, so rebuilding with dead elements dropped is exact.
  std::vector<Elem> remap(d.n, kNone);
  int next = 0;
  for (Elem x = 0; x < d.n; ++x)
    if (!dead[x]) remap[x] = next++;
  LatticeDiagram out;
  out.n = next;
  out.up.resize(next);
  out.down.resize(next);
  if (!d.labels.empty()) out.labels.resize(next);
  for (Elem x = 0; x < d.n; ++x) {
    if (dead[x]) continue;
    for (Elem y : d.up[x])
      if (!dead[y]) out.up[remap[x]].push_back(remap[y]);
    for (Elem y : d.down[x])
      if (!dead[y]) out.down[remap[x]].push_back(remap[y]);
    if (!d.labels.empty()) out.labels[remap[x]] = d.labels[x];
  }

  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.hBottom != b.hBottom) return a.hBottom < b.hBottom;
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    if (a.top != b.top) return a.top < b.top;
    return a.position < b.position;
  });
  std::vector<EyeRecord> records;
  for (auto& p : pending)
    records.push_back({p.removed, remap[p.bottom], remap[p.top], remap[p.leftAtom],
                       remap[p.rightAtom], p.position});
  return {std::move(out), std::move(records)};
}

LatticeDiagram add_eye(const Lattice& L, const Cell& cell, int position) {
  if (!cell.is_4cell()) throw LatticeError("not a 4-cell");
  const Elem o = cell.bottom, i = cell.top;
  const Elem a = cell.left_atom(), c = cell.right_atom();
  if (!L.covers(o, a) || !L.covers(o, c) || !L.covers(a, i) || !L.covers(c, i))
    throw LatticeError("not a 4-cell");

  const auto& uo = L.diagram().up[o];
  const auto& di = L.diagram().down[i];
  int pa = -1, pc = -1;
  for (int k = 0; k < (int)uo.size(); ++k) {
    if (uo[k] == a) pa = k;
    if (uo[k] == c) pc = k;
  }
  if (pa < 0 || pc < 0 || pa >= pc) throw LatticeError("not a 4-cell");
  // Everything currently between a and c must be an earlier eye.
  for (int k = pa + 1; k < pc; ++k) {
    Elem e = uo[k];
    if (!(L.down(e).size() == 1 && L.up(e).size() == 1 && L.up(e)[0] == i))
      throw LatticeError("not a 4-cell");
  }
  int eyes = pc - pa - 1;
  if (position < 0 || position > eyes) throw LatticeError("position out of range");

  int qa = -1;
  for (int k = 0; k < (int)di.size(); ++k)
    if (di[k] == a) qa = k;
  if (qa < 0) throw LatticeError("not a 4-cell");

  LatticeDiagram out = L.diagram();
  Elem b = out.n++;
  out.up.push_back({i});
  out.down.push_back({o});
  if (!out.labels.empty()) out.labels.push_back("");
  out.up[o].insert(out.up[o].begin() + pa + 1 + position, b);
  out.down[i].insert(out.down[i].begin() + qa + 1 + position, b);
  return out;
}

}  // namespace latt
