#include "latt/cells.hpp"

#include <algorithm>
#include <set>

namespace latt {

std::vector<Elem> Cell::elements() const {
  std::vector<Elem> e(leftChain);
  e.insert(e.end(), rightChain.begin() + 1, rightChain.end() - 1);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

std::vector<Cell> enumerate_cells(const Lattice& L) {
  std::vector<Cell> cells;
  const auto& faces = L.faces();
  for (int i = 0; i < (int)faces.size(); ++i) {
    if (i == L.outer_face()) continue;
    const auto& es = faces[i].edges;
    // Interior faces traverse clockwise: up the left chain, down the right.
    int minAt = -1;
    for (size_t j = 0; j < es.size(); ++j) {
      auto& in = es[(j + es.size() - 1) % es.size()];
      auto& out = es[j];
      if (!L.leq(in.first, in.second) && L.leq(out.first, out.second)) {
        if (minAt != -1) throw LemmaViolation("face with two local minima");
        minAt = (int)j;
      }
    }
    if (minAt < 0) throw LemmaViolation("face without a local minimum");
    Cell c;
    size_t j = minAt;
    c.bottom = es[j].first;
    c.leftChain.push_back(c.bottom);
    while (L.leq(es[j].first, es[j].second)) {
      c.leftChain.push_back(es[j].second);
      j = (j + 1) % es.size();
    }
    c.top = c.leftChain.back();
    c.rightChain.push_back(c.top);
    while (j != (size_t)minAt) {
      c.rightChain.push_back(es[j].second);
      j = (j + 1) % es.size();
    }
    std::reverse(c.rightChain.begin(), c.rightChain.end());
    if (c.rightChain.front() != c.bottom || c.rightChain.back() != c.top)
      throw LemmaViolation("face walk is not two chains");
    cells.push_back(std::move(c));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    return a.leftChain[1] < b.leftChain[1];
  });
  return cells;
}

bool is_4cell_lattice(const Lattice& L) {
  for (const Cell& c : enumerate_cells(L))
    if (!c.is_4cell()) return false;
  return true;
}

bool cell_criterion_semimodular(const Lattice& L) {
  if (!is_4cell_lattice(L)) throw LatticeError("not a 4-cell lattice");
  auto cells = enumerate_cells(L);
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j)
      if (cells[i].bottom == cells[j].bottom && cells[i].top != cells[j].top)
        return false;
  return true;
}

std::vector<UpperAdjacentPair> upper_adjacent_pairs(const Lattice& L) {
  auto cells = enumerate_cells(L);
  std::vector<UpperAdjacentPair> pairs;
  for (const Cell& A : cells) {
    if (!A.is_4cell()) continue;
    for (const Cell& B : cells) {
      if (!B.is_4cell() || A == B) continue;
      if (A.top != B.top) continue;
      if (A.right_atom() != B.left_atom()) continue;
      // Intersection must be exactly {top, u}.
      auto ea = A.elements(), eb = B.elements();
      std::vector<Elem> common;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(common));
      if (common.size() != 2) continue;
      UpperAdjacentPair p;
      p.A = A;
      p.B = B;
      p.top = A.top;
      p.u = A.right_atom();
      p.v = A.left_atom();
      p.w = B.right_atom();
      pairs.push_back(std::move(p));
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const UpperAdjacentPair& a, const UpperAdjacentPair& b) {
              if (a.top != b.top) return a.top < b.top;
              return a.u < b.u;
            });
  return pairs;
}

std::vector<UpperAdjacentPair> maximal_upper_adjacent_pairs(const Lattice& L) {
  auto pairs = upper_adjacent_pairs(L);
  std::vector<UpperAdjacentPair> out;
  for (const auto& p : pairs) {
    bool maximal = true;
    for (const auto& q : pairs)
      if (q.top != p.top && L.leq(p.top, q.top)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(p);
  }
  return out;
}

int count_pairs(const Lattice& L) { return (int)upper_adjacent_pairs(L).size(); }

}  // namespace latt
