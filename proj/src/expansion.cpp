#include "latt/expansion.hpp"

#include "latt/canonical.hpp"
#include "latt/predicates.hpp"
#include "latt/slimming.hpp"

#include <algorithm>
#include <map>

namespace latt {

namespace {

std::map<std::pair<Elem, Elem>, Cell> cell_index(const Lattice& L) {
  std::map<std::pair<Elem, Elem>, Cell> idx;
  for (const Cell& c : enumerate_cells(L)) idx[{c.top, c.leftChain[1]}] = c;
  return idx;
}

bool pair_in(const Lattice& L, const UpperAdjacentPair& U) {
  for (const auto& p : upper_adjacent_pairs(L))
    if (p.top == U.top && p.u == U.u && p.A == U.A && p.B == U.B) return true;
  return false;
}

Bits to_bits(int n, const std::vector<Elem>& xs) {
  Bits b(n);
  for (Elem x : xs) b.set(x);
  return b;
}

}  // namespace

SideChains build_side_chains(const Lattice& L, const UpperAdjacentPair& U) {
  if (!pair_in(L, U)) throw LatticeError("pair not in lattice");
  auto cells = cell_index(L);
  SideChains s;
  for (bool left : {true, false}) {
    auto& chain = left ? s.c : s.d;
    auto& witnesses = left ? s.cellsC : s.cellsD;
    chain.push_back(U.top);
    for (;;) {
      Elem t = chain.back();
      if (t == L.top()) break;
      auto ups = L.up(t);
      Elem next = left ? ups.front() : ups.back();
      auto downs = L.down(next);
      int pos = -1;
      for (int i = 0; i < (int)downs.size(); ++i)
        if (downs[i] == t) pos = i;
      // the witnessing cell needs an element on the outer side of t
      int side = left ? pos - 1 : pos + 1;
      if (side < 0 || side >= (int)downs.size()) break;
      Elem x = downs[side];
      auto it = cells.find({next, left ? x : t});
      if (it == cells.end() || !it->second.is_4cell())
        throw LemmaViolation("side chain step without a 4-cell witness");
      chain.push_back(next);
      witnesses.push_back(it->second);
    }
  }
  return s;
}

Anchors compute_anchors(const Lattice& L, const UpperAdjacentPair& U,
                        const SideChains& chains) {
  for (const auto& v : upper_adjacent_pairs(L))
    if (v.top != U.top && L.leq(U.top, v.top))
      throw LatticeError("pair not maximal");
  Anchors a;
  a.cPlus = chains.c.back();
  a.dPlus = chains.d.back();
  for (Elem z : L.left_boundary())
    if (!L.leq(z, U.u)) {
      a.vPlus = z;
      break;
    }
  for (Elem z : L.right_boundary())
    if (!L.leq(z, U.u)) {
      a.wPlus = z;
      break;
    }
  if (a.vPlus == kNone || a.wPlus == kNone)
    throw LemmaViolation("boundary anchor does not exist");
  return a;
}

ExpansionContext decompose(const Lattice& L, const UpperAdjacentPair& U) {
  ExpansionContext ctx;
  ctx.U = U;
  ctx.chains = build_side_chains(L, U);
  ctx.anchors = compute_anchors(L, U, ctx.chains);
  const int n = L.size();
  const Elem c0 = U.top;

  ctx.T = L.above(c0);
  ctx.B = L.below(U.u);
  ctx.I = L.above(ctx.anchors.vPlus);
  ctx.I &= L.below(ctx.anchors.cPlus);
  ctx.J = L.above(ctx.anchors.wPlus);
  ctx.J &= L.below(ctx.anchors.dPlus);

  // The decomposition lemmas, verified element by element.
  Bits chainC = to_bits(n, ctx.chains.c), chainD = to_bits(n, ctx.chains.d);
  {
    Bits intC = L.above(c0);
    intC &= L.below(ctx.anchors.cPlus);
    if (!(intC == chainC)) throw LemmaViolation("left chain is not an interval");
    Bits intD = L.above(c0);
    intD &= L.below(ctx.anchors.dPlus);
    if (!(intD == chainD)) throw LemmaViolation("right chain is not an interval");
  }
  for (size_t i = 1; i < ctx.chains.c.size(); ++i)
    if (L.down(ctx.chains.c[i]).back() != ctx.chains.c[i - 1])
      throw LemmaViolation("predecessor not the rightmost lower cover on C");
  for (size_t i = 1; i < ctx.chains.d.size(); ++i)
    if (L.down(ctx.chains.d[i]).front() != ctx.chains.d[i - 1])
      throw LemmaViolation("predecessor not the leftmost lower cover on D");
  {
    Bits ij = ctx.I;
    ij &= ctx.J;
    Bits just0(n);
    just0.set(c0);
    if (!(ij == just0)) throw LemmaViolation("I and J overlap beyond the pair top");
  }
  {
    Bits all(n);
    for (Elem x = 0; x < n; ++x) all.set(x);
    Bits uni = ctx.T;
    uni |= ctx.B;
    uni |= ctx.I;
    uni |= ctx.J;
    if (!(uni == all)) throw LemmaViolation("T,B,I,J do not cover the lattice");
    if (ctx.B.intersects(ctx.I) || ctx.B.intersects(ctx.J) ||
        ctx.B.intersects(ctx.T))
      throw LemmaViolation("B meets another interval");
    Bits it = ctx.I;
    it &= ctx.T;
    if (!(it == chainC)) throw LemmaViolation("I and T meet beyond the left chain");
    Bits jt = ctx.J;
    jt &= ctx.T;
    if (!(jt == chainD)) throw LemmaViolation("J and T meet beyond the right chain");
  }

  ctx.B.for_each([&](Elem x) {
    for (Elem y : L.up(x)) {
      if (ctx.I.test(y)) ctx.bridgesI.push_back({x, y});
      if (ctx.J.test(y)) ctx.bridgesJ.push_back({x, y});
    }
  });
  return ctx;
}

namespace {

uint8_t gamma_of(Block b) {
  switch (b) {
    case Block::B: return 0;  // 0
    case Block::I: return 1;  // alpha
    case Block::J: return 2;  // beta
    case Block::T: return 3;  // 1
  }
  return 0;
}

// join in C2^2 with 0 < alpha,beta < 1
uint8_t gamma_join(uint8_t a, uint8_t b) {
  if (a == b) return a;
  if (a == 0) return b;
  if (b == 0) return a;
  return 3;
}

}  // namespace

ExpandedLattice one_step_expansion_at(const Lattice& L, const UpperAdjacentPair& U) {
  if (!is_slim(L) || !is_semimodular(L))
    throw LatticeError("input not slim semimodular");
  ExpansionContext ctx = decompose(L, U);
  const int n = L.size();

  // Element layout: B block, then I, J, T; inside a block by L id.
  std::vector<Elem> idOf[4];
  for (auto& v : idOf) v.assign(n, kNone);
  std::vector<Block> blockOf;
  std::vector<Elem> pre;
  auto add_block = [&](const Bits& set, Block b) {
    set.for_each([&](Elem x) {
      idOf[(int)b][x] = (Elem)pre.size();
      pre.push_back(x);
      blockOf.push_back(b);
    });
  };
  add_block(ctx.B, Block::B);
  add_block(ctx.I, Block::I);
  add_block(ctx.J, Block::J);
  add_block(ctx.T, Block::T);
  const int nn = (int)pre.size();

  Bits inC = to_bits(n, ctx.chains.c), inD = to_bits(n, ctx.chains.d);

  LatticeDiagram bd;
  bd.n = nn;
  bd.up.resize(nn);
  bd.down.resize(nn);
  bd.labels.resize(nn);
  static const char* blockName[4] = {"0", "a", "b", "1"};
  for (int e = 0; e < nn; ++e)
    bd.labels[e] = "<" + L.label(pre[e]) + "," + blockName[(int)blockOf[e]] + ">";

  for (int e = 0; e < nn; ++e) {
    Elem a = pre[e];
    switch (blockOf[e]) {
      case Block::B:
        for (Elem y : L.up(a)) {
          if (ctx.I.test(y)) bd.up[e].push_back(idOf[(int)Block::I][y]);
          if (ctx.B.test(y)) bd.up[e].push_back(idOf[(int)Block::B][y]);
          if (ctx.J.test(y)) bd.up[e].push_back(idOf[(int)Block::J][y]);
          if (!ctx.I.test(y) && !ctx.B.test(y) && !ctx.J.test(y))
            throw LemmaViolation("B element covered only inside T");
        }
        for (Elem z : L.down(a)) bd.down[e].push_back(idOf[(int)Block::B][z]);
        break;
      case Block::I:
        for (Elem y : L.up(a))
          if (ctx.I.test(y)) bd.up[e].push_back(idOf[(int)Block::I][y]);
          else if (!ctx.T.test(y))
            throw LemmaViolation("I element covered outside I and T");
        if (inC.test(a)) bd.up[e].push_back(idOf[(int)Block::T][a]);
        for (Elem z : L.down(a)) {
          if (ctx.I.test(z)) bd.down[e].push_back(idOf[(int)Block::I][z]);
          else if (ctx.B.test(z)) bd.down[e].push_back(idOf[(int)Block::B][z]);
          else throw LemmaViolation("I element covering outside I and B");
        }
        break;
      case Block::J:
        if (inD.test(a)) bd.up[e].push_back(idOf[(int)Block::T][a]);
        for (Elem y : L.up(a))
          if (ctx.J.test(y)) bd.up[e].push_back(idOf[(int)Block::J][y]);
          else if (!ctx.T.test(y))
            throw LemmaViolation("J element covered outside J and T");
        for (Elem z : L.down(a)) {
          if (ctx.J.test(z)) bd.down[e].push_back(idOf[(int)Block::J][z]);
          else if (ctx.B.test(z)) bd.down[e].push_back(idOf[(int)Block::B][z]);
          else throw LemmaViolation("J element covering outside J and B");
        }
        break;
      case Block::T:
        for (Elem y : L.up(a)) {
          if (!ctx.T.test(y)) throw LemmaViolation("T not up-closed");
          bd.up[e].push_back(idOf[(int)Block::T][y]);
        }
        if (inC.test(a)) bd.down[e].push_back(idOf[(int)Block::I][a]);
        for (Elem z : L.down(a))
          if (ctx.T.test(z)) bd.down[e].push_back(idOf[(int)Block::T][z]);
          else if (!ctx.I.test(z) && !ctx.J.test(z) && !ctx.B.test(z))
            throw LemmaViolation("T element covering outside the blocks");
        if (inD.test(a)) bd.down[e].push_back(idOf[(int)Block::J][a]);
        break;
    }
  }

  Lattice bar(bd);  // full validation: the planarity lemma for Lbar

  // Join-closure inside L x C2^2 and the two-clause cover characterization.
  std::vector<std::vector<Elem>> byPair((size_t)n * 4, std::vector<Elem>());
  for (int e = 0; e < nn; ++e)
    byPair[(size_t)pre[e] * 4 + gamma_of(blockOf[e])].push_back(e);
  auto lookup = [&](Elem a, uint8_t g) -> Elem {
    auto& v = byPair[(size_t)a * 4 + g];
    return v.empty() ? kNone : v[0];
  };
  for (int e = 0; e < nn; ++e)
    for (int f = 0; f < nn; ++f) {
      Elem ja = L.join(pre[e], pre[f]);
      uint8_t jg = gamma_join(gamma_of(blockOf[e]), gamma_of(blockOf[f]));
      Elem inside = lookup(ja, jg);
      if (inside == kNone)
        throw LemmaViolation("expanded set not join-closed in the product");
      if (bar.join(e, f) != inside)
        throw LemmaViolation("product join differs from expanded join");
    }
  auto gammaCovers = [](uint8_t x, uint8_t y) {
    return (x == 0 && (y == 1 || y == 2)) || ((x == 1 || x == 2) && y == 3);
  };
  for (int e = 0; e < nn; ++e)
    for (int f = 0; f < nn; ++f) {
      if (e == f) continue;
      Elem a = pre[e], b = pre[f];
      uint8_t ga = gamma_of(blockOf[e]), gb = gamma_of(blockOf[f]);
      bool productCover =
          (a == b && gammaCovers(ga, gb)) || (ga == gb && L.covers(a, b));
      bool bridge = ga == 0 && (gb == 1 || gb == 2) && L.covers(a, b);
      bool expected = productCover || bridge;
      if (bar.covers(e, f) != expected)
        throw LemmaViolation("cover characterization of the expansion fails");
    }

  LatticeMap proj(bar, L, pre);
  if (!proj.surjective() || !proj.join_preserving() || !proj.cover_preserving())
    throw LemmaViolation("projection is not a cover-preserving join-surjection");

  if (!is_slim(bar)) throw LemmaViolation("expansion not slim");
  if (!is_semimodular(bar)) throw LemmaViolation("expansion not semimodular");
  if (count_pairs(bar) != count_pairs(L) - 1)
    throw LemmaViolation("expansion does not drop exactly one pair");

  return ExpandedLattice{std::move(bar), std::move(blockOf), std::move(pre),
                         std::move(proj)};
}

ExpandedLattice one_step_expansion(const Lattice& L, size_t index) {
  if (upper_adjacent_pairs(L).empty()) throw LatticeError("already modular");
  auto maximal = maximal_upper_adjacent_pairs(L);
  return one_step_expansion_at(L, maximal[index % maximal.size()]);
}

FullExpansion full_expansion(const Lattice& L) {
  if (!is_slim(L) || !is_semimodular(L))
    throw LatticeError("input not slim semimodular");
  std::vector<ExpandedLattice> steps;
  Lattice cur = L;
  const int initialPairs = count_pairs(L);
  while (count_pairs(cur) > 0) {
    steps.push_back(one_step_expansion(cur));
    cur = steps.back().lattice;
    if ((int)steps.size() > initialPairs)
      throw LemmaViolation("expansion exceeded the initial pair count");
  }
  // phi: result -> L is the composition of the step projections.
  std::vector<Elem> table(cur.size());
  for (Elem x = 0; x < cur.size(); ++x) table[x] = x;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    for (auto& t : table) t = it->projection(t);
  LatticeMap phi(cur, L, table);
  if (!phi.surjective() || !phi.join_preserving() || !phi.cover_preserving())
    throw LemmaViolation("composed projection lost a property");
  if (!is_slim(cur) || !is_modular(cur) || !is_distributive(cur))
    throw LemmaViolation("expansion result not slim modular distributive");
  return FullExpansion{std::move(cur), std::move(phi), std::move(steps)};
}

std::vector<Fold> enumerate_inverse_expansions(const Lattice& M) {
  std::vector<Fold> folds;
  if (!is_slim(M) || !is_semimodular(M)) return folds;
  const int n = M.size();

  for (const Cell& F : enumerate_cells(M)) {
    if (!F.is_4cell()) continue;
    const Elem z = F.bottom, p = F.left_atom(), q = F.right_atom(), t = F.top;
    // the seam bottom is the image of <u,0>, whose only covers are the two
    // side copies of the pair top
    if (!(M.up(z).size() == 2 && M.up(z)[0] == p && M.up(z)[1] == q)) continue;

    // climb the merged chains; left side pairs (alpha copy, T copy)
    auto climb = [&](Elem start, bool leftSide,
                     std::vector<std::pair<Elem, Elem>>& pairs) -> bool {
      Elem pc = start, mc = t;
      for (;;) {
        auto ups = M.up(pc);
        if (ups.empty() || ups.size() > 2) return false;
        Elem vertical = leftSide ? ups.back() : ups.front();
        if (vertical != mc) return false;
        if (ups.size() == 1) return true;
        Elem pNext = leftSide ? ups.front() : ups.back();
        auto nups = M.up(pNext);
        if (nups.empty()) return false;
        Elem mNext = leftSide ? nups.back() : nups.front();
        if (!M.covers(mc, mNext)) return false;
        pairs.push_back({pNext, mNext});
        pc = pNext;
        mc = mNext;
      }
    };
    std::vector<std::pair<Elem, Elem>> pairsC, pairsD;
    if (!climb(p, true, pairsC) || !climb(q, false, pairsD)) continue;

    // class of every element; the triple {p,q,t} plus the chain pairs
    std::vector<int> cls(n, -1);
    std::vector<std::vector<Elem>> members;  // ordered: alpha, T, beta copies
    bool clash = false;
    auto put = [&](std::vector<Elem> mem) {
      for (Elem e : mem)
        if (cls[e] != -1) clash = true;
      if (clash) return;
      for (Elem e : mem) cls[e] = (int)members.size();
      members.push_back(std::move(mem));
    };
    put({p, t, q});
    for (auto& [x, m] : pairsC) put({x, m});
    for (auto& [y, m] : pairsD) put({m, y});
    if (clash) continue;
    for (Elem x = 0; x < n && !clash; ++x)
      if (cls[x] == -1) put({x});
    if (clash) continue;

    // folded ids ordered by smallest member id
    std::vector<int> order((size_t)members.size());
    for (size_t i = 0; i < members.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return *std::min_element(members[a].begin(), members[a].end()) <
             *std::min_element(members[b].begin(), members[b].end());
    });
    std::vector<int> newId(members.size());
    for (size_t i = 0; i < order.size(); ++i) newId[order[i]] = (int)i;

    Fold fold;
    fold.collapse.resize(n);
    for (Elem x = 0; x < n; ++x) fold.collapse[x] = newId[cls[x]];
    fold.folded.n = (int)members.size();
    fold.folded.up.resize(fold.folded.n);
    fold.folded.down.resize(fold.folded.n);
    for (size_t ci = 0; ci < members.size(); ++ci) {
      Elem fid = newId[ci];
      auto emit = [&](std::vector<Elem>& out, bool upward) {
        for (Elem m : members[ci])
          for (Elem y : (upward ? M.up(m) : M.down(m))) {
            Elem fy = newId[cls[y]];
            if (fy == fid) continue;
            if (std::find(out.begin(), out.end(), fy) == out.end())
              out.push_back(fy);
          }
      };
      emit(fold.folded.up[fid], true);
      emit(fold.folded.down[fid], false);
    }
    fold.pairTop = newId[cls[t]];
    fold.pairU = newId[cls[z]];

    // certify: the fold must re-expand to M
    try {
      Lattice folded(fold.folded);
      if (!is_slim(folded) || !is_semimodular(folded)) continue;
      auto maximal = maximal_upper_adjacent_pairs(folded);
      const UpperAdjacentPair* U = nullptr;
      for (auto& cand : maximal)
        if (cand.top == fold.pairTop && cand.u == fold.pairU) U = &cand;
      if (!U) continue;
      ExpandedLattice re = one_step_expansion_at(folded, *U);
      if (canonical_form(re.lattice) != canonical_form(M)) continue;
    } catch (const LatticeError&) {
      continue;
    }
    folds.push_back(std::move(fold));
  }
  return folds;
}

}  // namespace latt
