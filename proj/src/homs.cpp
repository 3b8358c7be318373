#include "latt/homs.hpp"

#include "latt/predicates.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace latt {

LatticeMap::LatticeMap(Lattice source, Lattice target, std::vector<Elem> table)
    : src_(std::move(source)), tgt_(std::move(target)), table_(std::move(table)) {
  if ((int)table_.size() != src_.size()) throw LatticeError("mismatched diagrams");
  for (Elem y : table_)
    if (y < 0 || y >= tgt_.size()) throw LatticeError("mismatched diagrams");

  std::vector<char> hit(tgt_.size(), 0);
  for (Elem y : table_) hit[y] = 1;
  surjective_ = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });

  joinPreserving_ = true;
  for (Elem x = 0; x < src_.size() && joinPreserving_; ++x)
    for (Elem y = x + 1; y < src_.size(); ++y)
      if (table_[src_.join(x, y)] != tgt_.join(table_[x], table_[y])) {
        joinPreserving_ = false;
        break;
      }

  coverPreserving_ = joinPreserving_;
  for (Elem x = 0; x < src_.size() && coverPreserving_; ++x)
    for (Elem y : src_.up(x)) {
      Elem fx = table_[x], fy = table_[y];
      if (fx != fy && !tgt_.covers(fx, fy)) {
        coverPreserving_ = false;
        break;
      }
    }
}

std::vector<Elem> LatticeMap::fiber(Elem y) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < src_.size(); ++x)
    if (table_[x] == y) out.push_back(x);
  return out;
}

std::vector<std::vector<Elem>> LatticeMap::kernel_classes() const {
  std::map<Elem, std::vector<Elem>> by;
  for (Elem x = 0; x < src_.size(); ++x) by[table_[x]].push_back(x);
  std::vector<std::vector<Elem>> out;
  for (auto& [k, v] : by) out.push_back(v);
  return out;
}

bool is_join_homomorphism(const LatticeMap& f) { return f.join_preserving(); }

bool is_cover_preserving(const LatticeMap& f) {
  if (!f.join_preserving()) throw LatticeError("not a join-homomorphism");
  return f.cover_preserving();
}

std::pair<Elem, Elem> lift_cover(const LatticeMap& f, Elem x, Elem y) {
  if (!f.join_preserving() || !f.cover_preserving())
    throw LatticeError("not a cover-preserving join-homomorphism");
  const Lattice& S = f.source();
  const Lattice& T = f.target();
  if (!T.covers(x, y)) throw LatticeError("not a cover in target");
  auto fx = f.fiber(x), fy = f.fiber(y);
  if (fx.empty() || fy.empty()) throw LatticeError("cover not in image");

  // The fiber over x is join-closed; its join is its largest element.
  Elem a = fx[0];
  for (Elem e : fx) a = S.join(a, e);
  if (f(a) != x) throw LemmaViolation("fiber not join-closed");

  // a join any fiber-of-y element lands in fiber(y) above a, so candidates
  // exist; take a minimal one.
  std::vector<Elem> cand;
  for (Elem e : fy)
    if (S.leq(a, e)) cand.push_back(e);
  if (cand.empty()) throw LemmaViolation("cover lift has no candidate");
  Elem b = cand[0];
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem e : cand)
      if (e != b && S.leq(e, b)) {
        b = e;
        changed = true;
      }
  }
  if (!S.covers(a, b)) throw LemmaViolation("lifted pair is not a cover");
  return {a, b};
}

std::vector<LatticeMap> enumerate_join_surjections(const Lattice& src,
                                                   const Lattice& tgt,
                                                   uint64_t nodeBudget) {
  std::vector<Elem> ji;
  for (Elem x = 0; x < src.size(); ++x)
    if (x != src.bottom() && src.join_irreducible(x)) ji.push_back(x);
  std::sort(ji.begin(), ji.end(),
            [&](Elem a, Elem b) { return src.height(a) < src.height(b); });

  std::vector<LatticeMap> out;
  std::vector<Elem> assign(ji.size(), kNone);
  uint64_t nodes = 0;

  // f(x) = join of the images of the join-irreducibles below x.
  auto extend = [&]() -> std::vector<Elem> {
    std::vector<Elem> table(src.size());
    for (Elem x = 0; x < src.size(); ++x) {
      Elem v = tgt.bottom();
      for (size_t k = 0; k < ji.size(); ++k)
        if (src.leq(ji[k], x)) v = tgt.join(v, assign[k]);
      table[x] = v;
    }
    return table;
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (++nodes > nodeBudget) throw LatticeError("search too large");
    if (k == ji.size()) {
      auto table = extend();
      // the formula must reproduce the assignment, else no join-hom exists
      for (size_t t = 0; t < ji.size(); ++t)
        if (table[ji[t]] != assign[t]) return;
      LatticeMap f(src, tgt, table);
      if (f.join_preserving() && f.surjective()) out.push_back(std::move(f));
      return;
    }
    for (Elem cand = 0; cand < tgt.size(); ++cand) {
      bool okmono = true;
      for (size_t t = 0; t < k && okmono; ++t) {
        if (src.leq(ji[t], ji[k]) && !tgt.leq(assign[t], cand)) okmono = false;
        if (src.leq(ji[k], ji[t]) && !tgt.leq(cand, assign[t])) okmono = false;
      }
      if (!okmono) continue;
      assign[k] = cand;
      rec(k + 1);
      assign[k] = kNone;
    }
  };
  rec(0);
  return out;
}

bool quotient_semimodularity_check(const LatticeMap& f) {
  if (!f.surjective() || !f.join_preserving() || !f.cover_preserving())
    throw LatticeError("not a surjective cover-preserving join-homomorphism");
  if (!is_semimodular(f.source())) throw LatticeError("source not semimodular");
  return is_semimodular(f.target());
}

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (f.target().size() != g.source().size())
    throw LatticeError("mismatched diagrams");
  std::vector<Elem> table(f.source().size());
  for (Elem x = 0; x < f.source().size(); ++x) table[x] = g(f(x));
  return LatticeMap(f.source(), g.target(), std::move(table));
}

std::pair<int, std::vector<std::vector<Elem>>> quotient_by_kernel(
    const Lattice& src, const std::vector<Elem>& table) {
  // class ids ordered by image id
  std::vector<Elem> images(table);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  auto classOf = [&](Elem x) {
    return (int)(std::lower_bound(images.begin(), images.end(), table[x]) -
                 images.begin());
  };
  const int m = (int)images.size();
  std::vector<Elem> rep(m, kNone);
  for (Elem x = 0; x < src.size(); ++x)
    if (rep[classOf(x)] == kNone) rep[classOf(x)] = x;

  // [x] <= [y]  iff  x|y ~ y  (well-defined for join-congruence kernels)
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i][j] = table[src.join(rep[i], rep[j])] == table[rep[j]];

  std::vector<std::vector<Elem>> up(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) up[i].push_back(j);
    }
  return {m, std::move(up)};
}

}  // namespace latt
