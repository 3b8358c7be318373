#include "latt/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace latt {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

namespace {

// Cover structure stripped of any embedding.
struct CoverView {
  int n;
  std::vector<std::vector<Elem>> up, down;
  std::vector<int> height;
  std::vector<std::vector<char>> cov;  // cov[x][y]: x covered by y

  CoverView(int n_, const std::vector<std::vector<Elem>>& up_) : n(n_), up(up_) {
    down.resize(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y : up[x]) down[y].push_back(x);
    height.assign(n, -1);
    cov.assign(n, std::vector<char>(n, 0));
    for (Elem x = 0; x < n; ++x)
      for (Elem y : up[x]) cov[x][y] = 1;
    // longest-path heights over the cover DAG
    std::vector<int> indeg(n, 0);
    for (Elem x = 0; x < n; ++x) indeg[x] = (int)down[x].size();
    std::vector<Elem> order;
    for (Elem x = 0; x < n; ++x)
      if (!indeg[x]) {
        order.push_back(x);
        height[x] = 0;
      }
    for (size_t i = 0; i < order.size(); ++i)
      for (Elem y : up[order[i]]) {
        height[y] = std::max(height[y], height[order[i]] + 1);
        if (--indeg[y] == 0) order.push_back(y);
      }
  }
};

// Stable structural coloring: start from (height, updeg, downdeg), refine by
// neighbor color multisets until the partition stops splitting.
std::vector<int> refine_colors(const CoverView& v) {
  const int n = v.n;
  std::vector<int> color(n);
  {
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<std::tuple<int, int, int>> key(n);
    for (Elem x = 0; x < n; ++x)
      key[x] = {v.height[x], (int)v.up[x].size(), (int)v.down[x].size()};
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < (int)sorted.size(); ++i) ids[sorted[i]] = i;
    for (Elem x = 0; x < n; ++x) color[x] = ids[key[x]];
  }
  for (int round = 0; round < n; ++round) {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Key> key(n);
    for (Elem x = 0; x < n; ++x) {
      std::vector<int> uc, dc;
      for (Elem y : v.up[x]) uc.push_back(color[y]);
      for (Elem y : v.down[x]) dc.push_back(color[y]);
      std::sort(uc.begin(), uc.end());
      std::sort(dc.begin(), dc.end());
      key[x] = {color[x], std::move(uc), std::move(dc)};
    }
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<Key, int> ids;
    for (int i = 0; i < (int)sorted.size(); ++i) ids[sorted[i]] = i;
    std::vector<int> next(n);
    for (Elem x = 0; x < n; ++x) next[x] = ids[key[x]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct MinMatrixSearch {
  const CoverView& v;
  int n;
  std::vector<std::vector<Elem>> slots;  // candidate elements per position
  std::vector<Elem> placed;
  std::vector<char> used;
  std::vector<uint8_t> cur, best;
  bool haveBest = false;

  explicit MinMatrixSearch(const CoverView& view) : v(view), n(view.n) {
    auto color = refine_colors(v);
    std::vector<Elem> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i;
    std::stable_sort(elems.begin(), elems.end(),
                     [&](Elem a, Elem b) { return color[a] < color[b]; });
    slots.resize(n);
    for (int p = 0; p < n; ++p)
      for (Elem e : elems)
        if (color[e] == color[elems[p]]) slots[p].push_back(e);
    placed.assign(n, kNone);
    used.assign(n, 0);
  }

  uint8_t digit(Elem eq, Elem ep) const {
    if (v.cov[eq][ep]) return 1;
    if (v.cov[ep][eq]) return 2;
    return 0;
  }

  void rec(int p, bool strictlyLess) {
    if (p == n) {
      if (!haveBest || cur < best) {
        best = cur;
        haveBest = true;
      }
      return;
    }
    size_t base = cur.size();
    for (Elem e : slots[p]) {
      if (used[e]) continue;
      cur.resize(base);
      bool less = strictlyLess, prune = false;
      for (int q = 0; q < p; ++q) {
        uint8_t dg = digit(placed[q], e);
        cur.push_back(dg);
        if (!less && haveBest) {
          uint8_t bd = best[cur.size() - 1];
          if (dg > bd) {
            prune = true;
            break;
          }
          if (dg < bd) less = true;
        }
      }
      if (prune) continue;
      used[e] = 1;
      placed[p] = e;
      rec(p + 1, less);
      used[e] = 0;
      placed[p] = kNone;
    }
    cur.resize(base);
  }
};

}  // namespace

CanonicalCode canonical_code_abstract(int n,
                                      const std::vector<std::vector<Elem>>& up) {
  CoverView v(n, up);
  MinMatrixSearch s(v);
  s.rec(0, false);
  CanonicalCode c;
  c.bytes.push_back((uint8_t)(n & 0xff));
  c.bytes.push_back((uint8_t)((n >> 8) & 0xff));
  uint32_t acc = 0;
  int k = 0;
  for (uint8_t d : s.best) {
    acc = acc * 3 + d;
    if (++k == 5) {
      c.bytes.push_back((uint8_t)acc);
      acc = 0;
      k = 0;
    }
  }
  if (k) c.bytes.push_back((uint8_t)acc);
  return c;
}

CanonicalCode canonical_form(const Lattice& L) {
  return canonical_code_abstract(L.size(), L.diagram().up);
}

CanonicalCode canonical_form_embedding(const Lattice& L) {
  const int n = L.size();
  std::vector<int> id(n, -1);
  std::vector<Elem> order;
  order.push_back(L.bottom());
  id[L.bottom()] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (Elem y : L.up(order[i]))
      if (id[y] < 0) {
        id[y] = (int)order.size();
        order.push_back(y);
      }
  CanonicalCode c;
  c.embedding = true;
  c.bytes.push_back((uint8_t)(n & 0xff));
  c.bytes.push_back((uint8_t)((n >> 8) & 0xff));
  for (Elem x : order) {
    c.bytes.push_back((uint8_t)L.up(x).size());
    for (Elem y : L.up(x)) {
      c.bytes.push_back((uint8_t)(id[y] & 0xff));
      c.bytes.push_back((uint8_t)((id[y] >> 8) & 0xff));
    }
  }
  return c;
}

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace latt
