#include "latt/io.hpp"

#include <algorithm>
#include <sstream>

namespace latt {

namespace {

// Insertion sort with a pairwise comparator; never undefined behavior even
// if the comparator is inconsistent on garbage input (validate reports the
// inconsistency afterwards).
template <typename Cmp>
void safe_sort(std::vector<Elem>& v, Cmp cmp) {
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && cmp(v[j], v[j - 1]); --j) std::swap(v[j], v[j - 1]);
}

}  // namespace

LatticeDiagram parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, "missing header 'n=<count>'");
  LatticeDiagram d;
  {
    std::string s = line;
    if (s.rfind("n=", 0) != 0) throw ParseError(lineno, "expected 'n=<count>'");
    try {
      d.n = std::stoi(s.substr(2));
    } catch (...) {
      throw ParseError(lineno, "bad element count");
    }
    if (d.n < 1) throw ParseError(lineno, "element count must be positive");
  }
  d.up.resize(d.n);
  d.down.resize(d.n);
  bool anyLabel = false;
  std::vector<std::string> labels(d.n);

  for (int i = 0; i < d.n; ++i) {
    if (!next_line()) throw ParseError(lineno + 1, "missing element line");
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok != std::to_string(i) + ":")
      throw ParseError(lineno, "expected '" + std::to_string(i) + ":'");
    ls >> tok;
    if (tok.rfind("up=[", 0) != 0 || tok.back() != ']')
      throw ParseError(lineno, "expected up=[...]");
    std::string inner = tok.substr(4, tok.size() - 5);
    if (!inner.empty()) {
      std::istringstream es(inner);
      std::string num;
      while (std::getline(es, num, ',')) {
        try {
          int y = std::stoi(num);
          if (y < 0 || y >= d.n) throw std::out_of_range("");
          d.up[i].push_back(y);
        } catch (...) {
          throw ParseError(lineno, "bad cover id '" + num + "'");
        }
      }
    }
    if (ls >> tok) {
      if (tok.rfind("label=", 0) != 0)
        throw ParseError(lineno, "unexpected token '" + tok + "'");
      labels[i] = tok.substr(6);
      anyLabel = true;
      if (ls >> tok) throw ParseError(lineno, "trailing token '" + tok + "'");
    }
  }
  if (next_line()) throw ParseError(lineno, "trailing content after last element");
  if (anyLabel) d.labels = std::move(labels);

  // Derive down lists: collect lower covers, then order them by left_of
  // computed from the up lists alone.
  for (Elem x = 0; x < d.n; ++x)
    for (Elem y : d.up[x])
      d.down[y].push_back(x);
  auto core = detail::order_core(d);
  if (core.ok) {
    for (Elem y = 0; y < d.n; ++y)
      safe_sort(d.down[y], [&](Elem a, Elem b) {
        if (a == b || core.above[a].test(b) || core.above[b].test(a)) return a < b;
        Elem m = core.meet[(size_t)a * d.n + b];
        if (m == kNone) return a < b;
        return detail::left_of_core(d, core.above, m, a, b);
      });
  }
  return d;
}

std::string emit_lattice(const LatticeDiagram& d) {
  std::ostringstream os;
  os << "n=" << d.n << "\n";
  for (Elem i = 0; i < d.n; ++i) {
    os << i << ": up=[";
    for (size_t j = 0; j < d.up[i].size(); ++j) os << (j ? "," : "") << d.up[i][j];
    os << "]";
    if (!d.labels.empty() && !d.labels[i].empty()) os << " label=" << d.labels[i];
    os << "\n";
  }
  return os.str();
}

std::string emit_dot(const Lattice& L,
                     const std::vector<std::vector<Elem>>* kernelClasses) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse];\n";
  for (Elem x = 0; x < L.size(); ++x)
    os << "  e" << x << " [label=\"" << L.label(x) << "\"];\n";

  // one rank per height, ordered left to right by the embedding
  int H = L.height();
  for (int h = 0; h <= H; ++h) {
    std::vector<Elem> rank;
    for (Elem x = 0; x < L.size(); ++x)
      if (L.height(x) == h) rank.push_back(x);
    if (rank.empty()) continue;
    for (size_t i = 1; i < rank.size(); ++i)
      for (size_t j = i; j > 0 && L.left_of(rank[j], rank[j - 1]); --j)
        std::swap(rank[j], rank[j - 1]);
    os << "  { rank=same;";
    for (Elem x : rank) os << " e" << x << ";";
    os << " }\n";
    for (size_t i = 0; i + 1 < rank.size(); ++i)
      os << "  e" << rank[i] << " -> e" << rank[i + 1]
         << " [style=invis, weight=0];\n";
  }
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y : L.up(x)) os << "  e" << x << " -> e" << y << ";\n";

  if (kernelClasses) {
    for (const auto& cls : *kernelClasses) {
      if (cls.size() < 2) continue;
      for (size_t i = 0; i + 1 < cls.size(); ++i)
        os << "  e" << cls[i] << " -> e" << cls[i + 1]
           << " [style=dashed, dir=none, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace latt
