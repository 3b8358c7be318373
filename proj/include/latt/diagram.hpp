// Finite lattice diagrams: a cover relation together with a fixed planar
// embedding, given as left-to-right ordered upper and lower cover lists.
// The embedding is part of the data; all structural queries (faces, cells,
// "left of") are computed from it, never from coordinates.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latt {

using Elem = int;
inline constexpr Elem kNone = -1;

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction contradicts one of the structural lemmas this
// library is built around; always a bug or a genuinely bad input, never a
// recoverable condition.
class LemmaViolation : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

// Fixed-size bitset over element ids.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }

  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  Bits& subtract(const Bits& o);  // this &= ~o
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool any() const;
  int count() const;
  bool intersects(const Bits& o) const;
  // Visits set bits in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < n_; ++i)
      if (test(i)) f(i);
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct LatticeDiagram {
  int n = 0;
  std::vector<std::vector<Elem>> up;    // upper covers, left to right
  std::vector<std::vector<Elem>> down;  // lower covers, left to right
  std::vector<std::string> labels;      // optional; empty or one per element

  std::string label_of(Elem x) const {
    if (x >= 0 && x < (int)labels.size() && !labels[x].empty()) return labels[x];
    return std::to_string(x);
  }
};

struct Violation {
  std::string rule;         // stable rule id, e.g. "unique-max", "planar-faces"
  std::vector<Elem> elems;  // first offending element(s) for this rule
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::string summary() const;
};

// Checks every diagram invariant: index sanity, up/down mutual consistency,
// acyclicity, unique bounds, genuine covers, existence and uniqueness of
// joins and meets, and the embedding certificate (face count E-V+2, outer
// face bounded by the two boundary chains, consistent left-right order,
// every interior face having a unique bottom and top). Failures are
// reported, not thrown; the first offending element pair is named per rule.
ValidationReport validate(const LatticeDiagram& d);

// One face of the embedding as a directed closed walk in the cover graph.
struct Face {
  std::vector<std::pair<Elem, Elem>> edges;  // directed, cyclic order
};

// A validated diagram plus precomputed order data. Immutable; all queries
// are const and safe to run from multiple threads.
// Tag for constructing a Lattice from a diagram that is valid by
// construction, skipping the full validation pass. Internal fast path for
// the enumeration loops; external input must go through the checked ctor.
struct trusted_t {
  explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

class Lattice {
 public:
  // Throws LatticeError with the validation summary if d is not a valid
  // planar lattice diagram.
  explicit Lattice(LatticeDiagram d);
  Lattice(LatticeDiagram d, trusted_t);

  const LatticeDiagram& diagram() const { return d_; }
  int size() const { return d_.n; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  std::span<const Elem> up(Elem x) const { return d_.up[x]; }
  std::span<const Elem> down(Elem x) const { return d_.down[x]; }
  const std::string label(Elem x) const { return d_.label_of(x); }

  bool leq(Elem x, Elem y) const { return above_[x].test(y); }
  bool covers(Elem x, Elem y) const;  // x is covered by y
  Elem join(Elem x, Elem y) const;
  Elem meet(Elem x, Elem y) const;
  int height(Elem x) const { return height_[x]; }
  int height() const { return height_[top_]; }

  // Up-set and down-set of x, as bitsets including x itself.
  const Bits& above(Elem x) const { return above_[x]; }
  const Bits& below(Elem x) const { return below_[x]; }

  // Elements y with exactly one lower cover (join-irreducible) etc.
  bool join_irreducible(Elem x) const { return d_.down[x].size() == 1; }
  bool meet_irreducible(Elem x) const { return d_.up[x].size() == 1; }
  bool doubly_irreducible(Elem x) const {
    return join_irreducible(x) && meet_irreducible(x);
  }

  // True iff x is strictly to the left of y in the embedding. Requires
  // x and y incomparable; throws LatticeError("comparable") otherwise.
  bool left_of(Elem x, Elem y) const;

  // Maximal chain from bottom to top taking always the first (leftmost)
  // respectively last (rightmost) upper cover.
  std::vector<Elem> left_boundary() const;
  std::vector<Elem> right_boundary() const;

  // Upper covers of x in embedding order. star_left/star_right are the
  // leftmost/rightmost ones; they throw "is top" on the top element and
  // "not slim-semimodular context" when x has more than two upper covers.
  std::span<const Elem> covers_above(Elem x) const { return d_.up[x]; }
  Elem star_left(Elem x) const;
  Elem star_right(Elem x) const;

  // All faces of the embedding, outer face included, plus its index.
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_; }

  void check_elem(Elem x) const;

 private:
  void init();

  LatticeDiagram d_;
  Elem bottom_ = kNone, top_ = kNone;
  std::vector<int> height_;
  std::vector<Bits> above_, below_;
  std::vector<Elem> join_, meet_;  // n*n tables
  std::vector<Face> faces_;
  int outer_ = -1;

  friend ValidationReport validate(const LatticeDiagram& d);
};

// Diagram helpers shared by the construction modules.
LatticeDiagram mirror(const LatticeDiagram& d);  // reverses every cover list

namespace detail {
// Order data computed from raw cover lists, usable before full validation.
struct OrderCore {
  bool ok = false;
  std::string error;
  Elem bottom = kNone, top = kNone;
  std::vector<int> height;
  std::vector<Bits> above, below;
  // join/meet tables; kNone where not unique / not existing.
  std::vector<Elem> join, meet;
};
OrderCore order_core(const LatticeDiagram& d);

// Face traversal on the rotation system given by the cover lists.
// Returns all faces and the index of the outer face (the face containing
// the directed edge from bottom's leftmost upper cover down to bottom),
// or -1 if that edge does not exist (single-element diagram).
std::pair<std::vector<Face>, int> trace_faces(const LatticeDiagram& d);

// left_of on raw data; pre: x, y incomparable, meet defined.
bool left_of_core(const LatticeDiagram& d, const std::vector<Bits>& above,
                  Elem meet, Elem x, Elem y);
}  // namespace detail

}  // namespace latt
