#pragma once

#include "meetimp/bits.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace meetimp {

// Finite poset with the full order relation tabulated as per-point up-set
// rows, plus cached covers and depths. Points are 0-based indices.
// depth(x) is the length of the longest chain in up(x); maximal points have
// depth 1.
class Poset {
public:
  Poset() = default;

  // Validates reflexivity, antisymmetry and transitivity.
  static Poset from_leq(std::size_t k, const std::function<bool(int, int)>& leq);
  // Takes the reflexive-transitive closure of the cover pairs and validates
  // antisymmetry (rejects cycles).
  static Poset from_covers(std::size_t k, const std::vector<std::pair<int, int>>& covers);

  std::size_t size() const { return up_.size(); }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  const Bits& up(int x) const { return up_[x]; }          // includes x
  const Bits& down(int x) const { return down_[x]; }      // includes x
  Bits strict_up(int x) const;
  const std::vector<int>& covers_up(int x) const { return covers_up_[x]; }
  int depth(int x) const { return depth_[x]; }
  int height() const;  // max depth over all points, 0 for the empty poset

  Bits maximal_points() const;
  Bits minimal_points() const;
  // Maximal/minimal elements of an arbitrary subset.
  Bits maximal_of(const Bits& s) const;
  Bits minimal_of(const Bits& s) const;

  bool is_upset(const Bits& s) const;
  Bits up_closure(Bits s) const;
  Bits down_closure(Bits s) const;

  // Heyting implication of up-sets: {x | for all y >= x, y in u implies
  // y in v}. Throws on carrier mismatch or non-up-set arguments.
  UpSet implication(const UpSet& u, const UpSet& v) const;

  UpSet full() const { Bits b(size()); b.set(); return b; }
  UpSet empty() const { return Bits(size()); }

  // All up-sets, ascending as bit patterns. Guarded (throws above 22 points);
  // larger enumerations are streamed by their callers instead.
  std::vector<UpSet> all_upsets() const;

  void check_upset(const UpSet& u, const char* what) const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

private:
  void finish();  // fills down_, covers_, depth_ from up_

  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::vector<int>> covers_up_;
  std::vector<int> depth_;
};

// Brute force over permutations with signature pruning; fine for the small
// posets used in tests and duality checks.
bool posets_isomorphic(const Poset& a, const Poset& b);

// All posets on 1..max_points points up to isomorphism.
std::vector<Poset> enumerate_posets(int max_points);

}  // namespace meetimp
