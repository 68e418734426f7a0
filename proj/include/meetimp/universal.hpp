#pragma once

#include "meetimp/model.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace meetimp {

// Canonical point of the n-variable universal model: a colour plus the
// antichain of immediate successors (empty for maximal points). No two
// store points share the same (colour, successors) key.
struct UniversalPoint {
  Colour colour = 0;
  std::vector<int> succs;  // sorted store ids, an antichain
  int depth = 1;           // 1 + max successor depth
};

struct TruncationStats {
  std::vector<std::size_t> per_depth;  // per_depth[d-1] = points of depth d
  std::size_t points = 0;
  std::string summary() const;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string msg, TruncationStats stats)
      : std::runtime_error(std::move(msg)), partial(std::move(stats)) {}
  TruncationStats partial;
};

// Append-only table of canonical universal-model points, hash-consed on the
// (colour, successor antichain) key. Ids never change; insertion is the only
// mutation and must not race with other writers.
class UniverseStore {
public:
  explicit UniverseStore(int n);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const UniversalPoint& point(int id) const { return points_[static_cast<std::size_t>(id)]; }
  int depth(int id) const { return points_[static_cast<std::size_t>(id)].depth; }
  Colour colour(int id) const { return points_[static_cast<std::size_t>(id)].colour; }

  // x <= y in the universal model order.
  bool leq(int x, int y) const;
  const std::vector<int>& up_ids(int x) const { return up_[static_cast<std::size_t>(x)]; }

  // Looks up or creates the unique point with this colour and immediate
  // successor antichain. Validates the construction-theorem side conditions:
  // succs is an antichain, colour <= pointwise meet of successor colours,
  // and strictly below it when there is exactly one successor.
  int ensure_point(Colour colour, std::vector<int> succs);
  int find_point(Colour colour, const std::vector<int>& succs) const;  // -1 if absent
  int ensure_maximal(Colour colour) { return ensure_point(colour, {}); }

  Colour successor_meet(const std::vector<int>& succs) const;
  bool is_antichain(const std::vector<int>& ids) const;
  // Minimal elements (an antichain) of a set of store ids.
  std::vector<int> minimal_ids(const std::vector<int>& ids) const;

  bool operator==(const UniverseStore& other) const {
    return n_ == other.n_ && keys_equal(other);
  }

private:
  bool keys_equal(const UniverseStore& other) const;

  int n_;
  std::vector<UniversalPoint> points_;
  std::vector<std::vector<int>> up_;  // sorted ids of the up-set of each point
  std::map<std::pair<Colour, std::vector<int>>, int> index_;
};

// A generated submodel of U(n) materialized as a concrete model whose points
// carry their store ids.
struct StoreModel {
  ColouredModel model;
  std::vector<int> ids;                     // model index -> store id
  std::unordered_map<int, int> index_of;    // store id -> model index

  int index(int store_id) const;
  UpSet upset_of_ids(const std::vector<int>& store_ids) const;
};

// ids must be closed upward in the store.
StoreModel materialize(const UniverseStore& store, std::vector<int> ids);

struct TruncatedUniversalModel {
  StoreModel sm;
  int depth_bound = 0;
  TruncationStats stats;
};

constexpr std::size_t kDefaultPointBudget = 200000;

// The depth-d truncation of U(n), built top-down: layer 1 holds all 2^n
// colours as maximal points; layer k+1 holds one point per antichain S of
// maximal depth exactly k and admissible colour (<= the meet of S's colours,
// strictly below it when |S| = 1). Exceeding the budget raises
// BudgetExceeded; there is no silent truncation.
TruncatedUniversalModel build_truncated_universal(UniverseStore& store, int depth,
                                                  std::size_t budget = kDefaultPointBudget);

// The generated submodel of U(n) of points whose entire up-set is separated,
// built directly: seeds are the 2^n - 1 maximal points of colour != all-ones,
// and a candidate (S, c') qualifies iff c' is strictly below the meet of S's
// colours (equivalently: some coordinate separates the new point from all
// its successors). Reaches a fixpoint at depth n.
TruncatedUniversalModel build_meet_impl_universal(UniverseStore& store,
                                                  std::size_t budget = kDefaultPointBudget);

// The unique p-morphism from a finite model into U(n), following the
// recursion of its existence proof; returns f as store ids per point.
std::vector<int> map_to_universal(const ColouredModel& m, UniverseStore& store);

// Materializes im(f) (an up-set of U(n)) and f as a checked ModelMap.
struct UniversalImage {
  std::vector<int> f;  // model point -> store id
  StoreModel image;
  ModelMap as_model_map(const ColouredModel& source) const;
};
UniversalImage universal_image(const ColouredModel& m, UniverseStore& store);

bool bisimilar(const ColouredModel& m, int x, int y, UniverseStore& store);

// M^s together with the unique map f : M^s -> U(n) and the generated
// submodel im(f) of U(n).
struct MeetImplImage {
  Submodel separated;       // M^s inside M
  std::vector<int> f;       // M^s point -> store id
  StoreModel image;         // the model M_{meet,imp}
};
MeetImplImage meet_impl_image(const ColouredModel& m, UniverseStore& store);

}  // namespace meetimp
