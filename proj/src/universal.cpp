#include "meetimp/universal.hpp"

#include <algorithm>
#include <functional>

namespace meetimp {

std::string TruncationStats::summary() const {
  std::string out = "depth layers:";
  for (std::size_t d = 0; d < per_depth.size(); ++d)
    out += " " + std::to_string(d + 1) + ":" + std::to_string(per_depth[d]);
  out += "; total: " + std::to_string(points) + " points";
  return out;
}

UniverseStore::UniverseStore(int n) : n_(n) {
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("variable count out of range");
}

bool UniverseStore::leq(int x, int y) const {
  const auto& up = up_[static_cast<std::size_t>(x)];
  return std::binary_search(up.begin(), up.end(), y);
}

Colour UniverseStore::successor_meet(const std::vector<int>& succs) const {
  Colour meet = all_ones_colour(n_);
  for (int s : succs) meet &= colour(s);
  return meet;
}

bool UniverseStore::is_antichain(const std::vector<int>& ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (leq(ids[i], ids[j]) || leq(ids[j], ids[i])) return false;
  return true;
}

std::vector<int> UniverseStore::minimal_ids(const std::vector<int>& ids) const {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  for (int a : sorted) {
    bool minimal = true;
    for (int b : sorted)
      if (b != a && leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

int UniverseStore::find_point(Colour colour, const std::vector<int>& succs) const {
  std::vector<int> key = succs;
  std::sort(key.begin(), key.end());
  auto it = index_.find({colour, key});
  return it == index_.end() ? -1 : it->second;
}

int UniverseStore::ensure_point(Colour c, std::vector<int> succs) {
  if (!colour_leq(c, all_ones_colour(n_))) throw std::invalid_argument("colour out of range");
  std::sort(succs.begin(), succs.end());
  succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
  for (int s : succs)
    if (s < 0 || static_cast<std::size_t>(s) >= points_.size())
      throw std::invalid_argument("successor id out of range");
  auto it = index_.find({c, succs});
  if (it != index_.end()) return it->second;
  if (!is_antichain(succs)) throw std::invalid_argument("successors are not an antichain");
  Colour meet = successor_meet(succs);
  if (!colour_leq(c, meet))
    throw std::invalid_argument("colour not below the successor-colour meet");
  if (succs.size() == 1 && c == meet)
    throw std::invalid_argument("a point with a single equal-coloured successor is that successor");
  UniversalPoint pt;
  pt.colour = c;
  pt.succs = succs;
  pt.depth = 1;
  std::vector<int> up;
  for (int s : succs) {
    pt.depth = std::max(pt.depth, depth(s) + 1);
    const auto& su = up_[static_cast<std::size_t>(s)];
    std::vector<int> merged;
    std::set_union(up.begin(), up.end(), su.begin(), su.end(), std::back_inserter(merged));
    up = std::move(merged);
  }
  int id = static_cast<int>(points_.size());
  up.insert(std::lower_bound(up.begin(), up.end(), id), id);
  points_.push_back(std::move(pt));
  up_.push_back(std::move(up));
  index_.emplace(std::make_pair(c, points_.back().succs), id);
  return id;
}

bool UniverseStore::keys_equal(const UniverseStore& other) const {
  if (points_.size() != other.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& a = points_[i];
    const auto& b = other.points_[i];
    if (a.colour != b.colour || a.succs != b.succs || a.depth != b.depth) return false;
  }
  return true;
}

int StoreModel::index(int store_id) const {
  auto it = index_of.find(store_id);
  if (it == index_of.end()) throw std::out_of_range("store id not in this model");
  return it->second;
}

UpSet StoreModel::upset_of_ids(const std::vector<int>& store_ids) const {
  Bits b(model.size());
  for (int id : store_ids) b.set(static_cast<std::size_t>(index(id)));
  return b;
}

StoreModel materialize(const UniverseStore& store, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  StoreModel out;
  out.ids = std::move(ids);
  for (std::size_t i = 0; i < out.ids.size(); ++i) out.index_of[out.ids[i]] = static_cast<int>(i);
  for (int id : out.ids)
    for (int s : store.point(id).succs)
      if (!out.index_of.count(s))
        throw std::invalid_argument("materialize: ids are not an up-set of the store");
  Poset p = Poset::from_leq(out.ids.size(), [&](int i, int j) {
    return store.leq(out.ids[static_cast<std::size_t>(i)], out.ids[static_cast<std::size_t>(j)]);
  });
  std::vector<Colour> colours(out.ids.size());
  for (std::size_t i = 0; i < out.ids.size(); ++i) colours[i] = store.colour(out.ids[i]);
  out.model = ColouredModel::create(std::move(p), store.n(), std::move(colours));
  return out;
}

namespace {

// All submasks of meet, ascending; optionally excluding meet itself.
std::vector<Colour> submasks_ascending(Colour meet, bool strict) {
  std::vector<Colour> out;
  Colour sub = meet;
  while (true) {
    if (!(strict && sub == meet)) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & meet;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct LayerBuild {
  UniverseStore* store;
  std::vector<int> model_ids;   // points accepted so far, construction order
  TruncationStats stats;
  std::size_t budget;
  std::size_t steps = 0;
  std::size_t step_limit;

  explicit LayerBuild(UniverseStore& s, std::size_t b)
      : store(&s), budget(b), step_limit(std::max<std::size_t>(b, 4096) * 64) {}

  void accept(int id) {
    int d = store->depth(id);
    if (stats.per_depth.size() < static_cast<std::size_t>(d))
      stats.per_depth.resize(static_cast<std::size_t>(d));
    ++stats.per_depth[static_cast<std::size_t>(d) - 1];
    ++stats.points;
    if (stats.points > budget)
      throw BudgetExceeded("point budget (" + std::to_string(budget) + ") exceeded", stats);
    model_ids.push_back(id);
  }

  // Enumerates nonempty antichains over `candidates` (ascending ids) and
  // emits each once; emit(S, meet, maxdepth). prune_zero_meet cuts subtrees
  // whose colour meet has hit zero (no admissible strict submask remains).
  void antichains(const std::vector<int>& candidates, bool prune_zero_meet,
                  const std::function<void(const std::vector<int>&, Colour, int)>& emit) {
    std::vector<int> current;
    rec(candidates, 0, all_ones_colour(store->n()), 0, prune_zero_meet, current, emit);
  }

private:
  void rec(const std::vector<int>& candidates, std::size_t start, Colour meet, int maxdepth,
           bool prune_zero_meet, std::vector<int>& current,
           const std::function<void(const std::vector<int>&, Colour, int)>& emit) {
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (++steps > step_limit)
        throw BudgetExceeded("antichain enumeration exceeded the work budget", stats);
      int id = candidates[i];
      bool compatible = true;
      for (int prev : current)
        if (store->leq(prev, id) || store->leq(id, prev)) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      Colour new_meet = meet & store->colour(id);
      if (prune_zero_meet && new_meet == 0) continue;
      int new_maxdepth = std::max(maxdepth, store->depth(id));
      current.push_back(id);
      emit(current, new_meet, new_maxdepth);
      rec(candidates, i + 1, new_meet, new_maxdepth, prune_zero_meet, current, emit);
      current.pop_back();
    }
  }
};

}  // namespace

TruncatedUniversalModel build_truncated_universal(UniverseStore& store, int depth,
                                                  std::size_t budget) {
  if (depth < 1) throw std::invalid_argument("depth bound must be >= 1");
  LayerBuild build(store, budget);
  const Colour top = all_ones_colour(store.n());
  for (Colour c = 0;; ++c) {
    build.accept(store.ensure_maximal(c));
    if (c == top) break;
  }
  for (int k = 1; k < depth; ++k) {
    std::vector<int> candidates = build.model_ids;  // all have depth <= k here
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Colour, std::vector<int>>> found;
    build.antichains(candidates, false, [&](const std::vector<int>& s, Colour meet, int maxd) {
      if (maxd != k) return;
      for (Colour c : submasks_ascending(meet, s.size() == 1)) found.emplace_back(c, s);
    });
    for (auto& [c, s] : found) build.accept(store.ensure_point(c, std::move(s)));
    if (found.empty()) break;  // deeper layers stay empty
  }
  TruncatedUniversalModel out;
  out.depth_bound = depth;
  out.stats = build.stats;
  out.sm = materialize(store, build.model_ids);
  return out;
}

TruncatedUniversalModel build_meet_impl_universal(UniverseStore& store, std::size_t budget) {
  LayerBuild build(store, budget);
  const Colour top = all_ones_colour(store.n());
  for (Colour c = 0; c < top; ++c) build.accept(store.ensure_maximal(c));
  // Colours strictly increase upward here, so depth is bounded by n and the
  // fixpoint arrives after at most n - 1 rounds.
  for (int k = 1; k < store.n(); ++k) {
    std::vector<int> candidates = build.model_ids;
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Colour, std::vector<int>>> found;
    build.antichains(candidates, true, [&](const std::vector<int>& s, Colour meet, int maxd) {
      if (maxd != k) return;
      // Separated new point: some coordinate is 1 on every successor and 0
      // in the candidate colour, i.e. the colour is strictly below the meet.
      for (Colour c : submasks_ascending(meet, true)) found.emplace_back(c, s);
    });
    for (auto& [c, s] : found) build.accept(store.ensure_point(c, std::move(s)));
    if (found.empty()) break;
  }
  TruncatedUniversalModel out;
  out.depth_bound = store.n();
  out.stats = build.stats;
  out.sm = materialize(store, build.model_ids);
  return out;
}

std::vector<int> map_to_universal(const ColouredModel& m, UniverseStore& store) {
  if (m.n != store.n()) throw std::invalid_argument("variable counts differ");
  const std::size_t k = m.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.poset.depth(static_cast<int>(a)) < m.poset.depth(static_cast<int>(b));
  });
  std::vector<int> f(k, -1);
  for (std::size_t x : order) {
    std::vector<int> image_above;
    Bits strict = m.poset.strict_up(static_cast<int>(x));
    for (auto y = strict.find_first(); y != Bits::npos; y = strict.find_next(y))
      image_above.push_back(f[y]);
    if (image_above.empty()) {
      f[x] = store.ensure_maximal(m.colours[x]);
      continue;
    }
    std::vector<int> s = store.minimal_ids(image_above);
    if (s.size() == 1 && store.colour(s[0]) == m.colours[x])
      f[x] = s[0];
    else
      f[x] = store.ensure_point(m.colours[x], std::move(s));
  }
  return f;
}

ModelMap UniversalImage::as_model_map(const ColouredModel& source) const {
  ModelMap mm;
  mm.source = &source;
  mm.target = &image.model;
  mm.map.reserve(f.size());
  for (int id : f) mm.map.push_back(image.index(id));
  return mm;
}

UniversalImage universal_image(const ColouredModel& m, UniverseStore& store) {
  UniversalImage out;
  out.f = map_to_universal(m, store);
  out.image = materialize(store, out.f);
  return out;
}

bool bisimilar(const ColouredModel& m, int x, int y, UniverseStore& store) {
  std::vector<int> f = map_to_universal(m, store);
  return f[static_cast<std::size_t>(x)] == f[static_cast<std::size_t>(y)];
}

MeetImplImage meet_impl_image(const ColouredModel& m, UniverseStore& store) {
  MeetImplImage out;
  out.separated = separated_submodel(m);
  out.f = map_to_universal(out.separated.model, store);
  out.image = materialize(store, out.f);
  return out;
}

}  // namespace meetimp
