#include "meetimp/poset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace meetimp {

Poset Poset::from_leq(std::size_t k, const std::function<bool(int, int)>& leq) {
  Poset p;
  p.up_.assign(k, Bits(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (leq(static_cast<int>(x), static_cast<int>(y))) p.up_[x].set(y);
  for (std::size_t x = 0; x < k; ++x) {
    if (!p.up_[x].test(x)) throw std::invalid_argument("order is not reflexive");
    for (std::size_t y = 0; y < k; ++y) {
      if (!p.up_[x].test(y)) continue;
      if (x != y && p.up_[y].test(x)) throw std::invalid_argument("order is not antisymmetric");
      if (!p.up_[y].is_subset_of(p.up_[x]))
        throw std::invalid_argument("order is not transitive");
    }
  }
  p.finish();
  return p;
}

Poset Poset::from_covers(std::size_t k, const std::vector<std::pair<int, int>>& covers) {
  std::vector<Bits> up(k, Bits(k));
  for (std::size_t x = 0; x < k; ++x) up[x].set(x);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= k || static_cast<std::size_t>(hi) >= k)
      throw std::invalid_argument("cover pair out of range");
    up[static_cast<std::size_t>(lo)].set(static_cast<std::size_t>(hi));
  }
  // Reflexive-transitive closure (Warshall on bitset rows).
  for (std::size_t z = 0; z < k; ++z)
    for (std::size_t x = 0; x < k; ++x)
      if (up[x].test(z)) up[x] |= up[z];
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      if (up[x].test(y) && up[y].test(x))
        throw std::invalid_argument("covers contain a cycle");
  Poset p;
  p.up_ = std::move(up);
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t k = up_.size();
  down_.assign(k, Bits(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (up_[x].test(y)) down_[y].set(x);
  covers_up_.assign(k, {});
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y || !up_[x].test(y)) continue;
      bool immediate = true;
      for (std::size_t z = 0; z < k && immediate; ++z)
        if (z != x && z != y && up_[x].test(z) && up_[z].test(y)) immediate = false;
      if (immediate) covers_up_[x].push_back(static_cast<int>(y));
    }
  }
  depth_.assign(k, 0);
  // Points sorted by decreasing up-set size see their successors first.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return up_[a].count() < up_[b].count(); });
  for (std::size_t x : order) {
    int d = 1;
    for (int y : covers_up_[x]) d = std::max(d, depth_[static_cast<std::size_t>(y)] + 1);
    depth_[x] = d;
  }
}

Bits Poset::strict_up(int x) const {
  Bits b = up_[static_cast<std::size_t>(x)];
  b.reset(static_cast<std::size_t>(x));
  return b;
}

int Poset::height() const {
  int h = 0;
  for (int d : depth_) h = std::max(h, d);
  return h;
}

Bits Poset::maximal_points() const {
  Bits b(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].count() == 1) b.set(x);
  return b;
}

Bits Poset::minimal_points() const {
  Bits b(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].count() == 1) b.set(x);
  return b;
}

Bits Poset::maximal_of(const Bits& s) const {
  Bits b(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    Bits above = up_[x] & s;
    above.reset(x);
    if (above.none()) b.set(x);
  }
  return b;
}

Bits Poset::minimal_of(const Bits& s) const {
  Bits b(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    Bits below = down_[x] & s;
    below.reset(x);
    if (below.none()) b.set(x);
  }
  return b;
}

bool Poset::is_upset(const Bits& s) const {
  if (s.size() != size()) return false;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (!up_[x].is_subset_of(s)) return false;
  return true;
}

Bits Poset::up_closure(Bits s) const {
  Bits out(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= up_[x];
  return out;
}

Bits Poset::down_closure(Bits s) const {
  Bits out(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= down_[x];
  return out;
}

void Poset::check_upset(const UpSet& u, const char* what) const {
  if (u.size() != size())
    throw std::invalid_argument(std::string(what) + ": carrier mismatch (" +
                                std::to_string(u.size()) + " vs " + std::to_string(size()) + ")");
  if (!is_upset(u)) throw std::invalid_argument(std::string(what) + ": not an up-set");
}

UpSet Poset::implication(const UpSet& u, const UpSet& v) const {
  check_upset(u, "implication lhs");
  check_upset(v, "implication rhs");
  // complement of the down-closure of u minus v
  Bits bad = u & ~v;
  return full() & ~down_closure(bad);
}

std::vector<UpSet> Poset::all_upsets() const {
  if (size() > 22) throw std::invalid_argument("all_upsets: poset too large to enumerate");
  std::vector<UpSet> out;
  const std::size_t k = size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bits b(k, mask);
    if (is_upset(b)) out.push_back(b);
  }
  return out;
}

namespace {

// (depth, |up|, |down|) signature per point; isomorphisms must respect it.
std::vector<std::array<int, 3>> signatures(const Poset& p) {
  std::vector<std::array<int, 3>> sig(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    sig[x] = {p.depth(static_cast<int>(x)), static_cast<int>(p.up(static_cast<int>(x)).count()),
              static_cast<int>(p.down(static_cast<int>(x)).count())};
  return sig;
}

bool extend_iso(const Poset& a, const Poset& b, const std::vector<std::array<int, 3>>& sa,
                const std::vector<std::array<int, 3>>& sb, std::vector<int>& map,
                std::vector<bool>& used, std::size_t x) {
  if (x == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || sa[x] != sb[y]) continue;
    bool ok = true;
    for (std::size_t x2 = 0; x2 < x && ok; ++x2) {
      int y2 = map[x2];
      if (a.leq(static_cast<int>(x), static_cast<int>(x2)) !=
              b.leq(static_cast<int>(y), y2) ||
          a.leq(static_cast<int>(x2), static_cast<int>(x)) !=
              b.leq(y2, static_cast<int>(y)))
        ok = false;
    }
    if (!ok) continue;
    map[x] = static_cast<int>(y);
    used[y] = true;
    if (extend_iso(a, b, sa, sb, map, used, x + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  auto sa = signatures(a), sb = signatures(b);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return extend_iso(a, b, sa, sb, map, used, 0);
}

std::vector<Poset> enumerate_posets(int max_points) {
  std::vector<Poset> out;
  for (int k = 1; k <= max_points; ++k) {
    // Strict-order pairs restricted to i < j cover every poset in some
    // topological labelling; duplicates are removed up to isomorphism.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    const std::size_t pn = pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pn); ++mask) {
      std::vector<Bits> up(static_cast<std::size_t>(k), Bits(static_cast<std::size_t>(k)));
      for (int i = 0; i < k; ++i) up[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(i));
      for (std::size_t t = 0; t < pn; ++t)
        if ((mask >> t) & 1)
          up[static_cast<std::size_t>(pairs[t].first)].set(
              static_cast<std::size_t>(pairs[t].second));
      bool transitive = true;
      for (int i = 0; i < k && transitive; ++i)
        for (int j = i + 1; j < k && transitive; ++j)
          if (up[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)))
            if (!up[static_cast<std::size_t>(j)].is_subset_of(up[static_cast<std::size_t>(i)]))
              transitive = false;
      if (!transitive) continue;
      Poset p = Poset::from_leq(static_cast<std::size_t>(k), [&](int i, int j) {
        return up[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j));
      });
      bool fresh = true;
      for (const Poset& q : out)
        if (q.size() == p.size() && posets_isomorphic(q, p)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace meetimp
