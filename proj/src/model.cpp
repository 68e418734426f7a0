#include "meetimp/model.hpp"

#include <stdexcept>
#include <unordered_map>

namespace meetimp {

ColouredModel ColouredModel::create(Poset p, int n, std::vector<Colour> colours) {
  if (n < 0 || n > kMaxVariables) throw std::invalid_argument("variable count out of range");
  if (colours.size() != p.size())
    throw std::invalid_argument("colour count does not match point count");
  Colour ones = all_ones_colour(n);
  for (Colour c : colours)
    if (!colour_leq(c, ones)) throw std::invalid_argument("colour uses more than n bits");
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(static_cast<int>(x), static_cast<int>(y)) && !colour_leq(colours[x], colours[y]))
        throw std::invalid_argument("colouring is not order-preserving");
  ColouredModel m;
  m.poset = std::move(p);
  m.n = n;
  m.colours = std::move(colours);
  return m;
}

UpSet ColouredModel::variable_upset(int j) const {
  if (j < 1 || j > n) throw std::out_of_range("variable index out of range");
  Bits b(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (colour_bit(colours[x], j - 1)) b.set(x);
  return b;
}

namespace {

const UpSet& eval_node(const ColouredModel& m, const Formula& f,
                       std::unordered_map<const Formula::Node*, UpSet>& memo) {
  auto it = memo.find(f.ptr());
  if (it != memo.end()) return it->second;
  UpSet value;
  switch (f.kind()) {
    case FormulaKind::Var:
      value = m.variable_upset(f.var_index());
      break;
    case FormulaKind::Top:
      value = m.poset.full();
      break;
    case FormulaKind::Bot:
      value = m.poset.empty();
      break;
    case FormulaKind::And:
      value = eval_node(m, f.left(), memo) & eval_node(m, f.right(), memo);
      break;
    case FormulaKind::Or:
      value = eval_node(m, f.left(), memo) | eval_node(m, f.right(), memo);
      break;
    case FormulaKind::Imp: {
      const UpSet& l = eval_node(m, f.left(), memo);
      const UpSet& r = eval_node(m, f.right(), memo);
      value = m.poset.implication(l, r);
      break;
    }
  }
  return memo.emplace(f.ptr(), std::move(value)).first->second;
}

}  // namespace

UpSet evaluate(const ColouredModel& m, const Formula& f) {
  if (f.max_var() > m.n) throw std::out_of_range("formula uses a variable beyond the model's n");
  std::unordered_map<const Formula::Node*, UpSet> memo;
  return eval_node(m, f, memo);
}

Bits border_points(const ColouredModel& m, const UpSet& a) {
  m.poset.check_upset(a, "border_points");
  Bits out(m.size());
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (a.test(u)) continue;
    if (m.poset.strict_up(static_cast<int>(u)).is_subset_of(a)) out.set(u);
  }
  return out;
}

bool is_separated(const ColouredModel& m, int x) {
  Colour here = m.colours[static_cast<std::size_t>(x)];
  // Meet of the colours of the immediate successors; order preservation
  // makes "true at all proper successors" equal to "true at all covers".
  Colour succ_meet = all_ones_colour(m.n);
  for (int y : m.poset.covers_up(x)) succ_meet &= m.colours[static_cast<std::size_t>(y)];
  return (succ_meet & ~here) != 0;
}

Bits separated_points(const ColouredModel& m) {
  Bits out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    if (is_separated(m, static_cast<int>(x))) out.set(x);
  return out;
}

Submodel induced_submodel(const ColouredModel& m, const Bits& carrier) {
  if (carrier.size() != m.size()) throw std::invalid_argument("induced_submodel: carrier mismatch");
  Submodel sub;
  sub.parent = to_points(carrier);
  const std::size_t k = sub.parent.size();
  Poset p = Poset::from_leq(k, [&](int i, int j) {
    return m.poset.leq(sub.parent[static_cast<std::size_t>(i)],
                       sub.parent[static_cast<std::size_t>(j)]);
  });
  std::vector<Colour> colours(k);
  for (std::size_t i = 0; i < k; ++i)
    colours[i] = m.colours[static_cast<std::size_t>(sub.parent[i])];
  sub.model = ColouredModel::create(std::move(p), m.n, std::move(colours));
  return sub;
}

Submodel separated_submodel(const ColouredModel& m) {
  return induced_submodel(m, separated_points(m));
}

std::string PMorphismCheck::describe() const {
  switch (failure) {
    case Failure::none:
      return "p-morphism";
    case Failure::order:
      return "order not preserved at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
    case Failure::back:
      return "back condition fails at source " + std::to_string(x) + ", target successor " +
             std::to_string(y);
    case Failure::colour:
      return "colour not preserved at " + std::to_string(x);
  }
  return "";
}

PMorphismCheck check_pmorphism(const ModelMap& f) {
  const ColouredModel& src = *f.source;
  const ColouredModel& tgt = *f.target;
  PMorphismCheck out;
  if (f.map.size() != src.size()) throw std::invalid_argument("map is not total");
  for (std::size_t x = 0; x < src.size(); ++x) {
    int fx = f.map[x];
    if (fx < 0 || static_cast<std::size_t>(fx) >= tgt.size())
      throw std::invalid_argument("map image out of range");
    if (src.colours[x] != tgt.colours[static_cast<std::size_t>(fx)]) {
      out.ok = false;
      out.failure = PMorphismCheck::Failure::colour;
      out.x = out.y = static_cast<int>(x);
      return out;
    }
  }
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y)
      if (src.poset.leq(static_cast<int>(x), static_cast<int>(y)) &&
          !tgt.poset.leq(f.map[x], f.map[y])) {
        out.ok = false;
        out.failure = PMorphismCheck::Failure::order;
        out.x = static_cast<int>(x);
        out.y = static_cast<int>(y);
        return out;
      }
  for (std::size_t x = 0; x < src.size(); ++x) {
    const Bits& above_fx = tgt.poset.up(f.map[x]);
    for (auto yp = above_fx.find_first(); yp != Bits::npos; yp = above_fx.find_next(yp)) {
      bool hit = false;
      const Bits& above_x = src.poset.up(static_cast<int>(x));
      for (auto x2 = above_x.find_first(); x2 != Bits::npos && !hit; x2 = above_x.find_next(x2))
        if (f.map[x2] == static_cast<int>(yp)) hit = true;
      if (!hit) {
        out.ok = false;
        out.failure = PMorphismCheck::Failure::back;
        out.x = static_cast<int>(x);
        out.y = static_cast<int>(yp);
        return out;
      }
    }
  }
  return out;
}

bool model_has_borders(const ColouredModel& m) {
  for (int j = 1; j <= m.n; ++j) {
    UpSet vp = m.variable_upset(j);
    Bits borders = border_points(m, vp);
    Bits reachable = m.poset.down_closure(borders);
    // every x outside v(p_j) must lie below (or at) some border point
    if (!((m.poset.full() & ~vp).is_subset_of(reachable))) return false;
  }
  return true;
}

ColouredModel chain_model(int n, const std::vector<Colour>& bottom_to_top) {
  const std::size_t k = bottom_to_top.size();
  Poset p = Poset::from_leq(k, [](int x, int y) { return x <= y; });
  return ColouredModel::create(std::move(p), n, bottom_to_top);
}

ColouredModel antichain_model(int n, const std::vector<Colour>& colours) {
  Poset p = Poset::from_leq(colours.size(), [](int x, int y) { return x == y; });
  return ColouredModel::create(std::move(p), n, colours);
}

}  // namespace meetimp
