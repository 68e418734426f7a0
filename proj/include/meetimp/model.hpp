#pragma once

#include "meetimp/bits.hpp"
#include "meetimp/formula.hpp"
#include "meetimp/poset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meetimp {

// A finite Kripke model: poset plus an order-preserving colouring into
// n-bit colours. Immutable after construction; all operations are pure.
struct ColouredModel {
  Poset poset;
  int n = 0;
  std::vector<Colour> colours;

  // Validates that the colouring is order-preserving.
  static ColouredModel create(Poset p, int n, std::vector<Colour> colours);

  std::size_t size() const { return poset.size(); }
  Colour colour(int x) const { return colours[x]; }
  // {x | p_j true at x}, 1-based j; an up-set by order preservation.
  UpSet variable_upset(int j) const;
};

// Inductive Kripke semantics; the result is always an up-set. Memoized over
// shared subterms, so DAG-shaped formulas evaluate in linear time.
UpSet evaluate(const ColouredModel& m, const Formula& f);

// Border points of an up-set a: maximal elements of the complement, i.e.
// points not in a all of whose proper successors are in a. Not an up-set.
Bits border_points(const ColouredModel& m, const UpSet& a);

// x is separated iff it is a q-border point for some variable q.
bool is_separated(const ColouredModel& m, int x);
Bits separated_points(const ColouredModel& m);

// Induced submodel together with the embedding back into the parent:
// parent[i] is the parent index of submodel point i.
struct Submodel {
  ColouredModel model;
  std::vector<int> parent;
};

Submodel induced_submodel(const ColouredModel& m, const Bits& carrier);
Submodel separated_submodel(const ColouredModel& m);

struct ModelMap {
  const ColouredModel* source = nullptr;
  const ColouredModel* target = nullptr;
  std::vector<int> map;
};

struct PMorphismCheck {
  enum class Failure { none, order, back, colour };
  bool ok = true;
  Failure failure = Failure::none;
  // The violating pair: (x, y) with x, y source points for an order failure,
  // (x, y') with y' a target point for a back failure, (x, x) for a colour
  // failure.
  int x = -1;
  int y = -1;
  std::string describe() const;
};

// Order preservation, the back condition, and colour preservation.
PMorphismCheck check_pmorphism(const ModelMap& f);

// Prop-style exhaustive check that every finite model has borders: for every
// variable p and every x outside v(p) there is a p-border point above x.
bool model_has_borders(const ColouredModel& m);

// Small constructors used throughout tests and reports.
ColouredModel chain_model(int n, const std::vector<Colour>& bottom_to_top);
ColouredModel antichain_model(int n, const std::vector<Colour>& colours);

}  // namespace meetimp
