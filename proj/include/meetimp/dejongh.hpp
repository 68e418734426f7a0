#pragma once

#include "meetimp/formula.hpp"
#include "meetimp/universal.hpp"

#include <unordered_map>
#include <vector>

namespace meetimp {

// De Jongh formulas of a universal-model point w:
//   theta_w = disjunction of phi_{w'} over immediate successors w' (F if none),
//   phi_w   = conjunction of: the variables true at w, (q -> theta_w) for the
//             border variables q, and (psi_{w'} -> theta_w) per successor,
//   psi_w   = phi_w -> theta_w.
// On any generated submodel of U(n) they define, respectively, the strict
// up-set of w, the up-set of w, and the complement of the down-set of w.
struct DeJonghTriple {
  int w = -1;
  Formula theta, phi, psi;
  std::vector<int> true_vars;    // T_w, ascending variable index (1-based)
  std::vector<int> border_vars;  // B_w, ascending variable index (1-based)
  std::vector<int> succs;        // I_w, ascending store id
};

// Memoized over the store; triples for the whole up-set of w are shared, so
// repeated calls are cheap and the formulas form DAGs.
class DeJonghBuilder {
public:
  explicit DeJonghBuilder(const UniverseStore& store) : store_(&store) {}
  const DeJonghTriple& at(int w);

private:
  const UniverseStore* store_;
  std::unordered_map<int, DeJonghTriple> memo_;
};

DeJonghTriple dejongh_formulas(const UniverseStore& store, int w);

// The disjunction of phi_w over the minimal points of an up-set of a
// truncation (F for the empty up-set); evaluating it on the truncation
// returns the up-set back.
Formula upset_defining_disjunction(const UniverseStore& store, const StoreModel& trunc,
                                   const UpSet& u);

}  // namespace meetimp
