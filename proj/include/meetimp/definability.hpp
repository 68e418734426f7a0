#pragma once

#include "meetimp/algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meetimp {

// Verdict of the meet-implication definability test. Exactly one of
// witness / violation_3a / violation_3b is populated. When definable, the
// witness W is an up-set of M_wt with rh(W) = U.
struct DefinabilityVerdict {
  bool definable = false;
  std::optional<UpSet> witness;                       // over bundle.image
  std::optional<int> violation_3a;                    // x with every separated
                                                      // point above it in U, x not in U
  std::optional<std::pair<int, int>> violation_3b;    // (x, x'): bisimilar in M^s,
                                                      // x' in U, x not in U
};

// Condition (3a): any point all of whose separated successors lie in U is in
// U. Condition (3b): U does not split a bisimilarity class of M^s.
// Bisimilarity in M^s is by canonical store id (equal f values).
DefinabilityVerdict is_meet_impl_definable(const AdjointBundle& b, const UpSet& u);

// The single-quantified form of the characterization; agrees with
// (3a) and (3b) and is kept as an independent route for tests.
bool definable_condition2(const AdjointBundle& b, const UpSet& u);

// r(h(h_flat(q(u)))): the least meet-implication-definable up-set
// containing u; a fixed point of itself.
UpSet definable_closure(const AdjointBundle& b, const UpSet& u);

// All meet-implication-definable up-sets of M: the rh images of the up-sets
// of M_wt, deduplicated and sorted. Requires |M_wt| <= 20. The default entry
// point runs the OpenMP kernel when available; the serial reference is kept
// for testing and benchmarking.
std::vector<UpSet> definable_family(const AdjointBundle& b);
std::vector<UpSet> definable_family_serial(const AdjointBundle& b);
std::vector<UpSet> definable_family_parallel(const AdjointBundle& b);

struct WitnessResult {
  std::optional<Formula> formula;
  bool budget_exhausted = false;
};

// Extracts a verified defining formula for a definable up-set: the witness
// element is read inside the free algebra (M_wt is a generated submodel of
// its carrier) and extracted there, then checked by evaluation on m.
// A verification failure is a hard internal error.
WitnessResult witness_formula(const AdjointBundle& b, const UpSet& u,
                              const FreeMeetImpAlgebra& alg, std::size_t budget = 200000);

// The one-variable ladder example: v(~~p1) on the depth-d truncation of
// U(1) is a 2-point up-set that is not meet-implication definable, its
// least definable closure is the whole model, and the definable family is
// exactly {v(p1), carrier}. Every claim is checked, not assumed.
struct RiegerNishimuraReport {
  int depth = 0;
  TruncatedUniversalModel trunc;
  int m1 = -1, x1 = -1, x2 = -1;  // model indices of the three named points
  UpSet double_neg_value;
  bool value_as_expected = false;
  bool not_definable = false;
  bool violation_is_x1_x2 = false;
  bool closure_is_carrier = false;
  bool family_as_expected = false;
  bool separated_part_is_x1_x2 = false;
  std::string dot;

  bool all_checks_pass() const {
    return value_as_expected && not_definable && violation_is_x1_x2 &&
           closure_is_carrier && family_as_expected && separated_part_is_x1_x2;
  }
};

RiegerNishimuraReport rieger_nishimura_report(int depth);

}  // namespace meetimp
