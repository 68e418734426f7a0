#pragma once

#include "meetimp/algebra.hpp"
#include "meetimp/formula.hpp"
#include "meetimp/model.hpp"
#include "meetimp/universal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meetimp {

// Colourings of a rooted frame F with points x_1..x_k:
//   reflexive: bit j of c(x_i) is 1 iff x_i >= x_j      (k variables)
//   strict:    bit j of c(x_i) is 1 iff x_i >  x_j      (k variables)
//   combined:  strict block then reflexive block        (2k variables)
// The combined variant makes every point separated (own strict bit) and all
// colours distinct (reflexive block); the other two are kept selectable and
// their verification failures are reported, not hidden.
enum class ColouringVariant { reflexive, strict, combined };

ColouringVariant parse_variant(const std::string& name);
std::string variant_name(ColouringVariant v);
int variant_variable_count(ColouringVariant v, std::size_t frame_size);

// Throws unless the frame is rooted (has a minimum).
int frame_root(const Poset& frame);

ColouredModel subframe_model(const Poset& frame, ColouringVariant variant);

// Builds M = (F, c), verifies that every point is separated and that the
// unique map into U(n) is injective with image the up-set of w = f(root).
// Failed verification is recorded in the flags, never thrown.
struct SubframeReport {
  ColouringVariant variant = ColouringVariant::combined;
  ColouredModel model;       // (F, c)
  std::vector<int> f;        // frame point -> store id
  int w = -1;                // f(root)
  bool all_separated = false;
  bool injective = false;
  bool image_is_up_w = false;
  bool verified() const { return all_separated && injective && image_is_up_w; }
  std::optional<Formula> beta;  // set by subframe_formula
};

SubframeReport subframe_point(const Poset& frame, ColouringVariant variant,
                              UniverseStore& store);

// beta(F) = s(phi_w) -> s(theta_w), with both sides extracted syntactically
// from the free algebra over the variant's variable count. Complete for up
// to 2 total variables; beyond that the extraction is budgeted and a miss is
// reported, the semantic refutation check below staying available.
struct SubframeFormulaResult {
  SubframeReport report;
  std::optional<Formula> beta;
  bool budget_exhausted = false;
};

SubframeFormulaResult subframe_formula(const Poset& frame, ColouringVariant variant,
                                       UniverseStore& store,
                                       std::size_t point_budget = kDefaultPointBudget,
                                       std::size_t formula_budget = 200000);

// Decides N |/= beta(F) without the syntactic formula: true iff some
// separated point of N maps at or below w in the universal store.
bool subframe_refutation_check(const SubframeReport& report, const ColouredModel& n_model,
                               UniverseStore& store);
bool subframe_refutation_check(const Poset& frame, ColouringVariant variant,
                               const ColouredModel& n_model, UniverseStore& store);

// Brute-force search for a surjective colour-preserving p-morphism from n_s
// onto m; exact, capped at |n_s| <= 10. The default entry point runs the
// OpenMP kernel when available; the serial reference is kept for testing.
bool is_pmorphic_image(const ColouredModel& n_s, const ColouredModel& m);
bool is_pmorphic_image_serial(const ColouredModel& n_s, const ColouredModel& m);
bool is_pmorphic_image_parallel(const ColouredModel& n_s, const ColouredModel& m);

// True iff some rooted generated submodel of n_s maps p-morphically onto m.
// This is what the semantic refutation check is equivalent to; the plain
// surjective form fails the equivalence whenever n_s carries extra points
// besides the part that maps onto m.
bool generated_submodel_maps_onto(const ColouredModel& n_s, const ColouredModel& m);

// The fixed frame corpus used by reports and the acceptance suite:
// 1-point, 2-chain, 3-chain, V (root below two maximal), 3-fork.
std::vector<std::pair<std::string, Poset>> subframe_frame_corpus();

}  // namespace meetimp
