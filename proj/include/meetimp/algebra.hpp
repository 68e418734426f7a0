#pragma once

#include "meetimp/dejongh.hpp"
#include "meetimp/formula.hpp"
#include "meetimp/model.hpp"
#include "meetimp/universal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <vector>

namespace meetimp {

using BigInt = boost::multiprecision::cpp_int;

// Exact number of up-sets of a poset, by memoized branch-on-a-maximal-point
// recursion with connected-component splitting.
BigInt count_upsets(const Poset& p);

// The free n-generated implicative meet-semilattice, realized as the up-set
// algebra of the separated-hereditary part of U(n). Elements are up-sets of
// the carrier; meet is intersection, implication the Heyting implication of
// up-sets, join plain union, bottom the empty set (the class of
// p1 & ... & pn), top the full carrier.
struct FreeMeetImpAlgebra {
  int n = 0;
  TruncatedUniversalModel carrier;   // the model U(n)_{meet,imp}
  std::vector<UpSet> generators;     // g_1..g_n = colour-bit up-sets
  BigInt element_count;              // count_upsets of the carrier

  const ColouredModel& model() const { return carrier.sm.model; }
  UpSet meet(const UpSet& a, const UpSet& b) const { return a & b; }
  UpSet implies(const UpSet& a, const UpSet& b) const { return model().poset.implication(a, b); }
  UpSet join(const UpSet& a, const UpSet& b) const { return a | b; }
  UpSet bottom() const { return model().poset.empty(); }
  UpSet top() const { return model().poset.full(); }
};

FreeMeetImpAlgebra free_meet_impl_algebra(int n, UniverseStore& store,
                                          std::size_t budget = kDefaultPointBudget);

// The s-translation: the unique Heyting homomorphism from full IPC formulas
// onto the free implicative meet-semilattice sending p_i to g_i. Since the
// algebra's join and bottom coincide with union and the empty set, this is
// evaluation of f over the carrier model.
UpSet s_translate(const Formula& f, const FreeMeetImpAlgebra& alg);

struct ExtractionResult {
  std::optional<Formula> formula;
  bool budget_exhausted = false;
  std::size_t settled = 0;  // distinct elements reached
};

// Finds a meet-implication formula denoting the element e, by shortest-first
// closure of {p1..pn, T} under & and -> with one representative formula per
// element (smallest node count, ties by render string). Complete whenever
// the algebra has at most 64 elements; budgeted beyond, where a miss means
// budget exhaustion, never nonexistence.
ExtractionResult formula_for_element(const FreeMeetImpAlgebra& alg, const UpSet& e,
                                     std::size_t budget = 200000);

// Representative formulas for every element; requires the closure to
// complete within the budget. Keys ascend as bit patterns.
std::map<UpSet, Formula> extract_all_formulas(const FreeMeetImpAlgebra& alg,
                                              std::size_t budget = 200000);

// Number of distinct elements generated by {g_1..g_n, top} under meet and
// implication; the syntactic route to |F(n)|, independent of count_upsets.
std::size_t generator_closure_size(const FreeMeetImpAlgebra& alg, std::size_t cap = 1u << 20);

// The restriction/corestriction maps tying a model M, its separated part
// M^s, and the generated submodel im(f) of U(n) together:
//   q : U(M)   -> U(M^s)   restriction, lower adjoint of r
//   r : U(M^s) -> U(M)     r(V) = {x | every separated y >= x lies in V}
//   h : U(M_wt) -> U(M^s)  preimage under f, a Heyting homomorphism
//   h_flat : U(M^s) -> U(M_wt)  image under f, lower adjoint of h
//   t : U(trunc) -> U(M_wt)     intersection with the carrier of M_wt
struct AdjointBundle {
  const ColouredModel* m = nullptr;
  Submodel sep;            // M^s
  std::vector<int> f;      // M^s point -> store id
  StoreModel image;        // M_wt = im(f)

  UpSet q(const UpSet& u) const;
  UpSet r(const UpSet& v) const;
  UpSet h(const UpSet& w) const;
  UpSet h_flat(const UpSet& s) const;
  UpSet t(const StoreModel& trunc, const UpSet& u) const;
  UpSet rh(const UpSet& w) const { return r(h(w)); }
};

// The bundle keeps a pointer to m; the model must outlive it.
AdjointBundle restriction_adjoints(const ColouredModel& m, UniverseStore& store);

// Explicit finite lattice with order, meet and join tables. Validated to be
// a bounded lattice on construction; distributivity is checked where the
// duality requires it.
class FiniteLattice {
public:
  static FiniteLattice from_upsets(const Poset& p);
  // From an explicit order; throws unless it is a lattice.
  static FiniteLattice from_order(std::size_t k, const std::function<bool(int, int)>& leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(int a, int b) const { return leq_[a].test(b); }
  int meet(int a, int b) const { return meet_[a][static_cast<std::size_t>(b)]; }
  int join(int a, int b) const { return join_[a][static_cast<std::size_t>(b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool is_distributive() const;
  bool is_join_irreducible(int a) const;
  std::vector<int> join_irreducibles() const;

private:
  std::vector<Bits> leq_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

// The Birkhoff dual: join-irreducible elements ordered by reverse lattice
// order, matching the poset of prime filters (the filter of j is contained
// in the filter of k exactly when k <= j). Throws on non-distributive input.
Poset dual_poset_of_lattice(const FiniteLattice& l);

// Checks that d |-> {j join-irreducible | j <= d} is a lattice isomorphism
// onto the up-sets of the dual poset.
bool eta_isomorphism_holds(const FiniteLattice& l);

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace meetimp
