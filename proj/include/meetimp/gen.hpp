#pragma once

#include "meetimp/formula.hpp"
#include "meetimp/model.hpp"

#include <cstdint>
#include <random>

namespace meetimp {

// Seeded generators for the property suites. Everything is a pure function
// of the engine state, so a fixed seed reproduces a corpus exactly.
using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 20240811;

Poset random_poset(Rng& rng, int max_points);
UpSet random_upset(Rng& rng, const Poset& p);
ColouredModel random_model(Rng& rng, int max_points, int n);
Formula random_formula(Rng& rng, int n, int max_depth, bool fragment_only = false);

}  // namespace meetimp
