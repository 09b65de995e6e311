#pragma once

#include <cstddef>
#include <random>

#include "vclab/relation.hpp"
#include "vclab/set_system.hpp"

namespace vclab {

/// Each of `members` candidate sets includes each element with probability `density`.
SetSystem random_system(std::mt19937_64& rng, std::size_t ground_size, std::size_t members, double density = 0.5);

BiRelation random_relation(std::mt19937_64& rng, std::size_t x_size, std::size_t y_size, double density = 0.5);

/// Uniform integer in [lo, hi].
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

}  // namespace vclab
