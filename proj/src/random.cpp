#include "vclab/random.hpp"

namespace vclab {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

SetSystem random_system(std::mt19937_64& rng, std::size_t ground_size, std::size_t members, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<BitVec> sets;
    sets.reserve(members);
    for (std::size_t i = 0; i < members; ++i) {
        BitVec s(ground_size);
        for (std::size_t x = 0; x < ground_size; ++x) s.set(x, coin(rng));
        sets.push_back(std::move(s));
    }
    return SetSystem(ground_size, std::move(sets));
}

BiRelation random_relation(std::mt19937_64& rng, std::size_t x_size, std::size_t y_size, double density) {
    std::bernoulli_distribution coin(density);
    BiRelation rel(x_size, y_size);
    for (std::size_t a = 0; a < x_size; ++a) {
        for (std::size_t b = 0; b < y_size; ++b) rel.set(a, b, coin(rng));
    }
    return rel;
}

}  // namespace vclab
