#ifndef MUIG_GEN_HPP
#define MUIG_GEN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>

#include "muig/interval.hpp"
#include "muig/model.hpp"

namespace muig {

struct GenParams {
    std::size_t n = 10;
    std::uint64_t seed = 1;
    // Left endpoints are multiples of 1/grid.
    std::int64_t grid = 2;
    // Relative weights of (+,+), (+,-), (-,+), (-,-).
    std::array<double, 4> kind_weights{1.0, 1.0, 1.0, 1.0};
    // Probability that an interval copies (left, kind) of an earlier one.
    double twin_rate = 0.0;
    // Left endpoints lie in [0, window); models then have at most `window`
    // columns. 0 picks ceil(n / 4).
    std::int64_t window = 0;
};

// Portable draws on top of std::mt19937_64; the mapping to ranges is spelled
// out here rather than left to the standard distributions, whose output
// differs between library implementations.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [0, 1) with 53 random bits.
    double unit();
    // Index drawn with probability proportional to weights[i].
    std::size_t weighted(const std::array<double, 4>& weights);

private:
    std::mt19937_64 engine_;
};

// n intervals with ids 0..n-1. Throws ValidationError on n == 0, grid <= 0 or
// weights that are negative or all zero.
Representation random_representation(const GenParams& p);

// build_model(random_representation(p)).
UBubbleModel random_model(const GenParams& p);

inline constexpr std::uint64_t kCorpusSeed = 0x6d756967u;
inline constexpr std::size_t kCorpusSize = 500;

// Parameters of instance `index` of the small-instance corpus: n in 1..14,
// window 1..6, mixed kinds, seed = base ^ index.
GenParams corpus_params(std::size_t index, std::uint64_t base = kCorpusSeed);

} // namespace muig

#endif // MUIG_GEN_HPP
