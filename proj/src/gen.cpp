#include "muig/gen.hpp"

#include "muig/bubble.hpp"
#include "muig/error.hpp"

namespace muig {

std::uint64_t Random::below(std::uint64_t bound) {
    // Reject the low residues that would bias the modulo.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

double Random::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Random::weighted(const std::array<double, 4>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    const double x = unit() * total;
    double acc = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) continue;
        acc += weights[i];
        last = i;
        if (x < acc) return i;
    }
    return last;
}

Representation random_representation(const GenParams& p) {
    if (p.n == 0) throw ValidationError("n must be at least 1");
    if (p.grid <= 0) throw ValidationError("grid must be positive");
    if (p.window < 0) throw ValidationError("window must be nonnegative");
    double total = 0;
    for (double w : p.kind_weights) {
        if (w < 0) throw ValidationError("kind weights must be nonnegative");
        total += w;
    }
    if (total <= 0) throw ValidationError("at least one kind weight must be positive");

    const std::int64_t window = p.window ? p.window : static_cast<std::int64_t>((p.n + 3) / 4);
    const auto slots = static_cast<std::uint64_t>(window * p.grid);
    Random rng(p.seed);
    Representation rep;
    rep.intervals.reserve(p.n);
    for (std::size_t v = 0; v < p.n; ++v) {
        UnitInterval iv;
        iv.vertex = static_cast<VertexId>(v);
        if (v > 0 && p.twin_rate > 0 && rng.unit() < p.twin_rate) {
            const UnitInterval& src = rep.intervals[rng.below(v)];
            iv.left = src.left;
            iv.kind = src.kind;
        } else {
            iv.left = Rational(static_cast<std::int64_t>(rng.below(slots)), p.grid);
            iv.kind = kind_of(static_cast<Quadrant>(rng.weighted(p.kind_weights)));
        }
        rep.intervals.push_back(iv);
    }
    return rep;
}

UBubbleModel random_model(const GenParams& p) { return build_model(random_representation(p)); }

GenParams corpus_params(std::size_t index, std::uint64_t base) {
    static constexpr std::array<std::array<double, 4>, 5> kWeights = {{
        {1, 1, 1, 1},
        {1, 0, 0, 0},
        {3, 1, 1, 1},
        {1, 2, 2, 1},
        {0, 1, 1, 2},
    }};
    GenParams p;
    p.seed = base ^ index;
    p.n = 1 + index % 14;
    p.window = static_cast<std::int64_t>(1 + (index / 14) % 6);
    p.grid = static_cast<std::int64_t>(1 + index % 4);
    p.kind_weights = kWeights[index % kWeights.size()];
    p.twin_rate = index % 3 == 0 ? 0.25 : 0.0;
    return p;
}

} // namespace muig
