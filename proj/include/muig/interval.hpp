#ifndef MUIG_INTERVAL_HPP
#define MUIG_INTERVAL_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "muig/graph.hpp"
#include "muig/rational.hpp"

namespace muig {

// Endpoint signs of a unit interval: '+' closed, '-' open.
struct IntervalKind {
    bool left_closed = true;
    bool right_closed = true;

    static constexpr IntervalKind closed() { return {true, true}; }
    static constexpr IntervalKind closed_open() { return {true, false}; }
    static constexpr IntervalKind open_closed() { return {false, true}; }
    static constexpr IntervalKind open() { return {false, false}; }

    // "++", "+-", "-+", "--"; throws ParseError otherwise.
    static IntervalKind parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const IntervalKind&, const IntervalKind&) = default;
};

// Quadrant slot of a kind inside a bubble: 0 = (+,+), 1 = (+,-), 2 = (-,+), 3 = (-,-).
enum class Quadrant : int { PP = 0, PM = 1, MP = 2, MM = 3 };

inline constexpr std::array<Quadrant, 4> kAllQuadrants = {Quadrant::PP, Quadrant::PM, Quadrant::MP, Quadrant::MM};

constexpr Quadrant quadrant_of(IntervalKind k) {
    if (k.left_closed) return k.right_closed ? Quadrant::PP : Quadrant::PM;
    return k.right_closed ? Quadrant::MP : Quadrant::MM;
}

constexpr IntervalKind kind_of(Quadrant q) {
    switch (q) {
    case Quadrant::PP: return IntervalKind::closed();
    case Quadrant::PM: return IntervalKind::closed_open();
    case Quadrant::MP: return IntervalKind::open_closed();
    case Quadrant::MM: return IntervalKind::open();
    }
    return IntervalKind::closed();
}

// Unit interval [left, left+1] with the given endpoint signs.
struct UnitInterval {
    VertexId vertex = 0;
    Rational left;
    IntervalKind kind;

    Rational right() const { return left + Rational(1); }

    friend bool operator==(const UnitInterval&, const UnitInterval&) = default;
};

// Point-set intersection test honoring open and closed endpoints.
bool intersects(const UnitInterval& a, const UnitInterval& b);

struct Representation {
    std::vector<UnitInterval> intervals;

    // Throws ValidationError on duplicate vertex ids.
    void validate() const;
};

Graph graph_of_representation(const Representation& rep);

} // namespace muig

#endif // MUIG_INTERVAL_HPP
