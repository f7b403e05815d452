// Elliptic curves Y^2 = X^3 + alpha*X + beta over finite fields of
// characteristic other than 2 and 3: the chord-and-tangent group law with the
// explicit slope formulas, enumeration, scalar multiplication, and ECDLP in
// both brute-force and quantum (discrete-log pipeline) modes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsplab/ffield.hpp"
#include "hsplab/rng.hpp"

namespace hsplab::ecurve {

using ffield::FieldElement;
using ffield::FieldSpec;

struct Curve {
    FieldSpec field;
    FieldElement alpha;
    FieldElement beta;

    /// Rejects characteristic 2/3 and singular curves (4a^3 + 27b^2 == 0).
    Curve(FieldSpec f, FieldElement a, FieldElement b);
};

/// Affine point or the point at infinity O.
struct Point {
    std::optional<std::pair<FieldElement, FieldElement>> affine;

    static Point infinity() { return Point{}; }
    static Point at(FieldElement x, FieldElement y) { return Point{std::make_pair(std::move(x), std::move(y))}; }
    bool is_infinity() const { return !affine.has_value(); }

    bool operator==(const Point& o) const { return affine == o.affine; }
    bool operator<(const Point& o) const;
};

bool is_on_curve(const Curve& c, const Point& pt);

/// Full case analysis: identity, reflection pair, chord, tangent.
Point add(const Curve& c, const Point& p, const Point& q);
Point neg(const Curve& c, const Point& p);

/// Double-and-add r*P.
Point scalar_mul(const Curve& c, std::uint64_t r, const Point& p);

/// All affine solutions plus O; field size <= 10^6.
std::vector<Point> enumerate_points(const Curve& c);

/// Order of the cyclic subgroup <p> by iterated addition.
std::uint64_t point_order(const Curve& c, const Point& p);

enum class EcdlpMode { BruteForce, Quantum };

/// Smallest r >= 0 with r*P == Q; empty when Q is not in <P>.
std::optional<std::uint64_t> ecdlp(const Curve& c, const Point& p, const Point& q,
                                   EcdlpMode mode, Rng& rng);

/// Fixed rendering: "(x, y)" with field-element rendering inside, or "O".
std::string render(const Curve& c, const Point& p);

}  // namespace hsplab::ecurve
