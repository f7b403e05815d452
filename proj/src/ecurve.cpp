#include "hsplab/ecurve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hsplab/shor.hpp"

namespace hsplab::ecurve {

namespace ff = hsplab::ffield;

Curve::Curve(FieldSpec f, FieldElement a, FieldElement b)
    : field(std::move(f)), alpha(std::move(a)), beta(std::move(b)) {
    if (field.p == 2 || field.p == 3)
        throw std::invalid_argument("Curve: characteristic 2 and 3 are not supported by the slope formulas");
    // 4*alpha^3 + 27*beta^2 != 0 keeps the curve nonsingular.
    auto scalar = [&](std::uint64_t k) {
        FieldElement e = ff::zero(field);
        e.coeffs[0] = k % field.p;
        return e;
    };
    FieldElement disc = ff::add(field, ff::mul(field, scalar(4), ff::pow(field, alpha, 3)),
                                ff::mul(field, scalar(27), ff::pow(field, beta, 2)));
    if (ff::is_zero(disc)) throw std::invalid_argument("Curve: singular (4a^3 + 27b^2 = 0)");
}

bool Point::operator<(const Point& o) const {
    if (is_infinity() != o.is_infinity()) return is_infinity();  // O sorts first
    if (is_infinity()) return false;
    if (!(affine->first == o.affine->first)) return affine->first < o.affine->first;
    return affine->second < o.affine->second;
}

bool is_on_curve(const Curve& c, const Point& pt) {
    if (pt.is_infinity()) return true;
    const auto& [x, y] = *pt.affine;
    const FieldSpec& f = c.field;
    FieldElement lhs = ff::mul(f, y, y);
    FieldElement rhs = ff::add(f, ff::add(f, ff::pow(f, x, 3), ff::mul(f, c.alpha, x)), c.beta);
    return lhs == rhs;
}

Point neg(const Curve& c, const Point& p) {
    if (p.is_infinity()) return p;
    return Point::at(p.affine->first, ff::neg(c.field, p.affine->second));
}

Point add(const Curve& c, const Point& p, const Point& q) {
    const FieldSpec& f = c.field;
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const auto& [xp, yp] = *p.affine;
    const auto& [xq, yq] = *q.affine;

    FieldElement lambda = ff::zero(f);
    if (xp == xq) {
        if (!(yp == yq)) return Point::infinity();      // reflection pair (x, y) + (x, -y)
        if (ff::is_zero(yp)) return Point::infinity();  // tangent is vertical: 2P = O
        // lambda = (3 x^2 + alpha) / (2 y)
        FieldElement three = ff::zero(f); three.coeffs[0] = 3 % f.p;
        FieldElement two = ff::zero(f); two.coeffs[0] = 2 % f.p;
        FieldElement num = ff::add(f, ff::mul(f, three, ff::mul(f, xp, xp)), c.alpha);
        lambda = ff::mul(f, num, ff::inv(f, ff::mul(f, two, yp)));
    } else {
        // lambda = (y_Q - y_P) / (x_Q - x_P)
        lambda = ff::mul(f, ff::sub(f, yq, yp), ff::inv(f, ff::sub(f, xq, xp)));
    }
    FieldElement xr = ff::sub(f, ff::sub(f, ff::mul(f, lambda, lambda), xp), xq);
    FieldElement yr = ff::sub(f, ff::mul(f, lambda, ff::sub(f, xp, xr)), yp);
    return Point::at(std::move(xr), std::move(yr));
}

Point scalar_mul(const Curve& c, std::uint64_t r, const Point& p) {
    Point acc = Point::infinity();
    Point base = p;
    while (r > 0) {
        if (r & 1) acc = add(c, acc, base);
        base = add(c, base, base);
        r >>= 1;
    }
    return acc;
}

std::vector<Point> enumerate_points(const Curve& c) {
    const FieldSpec& f = c.field;
    if (f.size() > 1000000) throw std::invalid_argument("enumerate_points: field size exceeds 10^6");
    std::vector<Point> pts{Point::infinity()};
    for (const auto& x : ff::enumerate(f)) {
        FieldElement rhs = ff::add(f, ff::add(f, ff::pow(f, x, 3), ff::mul(f, c.alpha, x)), c.beta);
        for (const auto& y : ff::enumerate(f))
            if (ff::mul(f, y, y) == rhs) pts.push_back(Point::at(x, y));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::uint64_t point_order(const Curve& c, const Point& p) {
    std::uint64_t n = 1;
    Point acc = p;
    while (!acc.is_infinity()) {
        acc = add(c, acc, p);
        ++n;
        if (n > 2 * c.field.size() + 2) throw std::logic_error("point_order: runaway iteration");
    }
    return p.is_infinity() ? 1 : n;
}

std::optional<std::uint64_t> ecdlp(const Curve& c, const Point& p, const Point& q,
                                   EcdlpMode mode, Rng& rng) {
    if (!is_on_curve(c, p) || !is_on_curve(c, q)) throw std::invalid_argument("ecdlp: points not on curve");
    const std::uint64_t n = point_order(c, p);

    // Index <P> canonically so the dlog pipeline can work on opaque codes.
    std::vector<Point> cyclic;
    cyclic.reserve(n);
    Point acc = Point::infinity();
    for (std::uint64_t i = 0; i < n; ++i) { cyclic.push_back(acc); acc = add(c, acc, p); }
    std::vector<Point> sorted = cyclic;
    std::sort(sorted.begin(), sorted.end());
    std::map<Point, std::uint64_t> code_of;
    for (std::uint64_t i = 0; i < sorted.size(); ++i) code_of.emplace(sorted[i], i);

    auto it = code_of.find(q);
    if (it == code_of.end()) return std::nullopt;  // Q outside <P>

    if (mode == EcdlpMode::BruteForce) {
        for (std::uint64_t r = 0; r < n; ++r)
            if (cyclic[r] == q) return r;
        return std::nullopt;
    }

    if (n == 1) return q.is_infinity() ? std::optional<std::uint64_t>(0) : std::nullopt;
    shor::DlogInstance inst{
        n,
        code_of.at(cyclic[1 % n]),
        it->second,
        [&, sorted](std::uint64_t a, std::uint64_t b) {
            return code_of.at(add(c, sorted[a], sorted[b]));
        },
        code_of.at(Point::infinity()),
    };
    return shor::dlog_quantum(inst, rng);
}

std::string render(const Curve& c, const Point& p) {
    if (p.is_infinity()) return "O";
    return "(" + ff::render(c.field, p.affine->first) + ", " + ff::render(c.field, p.affine->second) + ")";
}

}  // namespace hsplab::ecurve
