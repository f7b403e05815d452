#include "hsplab/curvezeta.hpp"

#include <stdexcept>

namespace hsplab::curvezeta {

namespace ff = hsplab::ffield;

ProjectiveCurve::ProjectiveCurve(ffield::FieldSpec base_field, std::uint32_t d, std::vector<Monomial> t)
    : base(std::move(base_field)), degree(d), terms(std::move(t)) {
    bool nonzero = false;
    for (const auto& m : terms) {
        if (m.dx + m.dy + m.dz != degree)
            throw std::invalid_argument("ProjectiveCurve: term is not homogeneous of the stated degree");
        nonzero |= !ff::is_zero(m.coeff);
    }
    if (!nonzero) throw std::invalid_argument("ProjectiveCurve: the zero polynomial is not a curve");
}

ProjectiveCurve homogenize_weierstrass(const ffield::FieldSpec& base,
                                       const ffield::FieldElement& alpha,
                                       const ffield::FieldElement& beta) {
    // y^2 = x^3 + a x + b  ->  Y^2 Z - X^3 - a X Z^2 - b Z^3 = 0
    std::vector<Monomial> terms;
    terms.push_back({0, 2, 1, ff::one(base)});
    terms.push_back({3, 0, 0, ff::neg(base, ff::one(base))});
    if (!ff::is_zero(alpha)) terms.push_back({1, 0, 2, ff::neg(base, alpha)});
    if (!ff::is_zero(beta)) terms.push_back({0, 0, 3, ff::neg(base, beta)});
    return ProjectiveCurve(base, 3, std::move(terms));
}

namespace {

// Index-based field tables so the q^2 + q + 1 evaluations stay cheap.
struct EvalTables {
    std::uint64_t q = 0;
    std::vector<std::uint32_t> add_lut;  // q*q
    std::vector<std::uint32_t> mul_lut;  // q*q
    std::vector<std::uint32_t> pow_lut;  // (degree+1)*q: pow_lut[e*q + i] = i^e

    EvalTables(const ff::FieldSpec& f, std::uint32_t degree) : q(f.size()) {
        auto elems = ff::enumerate(f);
        add_lut.resize(q * q);
        mul_lut.resize(q * q);
        for (std::uint64_t i = 0; i < q; ++i)
            for (std::uint64_t j = 0; j <= i; ++j) {
                const std::uint32_t s = std::uint32_t(ff::index_of(f, ff::add(f, elems[i], elems[j])));
                const std::uint32_t m = std::uint32_t(ff::index_of(f, ff::mul(f, elems[i], elems[j])));
                add_lut[i * q + j] = add_lut[j * q + i] = s;
                mul_lut[i * q + j] = mul_lut[j * q + i] = m;
            }
        pow_lut.resize(std::size_t(degree + 1) * q);
        const std::uint32_t one_idx = std::uint32_t(ff::index_of(f, ff::one(f)));
        for (std::uint64_t i = 0; i < q; ++i) pow_lut[i] = one_idx;
        for (std::uint32_t e = 1; e <= degree; ++e)
            for (std::uint64_t i = 0; i < q; ++i)
                pow_lut[std::size_t(e) * q + i] = mul_lut[pow_lut[std::size_t(e - 1) * q + i] * q + i];
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_lut[std::size_t(a) * q + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_lut[std::size_t(a) * q + b]; }
    std::uint32_t pow(std::uint32_t a, std::uint32_t e) const { return pow_lut[std::size_t(e) * q + a]; }
};

}  // namespace

std::uint64_t count_points(const ProjectiveCurve& c, std::uint32_t r) {
    if (r < 1) throw std::invalid_argument("count_points: extension degree must be >= 1");
    std::uint64_t qr = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        qr *= c.base.size();
        if (qr > 1000000) throw std::invalid_argument("count_points: q^r exceeds the 10^6 bound");
    }
    // F_{q^r} represented as F_{p^(n*r)} with the base coefficients embedded.
    ff::FieldSpec ext = r == 1 && c.base.degree == 1
                            ? c.base
                            : ff::make_field(c.base.p, c.base.degree * r);

    std::uint64_t n = 0;
    if (ext.size() <= 2048) {
        // Index tables keep the q^2 + q + 1 evaluations cheap.
        EvalTables t(ext, c.degree);
        struct Term {
            std::uint32_t coeff, dx, dy, dz;
        };
        std::vector<Term> terms;
        terms.reserve(c.terms.size());
        for (const auto& m : c.terms)
            terms.push_back(
                {std::uint32_t(ff::index_of(ext, ff::embed(c.base, ext, m.coeff))), m.dx, m.dy, m.dz});

        const std::uint32_t zero_i = std::uint32_t(ff::index_of(ext, ff::zero(ext)));
        const std::uint32_t one_i = std::uint32_t(ff::index_of(ext, ff::one(ext)));
        auto vanishes = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            std::uint32_t acc = zero_i;
            for (const auto& term : terms)
                acc = t.add(acc,
                            t.mul(term.coeff, t.mul(t.pow(x, term.dx), t.mul(t.pow(y, term.dy), t.pow(z, term.dz)))));
            return acc == zero_i;
        };
        for (std::uint32_t y = 0; y < t.q; ++y)
            for (std::uint32_t z = 0; z < t.q; ++z)
                if (vanishes(one_i, y, z)) ++n;
        for (std::uint32_t z = 0; z < t.q; ++z)
            if (vanishes(zero_i, one_i, z)) ++n;
        if (vanishes(zero_i, zero_i, one_i)) ++n;
        return n;
    }

    // Large fields: direct evaluation without tables.
    std::vector<ff::FieldElement> lifted;
    lifted.reserve(c.terms.size());
    for (const auto& m : c.terms) lifted.push_back(ff::embed(c.base, ext, m.coeff));
    auto vanishes = [&](const ff::FieldElement& x, const ff::FieldElement& y, const ff::FieldElement& z) {
        ff::FieldElement acc = ff::zero(ext);
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            ff::FieldElement term = ff::mul(
                ext, lifted[i],
                ff::mul(ext, ff::pow(ext, x, c.terms[i].dx),
                        ff::mul(ext, ff::pow(ext, y, c.terms[i].dy), ff::pow(ext, z, c.terms[i].dz))));
            acc = ff::add(ext, acc, term);
        }
        return ff::is_zero(acc);
    };
    const auto elems = ff::enumerate(ext);
    const ff::FieldElement zero_e = ff::zero(ext), one_e = ff::one(ext);
    for (const auto& y : elems)
        for (const auto& z : elems)
            if (vanishes(one_e, y, z)) ++n;
    for (const auto& z : elems)
        if (vanishes(zero_e, one_e, z)) ++n;
    if (vanishes(zero_e, zero_e, one_e)) ++n;
    return n;
}

ZetaSeries zeta_from_counts(const std::vector<std::uint64_t>& counts) {
    const std::size_t r_max = counts.size();
    if (r_max < 1) throw std::invalid_argument("zeta_from_counts: need at least N_1");
    // A(T) = sum N_r T^r / r;  Z = exp(A) solves Z' = A' Z, so
    // n z_n = sum_{k=1}^{n} k a_k z_{n-k} with a_k = N_k / k.
    std::vector<mpq_class> a(r_max + 1, mpq_class(0));
    for (std::size_t k = 1; k <= r_max; ++k) {
        a[k] = mpq_class(static_cast<unsigned long>(counts[k - 1]), static_cast<unsigned long>(k));
        a[k].canonicalize();
    }
    ZetaSeries z;
    z.coeff.assign(r_max + 1, mpq_class(0));
    z.coeff[0] = 1;
    for (std::size_t n = 1; n <= r_max; ++n) {
        mpq_class s(0);
        for (std::size_t k = 1; k <= n; ++k) s += mpq_class(static_cast<unsigned long>(k)) * a[k] * z.coeff[n - k];
        z.coeff[n] = s / mpq_class(static_cast<unsigned long>(n));
    }
    return z;
}

std::vector<mpq_class> counts_from_zeta(const ZetaSeries& series) {
    const std::size_t r_max = series.truncation_order();
    if (series.coeff.empty() || series.coeff[0] != 1)
        throw std::invalid_argument("counts_from_zeta: constant coefficient must be 1");
    // From n z_n = sum_{k=1}^{n} k a_k z_{n-k}, solve for k a_k = N_k upward.
    std::vector<mpq_class> n_r(r_max + 1, mpq_class(0));  // n_r[k] = k * a_k = N_k
    for (std::size_t n = 1; n <= r_max; ++n) {
        mpq_class s = mpq_class(static_cast<unsigned long>(n)) * series.coeff[n];
        for (std::size_t k = 1; k < n; ++k) s -= n_r[k] * series.coeff[n - k];
        n_r[n] = s;  // z_0 = 1 multiplies the k = n term
    }
    return {n_r.begin() + 1, n_r.end()};
}

std::uint64_t genus(std::uint32_t degree) {
    if (degree < 1) throw std::invalid_argument("genus: degree must be >= 1");
    const std::int64_t d = degree;
    return std::uint64_t((d - 1) * (d - 2) / 2);
}

}  // namespace hsplab::curvezeta
