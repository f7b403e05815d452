#include "hsplab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace hsplab::algebra {

namespace {
constexpr std::uint64_t kEnumerationBound = 1000000;
}

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::uint64_t> m) : moduli(std::move(m)) {
    if (moduli.empty()) throw std::invalid_argument("AbelianGroupSpec: need at least one factor");
    for (auto mi : moduli) {
        if (mi < 2) throw std::invalid_argument("AbelianGroupSpec: every modulus must be >= 2");
        if (order_ > UINT64_MAX / mi) throw std::invalid_argument("AbelianGroupSpec: order overflow");
        order_ *= mi;
        exponent_ = std::lcm(exponent_, mi);
    }
}

GroupElement identity(const AbelianGroupSpec& g) {
    return GroupElement{std::vector<std::uint64_t>(g.rank(), 0)};
}

GroupElement element(const AbelianGroupSpec& g, std::vector<std::uint64_t> coords) {
    if (coords.size() != g.rank()) throw std::invalid_argument("element: coordinate count mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] %= g.moduli[i];
    return GroupElement{std::move(coords)};
}

std::uint64_t rank_of(const AbelianGroupSpec& g, const GroupElement& x) {
    if (x.coords.size() != g.rank()) throw std::invalid_argument("rank_of: spec mismatch");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) r = r * g.moduli[i] + x.coords[i] % g.moduli[i];
    return r;
}

GroupElement element_of_rank(const AbelianGroupSpec& g, std::uint64_t rank) {
    std::vector<std::uint64_t> c(g.rank());
    for (std::size_t i = g.rank(); i-- > 0;) {
        c[i] = rank % g.moduli[i];
        rank /= g.moduli[i];
    }
    return GroupElement{std::move(c)};
}

Character character_of_rank(const AbelianGroupSpec& g, std::uint64_t rank) {
    return Character{element_of_rank(g, rank).coords};
}

namespace {
void check_spec(const AbelianGroupSpec& g, const GroupElement& x, const char* who) {
    if (x.coords.size() != g.rank()) throw std::invalid_argument(std::string(who) + ": spec mismatch");
}
}  // namespace

GroupElement add(const AbelianGroupSpec& g, const GroupElement& x, const GroupElement& y) {
    check_spec(g, x, "add");
    check_spec(g, y, "add");
    std::vector<std::uint64_t> c(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) c[i] = (x.coords[i] + y.coords[i]) % g.moduli[i];
    return GroupElement{std::move(c)};
}

GroupElement neg(const AbelianGroupSpec& g, const GroupElement& x) {
    check_spec(g, x, "neg");
    std::vector<std::uint64_t> c(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        c[i] = x.coords[i] == 0 ? 0 : g.moduli[i] - x.coords[i];
    return GroupElement{std::move(c)};
}

GroupElement scalar_mul(const AbelianGroupSpec& g, std::uint64_t k, const GroupElement& x) {
    check_spec(g, x, "scalar_mul");
    std::vector<std::uint64_t> c(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        c[i] = (unsigned __int128)(x.coords[i]) * k % g.moduli[i];
    return GroupElement{std::move(c)};
}

namespace {
// Phase numerator t with Psi_a(x) = exp(2*pi*i * t / L), L = exponent of G.
std::uint64_t phase_numerator(const AbelianGroupSpec& g, const Character& a, const GroupElement& x) {
    const std::uint64_t L = g.exponent();
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::uint64_t ai = a.index[i] % g.moduli[i];
        std::uint64_t xi = x.coords[i] % g.moduli[i];
        std::uint64_t term = (unsigned __int128)(ai) * xi % g.moduli[i];
        t = (t + term * (L / g.moduli[i])) % L;
    }
    return t;
}
}  // namespace

cplx character_eval(const AbelianGroupSpec& g, const Character& a, const GroupElement& x) {
    if (a.index.size() != g.rank() || x.coords.size() != g.rank())
        throw std::invalid_argument("character_eval: spec mismatch");
    const std::uint64_t t = phase_numerator(g, a, x);
    const std::uint64_t l = g.exponent();
    // Quarter-turn phases come out exact.
    if (4 * t % l == 0) {
        switch (4 * t / l) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * double(t) / double(l));
}

bool character_is_trivial_at(const AbelianGroupSpec& g, const Character& a, const GroupElement& x) {
    return phase_numerator(g, a, x) == 0;
}

Character character_add(const AbelianGroupSpec& g, const Character& a, const Character& b) {
    return Character{add(g, GroupElement{a.index}, GroupElement{b.index}).coords};
}

Subgroup::Subgroup(AbelianGroupSpec spec, std::vector<GroupElement> generators)
    : spec_(std::move(spec)) {
    for (auto& gen : generators) generators_.push_back(element(spec_, gen.coords));
    if (generators_.empty()) generators_.push_back(identity(spec_));
}

Subgroup Subgroup::trivial(const AbelianGroupSpec& g) { return Subgroup(g, {identity(g)}); }

Subgroup Subgroup::full(const AbelianGroupSpec& g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::vector<std::uint64_t> c(g.rank(), 0);
        c[i] = 1;
        gens.push_back(GroupElement{std::move(c)});
    }
    return Subgroup(g, std::move(gens));
}

const std::vector<std::uint64_t>& Subgroup::element_ranks() const {
    if (!ranks_.empty()) return ranks_;
    // BFS closure over the generators.
    std::set<std::uint64_t> seen{rank_of(spec_, identity(spec_))};
    std::vector<GroupElement> frontier{identity(spec_)};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier) {
            for (const auto& gen : generators_) {
                GroupElement y = add(spec_, x, gen);
                if (seen.insert(rank_of(spec_, y)).second) {
                    if (seen.size() > kEnumerationBound)
                        throw std::runtime_error("subgroup enumeration bound exceeded");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    ranks_.assign(seen.begin(), seen.end());
    return ranks_;
}

std::vector<GroupElement> Subgroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(element_ranks().size());
    for (auto r : element_ranks()) out.push_back(element_of_rank(spec_, r));
    return out;
}

bool Subgroup::contains(const GroupElement& x) const {
    const auto& r = element_ranks();
    return std::binary_search(r.begin(), r.end(), rank_of(spec_, x));
}

bool Subgroup::operator==(const Subgroup& o) const {
    return spec_ == o.spec_ && element_ranks() == o.element_ranks();
}

std::vector<GroupElement> subgroup_enumerate(const Subgroup& h) { return h.elements(); }

std::vector<GroupElement> coset_decomposition(const AbelianGroupSpec& g, const Subgroup& h) {
    if (!(h.spec() == g)) throw std::invalid_argument("coset_decomposition: spec mismatch");
    if (g.order() > kEnumerationBound) throw std::runtime_error("coset_decomposition: group too large");
    std::vector<char> covered(g.order(), 0);
    for (auto r : h.element_ranks()) covered[r] = 1;
    std::vector<GroupElement> reps{identity(g)};
    for (std::uint64_t r = 0; r < g.order(); ++r) {
        if (covered[r]) continue;
        GroupElement rep = element_of_rank(g, r);
        reps.push_back(rep);
        for (auto hr : h.element_ranks())
            covered[rank_of(g, add(g, rep, element_of_rank(g, hr)))] = 1;
    }
    return reps;
}

cplx character_average_over(const Subgroup& h, const Character& a) {
    cplx sum = 0;
    for (auto r : h.element_ranks())
        sum += character_eval(h.spec(), a, element_of_rank(h.spec(), r));
    return sum / double(h.order());
}

namespace {

// Generic congruence kernel: { x in (+) Z/m_i : sum_i w_rows[r][i] * x_i == 0 (mod L) for all r },
// where w_rows carry the L/m_i weights already applied. Used for both the annihilator and
// the reconstruction kernel, which are the same computation with roles of a and x swapped.
std::vector<GroupElement> kernel_bruteforce(const AbelianGroupSpec& g,
                                            const std::vector<std::vector<std::uint64_t>>& w_rows) {
    if (g.order() > kEnumerationBound) throw std::runtime_error("kernel_bruteforce: group too large");
    const std::uint64_t L = g.exponent();
    std::vector<GroupElement> out;
    for (std::uint64_t r = 0; r < g.order(); ++r) {
        GroupElement x = element_of_rank(g, r);
        bool ok = true;
        for (const auto& row : w_rows) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < g.rank(); ++i)
                t = (t + row[i] % L * (x.coords[i] % L)) % L;
            if (t != 0) { ok = false; break; }
        }
        if (ok) out.push_back(std::move(x));
    }
    return out;
}

std::vector<GroupElement> kernel_snf(const AbelianGroupSpec& g,
                                     const std::vector<std::vector<std::uint64_t>>& w_rows) {
    const std::size_t n = g.rank();
    const std::size_t k = w_rows.size();
    const std::uint64_t L = g.exponent();
    // Solutions of A x == 0 (mod L) are the projection of the integer kernel of [A | L*I_k].
    IntMat m(k, n + k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < n; ++i) m(r, i) = mpz_class(w_rows[r][i]);
        m(r, n + r) = mpz_class(L);
    }
    SmithResult s = smith_normal_form(m);
    std::vector<GroupElement> gens;
    const std::size_t dmin = std::min(s.d.rows, s.d.cols);
    for (std::size_t j = 0; j < n + k; ++j) {
        bool in_kernel = j >= dmin || s.d(j, j) == 0;
        if (!in_kernel) continue;
        std::vector<std::uint64_t> c(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class v = s.v(i, j);
            mpz_class mi(g.moduli[i]);
            mpz_class red;
            mpz_mod(red.get_mpz_t(), v.get_mpz_t(), mi.get_mpz_t());
            c[i] = red.get_ui();
            nonzero |= c[i] != 0;
        }
        if (nonzero) gens.push_back(GroupElement{std::move(c)});
    }
    // The lattice also contains m_i * e_i implicitly; those reduce to 0 above, which is fine
    // because coordinates are already taken mod m_i.
    return gens;
}

std::vector<std::vector<std::uint64_t>> weighted_rows(const AbelianGroupSpec& g,
                                                      const std::vector<std::vector<std::uint64_t>>& raw) {
    const std::uint64_t L = g.exponent();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(raw.size());
    for (const auto& v : raw) {
        std::vector<std::uint64_t> w(g.rank());
        for (std::size_t i = 0; i < g.rank(); ++i) w[i] = (v[i] % g.moduli[i]) * (L / g.moduli[i]) % L;
        rows.push_back(std::move(w));
    }
    return rows;
}

}  // namespace

Subgroup annihilator(const Subgroup& h) {
    const AbelianGroupSpec& g = h.spec();
    std::vector<std::vector<std::uint64_t>> raw;
    for (const auto& gen : h.generators()) raw.push_back(gen.coords);
    // Triviality on the generators is triviality on all of H.
    auto gens = kernel_snf(g, weighted_rows(g, raw));
    return Subgroup(g, std::move(gens));
}

Subgroup double_annihilator(const Subgroup& h) { return annihilator(annihilator(h)); }

Subgroup subgroup_from_character_samples(const AbelianGroupSpec& g,
                                         const std::vector<Character>& samples,
                                         KernelMethod method) {
    if (samples.empty()) return Subgroup::full(g);
    std::vector<std::vector<std::uint64_t>> raw;
    for (const auto& a : samples) {
        if (a.index.size() != g.rank())
            throw std::invalid_argument("subgroup_from_character_samples: spec mismatch");
        raw.push_back(a.index);
    }
    auto rows = weighted_rows(g, raw);
    if (method == KernelMethod::Auto)
        method = g.order() <= kEnumerationBound ? KernelMethod::BruteForce : KernelMethod::SmithNormalForm;
    auto gens = method == KernelMethod::BruteForce ? kernel_bruteforce(g, rows) : kernel_snf(g, rows);
    return Subgroup(g, std::move(gens));
}

IntMat IntMat::eye(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMat::mul: shape mismatch");
    IntMat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const mpz_class& v = (*this)(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

namespace {

struct SnfWork {
    IntMat d, u, v, v_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols; ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows; ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v(i, a), v(i, b));
        for (std::size_t j = 0; j < v_inv.cols; ++j) std::swap(v_inv(a, j), v_inv(b, j));
    }
    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const mpz_class& c) {
        for (std::size_t j = 0; j < d.cols; ++j) d(a, j) += c * d(b, j);
        for (std::size_t j = 0; j < u.cols; ++j) u(a, j) += c * u(b, j);
    }
    // col[a] += c * col[b]; V <- V*E, Vinv <- E^{-1}*Vinv
    void add_col(std::size_t a, std::size_t b, const mpz_class& c) {
        for (std::size_t i = 0; i < d.rows; ++i) d(i, a) += c * d(i, b);
        for (std::size_t i = 0; i < v.rows; ++i) v(i, a) += c * v(i, b);
        for (std::size_t j = 0; j < v_inv.cols; ++j) v_inv(b, j) -= c * v_inv(a, j);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols; ++j) d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols; ++j) u(a, j) = -u(a, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SnfWork w;
    w.d = m;
    w.u = IntMat::eye(m.rows);
    w.v = IntMat::eye(m.cols);
    w.v_inv = IntMat::eye(m.cols);
    const std::size_t nmin = std::min(m.rows, m.cols);

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            // Find the minimum nonzero |entry| in the trailing block.
            std::size_t pi = s, pj = s;
            mpz_class best = 0;
            for (std::size_t i = s; i < m.rows; ++i)
                for (std::size_t j = s; j < m.cols; ++j) {
                    if (w.d(i, j) == 0) continue;
                    mpz_class mag = abs(w.d(i, j));
                    if (best == 0 || mag < best) { best = mag; pi = i; pj = j; }
                }
            if (best == 0) break;  // trailing block all zero
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);
            if (w.d(s, s) < 0) w.negate_row(s);

            bool reduced = true;
            for (std::size_t i = s + 1; i < m.rows; ++i) {
                if (w.d(i, s) == 0) continue;
                mpz_class q = w.d(i, s) / w.d(s, s);  // truncated; remainder handled next sweep
                if (q != 0) w.add_row(i, s, -q);
                if (w.d(i, s) != 0) reduced = false;
            }
            for (std::size_t j = s + 1; j < m.cols; ++j) {
                if (w.d(s, j) == 0) continue;
                mpz_class q = w.d(s, j) / w.d(s, s);
                if (q != 0) w.add_col(j, s, -q);
                if (w.d(s, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot divides everything below-right, or fold an offending row in and retry.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < m.rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < m.cols; ++j)
                    if (w.d(i, j) % w.d(s, s) != 0) {
                        w.add_row(s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.d(s, s) < 0) w.negate_row(s);
    }
    return {std::move(w.u), std::move(w.d), std::move(w.v), std::move(w.v_inv)};
}

}  // namespace hsplab::algebra
