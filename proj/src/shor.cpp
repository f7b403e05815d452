#include "hsplab/shor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hsplab/numtheory.hpp"

namespace hsplab::shor {

namespace nt = hsplab::numtheory;

namespace {

std::size_t ceil_log2(std::uint64_t n) {
    std::size_t t = 0;
    while ((std::uint64_t(1) << t) < n) ++t;
    return t;
}

std::size_t round_budget(std::uint64_t group_order) {
    return std::max<std::size_t>(24, 4 * ceil_log2(group_order) + 8);
}

}  // namespace

std::uint64_t group_pow(const DlogInstance& inst, std::uint64_t base, std::uint64_t e) {
    std::uint64_t acc = inst.identity_code;
    std::uint64_t b = base;
    while (e > 0) {
        if (e & 1) acc = inst.mul(acc, b);
        b = inst.mul(b, b);
        e >>= 1;
    }
    return acc;
}

qsim::Distribution period_finding_distribution(const PeriodicOracle& oracle) {
    AbelianGroupSpec g({oracle.domain_size});
    auto state = qsim::apply_oracle(qsim::uniform_superposition(g), oracle.f);
    auto mix = qsim::discard_register(state, qsim::Register::Value);
    return qsim::measure_distribution(qsim::qft_apply(mix));
}

std::uint64_t find_period(const PeriodicOracle& oracle, std::size_t max_rounds, Rng& rng) {
    const std::uint64_t n = oracle.domain_size;
    if (oracle.promised_period == 0 || n % oracle.promised_period != 0)
        throw std::invalid_argument("find_period: promised period must divide the domain size");
    const auto dist = period_finding_distribution(oracle);
    const std::uint64_t step = n / oracle.promised_period;

    std::uint64_t g = n;
    std::size_t stable = 0;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const std::uint64_t y = qsim::sample(dist, rng);
        if (y % step != 0)
            throw std::runtime_error("find_period: promise violation, outcome is not a multiple of N/r");
        const std::uint64_t g2 = std::gcd(g, y);
        stable = g2 == g ? stable + 1 : 0;
        g = g2;
        if (stable >= 8) break;
    }
    return n / g;
}

MillerAttempt miller_attempt(std::uint64_t n, std::uint64_t a, const OrderFinder& find_order, Rng& rng) {
    if (std::gcd(a, n) != 1) throw std::invalid_argument("miller_attempt: a must be coprime to n");
    MillerAttempt out;
    out.a = a;
    out.order = find_order(a, n, rng);
    if (out.order % 2 != 0) return out;  // odd order: failed attempt
    const std::uint64_t half = nt::mod_pow(nt::BigInt(a), nt::BigInt(out.order / 2), nt::BigInt(n)).get_ui();
    if (half == n - 1) return out;  // a^{r/2} == -1: failed attempt
    const std::uint64_t d = std::gcd(half - 1, n);
    if (d > 1 && d < n) {
        out.useful = true;
        out.factor = d;
    }
    return out;
}

namespace {

void check_miller_preconditions(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("miller_factor: N must be odd and >= 3");
    nt::Factorization f = nt::factorize(nt::BigInt(n));
    if (f.factors.size() == 1) {
        if (f.factors[0].second == 1) throw std::invalid_argument("miller_factor: N is prime");
        throw std::invalid_argument("miller_factor: N is a prime power");
    }
}

}  // namespace

std::uint64_t quantum_order(std::uint64_t a, std::uint64_t n, Rng& rng) {
    // r <= phi(n) < n, and r rarely divides a convenient modulus, so run the
    // hidden-periodicity pipeline with bound n.
    auto f = [a, n](std::uint64_t x) {
        return nt::mod_pow(nt::BigInt(a), nt::BigInt(x), nt::BigInt(n)).get_ui();
    };
    return hidden_period_over_Z(f, n, rng);
}

std::uint64_t miller_factor(std::uint64_t n, Rng& rng) {
    check_miller_preconditions(n);
    const OrderFinder finder = [](std::uint64_t a, std::uint64_t m, Rng& r) {
        return quantum_order(a, m, r);
    };
    for (std::size_t tries = 0; tries < 256; ++tries) {
        const std::uint64_t a = 2 + rng.below(n - 3);
        const std::uint64_t d = std::gcd(a, n);
        if (d != 1) return d;  // lucky gcd is already a nontrivial factor
        MillerAttempt attempt = miller_attempt(n, a, finder, rng);
        if (attempt.factor) return *attempt.factor;
    }
    throw std::runtime_error("miller_factor: retry budget exhausted");
}

std::uint64_t dlog_bruteforce(const DlogInstance& inst) {
    std::uint64_t acc = inst.identity_code;
    for (std::uint64_t l = 0; l < inst.order; ++l) {
        if (acc == inst.target) return l;
        acc = inst.mul(acc, inst.generator);
    }
    throw std::invalid_argument("dlog_bruteforce: target is not in <g>");
}

qsim::Distribution dlog_round_distribution(const DlogInstance& inst) {
    const std::uint64_t n = inst.order;
    AbelianGroupSpec g2({n, n});
    // f(a, b) = x^a * g^b; precompute the two power ladders.
    std::vector<std::uint64_t> xpow(n), gpow(n);
    xpow[0] = gpow[0] = inst.identity_code;
    for (std::uint64_t i = 1; i < n; ++i) {
        xpow[i] = inst.mul(xpow[i - 1], inst.target);
        gpow[i] = inst.mul(gpow[i - 1], inst.generator);
    }
    auto oracle = [&](std::uint64_t rank) {
        const std::uint64_t a = rank / n, b = rank % n;
        return inst.mul(xpow[a], gpow[b]);
    };
    auto state = qsim::apply_oracle(qsim::uniform_superposition(g2), oracle);
    auto mix = qsim::discard_register(state, qsim::Register::Value);
    return qsim::measure_distribution(qsim::qft_apply(mix));
}

std::uint64_t dlog_quantum(const DlogInstance& inst, Rng& rng) {
    const std::uint64_t n = inst.order;
    if (inst.target == inst.identity_code) return 0;
    const auto dist = dlog_round_distribution(inst);

    auto verify = [&](std::uint64_t l) { return group_pow(inst, inst.generator, l) == inst.target; };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> kept;  // (u, gamma), gamma != 0
    const std::size_t budget = round_budget(n * n);
    for (std::size_t round = 0; round < budget; ++round) {
        const std::uint64_t outcome = qsim::sample(dist, rng);
        const std::uint64_t u = outcome / n, gamma = outcome % n;
        if (gamma == 0) continue;  // uninformative draw
        kept.emplace_back(u, gamma);

        // Invertible gamma resolves a round on its own.
        if (std::gcd(gamma, n) == 1) {
            const std::uint64_t inv =
                nt::mod_inverse(nt::BigInt(gamma), nt::BigInt(n)).get_ui();
            const std::uint64_t l = (unsigned __int128)(u)*inv % n;
            if (verify(l)) return l;
        }

        // Pairwise combination (the gcd route): candidates l solve
        // gamma*l == u (mod N); enumerate the gcd-many solutions and verify.
        const auto& [u2, gamma2] = kept.back();
        for (const auto& [u1, gamma1] : kept) {
            // Solve the first congruence and filter by the second.
            const std::uint64_t d1 = std::gcd(gamma1, n);
            if (u1 % d1 != 0) continue;
            const std::uint64_t n1 = n / d1;
            const std::uint64_t base =
                (unsigned __int128)(u1 / d1) *
                nt::mod_inverse(nt::BigInt(gamma1 / d1), nt::BigInt(n1)).get_ui() % n1;
            for (std::uint64_t k = 0; k < d1 && k < 4096; ++k) {
                const std::uint64_t l = (base + k * n1) % n;
                if ((unsigned __int128)(gamma2)*l % n == u2 && verify(l)) return l;
            }
        }
    }
    throw std::runtime_error("dlog_quantum: no verified candidate; target may not be in <g>");
}

HspResult abelian_hsp(const AbelianGroupSpec& g,
                      const std::function<std::uint64_t(std::uint64_t)>& oracle, Rng& rng) {
    auto state = qsim::apply_oracle(qsim::uniform_superposition(g), oracle);
    auto mix = qsim::discard_register(state, qsim::Register::Value);
    const auto dist = qsim::measure_distribution(qsim::qft_apply(mix));

    HspResult result{Subgroup::full(g), {}, 0};
    const std::size_t min_rounds = ceil_log2(g.order()) + 4;
    const std::size_t budget = round_budget(g.order());
    std::optional<Subgroup> candidate;
    std::size_t stable = 0;
    for (std::size_t round = 0; round < budget; ++round) {
        ++result.rounds;
        const std::uint64_t a = qsim::sample(dist, rng);
        result.samples.push_back(algebra::character_of_rank(g, a));
        if (round + 1 < min_rounds) continue;
        Subgroup next = algebra::subgroup_from_character_samples(g, result.samples);
        if (candidate && next == *candidate) {
            if (++stable >= 2) { candidate = next; break; }
        } else {
            stable = 0;
        }
        candidate = std::move(next);
    }
    if (!candidate) candidate = algebra::subgroup_from_character_samples(g, result.samples);
    result.subgroup = *candidate;

    if (g.order() <= 10000) {
        // Exhaustive verification of "F(x) = F(y) iff x - y in H": F must be
        // constant on every coset of H, and the number of distinct values
        // must equal the number of cosets.
        const Subgroup& h = result.subgroup;
        std::set<std::uint64_t> values;
        for (std::uint64_t x = 0; x < g.order(); ++x) {
            const std::uint64_t fx = oracle(x);
            values.insert(fx);
            GroupElement ex = algebra::element_of_rank(g, x);
            for (auto hr : h.element_ranks()) {
                GroupElement y = algebra::add(g, ex, algebra::element_of_rank(g, hr));
                if (oracle(algebra::rank_of(g, y)) != fx)
                    throw std::runtime_error("abelian_hsp: F is not constant on cosets of the result");
            }
        }
        if (values.size() != g.order() / h.order())
            throw std::runtime_error("abelian_hsp: F does not separate the cosets of the result");
    }
    return result;
}

std::uint64_t hidden_period_over_Z(const std::function<std::uint64_t(std::uint64_t)>& f,
                                   std::uint64_t bound, Rng& rng) {
    if (bound == 0) throw std::invalid_argument("hidden_period_over_Z: bound must be positive");
    if (f(0) == f(1)) return 1;  // p = 1 (the promise makes f(0) = f(1) exact for it)
    if (bound == 1) throw std::invalid_argument("hidden_period_over_Z: f is not constant but bound is 1");
    std::uint64_t q = 2;
    while (q < bound * bound) q <<= 1;
    if (q > qsim::kAmplitudeBound)
        throw std::invalid_argument("hidden_period_over_Z: bound^2 exceeds the simulator limit");

    AbelianGroupSpec g({q});
    auto state = qsim::apply_oracle(qsim::uniform_superposition(g), f);
    auto mix = qsim::discard_register(state, qsim::Register::Value);
    const auto dist = qsim::measure_distribution(qsim::qft_apply(mix));

    auto verified = [&](std::uint64_t p) { return p >= 1 && p <= bound && f(0) == f(p); };

    std::uint64_t cand = 1;
    const std::size_t budget = round_budget(q);
    for (std::size_t round = 0; round < budget; ++round) {
        const std::uint64_t y = qsim::sample(dist, rng);
        // Closest convergent of y/Q with denominator <= bound.
        std::uint64_t den = 1;
        for (const auto& c : nt::convergents(nt::BigInt(y), nt::BigInt(q))) {
            if (c.den > nt::BigInt(bound)) break;
            den = c.den.get_ui();
        }
        const std::uint64_t merged = std::lcm(cand, den);
        cand = merged <= bound ? merged : den;  // a bad draw can overshoot; restart from this draw
        if (verified(cand)) {
            // cand is a multiple of the true period; the period is its
            // smallest divisor that f confirms.
            for (std::uint64_t d = 1; d * d <= cand; ++d) {
                if (cand % d != 0) continue;
                if (verified(d)) { cand = d; break; }
                if (d > 1 && verified(cand / d)) cand = cand / d;
            }
            return cand;
        }
    }
    throw std::runtime_error("hidden_period_over_Z: round budget exhausted without a verified period");
}

Decomposition decompose_abelian(const EncodedGroup& eg, Rng& rng) {
    if (eg.generators.empty()) throw std::invalid_argument("decompose_abelian: need at least one generator");
    const std::size_t k = eg.generators.size();

    auto times = [&](std::uint64_t n, std::uint64_t code) {
        std::uint64_t acc = eg.zero, b = code;
        while (n > 0) {
            if (n & 1) acc = eg.add(acc, b);
            b = eg.add(b, b);
            n >>= 1;
        }
        return acc;
    };

    // Generator orders via the hidden-periodicity pipeline on x -> x*g.
    std::vector<std::uint64_t> orders(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t code = eg.generators[i];
        orders[i] = hidden_period_over_Z([&](std::uint64_t x) { return times(x, code); },
                                         eg.order_bound, rng);
        if (times(orders[i], code) != eg.zero)
            throw std::runtime_error("decompose_abelian: inconsistent order, encoding is not injective");
    }

    // Kernel of (x_1..x_k) -> sum x_i g_i, found by the HSP pipeline over
    // A = (+) Z/orders[i].
    std::vector<std::uint64_t> moduli;
    for (auto n : orders) moduli.push_back(std::max<std::uint64_t>(n, 2));
    AbelianGroupSpec a_spec(moduli);
    auto phi = [&](std::uint64_t rank) {
        GroupElement x = algebra::element_of_rank(a_spec, rank);
        std::uint64_t acc = eg.zero;
        for (std::size_t i = 0; i < k; ++i)
            if (orders[i] > 1) acc = eg.add(acc, times(x.coords[i], eg.generators[i]));
        return acc;
    };
    Subgroup kernel = abelian_hsp(a_spec, phi, rng).subgroup;

    // Relation matrix: diag(orders) stacked on the kernel generators.
    algebra::IntMat m(k + kernel.generators().size(), k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = mpz_class(static_cast<unsigned long>(orders[i]));
    for (std::size_t r = 0; r < kernel.generators().size(); ++r)
        for (std::size_t i = 0; i < k; ++i)
            m(k + r, i) = mpz_class(static_cast<unsigned long>(kernel.generators()[r].coords[i]));
    algebra::SmithResult snf = algebra::smith_normal_form(m);

    // New generators h_j = sum_i Vinv[j][i] g_i satisfy d_j h_j = 0 and
    // together generate the group.
    Decomposition out;
    for (std::size_t j = 0; j < k; ++j) {
        const mpz_class& dj = snf.d(j, j);
        if (dj <= 1) continue;
        out.moduli.push_back(dj.get_ui());
        std::vector<long long> row(k);
        std::uint64_t code = eg.zero;
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class c = snf.v_inv(j, i);
            mpz_class oi(static_cast<unsigned long>(orders[i]));
            mpz_class red;
            mpz_mod(red.get_mpz_t(), c.get_mpz_t(), oi.get_mpz_t());
            row[i] = static_cast<long long>(red.get_ui());
            code = eg.add(code, times(red.get_ui(), eg.generators[i]));
        }
        out.exponents.push_back(std::move(row));
        out.generator_codes.push_back(code);
    }
    return out;
}

}  // namespace hsplab::shor
