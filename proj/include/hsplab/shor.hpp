// End-to-end quantum pipelines over the exact simulator: period finding,
// factoring, discrete logarithm, the Abelian hidden subgroup problem,
// hidden periodicity over Z, and Abelian group decomposition.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsplab/algebra.hpp"
#include "hsplab/qsim.hpp"
#include "hsplab/rng.hpp"

namespace hsplab::shor {

using algebra::AbelianGroupSpec;
using algebra::Character;
using algebra::GroupElement;
using algebra::Subgroup;

/// r-periodic function on Z/NZ with r | N: f(x) = f(y) iff x == y (mod r).
struct PeriodicOracle {
    std::uint64_t domain_size;                      // N
    std::function<std::uint64_t(std::uint64_t)> f;  // total on [0, N)
    std::uint64_t promised_period;                  // r, divides N
};

/// Cyclic group C = <g> of known order N, elements as opaque codes.
struct DlogInstance {
    std::uint64_t order;  // N = |C|
    std::uint64_t generator;
    std::uint64_t target;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
    std::uint64_t identity_code;
};

std::uint64_t group_pow(const DlogInstance& inst, std::uint64_t base, std::uint64_t e);

/// Exact measurement distribution of one period-finding round (post-QFT).
qsim::Distribution period_finding_distribution(const PeriodicOracle& oracle);

/// Period via sampled rounds and gcd accumulation; exact r for a valid promise.
std::uint64_t find_period(const PeriodicOracle& oracle, std::size_t max_rounds, Rng& rng);

struct MillerAttempt {
    std::uint64_t a = 0;
    std::uint64_t order = 0;
    bool useful = false;                  // order even and a^{r/2} != -1 (mod N)
    std::optional<std::uint64_t> factor;  // set when useful
};

using OrderFinder = std::function<std::uint64_t(std::uint64_t a, std::uint64_t n, Rng& rng)>;

/// One pass of the factoring loop for a fixed base a (a coprime to n).
MillerAttempt miller_attempt(std::uint64_t n, std::uint64_t a, const OrderFinder& find_order, Rng& rng);

/// Factoring loop: random a, gcd check, order finding (quantum order finder
/// by default), parity check, gcd(a^{r/2}-1, N). Requires odd N with at
/// least two distinct prime factors.
std::uint64_t miller_factor(std::uint64_t n, Rng& rng);

/// Order of a mod n through the hidden-periodicity pipeline (bound B = n).
std::uint64_t quantum_order(std::uint64_t a, std::uint64_t n, Rng& rng);

std::uint64_t dlog_bruteforce(const DlogInstance& inst);
std::uint64_t dlog_quantum(const DlogInstance& inst, Rng& rng);

/// Exact distribution over measurement pairs of one dlog round, keyed by the
/// rank of (u, gamma) in (Z/NZ)^2; the support is {(gamma*l mod N, gamma)}.
qsim::Distribution dlog_round_distribution(const DlogInstance& inst);

struct HspResult {
    Subgroup subgroup;
    std::vector<Character> samples;  // every sampled character annihilates H
    std::size_t rounds = 0;
};

/// Abelian hidden subgroup pipeline. F is given by element rank and must hide
/// some subgroup; the result is verified exhaustively when |G| <= 10^4.
HspResult abelian_hsp(const AbelianGroupSpec& g,
                      const std::function<std::uint64_t(std::uint64_t)>& oracle, Rng& rng);

/// Hidden periodicity over Z: f is p-periodic, injective on [0, p), p <= bound.
/// Runs the period-finding pipeline on Q = 2^t >= bound^2 with continued-
/// fraction post-processing.
std::uint64_t hidden_period_over_Z(const std::function<std::uint64_t(std::uint64_t)>& f,
                                   std::uint64_t bound, Rng& rng);

/// Black-box encoded finite Abelian group: injective element codes plus the
/// group operations on codes.
struct EncodedGroup {
    std::uint64_t zero;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> add;
    std::function<std::uint64_t(std::uint64_t)> neg;
    std::vector<std::uint64_t> generators;
    std::uint64_t order_bound;  // upper bound on any generator order
};

struct Decomposition {
    std::vector<std::uint64_t> moduli;              // d_1 | d_2 | ..., all > 1
    std::vector<std::vector<long long>> exponents;  // new generator j = sum_i e[j][i] * gen_i
    std::vector<std::uint64_t> generator_codes;
};

/// Cyclic decomposition of the encoded group: generator orders via
/// hidden_period_over_Z, kernel via abelian_hsp, Smith normal form of the
/// relation matrix.
Decomposition decompose_abelian(const EncodedGroup& eg, Rng& rng);

}  // namespace hsplab::shor
