// Exact state simulation over finite Abelian groups: uniform superpositions,
// oracle application, register discard, the Abelian QFT, and exact measurement
// distributions. States are immutable values; mixtures are explicit branch
// lists, which stay exact for the HSP pipelines.
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "hsplab/algebra.hpp"
#include "hsplab/rng.hpp"

namespace hsplab::qsim {

using algebra::AbelianGroupSpec;
using algebra::cplx;

/// Hard cap on amplitude vectors; operations fail loudly beyond it.
constexpr std::uint64_t kAmplitudeBound = 1u << 20;

/// Amplitudes indexed by group-element rank. When `values` is nonempty the
/// basis is the pair basis (x, f(x)): amp[i] belongs to |x_i, values[i]> and
/// every other pair label has amplitude zero.
struct PureState {
    AbelianGroupSpec domain;
    std::vector<cplx> amp;
    std::vector<std::uint64_t> values;  // empty for a plain group basis

    bool paired() const { return !values.empty(); }
    double norm_sq() const;
};

struct MixedState {
    std::vector<std::pair<double, PureState>> branches;
};

/// Exact outcome -> probability map (keys are basis ranks).
using Distribution = std::map<std::uint64_t, double>;

PureState uniform_superposition(const AbelianGroupSpec& g);
PureState basis_state(const AbelianGroupSpec& g, std::uint64_t rank);

/// |x> -> |x, f(x)>, f total on G (by rank).
PureState apply_oracle(const PureState& state, const std::function<std::uint64_t(std::uint64_t)>& f);

enum class Register { Group, Value };

/// Discard one register of a pair state. Discarding the value register yields
/// the mixture over observed values v of the normalized restrictions to
/// f^{-1}(v); discarding the group register yields point masses on the values.
MixedState discard_register(const PureState& state, Register which);

/// Dense QFT matrix with entries Psi_a(x) / sqrt(|G|) at (row a, column x).
Eigen::MatrixXcd qft(const AbelianGroupSpec& g);

/// Fast application of the QFT (tensor product of per-factor transforms).
PureState qft_apply(const PureState& state);
MixedState qft_apply(const MixedState& state);

/// Inverse transform; qft_inverse_apply(qft_apply(s)) == s up to float error.
PureState qft_inverse_apply(const PureState& state);

/// |amplitude|^2 outcome probabilities, mixture-weighted. Plain states are
/// keyed by element rank; paired states measure the value register.
Distribution measure_distribution(const PureState& state);
Distribution measure_distribution(const MixedState& state);

/// Reproducible sample from an exact distribution (CDF walk in key order).
std::uint64_t sample(const Distribution& dist, Rng& rng);

}  // namespace hsplab::qsim
