#include "hsplab/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsplab::qsim {

namespace {

void check_bound(std::uint64_t n) {
    if (n > kAmplitudeBound)
        throw std::runtime_error("simulator bound exceeded: state needs more than 2^20 amplitudes");
}

// In-place DFT with kernel e^{+2*pi*i*jk/m} (unnormalized) along one mixed-radix
// axis: the vector is viewed as [outer][m][inner].
void dft_axis(std::vector<cplx>& a, std::size_t outer, std::size_t m, std::size_t inner) {
    const bool pow2 = (m & (m - 1)) == 0;
    std::vector<cplx> twiddle(m);
    for (std::size_t k = 0; k < m; ++k)
        twiddle[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(m));
    std::vector<cplx> buf(m);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t in = 0; in < inner; ++in) {
            const std::size_t base = o * m * inner + in;
            for (std::size_t j = 0; j < m; ++j) buf[j] = a[base + j * inner];
            if (pow2 && m >= 4) {
                // Iterative radix-2 FFT with the +i kernel.
                std::size_t lg = 0;
                while ((std::size_t(1) << lg) < m) ++lg;
                for (std::size_t i = 0; i < m; ++i) {
                    std::size_t r = 0;
                    for (std::size_t b = 0; b < lg; ++b) r |= ((i >> b) & 1) << (lg - 1 - b);
                    if (r > i) std::swap(buf[i], buf[r]);
                }
                for (std::size_t len = 2; len <= m; len <<= 1) {
                    const std::size_t stride = m / len;
                    for (std::size_t start = 0; start < m; start += len)
                        for (std::size_t k = 0; k < len / 2; ++k) {
                            cplx w = twiddle[k * stride];
                            cplx u = buf[start + k];
                            cplx t = w * buf[start + k + len / 2];
                            buf[start + k] = u + t;
                            buf[start + k + len / 2] = u - t;
                        }
                }
                for (std::size_t k = 0; k < m; ++k) a[base + k * inner] = buf[k];
            } else {
                for (std::size_t k = 0; k < m; ++k) {
                    cplx s = 0;
                    for (std::size_t j = 0; j < m; ++j) s += twiddle[j * k % m] * buf[j];
                    a[base + k * inner] = s;
                }
            }
        }
    }
}

}  // namespace

double PureState::norm_sq() const {
    double s = 0;
    for (const auto& z : amp) s += std::norm(z);
    return s;
}

PureState uniform_superposition(const AbelianGroupSpec& g) {
    check_bound(g.order());
    PureState s{g, std::vector<cplx>(g.order(), cplx(1.0 / std::sqrt(double(g.order())), 0.0)), {}};
    return s;
}

PureState basis_state(const AbelianGroupSpec& g, std::uint64_t rank) {
    check_bound(g.order());
    if (rank >= g.order()) throw std::invalid_argument("basis_state: rank out of range");
    PureState s{g, std::vector<cplx>(g.order(), 0.0), {}};
    s.amp[rank] = 1.0;
    return s;
}

PureState apply_oracle(const PureState& state, const std::function<std::uint64_t(std::uint64_t)>& f) {
    if (state.paired()) throw std::invalid_argument("apply_oracle: state already carries a value register");
    PureState out = state;
    out.values.resize(state.amp.size());
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) out.values[x] = f(x);
    return out;
}

MixedState discard_register(const PureState& state, Register which) {
    if (!state.paired()) throw std::invalid_argument("discard_register: state has a single register");
    // Group basis ranks by observed value, in increasing value order.
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_value;
    for (std::uint64_t x = 0; x < state.amp.size(); ++x)
        if (state.amp[x] != cplx(0.0, 0.0)) by_value[state.values[x]].push_back(x);

    MixedState mix;
    for (const auto& [v, ranks] : by_value) {
        double p = 0;
        for (auto x : ranks) p += std::norm(state.amp[x]);
        if (p == 0) continue;
        if (which == Register::Value) {
            PureState branch{state.domain, std::vector<cplx>(state.amp.size(), 0.0), {}};
            const double scale = 1.0 / std::sqrt(p);
            for (auto x : ranks) branch.amp[x] = state.amp[x] * scale;
            mix.branches.emplace_back(p, std::move(branch));
        } else {
            // Keep the value register: a point mass on v (measurement of a
            // paired state reads the value register).
            PureState branch{AbelianGroupSpec({2}), {cplx(1.0, 0.0), cplx(0.0, 0.0)}, {v, v}};
            mix.branches.emplace_back(p, std::move(branch));
        }
    }
    return mix;
}

Eigen::MatrixXcd qft(const AbelianGroupSpec& g) {
    check_bound(g.order());
    const std::uint64_t n = g.order();
    Eigen::MatrixXcd f(n, n);
    const double scale = 1.0 / std::sqrt(double(n));
    for (std::uint64_t a = 0; a < n; ++a) {
        algebra::Character chi = algebra::character_of_rank(g, a);
        for (std::uint64_t x = 0; x < n; ++x)
            f(a, x) = scale * algebra::character_eval(g, chi, algebra::element_of_rank(g, x));
    }
    return f;
}

PureState qft_apply(const PureState& state) {
    if (state.paired()) throw std::invalid_argument("qft_apply: discard the value register first");
    PureState out = state;
    std::size_t inner = 1;
    for (std::size_t i = 0; i < out.domain.rank(); ++i) inner *= out.domain.moduli[i];
    std::size_t outer = 1;
    for (std::size_t i = 0; i < out.domain.rank(); ++i) {
        const std::size_t m = out.domain.moduli[i];
        inner /= m;
        dft_axis(out.amp, outer, m, inner);
        outer *= m;
    }
    const double scale = 1.0 / std::sqrt(double(out.domain.order()));
    for (auto& z : out.amp) z *= scale;
    return out;
}

MixedState qft_apply(const MixedState& state) {
    MixedState out;
    out.branches.reserve(state.branches.size());
    for (const auto& [p, s] : state.branches) out.branches.emplace_back(p, qft_apply(s));
    return out;
}

PureState qft_inverse_apply(const PureState& state) {
    // F is symmetric, so F^{-1} = conj(F): conjugate, transform, conjugate.
    PureState tmp = state;
    for (auto& z : tmp.amp) z = std::conj(z);
    tmp = qft_apply(tmp);
    for (auto& z : tmp.amp) z = std::conj(z);
    return tmp;
}

Distribution measure_distribution(const PureState& state) {
    // Amplitudes below 1e-12 are cancellation residue: genuine pipeline
    // probabilities are at least 1/2^20, eighteen orders of magnitude above.
    constexpr double kResidue = 1e-24;
    Distribution d;
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) {
        double p = std::norm(state.amp[x]);
        if (p > kResidue) d[state.paired() ? state.values[x] : x] += p;
    }
    return d;
}

Distribution measure_distribution(const MixedState& state) {
    Distribution d;
    for (const auto& [w, s] : state.branches)
        for (const auto& [x, p] : measure_distribution(s)) d[x] += w * p;
    return d;
}

std::uint64_t sample(const Distribution& dist, Rng& rng) {
    if (dist.empty()) throw std::invalid_argument("sample: empty distribution");
    const double u = rng.next_unit();
    double acc = 0;
    std::uint64_t last = dist.rbegin()->first;
    for (const auto& [x, p] : dist) {
        acc += p;
        if (u < acc) return x;
    }
    return last;  // guards against accumulated rounding at u ~ 1
}

}  // namespace hsplab::qsim
