#include "hsplab/nonabelian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hsplab::nonabelian {

using cplx = std::complex<double>;

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::uint32_t> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const std::uint32_t n = order();
    if (table_.size() != std::size_t(n) * n) throw std::invalid_argument("FiniteGroup: table shape mismatch");
    for (auto v : table_)
        if (v >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");

    // Identity.
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) { identity_ = e; found = true; }
    }
    if (!found) throw std::invalid_argument("FiniteGroup: no identity element");

    // Inverses.
    inverse_.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        bool ok = false;
        for (std::uint32_t y = 0; y < n; ++y)
            if (mul(x, y) == identity_ && mul(y, x) == identity_) { inverse_[x] = y; ok = true; break; }
        if (!ok) throw std::invalid_argument("FiniteGroup: element without inverse");
    }

    // Associativity, exhaustive for small orders.
    if (n <= 256) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup: operation is not associative");
    }
}

std::uint32_t dihedral_index(std::uint32_t n, std::uint32_t l, std::uint32_t k) {
    return (k % 2) * n + (l % n);
}

std::pair<std::uint32_t, std::uint32_t> dihedral_coords(std::uint32_t n, std::uint32_t idx) {
    return {idx % n, idx / n};
}

FiniteGroup dihedral_group(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: n must be >= 3");
    std::vector<std::string> labels(2 * n);
    std::vector<std::uint32_t> table(std::size_t(2 * n) * (2 * n));
    for (std::uint32_t k = 0; k < 2; ++k)
        for (std::uint32_t l = 0; l < n; ++l)
            labels[dihedral_index(n, l, k)] = "(" + std::to_string(l) + "," + std::to_string(k) + ")";
    for (std::uint32_t x = 0; x < 2 * n; ++x) {
        auto [l1, k1] = dihedral_coords(n, x);
        for (std::uint32_t y = 0; y < 2 * n; ++y) {
            auto [l2, k2] = dihedral_coords(n, y);
            // (l1, k1) * (l2, k2) = (l1 + (-1)^{k1} l2, k1 + k2)
            std::uint32_t l = k1 == 0 ? (l1 + l2) % n : (l1 + n - l2 % n) % n;
            table[std::size_t(x) * (2 * n) + y] = dihedral_index(n, l, (k1 + k2) % 2);
        }
    }
    return FiniteGroup(std::move(labels), std::move(table));
}

ExerciseGroup exercise_group() {
    Eigen::Matrix3i a, b;
    a << 0, 1, 0,
         0, 0, 1,
         1, 0, 0;
    b << 1, 0, 0,
         0, 0, 1,
         0, 1, 0;
    // Normal form A^l B^k, indexed like D_3: idx = k*3 + l.
    std::vector<Eigen::Matrix3i> mats(6);
    for (std::uint32_t k = 0; k < 2; ++k)
        for (std::uint32_t l = 0; l < 3; ++l) {
            Eigen::Matrix3i m = Eigen::Matrix3i::Identity();
            for (std::uint32_t i = 0; i < l; ++i) m = m * a;
            if (k) m = m * b;
            mats[dihedral_index(3, l, k)] = m;
        }
    auto index_of = [&](const Eigen::Matrix3i& m) {
        for (std::uint32_t i = 0; i < 6; ++i)
            if (mats[i] == m) return i;
        throw std::logic_error("exercise_group: product escaped the six normal forms");
    };
    std::vector<std::string> labels(6);
    std::vector<std::uint32_t> table(36);
    for (std::uint32_t k = 0; k < 2; ++k)
        for (std::uint32_t l = 0; l < 3; ++l) {
            std::string name = "A^" + std::to_string(l) + (k ? "B" : "");
            labels[dihedral_index(3, l, k)] = name;
        }
    for (std::uint32_t x = 0; x < 6; ++x)
        for (std::uint32_t y = 0; y < 6; ++y)
            table[x * 6 + y] = index_of(mats[x] * mats[y]);
    FiniteGroup group(std::move(labels), std::move(table));

    // Faithful 2-dim representation: S^l T^k matches A^l B^k.
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    Eigen::MatrixXcd s(2, 2), t(2, 2);
    s << w, 0.0,
         0.0, std::conj(w);
    t << 0.0, 1.0,
         1.0, 0.0;
    Rep rep{"faithful2", 2, {}};
    rep.images.resize(6);
    for (std::uint32_t k = 0; k < 2; ++k)
        for (std::uint32_t l = 0; l < 3; ++l) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
            for (std::uint32_t i = 0; i < l; ++i) m = m * s;
            if (k) m = m * t;
            rep.images[dihedral_index(3, l, k)] = m;
        }
    return ExerciseGroup{std::move(group), std::move(rep), std::move(mats)};
}

std::vector<Rep> dihedral_irreps(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("dihedral_irreps: n must be >= 3");
    const std::uint32_t order = 2 * n;
    std::vector<Rep> reps;

    auto one_dim = [&](const std::string& name, auto chi) {
        Rep r{name, 1, {}};
        r.images.resize(order);
        for (std::uint32_t idx = 0; idx < order; ++idx) {
            auto [l, k] = dihedral_coords(n, idx);
            Eigen::MatrixXcd m(1, 1);
            m(0, 0) = chi(l, k);
            r.images[idx] = m;
        }
        reps.push_back(std::move(r));
    };
    one_dim("triv", [](std::uint32_t, std::uint32_t) { return cplx(1.0, 0.0); });
    one_dim("sign", [](std::uint32_t, std::uint32_t k) { return cplx(k ? -1.0 : 1.0, 0.0); });
    if (n % 2 == 0) {
        one_dim("rot_sign", [](std::uint32_t l, std::uint32_t) { return cplx(l % 2 ? -1.0 : 1.0, 0.0); });
        one_dim("rot_refl_sign",
                [](std::uint32_t l, std::uint32_t k) { return cplx((l + k) % 2 ? -1.0 : 1.0, 0.0); });
    }

    // Two-dimensional rho_h: rotation diagonal, reflection swap.
    const std::uint32_t h_max = (n + 1) / 2;  // h in [1, ceil(n/2) - 1]
    for (std::uint32_t h = 1; h + 1 <= h_max; ++h) {
        Rep r{"rho_" + std::to_string(h), 2, {}};
        r.images.resize(order);
        for (std::uint32_t idx = 0; idx < order; ++idx) {
            auto [l, k] = dihedral_coords(n, idx);
            const cplx wl = std::polar(1.0, 2.0 * std::numbers::pi * double(h) * double(l) / double(n));
            Eigen::MatrixXcd m(2, 2);
            if (k == 0) {
                m << wl, 0.0,
                     0.0, std::conj(wl);
            } else {
                m << 0.0, wl,
                     std::conj(wl), 0.0;
            }
            r.images[idx] = m;
        }
        reps.push_back(std::move(r));
    }
    return reps;
}

Rep direct_sum(const Rep& r1, const Rep& r2) {
    if (r1.images.size() != r2.images.size()) throw std::invalid_argument("direct_sum: group size mismatch");
    Rep out{r1.name + "+" + r2.name, r1.dim + r2.dim, {}};
    out.images.reserve(r1.images.size());
    for (std::size_t i = 0; i < r1.images.size(); ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(out.dim, out.dim);
        m.topLeftCorner(r1.dim, r1.dim) = r1.images[i];
        m.bottomRightCorner(r2.dim, r2.dim) = r2.images[i];
        out.images.push_back(std::move(m));
    }
    return out;
}

Rep tensor_product(const Rep& r1, const Rep& r2) {
    if (r1.images.size() != r2.images.size()) throw std::invalid_argument("tensor_product: group size mismatch");
    Rep out{r1.name + "*" + r2.name, r1.dim * r2.dim, {}};
    out.images.reserve(r1.images.size());
    for (std::size_t i = 0; i < r1.images.size(); ++i) {
        const auto& a = r1.images[i];
        const auto& b = r2.images[i];
        Eigen::MatrixXcd m(out.dim, out.dim);
        for (Eigen::Index p = 0; p < a.rows(); ++p)
            for (Eigen::Index q = 0; q < a.cols(); ++q)
                m.block(p * b.rows(), q * b.cols(), b.rows(), b.cols()) = a(p, q) * b;
        out.images.push_back(std::move(m));
    }
    return out;
}

bool is_homomorphism(const FiniteGroup& g, const Rep& r, double tol) {
    if (r.images.size() != g.order()) return false;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y)
            if (((r.images[x] * r.images[y]) - r.images[g.mul(x, y)]).cwiseAbs().maxCoeff() > tol)
                return false;
    return true;
}

Eigen::MatrixXcd qft_nonabelian(const FiniteGroup& g, const std::vector<Rep>& irreps) {
    const std::uint32_t n = g.order();
    std::size_t dim_sq = 0;
    for (const auto& r : irreps) dim_sq += r.dim * r.dim;
    if (dim_sq != n)
        throw std::invalid_argument("qft_nonabelian: irrep set incomplete (sum of squared dims != |G|)");
    Eigen::MatrixXcd f(n, n);
    std::size_t row = 0;
    for (const auto& r : irreps) {
        const double scale = std::sqrt(double(r.dim) / double(n));
        for (std::size_t j = 0; j < r.dim; ++j)
            for (std::size_t k = 0; k < r.dim; ++k) {
                for (std::uint32_t x = 0; x < n; ++x) f(row, x) = scale * r.images[x](j, k);
                ++row;
            }
    }
    return f;
}

std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
    std::set<std::uint32_t> seen{g.identity()};
    std::vector<std::uint32_t> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto x : frontier)
            for (auto gen : gens) {
                std::uint32_t y = g.mul(x, gen);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<std::uint32_t>> found{{g.identity()}};
    std::vector<std::vector<std::uint32_t>> frontier{{g.identity()}};
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& h : frontier) {
            for (std::uint32_t x = 0; x < g.order(); ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::vector<std::uint32_t> gens = h;
                gens.push_back(x);
                auto bigger = subgroup_closure(g, gens);
                if (found.insert(bigger).second) next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& h) {
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (auto e : h) {
            std::uint32_t conj = g.mul(g.mul(x, e), g.inverse(x));
            if (!std::binary_search(h.begin(), h.end(), conj)) return false;
        }
    return true;
}

bool hides_check(const FiniteGroup& g, const std::function<std::uint64_t(std::uint32_t)>& f,
                 const std::vector<std::uint32_t>& h) {
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y) {
            const bool in_h = std::binary_search(h.begin(), h.end(), g.mul(g.inverse(x), y));
            if ((f(x) == f(y)) != in_h) return false;
        }
    return true;
}

std::map<std::string, double> weak_sampling_distribution(const FiniteGroup& g,
                                                         const std::vector<Rep>& irreps,
                                                         const std::vector<std::uint32_t>& h) {
    const std::uint32_t n = g.order();
    if (h.empty() || n % h.size() != 0)
        throw std::invalid_argument("weak_sampling_distribution: invalid subgroup");
    Eigen::MatrixXcd f = qft_nonabelian(g, irreps);

    // Left cosets xH.
    std::vector<char> covered(n, 0);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        std::vector<std::uint32_t> coset;
        for (auto e : h) {
            std::uint32_t y = g.mul(x, e);
            covered[y] = 1;
            coset.push_back(y);
        }
        cosets.push_back(std::move(coset));
    }

    std::map<std::string, double> dist;
    const double coset_weight = 1.0 / double(cosets.size());
    const double amp = 1.0 / std::sqrt(double(h.size()));
    for (const auto& coset : cosets) {
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
        for (auto y : coset) psi(y) = amp;
        Eigen::VectorXcd out = f * psi;
        std::size_t row = 0;
        for (const auto& r : irreps) {
            double p = 0;
            for (std::size_t i = 0; i < r.dim * r.dim; ++i, ++row) p += std::norm(out(row));
            dist[r.name] += coset_weight * p;
        }
    }
    return dist;
}

std::uint64_t HiddenShiftInstance::oracle(std::uint32_t dihedral_idx) const {
    auto [l, k] = dihedral_coords(n, dihedral_idx);
    return k == 0 ? f0[l] : f1[l];
}

std::vector<std::uint32_t> HiddenShiftInstance::hidden_subgroup() const {
    std::vector<std::uint32_t> h{dihedral_index(n, 0, 0), dihedral_index(n, s, 1)};
    std::sort(h.begin(), h.end());
    return h;
}

HiddenShiftInstance hidden_shift_instance(std::uint32_t n, std::uint32_t s, Rng& rng) {
    if (n < 3) throw std::invalid_argument("hidden_shift_instance: n must be >= 3");
    if (s >= n) throw std::invalid_argument("hidden_shift_instance: shift out of range");
    HiddenShiftInstance inst;
    inst.n = n;
    inst.s = s;
    // Random injective f0: a shuffled identity table (Fisher-Yates).
    inst.f0.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) inst.f0[i] = i;
    for (std::uint32_t i = n; i-- > 1;) std::swap(inst.f0[i], inst.f0[rng.below(i + 1)]);
    // f1(t) = f0(t - s) gives F(x, 0) = F(x + s, 1).
    inst.f1.resize(n);
    for (std::uint32_t t = 0; t < n; ++t) inst.f1[t] = inst.f0[(t + n - s) % n];
    return inst;
}

std::uint32_t hidden_shift_bruteforce(const std::vector<std::uint64_t>& f0,
                                      const std::vector<std::uint64_t>& f1) {
    const std::size_t n = f0.size();
    if (n == 0 || f1.size() != n) throw std::invalid_argument("hidden_shift_bruteforce: table size mismatch");
    std::set<std::uint64_t> distinct(f0.begin(), f0.end());
    if (distinct.size() != n) throw std::invalid_argument("hidden_shift_bruteforce: f0 is not injective");
    for (std::uint32_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = f0[g] == f1[(g + s) % n];
        if (ok) return s;
    }
    throw std::invalid_argument("hidden_shift_bruteforce: no shift relates f0 and f1");
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::uint32_t i, j;
        if (!(ls >> i >> j)) continue;
        if (i == 0 || j == 0 || i == j) throw std::invalid_argument("parse_graph: vertices are 1-indexed and distinct");
        if (i > j) std::swap(i, j);
        g.edges.emplace_back(i, j);
        g.n = std::max({g.n, i, j});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> apply_perm(
    const std::vector<std::uint8_t>& pi, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    auto out = edges;
    for (auto& [i, j] : out) {
        i = pi[i - 1] + 1;
        j = pi[j - 1] + 1;
        if (i > j) std::swap(i, j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GraphAutInstance graph_aut_instance(const Graph& g) {
    if (g.n == 0 || g.n > 8) throw std::invalid_argument("graph_aut_instance: need 1..8 vertices");
    GraphAutInstance inst;
    inst.graph = g;

    std::vector<std::uint8_t> pi(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) pi[i] = std::uint8_t(i);
    std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::uint64_t> codes;
    do {
        auto image = apply_perm(pi, g.edges);
        auto [it, inserted] = codes.emplace(std::move(image), codes.size());
        inst.oracle_values.push_back(it->second);
        inst.permutations.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));

    const std::uint64_t identity_code = inst.oracle_values[0];
    for (std::uint32_t r = 0; r < inst.permutations.size(); ++r)
        if (inst.oracle_values[r] == identity_code) inst.automorphisms.push_back(r);
    return inst;
}

bool GraphAutInstance::hides_verified() const {
    // Rank lookup for composition.
    std::map<std::vector<std::uint8_t>, std::uint32_t> rank;
    for (std::uint32_t r = 0; r < permutations.size(); ++r) rank.emplace(permutations[r], r);

    // Constant on every left coset pi * Aut...
    for (std::uint32_t r = 0; r < permutations.size(); ++r) {
        const auto& pi = permutations[r];
        for (auto ar : automorphisms) {
            const auto& a = permutations[ar];
            std::vector<std::uint8_t> composed(pi.size());
            for (std::size_t i = 0; i < pi.size(); ++i) composed[i] = pi[a[i]];
            if (oracle_values[rank.at(composed)] != oracle_values[r]) return false;
        }
    }
    // ...and as many distinct values as cosets.
    std::set<std::uint64_t> values(oracle_values.begin(), oracle_values.end());
    return values.size() * automorphisms.size() == permutations.size();
}

Povm pgm(const std::vector<WeightedState>& ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("pgm: empty ensemble");
    const Eigen::Index dim = ensemble.front().rho.rows();
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [w, rho] : ensemble) {
        if (rho.rows() != dim || rho.cols() != dim) throw std::invalid_argument("pgm: dimension mismatch");
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
            throw std::invalid_argument("pgm: state is not Hermitian");
        s += w * rho;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s);
    constexpr double kSupportCutoff = 1e-10;
    Eigen::VectorXd inv_sqrt = eig.eigenvalues();
    Eigen::VectorXd support = eig.eigenvalues();
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (inv_sqrt(i) <= kSupportCutoff) {
            inv_sqrt(i) = 0;
            support(i) = 0;
        } else {
            inv_sqrt(i) = 1.0 / std::sqrt(inv_sqrt(i));
            support(i) = 1;
        }
    }
    const Eigen::MatrixXcd& u = eig.eigenvectors();
    Eigen::MatrixXcd s_inv_sqrt = u * inv_sqrt.asDiagonal() * u.adjoint();

    Povm out;
    out.support_projector = u * support.asDiagonal() * u.adjoint();
    out.ops.reserve(ensemble.size());
    for (const auto& [w, rho] : ensemble) out.ops.push_back(s_inv_sqrt * (w * rho) * s_inv_sqrt);
    return out;
}

double pgm_success(const std::vector<WeightedState>& ensemble) {
    Povm povm = pgm(ensemble);
    double p = 0;
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        p += ensemble[i].weight * (povm.ops[i] * ensemble[i].rho).trace().real();
    return p;
}

}  // namespace hsplab::nonabelian
