// Small non-Abelian groups (dihedral semidirect products, matrix-generated
// groups, symmetric groups acting on graphs), their irreducible
// representations, the non-Abelian Fourier transform, weak Fourier sampling,
// hidden-shift and graph-automorphism instances, and the pretty good
// measurement.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hsplab/rng.hpp"

namespace hsplab::nonabelian {

/// Explicit Cayley-table group. Construction verifies the group axioms
/// exhaustively for orders up to 256 (larger groups come from constructions
/// that are associative by definition).
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::uint32_t> table);

    std::uint32_t order() const { return std::uint32_t(labels_.size()); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table_[x * order() + y]; }
    std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }
    std::uint32_t identity() const { return identity_; }
    const std::string& label(std::uint32_t x) const { return labels_[x]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::uint32_t> table_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> inverse_;
};

/// D_n as Z/nZ x| Z/2Z with (l1,k1)*(l2,k2) = (l1 + (-1)^{k1} l2, k1+k2);
/// element (l, k) has index k*n + l. Requires n >= 3.
FiniteGroup dihedral_group(std::uint32_t n);
std::uint32_t dihedral_index(std::uint32_t n, std::uint32_t l, std::uint32_t k);
std::pair<std::uint32_t, std::uint32_t> dihedral_coords(std::uint32_t n, std::uint32_t idx);

/// A representation: one unitary matrix per group element index.
struct Rep {
    std::string name;
    std::size_t dim = 0;
    std::vector<Eigen::MatrixXcd> images;
};

/// The order-6 group generated by the two 3x3 permutation matrices with
/// A^3 = I, B^2 = I, ABA = B, together with its faithful 2-dimensional
/// representation rho(A) = diag(w, conj(w)), rho(B) = swap (w = e^{2pi i/3}).
struct ExerciseGroup {
    FiniteGroup group;
    Rep faithful_rep;
    std::vector<Eigen::Matrix3i> matrices;  // the actual generated matrices, per index
};
ExerciseGroup exercise_group();

/// Complete irrep set of D_n: trivial and sign characters (two extra
/// one-dimensional ones for even n) plus the 2-dimensional rho_h with
/// rotations diagonal and reflections a swap. sum d^2 = 2n.
std::vector<Rep> dihedral_irreps(std::uint32_t n);

Rep direct_sum(const Rep& r1, const Rep& r2);
Rep tensor_product(const Rep& r1, const Rep& r2);
bool is_homomorphism(const FiniteGroup& g, const Rep& r, double tol = 1e-9);

/// |G| x |G| transform with rows (rho, j, k) and entries
/// sqrt(d_rho/|G|) * rho(x)_{j,k}; rejects incomplete irrep sets.
Eigen::MatrixXcd qft_nonabelian(const FiniteGroup& g, const std::vector<Rep>& irreps);

/// Closure of a generating set; sorted element indices.
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);
/// Every subgroup (element-index lists, sorted), grown by closure.
std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteGroup& g);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& h);

/// Exhaustive check that F is constant on left cosets xH and distinct across them.
bool hides_check(const FiniteGroup& g, const std::function<std::uint64_t(std::uint32_t)>& f,
                 const std::vector<std::uint32_t>& h);

/// Exact distribution of the irrep label after the non-Abelian QFT applied to
/// the uniform mixture of left-coset states of H.
std::map<std::string, double> weak_sampling_distribution(const FiniteGroup& g,
                                                         const std::vector<Rep>& irreps,
                                                         const std::vector<std::uint32_t>& h);

/// Hidden shift on D_n: F(x, 0) = f0(x), F(x, 1) = f1(x) with
/// f0(g) = f1(s + g), reducing to the hidden subgroup {(0,0), (s,1)}.
struct HiddenShiftInstance {
    std::uint32_t n = 0;
    std::uint32_t s = 0;
    std::vector<std::uint64_t> f0, f1;  // injective tables on Z/nZ

    std::uint64_t oracle(std::uint32_t dihedral_idx) const;
    std::vector<std::uint32_t> hidden_subgroup() const;  // {(0,0), (s,1)}
};

/// Builds f0 as a seeded random injection and f1 as its s-shift.
HiddenShiftInstance hidden_shift_instance(std::uint32_t n, std::uint32_t s, Rng& rng);

/// Scan all n shifts for the unique s with f0(g) = f1(g + s).
std::uint32_t hidden_shift_bruteforce(const std::vector<std::uint64_t>& f0,
                                      const std::vector<std::uint64_t>& f1);

/// Simple undirected graph on vertices 1..n.
struct Graph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // 1-indexed, i < j
};

/// Parse "i j" pairs, one per line; '#' starts a comment.
Graph parse_graph(const std::string& text);

/// Graph-automorphism HSP instance over S_n (n <= 8): F(pi) = code of pi(E),
/// automorphisms found by brute force over all n! permutations.
struct GraphAutInstance {
    Graph graph;
    std::vector<std::vector<std::uint8_t>> permutations;  // lexicographic order
    std::vector<std::uint64_t> oracle_values;             // F by permutation rank
    std::vector<std::uint32_t> automorphisms;             // ranks of aut(G)

    /// Verifies F(x) = F(y) iff x^{-1}y in aut(G) by coset constancy plus a
    /// distinct-value count (equivalent to the pairwise definition).
    bool hides_verified() const;
};
GraphAutInstance graph_aut_instance(const Graph& g);

/// Pretty good measurement: Pi_i = S^{-1/2} (w_i rho_i) S^{-1/2} with
/// S = sum_j w_j rho_j, the inverse square root taken on the support
/// (eigenvalues <= 1e-10 treated as zero).
struct WeightedState {
    double weight = 0;
    Eigen::MatrixXcd rho;
};

struct Povm {
    std::vector<Eigen::MatrixXcd> ops;
    Eigen::MatrixXcd support_projector;
};

Povm pgm(const std::vector<WeightedState>& ensemble);
double pgm_success(const std::vector<WeightedState>& ensemble);

}  // namespace hsplab::nonabelian
