#include "hsplab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsplab/curvezeta.hpp"
#include "hsplab/ecurve.hpp"
#include "hsplab/ffield.hpp"
#include "hsplab/nonabelian.hpp"
#include "hsplab/numtheory.hpp"
#include "hsplab/qsim.hpp"
#include "hsplab/shor.hpp"
#include "hsplab/units.hpp"

namespace hsplab::cli {

using nlohmann::json;
namespace nt = hsplab::numtheory;
namespace alg = hsplab::algebra;
namespace ff = hsplab::ffield;
namespace ec = hsplab::ecurve;
namespace cz = hsplab::curvezeta;
namespace na = hsplab::nonabelian;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HSPLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("HSPLAB_SEED is not a valid unsigned integer");
        }
    }
    return 0;
}

json big_to_json(const nt::BigInt& v) {
    if (v >= 0 && v.fits_ulong_p()) return json(static_cast<std::uint64_t>(v.get_ui()));
    if (v < 0 && nt::BigInt(-v).fits_ulong_p()) return json(-static_cast<std::int64_t>(nt::BigInt(-v).get_ui()));
    return json(v.get_str());
}

json distribution_to_json(const qsim::Distribution& d) {
    json arr = json::array();
    for (const auto& [x, p] : d) arr.push_back(json::array({x, p}));
    return arr;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, char sep) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> parse_vector_list(const std::string& text) {
    std::vector<std::vector<std::uint64_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        out.push_back(parse_u64_list(item, ','));
    }
    return out;
}

ec::Point parse_point(const ff::FieldSpec& f, std::string text) {
    std::erase_if(text, [](char c) { return c == ' ' || c == '(' || c == ')'; });
    if (text == "O" || text == "o") return ec::Point::infinity();
    auto coords = parse_u64_list(text, ',');
    if (coords.size() != 2) throw std::invalid_argument("point must look like \"(x, y)\" or \"O\"");
    return ec::Point::at(ff::element_of_index(f, coords[0] % f.size()),
                         ff::element_of_index(f, coords[1] % f.size()));
}

struct CommandResult {
    json result;
    json verification;
    bool ok = true;
};

struct Options {
    std::uint64_t seed = 0;
    bool json_out = true;
    bool verbose = false;
};

void add_globals(CLI::App* app, Options& opt) {
    app->add_option("--seed", opt.seed, "Seed for the reproducible generator (fallback: HSPLAB_SEED, then 0)");
    app->add_flag("--json", opt.json_out, "Emit JSON on stdout (default; kept for explicitness)");
    app->add_flag("--verbose", opt.verbose, "Human-readable progress on stderr");
}

// ---- subcommand payloads ----------------------------------------------------

CommandResult cmd_factor(std::uint64_t n, Rng& rng) {
    const std::uint64_t d = shor::miller_factor(n, rng);
    CommandResult r;
    r.result = {{"factor", d}, {"cofactor", n / d}};
    const bool ok = d > 1 && d < n && n % d == 0;
    r.verification = {{"divides", n % d == 0}, {"proper", d > 1 && d < n}};
    r.ok = ok;
    return r;
}

CommandResult cmd_order(std::uint64_t a, std::uint64_t n, Rng& rng) {
    const std::uint64_t quantum = shor::quantum_order(a, n, rng);
    const nt::BigInt classical = nt::multiplicative_order(nt::Residue(nt::BigInt(a), nt::BigInt(n)));
    const nt::BigInt phi = nt::euler_phi(nt::BigInt(n));
    CommandResult r;
    r.result = {{"order", quantum}};
    r.verification = {{"matches_classical_oracle", nt::BigInt(quantum) == classical},
                      {"divides_phi", phi % nt::BigInt(quantum) == 0}};
    r.ok = nt::BigInt(quantum) == classical && phi % nt::BigInt(quantum) == 0;
    return r;
}

CommandResult cmd_dlog(std::uint64_t g, std::uint64_t x, std::uint64_t n, Rng& rng) {
    if (n < 2 || std::gcd(g % n, n) != 1 || std::gcd(x % n, n) != 1)
        throw std::invalid_argument("dlog: g and x must be units mod N");
    const std::uint64_t order =
        nt::multiplicative_order(nt::Residue(nt::BigInt(g), nt::BigInt(n))).get_ui();
    shor::DlogInstance inst{
        order, g % n, x % n,
        [n](std::uint64_t u, std::uint64_t v) { return (unsigned __int128)(u)*v % n; }, 1 % n};
    const std::uint64_t quantum = shor::dlog_quantum(inst, rng);
    const std::uint64_t brute = shor::dlog_bruteforce(inst);
    CommandResult r;
    r.result = {{"dlog", quantum}, {"group_order", order}};
    r.verification = {{"matches_bruteforce_oracle", quantum == brute},
                      {"power_check", shor::group_pow(inst, inst.generator, quantum) == inst.target}};
    r.ok = quantum == brute;
    return r;
}

CommandResult cmd_hsp(const std::string& moduli_text, const std::string& gens_text, Rng& rng) {
    alg::AbelianGroupSpec g(parse_u64_list(moduli_text, ','));
    std::vector<alg::GroupElement> gens;
    for (auto& v : parse_vector_list(gens_text)) {
        if (v.size() != g.rank()) throw std::invalid_argument("hsp: generator length must match the moduli list");
        gens.push_back(alg::element(g, v));
    }
    alg::Subgroup planted(g, gens);

    // F labels each coset by its smallest element rank.
    const auto& h_ranks = planted.element_ranks();
    auto oracle = [&](std::uint64_t rank) {
        std::uint64_t best = UINT64_MAX;
        alg::GroupElement x = alg::element_of_rank(g, rank);
        for (auto hr : h_ranks)
            best = std::min(best, alg::rank_of(g, alg::add(g, x, alg::element_of_rank(g, hr))));
        return best;
    };
    shor::HspResult res = shor::abelian_hsp(g, oracle, rng);

    alg::Subgroup perp = alg::annihilator(planted);
    bool samples_ok = true;
    for (const auto& c : res.samples)
        samples_ok &= perp.contains(alg::GroupElement{c.index});

    CommandResult r;
    json gens_json = json::array();
    for (const auto& ge : res.subgroup.generators()) gens_json.push_back(ge.coords);
    r.result = {{"subgroup_order", res.subgroup.order()},
                {"subgroup_generators", gens_json},
                {"rounds", res.rounds}};
    r.verification = {{"recovered_equals_planted", res.subgroup == planted},
                      {"samples_in_annihilator", samples_ok}};
    r.ok = res.subgroup == planted && samples_ok;
    return r;
}

ec::Curve make_curve(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta) {
    ff::FieldSpec f = ff::make_field(p, 1);
    return ec::Curve(f, ff::element_of_index(f, alpha % p), ff::element_of_index(f, beta % p));
}

CommandResult cmd_ec_points(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta) {
    ec::Curve c = make_curve(p, alpha, beta);
    auto pts = ec::enumerate_points(c);
    CommandResult r;
    json list = json::array();
    bool all_on = true;
    for (const auto& pt : pts) {
        list.push_back(ec::render(c, pt));
        all_on &= ec::is_on_curve(c, pt);
    }
    const double hasse = 2.0 * std::sqrt(double(p));
    const double dist = std::abs(double(pts.size()) - double(p + 1));
    r.result = {{"count", pts.size()}, {"points", list}};
    r.verification = {{"all_on_curve", all_on}, {"hasse_bound", dist <= hasse + 1e-9}};
    r.ok = all_on && dist <= hasse + 1e-9;
    return r;
}

CommandResult cmd_ec_add(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta,
                         const std::string& p_text, const std::string& q_text) {
    ec::Curve c = make_curve(p, alpha, beta);
    ec::Point pp = parse_point(c.field, p_text), qq = parse_point(c.field, q_text);
    if (!ec::is_on_curve(c, pp) || !ec::is_on_curve(c, qq))
        throw std::invalid_argument("ec add: inputs must lie on the curve");
    ec::Point s = ec::add(c, pp, qq);
    CommandResult r;
    r.result = {{"sum", ec::render(c, s)}};
    r.verification = {{"on_curve", ec::is_on_curve(c, s)}};
    r.ok = ec::is_on_curve(c, s);
    return r;
}

CommandResult cmd_ec_ecdlp(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta,
                           const std::string& p_text, const std::string& q_text, Rng& rng) {
    ec::Curve c = make_curve(p, alpha, beta);
    ec::Point pp = parse_point(c.field, p_text), qq = parse_point(c.field, q_text);
    if (!ec::is_on_curve(c, pp) || !ec::is_on_curve(c, qq))
        throw std::invalid_argument("ec ecdlp: inputs must lie on the curve");
    auto quantum = ec::ecdlp(c, pp, qq, ec::EcdlpMode::Quantum, rng);
    auto brute = ec::ecdlp(c, pp, qq, ec::EcdlpMode::BruteForce, rng);
    CommandResult r;
    if (!brute.has_value()) {
        r.result = {{"error", "Q is not in the cyclic group generated by P"}};
        r.verification = {{"modes_agree", quantum == brute}};
        r.ok = false;
        return r;
    }
    r.result = {{"r", *brute}};
    r.verification = {{"modes_agree", quantum == brute},
                      {"scalar_check", ec::scalar_mul(c, *brute, pp) == qq}};
    r.ok = quantum == brute && ec::scalar_mul(c, *brute, pp) == qq;
    return r;
}

CommandResult cmd_zeta(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta, std::uint32_t rmax) {
    ff::FieldSpec f = ff::make_field(p, 1);
    cz::ProjectiveCurve curve = cz::homogenize_weierstrass(f, ff::element_of_index(f, alpha % p),
                                                           ff::element_of_index(f, beta % p));
    std::vector<std::uint64_t> counts;
    for (std::uint32_t r = 1; r <= rmax; ++r) counts.push_back(cz::count_points(curve, r));
    cz::ZetaSeries z = cz::zeta_from_counts(counts);
    auto back = cz::counts_from_zeta(z);
    bool roundtrip = true;
    for (std::uint32_t r = 0; r < rmax; ++r)
        roundtrip &= back[r] == mpq_class(static_cast<unsigned long>(counts[r]));

    CommandResult res;
    json coeffs = json::array();
    for (const auto& c : z.coeff) coeffs.push_back(c.get_str());
    res.result = {{"counts", counts}, {"zeta_coefficients", coeffs}, {"genus", cz::genus(3)}};
    res.verification = {{"exp_log_roundtrip_exact", roundtrip}};
    res.ok = roundtrip;
    return res;
}

CommandResult cmd_pell(std::uint64_t m) {
    auto [x, y] = units::pell_fundamental(nt::BigInt(m));
    CommandResult r;
    r.result = {{"x", big_to_json(x)}, {"y", big_to_json(y)}};
    const bool exact = x * x - nt::BigInt(m) * y * y == 1;
    r.verification = {{"pell_equation_exact", exact}};
    r.ok = exact;
    return r;
}

CommandResult cmd_unit(std::uint64_t m) {
    units::QuadInt eps = units::fundamental_unit(nt::BigInt(m));
    const double reg = units::regulator(nt::BigInt(m));
    auto [x, y] = units::pell_fundamental(nt::BigInt(m));
    units::QuadInt pell_unit =
        units::ring_basis(nt::BigInt(m)) == units::OmegaBasis::SqrtM
            ? units::QuadInt(x, y, nt::BigInt(m))
            : units::QuadInt(x - y, 2 * y, nt::BigInt(m));
    // The Pell unit must be a power of the fundamental unit.
    bool is_power = false;
    units::QuadInt acc(1, 0, nt::BigInt(m));
    for (int i = 0; i < 64 && !is_power; ++i) {
        acc = units::mul(acc, eps);
        is_power = acc == pell_unit;
    }
    CommandResult r;
    r.result = {{"fundamental_unit", units::render(eps)},
                {"a", big_to_json(eps.a)},
                {"b", big_to_json(eps.b)},
                {"norm", big_to_json(units::norm(eps))},
                {"regulator", reg}};
    r.verification = {{"is_unit", units::is_unit(eps)}, {"pell_unit_is_power", is_power}};
    r.ok = units::is_unit(eps) && is_power;
    return r;
}

CommandResult cmd_weak_sampling(std::uint32_t n, const std::string& gens_text) {
    na::FiniteGroup d = na::dihedral_group(n);
    auto irreps = na::dihedral_irreps(n);
    std::vector<std::uint32_t> gens;
    for (auto& v : parse_vector_list(gens_text)) {
        if (v.size() != 2) throw std::invalid_argument("dihedral generators must look like \"l,k\"");
        gens.push_back(na::dihedral_index(n, std::uint32_t(v[0]), std::uint32_t(v[1])));
    }
    auto h = na::subgroup_closure(d, gens);
    auto dist = na::weak_sampling_distribution(d, irreps, h);

    double total = 0;
    std::size_t dim_sq = 0;
    for (const auto& [name, p] : dist) total += p;
    for (const auto& r : irreps) dim_sq += r.dim * r.dim;

    CommandResult r;
    json h_json = json::array();
    for (auto e : h) h_json.push_back(d.label(e));
    r.result = {{"subgroup", h_json}, {"distribution", dist}};
    r.verification = {{"sums_to_one", std::abs(total - 1.0) <= 1e-9},
                      {"irreps_complete", dim_sq == d.order()}};
    r.ok = std::abs(total - 1.0) <= 1e-9 && dim_sq == d.order();
    return r;
}

CommandResult cmd_hidden_shift(std::uint32_t n, std::uint32_t s, Rng& rng) {
    na::HiddenShiftInstance inst = na::hidden_shift_instance(n, s, rng);
    const std::uint32_t recovered = na::hidden_shift_bruteforce(inst.f0, inst.f1);
    na::FiniteGroup d = na::dihedral_group(n);
    const bool hides = na::hides_check(
        d, [&](std::uint32_t idx) { return inst.oracle(idx); }, inst.hidden_subgroup());
    CommandResult r;
    r.result = {{"recovered_shift", recovered}, {"f0", inst.f0}, {"f1", inst.f1}};
    r.verification = {{"matches_planted", recovered == s}, {"hides_subgroup", hides}};
    r.ok = recovered == s && hides;
    return r;
}

CommandResult cmd_graph_aut(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph-aut: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    na::Graph g = na::parse_graph(buffer.str());
    na::GraphAutInstance inst = na::graph_aut_instance(g);

    CommandResult r;
    json auts = json::array();
    if (inst.automorphisms.size() <= 64) {
        for (auto rank : inst.automorphisms) {
            std::string images;
            for (auto v : inst.permutations[rank]) {
                if (!images.empty()) images += " ";
                images += std::to_string(int(v) + 1);
            }
            auts.push_back(images);
        }
    }
    const bool hides = inst.hides_verified();
    r.result = {{"vertices", g.n},
                {"edges", g.edges.size()},
                {"aut_order", inst.automorphisms.size()},
                {"automorphisms", auts}};
    r.verification = {{"hides_automorphism_group", hides},
                      {"order_divides_factorial", inst.permutations.size() % inst.automorphisms.size() == 0}};
    r.ok = hides;
    return r;
}

CommandResult cmd_pgm_demo(double overlap, Rng& rng) {
    if (overlap < 0 || overlap >= 1) throw std::invalid_argument("pgm demo: overlap must be in [0, 1)");
    Eigen::VectorXcd psi0(2), psi1(2);
    psi0 << 1.0, 0.0;
    psi1 << overlap, std::sqrt(1.0 - overlap * overlap);
    std::vector<na::WeightedState> ensemble{{0.5, psi0 * psi0.adjoint()}, {0.5, psi1 * psi1.adjoint()}};
    const double success = na::pgm_success(ensemble);
    const double closed_form = 0.5 * (1.0 + std::sqrt(1.0 - overlap * overlap));

    na::Povm povm = na::pgm(ensemble);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2, 2);
    double min_eig = 0;
    for (const auto& op : povm.ops) {
        sum += op;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(op);
        min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
    }
    const double completeness = (sum - povm.support_projector).cwiseAbs().maxCoeff();

    // A second, seeded random ensemble exercises POVM validity.
    Eigen::MatrixXcd r1(3, 3), r2(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            r1(i, j) = std::complex<double>(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
            r2(i, j) = std::complex<double>(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
        }
    std::vector<na::WeightedState> random_ensemble{{0.3, r1 * r1.adjoint() / (r1 * r1.adjoint()).trace().real()},
                                                   {0.7, r2 * r2.adjoint() / (r2 * r2.adjoint()).trace().real()}};
    na::Povm random_povm = na::pgm(random_ensemble);
    Eigen::MatrixXcd random_sum = Eigen::MatrixXcd::Zero(3, 3);
    double random_min = 0;
    for (const auto& op : random_povm.ops) {
        random_sum += op;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(op);
        random_min = std::min(random_min, eig.eigenvalues().minCoeff());
    }
    const double random_completeness = (random_sum - random_povm.support_projector).cwiseAbs().maxCoeff();

    CommandResult r;
    r.result = {{"overlap", overlap},
                {"success_probability", success},
                {"closed_form", closed_form},
                {"random_ensemble_success", na::pgm_success(random_ensemble)}};
    const bool ok = std::abs(success - closed_form) <= 1e-9 && min_eig >= -1e-9 && completeness <= 1e-9 &&
                    random_min >= -1e-9 && random_completeness <= 1e-9;
    r.verification = {{"matches_closed_form", std::abs(success - closed_form) <= 1e-9},
                      {"povm_psd", min_eig >= -1e-9},
                      {"povm_complete_on_support", completeness <= 1e-9},
                      {"random_povm_psd", random_min >= -1e-9},
                      {"random_povm_complete_on_support", random_completeness <= 1e-9}};
    r.ok = ok;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hsplab: exact desk-scale simulation of quantum algorithms for algebraic problems"};
    app.require_subcommand(1);
    Options opt;
    try {
        opt.seed = default_seed();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    add_globals(&app, opt);

    std::uint64_t arg_n = 0, arg_a = 0, arg_g = 0, arg_x = 0, arg_m = 0;
    std::uint64_t ec_p = 5, ec_alpha = 0, ec_beta = 0;
    std::uint32_t arg_n32 = 0, arg_s32 = 0, zeta_rmax = 4;
    std::string moduli_text, gens_text = "0,1", point_p, point_q, graph_file;
    double overlap = 0.5;

    auto* factor_cmd = app.add_subcommand("factor", "Factor an odd composite via the period-finding pipeline");
    factor_cmd->add_option("N", arg_n, "odd composite with two distinct prime factors")->required();
    add_globals(factor_cmd, opt);

    auto* order_cmd = app.add_subcommand("order", "Multiplicative order of a mod N (quantum + oracle)");
    order_cmd->add_option("a", arg_a)->required();
    order_cmd->add_option("N", arg_n)->required();
    add_globals(order_cmd, opt);

    auto* dlog_cmd = app.add_subcommand("dlog", "Discrete log of x base g in (Z/NZ)^x");
    dlog_cmd->add_option("g", arg_g)->required();
    dlog_cmd->add_option("x", arg_x)->required();
    dlog_cmd->add_option("N", arg_n)->required();
    add_globals(dlog_cmd, opt);

    auto* hsp_cmd = app.add_subcommand("hsp", "Abelian hidden subgroup with a planted subgroup");
    hsp_cmd->add_option("--moduli", moduli_text, "comma list, e.g. 8,9,5")->required();
    hsp_cmd->add_option("--gens", gens_text, "planted generators, e.g. \"2,0,0;0,3,0\"")->required();
    add_globals(hsp_cmd, opt);

    auto* ec_cmd = app.add_subcommand("ec", "Elliptic curve Y^2 = X^3 + alpha X + beta over F_p");
    ec_cmd->require_subcommand(1);
    auto add_curve_opts = [&](CLI::App* sub) {
        sub->add_option("--p", ec_p, "field prime (not 2 or 3)")->required();
        sub->add_option("--alpha", ec_alpha)->required();
        sub->add_option("--beta", ec_beta)->required();
        add_globals(sub, opt);
    };
    auto* ec_points_cmd = ec_cmd->add_subcommand("points", "Enumerate all points");
    add_curve_opts(ec_points_cmd);
    auto* ec_add_cmd = ec_cmd->add_subcommand("add", "Add two points");
    add_curve_opts(ec_add_cmd);
    ec_add_cmd->add_option("--P", point_p, "\"(x, y)\" or \"O\"")->required();
    ec_add_cmd->add_option("--Q", point_q, "\"(x, y)\" or \"O\"")->required();
    auto* ec_dlog_cmd = ec_cmd->add_subcommand("ecdlp", "Solve rP = Q (quantum + brute force)");
    add_curve_opts(ec_dlog_cmd);
    ec_dlog_cmd->add_option("--P", point_p)->required();
    ec_dlog_cmd->add_option("--Q", point_q)->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Projective point counts and zeta series of a Weierstrass curve");
    zeta_cmd->add_option("--p", ec_p)->required();
    zeta_cmd->add_option("--alpha", ec_alpha)->required();
    zeta_cmd->add_option("--beta", ec_beta)->required();
    zeta_cmd->add_option("--rmax", zeta_rmax, "truncation order (default 4)");
    add_globals(zeta_cmd, opt);

    auto* pell_cmd = app.add_subcommand("pell", "Least solution of x^2 - m y^2 = 1");
    pell_cmd->add_option("m", arg_m, "nonsquare m > 1")->required();
    add_globals(pell_cmd, opt);

    auto* unit_cmd = app.add_subcommand("unit", "Fundamental unit and regulator of Q(sqrt(m))");
    unit_cmd->add_option("m", arg_m, "squarefree m > 1")->required();
    add_globals(unit_cmd, opt);

    auto* dihedral_cmd = app.add_subcommand("dihedral", "Dihedral-group pipelines");
    dihedral_cmd->require_subcommand(1);
    auto* weak_cmd = dihedral_cmd->add_subcommand("weak-sampling", "Exact weak Fourier sampling distribution");
    weak_cmd->add_option("n", arg_n32, "D_n with n >= 3")->required();
    weak_cmd->add_option("--gens", gens_text, "subgroup generators \"l,k;l,k\" (default reflection \"0,1\")");
    add_globals(weak_cmd, opt);

    auto* shift_cmd = app.add_subcommand("hidden-shift", "Hidden shift instance on D_n");
    shift_cmd->add_option("n", arg_n32)->required();
    shift_cmd->add_option("s", arg_s32)->required();
    add_globals(shift_cmd, opt);

    auto* graph_cmd = app.add_subcommand("graph-aut", "Graph automorphism group from an edge-list file");
    graph_cmd->add_option("FILE", graph_file, "one \"i j\" pair per line, 1-indexed")->required();
    add_globals(graph_cmd, opt);

    auto* pgm_cmd = app.add_subcommand("pgm", "Pretty good measurement");
    pgm_cmd->require_subcommand(1);
    auto* pgm_demo_cmd = pgm_cmd->add_subcommand("demo", "Two-state PGM with known closed form");
    pgm_demo_cmd->add_option("--overlap", overlap, "state overlap in [0, 1)");
    add_globals(pgm_demo_cmd, opt);

    std::vector<const char*> argv;
    argv.push_back("hsplab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Rng rng(opt.seed);
    std::string name;
    json input;
    CommandResult cr;
    try {
        if (*factor_cmd) {
            name = "factor";
            input = {{"N", arg_n}};
            cr = cmd_factor(arg_n, rng);
        } else if (*order_cmd) {
            name = "order";
            input = {{"a", arg_a}, {"N", arg_n}};
            cr = cmd_order(arg_a, arg_n, rng);
        } else if (*dlog_cmd) {
            name = "dlog";
            input = {{"g", arg_g}, {"x", arg_x}, {"N", arg_n}};
            cr = cmd_dlog(arg_g, arg_x, arg_n, rng);
        } else if (*hsp_cmd) {
            name = "hsp";
            input = {{"moduli", moduli_text}, {"gens", gens_text}};
            cr = cmd_hsp(moduli_text, gens_text, rng);
        } else if (*ec_points_cmd) {
            name = "ec points";
            input = {{"p", ec_p}, {"alpha", ec_alpha}, {"beta", ec_beta}};
            cr = cmd_ec_points(ec_p, ec_alpha, ec_beta);
        } else if (*ec_add_cmd) {
            name = "ec add";
            input = {{"p", ec_p}, {"alpha", ec_alpha}, {"beta", ec_beta}, {"P", point_p}, {"Q", point_q}};
            cr = cmd_ec_add(ec_p, ec_alpha, ec_beta, point_p, point_q);
        } else if (*ec_dlog_cmd) {
            name = "ec ecdlp";
            input = {{"p", ec_p}, {"alpha", ec_alpha}, {"beta", ec_beta}, {"P", point_p}, {"Q", point_q}};
            cr = cmd_ec_ecdlp(ec_p, ec_alpha, ec_beta, point_p, point_q, rng);
        } else if (*zeta_cmd) {
            name = "zeta";
            input = {{"p", ec_p}, {"alpha", ec_alpha}, {"beta", ec_beta}, {"rmax", zeta_rmax}};
            cr = cmd_zeta(ec_p, ec_alpha, ec_beta, zeta_rmax);
        } else if (*pell_cmd) {
            name = "pell";
            input = {{"m", arg_m}};
            cr = cmd_pell(arg_m);
        } else if (*unit_cmd) {
            name = "unit";
            input = {{"m", arg_m}};
            cr = cmd_unit(arg_m);
        } else if (*weak_cmd) {
            name = "dihedral weak-sampling";
            input = {{"n", arg_n32}, {"gens", gens_text}};
            cr = cmd_weak_sampling(arg_n32, gens_text);
        } else if (*shift_cmd) {
            name = "hidden-shift";
            input = {{"n", arg_n32}, {"s", arg_s32}};
            cr = cmd_hidden_shift(arg_n32, arg_s32, rng);
        } else if (*graph_cmd) {
            name = "graph-aut";
            input = {{"file", graph_file}};
            cr = cmd_graph_aut(graph_file);
        } else if (*pgm_demo_cmd) {
            name = "pgm demo";
            input = {{"overlap", overlap}};
            cr = cmd_pgm_demo(overlap, rng);
        } else {
            err << app.help();
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json failure = {{"subcommand", name}, {"input", input}, {"seed", opt.seed}, {"error", e.what()}};
        out << failure.dump(2) << "\n";
        return 1;
    }

    json report = {{"subcommand", name},
                   {"input", input},
                   {"seed", opt.seed},
                   {"result", cr.result},
                   {"verification", cr.verification}};
    out << report.dump(2) << "\n";
    if (opt.verbose) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        err << "[hsplab] " << name << (cr.ok ? " ok" : " FAILED VERIFICATION") << " in " << elapsed.count()
            << " ms\n";
    }
    return cr.ok ? 0 : 1;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace hsplab::cli
