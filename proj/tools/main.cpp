// apollonet: generate Apollonian-family networks (P-RAN, RAN/HDRAN, P-DAN),
// print their closed-form laws, and compare simulations against them.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "apollonet/edge_list.hpp"
#include "apollonet/experiment.hpp"
#include "apollonet/generators.hpp"
#include "apollonet/theory.hpp"

namespace {

using namespace apollonet;

struct GrowthFlags {
    int dimension = 2;
    std::string model = "pran";
    std::uint64_t vertices = 0;
    std::uint64_t steps = 0;
    std::uint32_t pdan_m = 1;
    std::string pdan_policy = "frontier";
    std::uint64_t seed = 42;
};

void add_growth_flags(CLI::App* cmd, GrowthFlags& f) {
    cmd->add_option("-d,--dimension", f.dimension, "network dimension d (>= 1)")
        ->capture_default_str();
    cmd->add_option("-m,--model", f.model, "growth model: pran|ran|pdan")->capture_default_str();
    auto* vertices = cmd->add_option("-n,--vertices", f.vertices, "target vertex count");
    auto* steps = cmd->add_option("-t,--steps", f.steps,
                                  "insertion steps (pdan: generations); alternative to --vertices");
    vertices->excludes(steps);
    steps->excludes(vertices);
    cmd->add_option("--pdan-m", f.pdan_m, "pdan: vertices per clique per generation")
        ->capture_default_str();
    cmd->add_option("--pdan-policy", f.pdan_policy, "pdan: insertion sites, frontier|all")
        ->capture_default_str();
    cmd->add_option("-s,--seed", f.seed, "base RNG seed (APOLLONET_SEED overrides)")
        ->capture_default_str();
}

GrowthConfig to_config(const CLI::App* cmd, const GrowthFlags& f) {
    GrowthConfig cfg;
    cfg.dimension = f.dimension;
    cfg.model = model_from_string(f.model);
    cfg.pdan_m = f.pdan_m;
    cfg.pdan_policy = pdan_policy_from_string(f.pdan_policy);
    cfg.rng_seed = f.seed;

    if (const char* env = std::getenv("APOLLONET_SEED")) {
        try {
            cfg.rng_seed = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("APOLLONET_SEED is not a valid unsigned integer: " +
                                        std::string(env));
        }
    }

    const bool have_vertices = cmd->count("--vertices") > 0;
    const bool have_steps = cmd->count("--steps") > 0;
    if (!have_vertices && !have_steps)
        throw std::invalid_argument("one of --vertices or --steps is required");
    cfg.target = have_vertices ? GrowthTarget::vertices(f.vertices) : GrowthTarget::steps(f.steps);

    validate(cfg);
    return cfg;
}

int run_generate(const CLI::App* cmd, const GrowthFlags& flags, std::uint32_t runs,
                 const std::filesystem::path& out_dir, bool sidecar) {
    const GrowthConfig base = to_config(cmd, flags);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());

    for (std::uint32_t i = 0; i < runs; ++i) {
        GrowthConfig cfg = base;
        cfg.rng_seed = base.rng_seed + i;
        const Graph g = generate(cfg);

        const std::string stem =
            to_string(cfg.model) + "_d" + std::to_string(cfg.dimension) + "_run" + std::to_string(i);
        const auto edges_path = out_dir / (stem + ".edges");
        io::write_edge_list(edges_path, g, to_string(cfg.model), cfg.rng_seed);
        if (sidecar) io::write_clique_sidecar(io::sidecar_path(edges_path), g);

        std::cout << edges_path.string() << " n=" << g.vertex_count() << " nc=" << g.clique_count()
                  << " edges=" << g.edge_count() << "\n";
    }
    return 0;
}

int run_theory(int dimension, std::int64_t k_max, int m_max, double tail_tol) {
    std::cout.precision(17);
    for (int m = 0; m <= m_max; ++m)
        std::cout << "pc," << m << ',' << theory::parallel_degree_pmf(dimension, m) << "\n";

    const theory::DegreePmf pmf = theory::degree_distribution(dimension, k_max);
    for (std::int64_t k = pmf.k_min; k <= pmf.k_max(); ++k)
        std::cout << "degree," << k << ',' << pmf.at(k) << "\n";

    const theory::ClusteringSeries c = theory::average_clustering(dimension, tail_tol);
    std::cout << "gamma," << theory::degree_exponent(dimension).to_double() << "\n";
    std::cout << "mean_parallel_degree," << theory::mean_parallel_degree(dimension).to_double()
              << "\n";
    std::cout << "rho," << theory::parallel_coefficient(dimension).to_double() << "\n";
    std::cout << "clustering," << c.value << "\n";
    std::cout << "clustering_truncation_k," << c.truncation_k << "\n";
    std::cout << "degree_tail_mass," << pmf.tail_mass << "\n";
    return 0;
}

int run_compare(const CLI::App* cmd, const GrowthFlags& flags, ExperimentSpec spec,
                const std::string& analyses, const std::filesystem::path& out_dir,
                double max_abs_error) {
    spec.growth = to_config(cmd, flags);
    spec.analyses = parse_analyses(analyses);
    if (cmd->count("--max-abs-error") > 0) spec.max_abs_error = max_abs_error;

    const ExperimentReport report = run_experiment(spec);
    write_report_files(report, out_dir);

    std::cout.precision(10);
    std::cout << "report: " << (out_dir / "report.json").string() << "\n";
    for (const ScalarComparison& s : report.summary) {
        std::cout << s.name << ": " << s.empirical;
        if (s.theoretical) std::cout << " (theory " << *s.theoretical << ")";
        std::cout << "\n";
    }
    if (report.tolerance_violated) {
        std::cerr << "tolerance violated: some comparison exceeds max-abs-error "
                  << *spec.max_abs_error << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apollonian network generator and law-verification toolkit"};
    app.require_subcommand(1);

    GrowthFlags gen_flags;
    std::uint32_t gen_runs = 1;
    std::filesystem::path gen_out;
    bool gen_no_sidecar = false;
    CLI::App* gen = app.add_subcommand("generate", "grow networks and write edge lists");
    add_growth_flags(gen, gen_flags);
    gen->add_option("-r,--runs", gen_runs, "independent runs (seeds base..base+runs-1)")
        ->capture_default_str();
    gen->add_option("-o,--out", gen_out, "output directory")->required();
    gen->add_flag("--no-sidecar", gen_no_sidecar, "skip the .cliques registry sidecar");

    int theory_dim = 2;
    std::int64_t theory_kmax = 60;
    int theory_mmax = 10;
    double theory_tail_tol = 1e-6;
    CLI::App* thry = app.add_subcommand("theory", "print closed-form laws as CSV");
    thry->add_option("-d,--dimension", theory_dim, "network dimension d (>= 1)")
        ->capture_default_str();
    thry->add_option("--kmax", theory_kmax, "degree pmf truncation")->capture_default_str();
    thry->add_option("--mmax", theory_mmax, "parallel-degree pmf truncation")
        ->capture_default_str();
    thry->add_option("--tail-tol", theory_tail_tol, "clustering series tail tolerance")
        ->capture_default_str();

    GrowthFlags cmp_flags;
    ExperimentSpec cmp_spec;
    std::string cmp_analyses = "degree,parallel,clustering,gamma,apl";
    std::filesystem::path cmp_out;
    double cmp_tol = 0.0;
    CLI::App* cmp = app.add_subcommand("compare", "run experiments and compare against theory");
    add_growth_flags(cmp, cmp_flags);
    cmp->add_option("-r,--runs", cmp_spec.runs, "independent runs per experiment")
        ->capture_default_str();
    cmp->add_option("--analyses", cmp_analyses,
                    "comma list of degree,parallel,clustering,gamma,apl")
        ->capture_default_str();
    cmp->add_option("--kmin", cmp_spec.gamma_k_min, "smallest degree used by the gamma estimator")
        ->capture_default_str();
    cmp->add_option("--apl-pairs", cmp_spec.apl_pairs, "sampled pairs for path-length estimation")
        ->capture_default_str();
    cmp->add_option("--exact-apl-max", cmp_spec.exact_apl_max,
                    "exact path lengths up to this vertex count")
        ->capture_default_str();
    cmp->add_option("-o,--out", cmp_out, "output directory for report.json and CSV tables")
        ->required();
    cmp->add_option("--max-abs-error", cmp_tol,
                    "fail (exit 2) when any comparison against theory exceeds this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return run_generate(gen, gen_flags, gen_runs, gen_out, !gen_no_sidecar);
        if (thry->parsed()) return run_theory(theory_dim, theory_kmax, theory_mmax, theory_tail_tol);
        if (cmp->parsed()) return run_compare(cmp, cmp_flags, cmp_spec, cmp_analyses, cmp_out, cmp_tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
