#include "apollonet/generators.hpp"

#include <limits>
#include <stdexcept>

namespace apollonet {

std::string to_string(Model m) {
    switch (m) {
        case Model::pran: return "pran";
        case Model::ran: return "ran";
        case Model::pdan: return "pdan";
    }
    throw std::logic_error("unreachable model");
}

std::string to_string(PdanPolicy p) {
    return p == PdanPolicy::frontier ? "frontier" : "all";
}

Model model_from_string(const std::string& s) {
    if (s == "pran") return Model::pran;
    if (s == "ran") return Model::ran;
    if (s == "pdan") return Model::pdan;
    throw std::invalid_argument("unknown model '" + s + "' (expected pran|ran|pdan)");
}

PdanPolicy pdan_policy_from_string(const std::string& s) {
    if (s == "frontier") return PdanPolicy::frontier;
    if (s == "all") return PdanPolicy::all;
    throw std::invalid_argument("unknown pdan policy '" + s + "' (expected frontier|all)");
}

void validate(const GrowthConfig& cfg) {
    if (cfg.dimension < 1)
        throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(cfg.dimension));
    if (cfg.model == Model::pdan && cfg.pdan_m < 1)
        throw std::invalid_argument("pdan requires at least one vertex per clique per generation");
    if (cfg.target.kind == GrowthTarget::Kind::vertices) {
        const std::uint64_t seed_size =
            cfg.model == Model::pdan ? cfg.dimension + 1 : cfg.dimension + 2;
        if (cfg.target.value < seed_size)
            throw std::invalid_argument("vertex target " + std::to_string(cfg.target.value) +
                                        " below seed size " + std::to_string(seed_size));
    }
}

namespace {

// generations needed for a P-DAN to reach `target` vertices
std::uint64_t pdan_generations_for_vertices(const GrowthConfig& cfg, std::uint64_t target) {
    const std::uint64_t d = static_cast<std::uint64_t>(cfg.dimension);
    const std::uint64_t m = cfg.pdan_m;
    std::uint64_t n = d + 1;
    std::uint64_t generations = 0;
    // frontier: cliques created last generation; all: the whole registry
    std::uint64_t insert_sites = 1;
    std::uint64_t registry = 1;
    while (n < target) {
        const std::uint64_t sites = cfg.pdan_policy == PdanPolicy::frontier ? insert_sites : registry;
        if (sites > (std::numeric_limits<std::uint64_t>::max() - n) / m)
            throw std::overflow_error("pdan vertex target overflows 64-bit growth recursion");
        n += m * sites;
        insert_sites = m * sites * (d + 1);
        registry += insert_sites;
        ++generations;
    }
    return generations;
}

}  // namespace

std::uint64_t resolve_steps(const GrowthConfig& cfg) {
    validate(cfg);
    if (cfg.target.kind == GrowthTarget::Kind::steps) return cfg.target.value;
    if (cfg.model == Model::pdan) return pdan_generations_for_vertices(cfg, cfg.target.value);
    return cfg.target.value - (static_cast<std::uint64_t>(cfg.dimension) + 2);
}

Graph generate_pran(const GrowthConfig& cfg, RngStream& rng) {
    if (cfg.model != Model::pran) throw std::invalid_argument("config model is not pran");
    const std::uint64_t steps = resolve_steps(cfg);

    Graph g = Graph::seed(cfg.dimension);
    g.reserve_insertions(steps);
    for (std::uint64_t i = 0; i < steps; ++i)
        g.insert_vertex(static_cast<CliqueId>(rng.bounded(g.clique_count())));
    return g;
}

Graph generate_ran(const GrowthConfig& cfg, RngStream& rng) {
    if (cfg.model != Model::ran) throw std::invalid_argument("config model is not ran");
    const std::uint64_t steps = resolve_steps(cfg);

    Graph g = Graph::seed(cfg.dimension);
    g.reserve_insertions(steps);

    // dense pool of never-selected cliques; O(1) draw and swap-remove
    std::vector<CliqueId> eligible(g.clique_count());
    for (CliqueId c = 0; c < g.clique_count(); ++c) eligible[c] = c;
    eligible.reserve(eligible.size() + steps * static_cast<std::size_t>(cfg.dimension));

    for (std::uint64_t i = 0; i < steps; ++i) {
        const std::size_t pick = rng.bounded(eligible.size());
        const CliqueId chosen = eligible[pick];
        eligible[pick] = eligible.back();
        eligible.pop_back();

        const CliqueId first_child = g.clique_count();
        g.insert_vertex(chosen);
        for (CliqueId c = first_child; c < g.clique_count(); ++c) eligible.push_back(c);
    }
    return g;
}

Graph generate_pdan(const GrowthConfig& cfg) {
    if (cfg.model != Model::pdan) throw std::invalid_argument("config model is not pdan");
    const std::uint64_t generations = resolve_steps(cfg);

    Graph g = Graph::simplex(cfg.dimension);
    CliqueId frontier_begin = 0;
    for (std::uint64_t gen = 0; gen < generations; ++gen) {
        const CliqueId created_begin = g.clique_count();
        const CliqueId site_begin = cfg.pdan_policy == PdanPolicy::frontier ? frontier_begin : 0;
        for (CliqueId c = site_begin; c < created_begin; ++c)
            for (std::uint32_t i = 0; i < cfg.pdan_m; ++i) g.insert_vertex(c);
        frontier_begin = created_begin;
    }
    return g;
}

Graph generate(const GrowthConfig& cfg) {
    validate(cfg);
    RngStream rng(cfg.rng_seed);
    switch (cfg.model) {
        case Model::pran: return generate_pran(cfg, rng);
        case Model::ran: return generate_ran(cfg, rng);
        case Model::pdan: return generate_pdan(cfg);
    }
    throw std::logic_error("unreachable model");
}

}  // namespace apollonet
