#ifndef APOLLONET_GENERATORS_HPP
#define APOLLONET_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "apollonet/graph.hpp"
#include "apollonet/rng.hpp"

namespace apollonet {

enum class Model { pran, ran, pdan };

/// P-DAN growth rule: insert into the cliques created by the previous
/// generation only (frontier), or into every clique in the registry (all).
enum class PdanPolicy { frontier, all };

std::string to_string(Model m);
std::string to_string(PdanPolicy p);
Model model_from_string(const std::string& s);
PdanPolicy pdan_policy_from_string(const std::string& s);

/// Growth budget, either as insertion steps (P-DAN: generations) or as a
/// final vertex count. For pran/ran these interconvert via N = d+2+t;
/// for P-DAN a vertex target stops at the first generation reaching it.
struct GrowthTarget {
    enum class Kind { steps, vertices };

    static GrowthTarget steps(std::uint64_t n) { return {Kind::steps, n}; }
    static GrowthTarget vertices(std::uint64_t n) { return {Kind::vertices, n}; }

    Kind kind = Kind::steps;
    std::uint64_t value = 0;
};

struct GrowthConfig {
    int dimension = 2;
    Model model = Model::pran;
    GrowthTarget target = GrowthTarget::steps(0);
    std::uint32_t pdan_m = 1;          // vertices per clique per generation
    PdanPolicy pdan_policy = PdanPolicy::frontier;
    std::uint64_t rng_seed = 0;
};

/// Throws std::invalid_argument on out-of-domain configs (dimension < 1,
/// pdan_m < 1, vertex target below the seed size).
void validate(const GrowthConfig& cfg);

/// Number of insertion steps (pran/ran) or generations (pdan) the target
/// resolves to.
std::uint64_t resolve_steps(const GrowthConfig& cfg);

/// Uniform clique choice over the whole registry at every step.
Graph generate_pran(const GrowthConfig& cfg, RngStream& rng);

/// Uniform choice restricted to never-selected cliques (classic RAN/HDRAN);
/// every parallel degree ends up 0 or 1.
Graph generate_ran(const GrowthConfig& cfg, RngStream& rng);

/// Deterministic parallel construction: pdan_m vertices per clique per
/// generation, target clique set per pdan_policy. No randomness.
Graph generate_pdan(const GrowthConfig& cfg);

/// Dispatch on cfg.model, seeding a fresh stream from cfg.rng_seed.
Graph generate(const GrowthConfig& cfg);

}  // namespace apollonet

#endif
