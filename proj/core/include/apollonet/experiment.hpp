#ifndef APOLLONET_EXPERIMENT_HPP
#define APOLLONET_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "apollonet/analysis.hpp"
#include "apollonet/generators.hpp"

namespace apollonet {

enum class Analysis { degree, parallel, clustering, gamma, apl };

std::string to_string(Analysis a);
Analysis analysis_from_string(const std::string& s);
/// Parse a comma-separated list, e.g. "degree,parallel,apl".
std::vector<Analysis> parse_analyses(const std::string& list);

struct ExperimentSpec {
    GrowthConfig growth;        // growth.rng_seed is the base seed; run i uses base+i
    std::uint32_t runs = 1;
    std::vector<Analysis> analyses;
    std::uint32_t gamma_k_min = 30;
    std::uint64_t apl_pairs = 100'000;
    std::uint32_t exact_apl_max = 5000;   // exact APL up to this many vertices, sampled beyond
    std::optional<double> max_abs_error;  // when set, violations flag the report
};

struct RunMetrics {
    std::uint32_t run_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t vertices = 0;
    std::uint64_t cliques = 0;
    std::uint64_t edges = 0;
    std::uint64_t steps = 0;
    std::optional<double> avg_parallel_degree;
    std::optional<double> parallel_coefficient;
    std::optional<double> average_clustering;
    std::optional<double> gamma;  // absent when no degree reaches k_min
    std::optional<analysis::AplEstimate> apl;
    double seconds = 0.0;
};

struct ComparisonTable {
    std::string name;  // "parallel" or "degree"
    std::vector<analysis::ComparisonRow> rows;
};

/// Cross-run mean of a scalar next to its closed-form reference (the laws
/// target P-RAN; rho is 0 for RAN; no reference exists for mean distance).
struct ScalarComparison {
    std::string name;
    double empirical = 0.0;
    std::optional<double> theoretical;
    std::optional<double> abs_error;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<RunMetrics> runs;
    std::vector<ComparisonTable> tables;
    std::vector<ScalarComparison> summary;
    double total_seconds = 0.0;
    bool tolerance_violated = false;
};

/// Generate spec.runs graphs (seeds base..base+runs-1), measure each
/// requested analysis, and assemble comparison tables against the
/// closed-form laws. Deterministic apart from the timing fields.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Serialize the report as JSON. Timing fields live in a separate
/// "timings" section and can be excluded for reproducibility checks.
std::string report_to_json(const ExperimentReport& report, bool include_timings = true);

/// Write report.json and one <table>.csv per comparison table
/// (columns: value,empirical,theoretical,abs_error,std_dev).
void write_report_files(const ExperimentReport& report, const std::filesystem::path& output_dir);

}  // namespace apollonet

#endif
