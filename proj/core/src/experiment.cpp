#include "apollonet/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apollonet/theory.hpp"

namespace apollonet {

using nlohmann::json;

std::string to_string(Analysis a) {
    switch (a) {
        case Analysis::degree: return "degree";
        case Analysis::parallel: return "parallel";
        case Analysis::clustering: return "clustering";
        case Analysis::gamma: return "gamma";
        case Analysis::apl: return "apl";
    }
    throw std::logic_error("unreachable analysis");
}

Analysis analysis_from_string(const std::string& s) {
    if (s == "degree") return Analysis::degree;
    if (s == "parallel") return Analysis::parallel;
    if (s == "clustering") return Analysis::clustering;
    if (s == "gamma") return Analysis::gamma;
    if (s == "apl") return Analysis::apl;
    throw std::invalid_argument("unknown analysis '" + s +
                                "' (expected degree|parallel|clustering|gamma|apl)");
}

std::vector<Analysis> parse_analyses(const std::string& list) {
    std::vector<Analysis> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const Analysis a = analysis_from_string(item);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    if (out.empty()) throw std::invalid_argument("analysis list is empty");
    return out;
}

namespace {

bool wants(const ExperimentSpec& spec, Analysis a) {
    return std::find(spec.analyses.begin(), spec.analyses.end(), a) != spec.analyses.end();
}

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

void add_scalar(ExperimentReport& report, const std::string& name,
                const std::vector<double>& per_run, std::optional<double> theoretical) {
    if (per_run.empty()) return;
    ScalarComparison s;
    s.name = name;
    s.empirical = mean_of(per_run);
    s.theoretical = theoretical;
    if (theoretical) s.abs_error = std::abs(s.empirical - *theoretical);
    report.summary.push_back(s);
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    validate(spec.growth);
    if (spec.runs < 1) throw std::invalid_argument("experiment needs at least one run");
    if (spec.analyses.empty()) throw std::invalid_argument("experiment needs at least one analysis");

    const auto t_start = std::chrono::steady_clock::now();
    const int d = spec.growth.dimension;

    ExperimentReport report;
    report.spec = spec;

    std::vector<Histogram> degree_runs, parallel_runs;
    std::vector<double> avg_parallel, parallel_coeff, clustering, gammas, apl_means;
    std::vector<double> min_degree_fraction;

    for (std::uint32_t i = 0; i < spec.runs; ++i) {
        const auto run_start = std::chrono::steady_clock::now();

        GrowthConfig cfg = spec.growth;
        cfg.rng_seed = spec.growth.rng_seed + i;
        RngStream rng = RngStream::for_run(spec.growth.rng_seed, i);

        Graph g;
        switch (cfg.model) {
            case Model::pran: g = generate_pran(cfg, rng); break;
            case Model::ran: g = generate_ran(cfg, rng); break;
            case Model::pdan: g = generate_pdan(cfg); break;
        }

        RunMetrics metrics;
        metrics.run_index = i;
        metrics.seed = cfg.rng_seed;
        metrics.vertices = g.vertex_count();
        metrics.cliques = g.clique_count();
        metrics.edges = g.edge_count();
        metrics.steps = g.step_count();

        if (wants(spec, Analysis::degree) || wants(spec, Analysis::gamma)) {
            Histogram h = analysis::degree_histogram(g);
            if (wants(spec, Analysis::gamma)) {
                // a short run may not reach k_min; report the run without gamma then
                bool any = false;
                for (const auto& [k, c] : h.counts())
                    if (k >= spec.gamma_k_min) { any = true; break; }
                if (any) {
                    metrics.gamma = analysis::gamma_mle(h, spec.gamma_k_min);
                    gammas.push_back(*metrics.gamma);
                }
            }
            if (wants(spec, Analysis::degree)) {
                min_degree_fraction.push_back(h.pmf(static_cast<std::uint64_t>(d) + 1));
                degree_runs.push_back(std::move(h));
            }
        }
        if (wants(spec, Analysis::parallel)) {
            Histogram h = analysis::parallel_degree_histogram(g);
            metrics.avg_parallel_degree = h.mean();
            metrics.parallel_coefficient = h.mean() - h.pmf(1);
            avg_parallel.push_back(*metrics.avg_parallel_degree);
            parallel_coeff.push_back(*metrics.parallel_coefficient);
            parallel_runs.push_back(std::move(h));
        }
        if (wants(spec, Analysis::clustering)) {
            metrics.average_clustering = analysis::average_clustering(g);
            clustering.push_back(*metrics.average_clustering);
        }
        if (wants(spec, Analysis::apl)) {
            if (g.vertex_count() <= spec.exact_apl_max)
                metrics.apl = analysis::apl_exact(g, spec.exact_apl_max);
            else
                metrics.apl = analysis::apl_sampled(g, spec.apl_pairs, rng);
            apl_means.push_back(metrics.apl->mean_distance);
        }

        metrics.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                        run_start).count();
        report.runs.push_back(std::move(metrics));
    }

    // comparison tables against the closed-form reference laws
    if (!parallel_runs.empty()) {
        ComparisonTable table;
        table.name = "parallel";
        table.rows = analysis::compare_to_theory(
            parallel_runs,
            [d](std::uint64_t m) { return theory::parallel_degree_pmf(d, static_cast<int>(m)); });
        report.tables.push_back(std::move(table));
    }
    if (!degree_runs.empty()) {
        std::uint64_t k_top = d + 1;
        for (const Histogram& h : degree_runs)
            if (!h.counts().empty()) k_top = std::max(k_top, h.counts().rbegin()->first);
        const theory::DegreePmf law = theory::degree_distribution(d, static_cast<std::int64_t>(k_top));
        ComparisonTable table;
        table.name = "degree";
        table.rows = analysis::compare_to_theory(
            degree_runs,
            [&law](std::uint64_t k) { return law.at(static_cast<std::int64_t>(k)); });
        report.tables.push_back(std::move(table));
    }

    add_scalar(report, "avg_parallel_degree", avg_parallel,
               theory::mean_parallel_degree(d).to_double());
    add_scalar(report, "parallel_coefficient", parallel_coeff,
               spec.growth.model == Model::ran ? 0.0
                                               : theory::parallel_coefficient(d).to_double());
    add_scalar(report, "min_degree_fraction", min_degree_fraction, 0.5);
    if (!clustering.empty())
        add_scalar(report, "average_clustering", clustering,
                   theory::average_clustering(d, 1e-7).value);
    add_scalar(report, "gamma_mle", gammas, theory::degree_exponent(d).to_double());
    add_scalar(report, "mean_distance", apl_means, std::nullopt);

    if (spec.max_abs_error) {
        const double tol = *spec.max_abs_error;
        for (const ComparisonTable& table : report.tables)
            for (const analysis::ComparisonRow& row : table.rows)
                if (row.theoretical_prob >= 1e-3 && row.abs_error > tol)
                    report.tolerance_violated = true;
        for (const ScalarComparison& s : report.summary)
            if (s.abs_error && *s.abs_error > tol) report.tolerance_violated = true;
    }

    report.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
}

namespace {

json spec_to_json(const ExperimentSpec& spec) {
    json j;
    j["model"] = to_string(spec.growth.model);
    j["dimension"] = spec.growth.dimension;
    j["target"] = {{spec.growth.target.kind == GrowthTarget::Kind::steps ? "steps" : "vertices",
                    spec.growth.target.value}};
    if (spec.growth.model == Model::pdan) {
        j["pdan_m"] = spec.growth.pdan_m;
        j["pdan_policy"] = to_string(spec.growth.pdan_policy);
    }
    j["seed"] = spec.growth.rng_seed;
    j["runs"] = spec.runs;
    json names = json::array();
    for (const Analysis a : spec.analyses) names.push_back(to_string(a));
    j["analyses"] = names;
    j["gamma_k_min"] = spec.gamma_k_min;
    j["apl_pairs"] = spec.apl_pairs;
    j["exact_apl_max"] = spec.exact_apl_max;
    if (spec.max_abs_error) j["max_abs_error"] = *spec.max_abs_error;
    return j;
}

json rows_to_json(const std::vector<analysis::ComparisonRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back({{"value", row.value},
                       {"empirical", row.empirical_prob},
                       {"theoretical", row.theoretical_prob},
                       {"abs_error", row.abs_error},
                       {"std_dev", row.std_dev_across_runs}});
    }
    return arr;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report, bool include_timings) {
    json j;
    j["spec"] = spec_to_json(report.spec);

    json runs = json::array();
    for (const RunMetrics& m : report.runs) {
        json r;
        r["run"] = m.run_index;
        r["seed"] = m.seed;
        r["n"] = m.vertices;
        r["nc"] = m.cliques;
        r["edges"] = m.edges;
        r["steps"] = m.steps;
        if (m.avg_parallel_degree) r["avg_parallel_degree"] = *m.avg_parallel_degree;
        if (m.parallel_coefficient) r["parallel_coefficient"] = *m.parallel_coefficient;
        if (m.average_clustering) r["average_clustering"] = *m.average_clustering;
        if (m.gamma) r["gamma_mle"] = *m.gamma;
        if (m.apl) {
            r["apl"] = {{"mean", m.apl->mean_distance},
                        {"pairs", m.apl->pairs_evaluated},
                        {"method",
                         m.apl->method == analysis::AplEstimate::Method::exact ? "exact" : "sampled"},
                        {"std_error", m.apl->std_error}};
        }
        runs.push_back(std::move(r));
    }
    j["runs"] = runs;

    json tables;
    for (const ComparisonTable& t : report.tables) tables[t.name] = rows_to_json(t.rows);
    j["tables"] = tables;

    json summary;
    for (const ScalarComparison& s : report.summary) {
        json e;
        e["empirical"] = s.empirical;
        if (s.theoretical) e["theoretical"] = *s.theoretical;
        if (s.abs_error) e["abs_error"] = *s.abs_error;
        summary[s.name] = e;
    }
    j["summary"] = summary;
    j["tolerance_violated"] = report.tolerance_violated;

    if (include_timings) {
        json timings;
        timings["total_seconds"] = report.total_seconds;
        json per_run = json::array();
        for (const RunMetrics& m : report.runs) per_run.push_back(m.seconds);
        timings["per_run_seconds"] = per_run;
        j["timings"] = timings;
    }
    return j.dump(2) + "\n";
}

void write_report_files(const ExperimentReport& report, const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + output_dir.string() + ": " + ec.message());

    {
        const auto path = output_dir / "report.json";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << report_to_json(report);
        if (!out) throw std::runtime_error("write failed for " + path.string());
    }

    for (const ComparisonTable& table : report.tables) {
        const auto path = output_dir / (table.name + ".csv");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << "value,empirical,theoretical,abs_error,std_dev\n";
        std::ostringstream fmt;
        fmt.precision(17);
        for (const analysis::ComparisonRow& row : table.rows) {
            fmt.str("");
            fmt << row.value << ',' << row.empirical_prob << ',' << row.theoretical_prob << ','
                << row.abs_error << ',' << row.std_dev_across_runs << '\n';
            out << fmt.str();
        }
        if (!out) throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace apollonet
