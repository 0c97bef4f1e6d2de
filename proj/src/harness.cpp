#include "lpbench/harness.hpp"
#include "lpbench/generators.hpp"
#include "lpbench/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace lpbench {

namespace {

struct RepOutcome {
    bool ok = false;
    std::string error;
    std::vector<double> auc;
    std::vector<double> precision;
    std::vector<Histogram> histograms;  // e_pub, e_CN
};

RepOutcome run_repetition(const ExperimentConfig& config, const Dataset& dataset, SamplerSpec spec,
                          std::uint32_t rep) {
    RepOutcome out;
    try {
        spec.seed = cell_seed(config.master_seed, dataset.id, spec, rep);
        const Partition split = sample(dataset.graph, spec);
        if (split.probe.empty()) throw EvaluationError("probe set is empty");
        const Graph train(dataset.graph.node_count(), split.train);
        const std::uint64_t auc_seed = SeedHasher().add(spec.seed).add("auc").value();
        out.auc = auc_sampled_multi(config.measures, train, split.probe, config.auc_comparisons, auc_seed);
        if (config.compute_precision) {
            out.precision = precision_multi(config.measures, train, split.probe);
        } else {
            out.precision.assign(config.measures.size(), 0.0);
        }
        if (config.histograms) {
            const Graph* source = config.histogram_degrees == DegreeSource::Train ? &train : nullptr;
            out.histograms.push_back(probe_distribution(dataset.graph, split.probe, EdgeProperty::Popularity, source));
            out.histograms.push_back(
                probe_distribution(dataset.graph, split.probe, EdgeProperty::CommonNeighbors, source));
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

// Runs fn(0..count-1) on `jobs` threads; slots are written by index only.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) fn(k);
        });
    }
}

void mean_and_std(const std::vector<double>& xs, double& mean, double& sd) {
    if (xs.empty()) {
        mean = sd = 0.0;
        return;
    }
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    sd = std::sqrt(sq / static_cast<double>(xs.size()));
}

std::string params_label(const SamplerSpec& spec) { return spec.canonical_params(); }

std::string params_label(const ExperimentResult& r) {
    SamplerSpec spec;
    spec.method = r.sampler;
    spec.sample_fraction = r.sample_fraction;
    if (r.walkers) spec.walkers = *r.walkers;
    if (r.burn_probability) spec.burn_probability = *r.burn_probability;
    return spec.canonical_params();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

bool ExperimentOutput::any_failure() const {
    return std::any_of(results.begin(), results.end(), [](const ExperimentResult& r) { return r.failed_reps > 0; });
}

Dataset prepare_dataset(const DatasetSource& source, const LoadOptions& load) {
    Graph full;
    if (!source.path.empty()) {
        full = load_edge_list_file(source.path, load).graph;
    } else {
        full = generate_synthetic(parse_synthetic(source.synthetic, source.synthetic_seed));
    }
    Subgraph gcc = giant_component(full);
    if (gcc.graph.node_count() < 3) {
        throw GraphError(fmt::format("dataset '{}': giant component has fewer than 3 nodes", source.id));
    }
    return {source.id, std::move(gcc.graph)};
}

std::uint64_t cell_seed(std::uint64_t master, std::string_view dataset, const SamplerSpec& spec, std::uint32_t rep) {
    return SeedHasher()
        .add(master)
        .add(dataset)
        .add(sampler_name(spec.method))
        .add(spec.canonical_params())
        .add(static_cast<std::uint64_t>(rep))
        .value();
}

ExperimentOutput run_on_dataset(const ExperimentConfig& config, const Dataset& dataset,
                                const std::vector<SamplerSpec>& specs) {
    const std::size_t reps = config.repetitions;
    std::vector<RepOutcome> outcomes(specs.size() * reps);
    parallel_for(outcomes.size(), config.jobs, [&](std::size_t k) {
        outcomes[k] = run_repetition(config, dataset, specs[k / reps], static_cast<std::uint32_t>(k % reps));
    });

    ExperimentOutput out;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const SamplerSpec& spec = specs[s];
        std::uint32_t failed = 0;
        std::string first_error;
        std::vector<Histogram> pub;
        std::vector<Histogram> cn;
        for (std::size_t r = 0; r < reps; ++r) {
            const RepOutcome& o = outcomes[s * reps + r];
            if (!o.ok) {
                if (failed++ == 0) first_error = o.error;
                continue;
            }
            if (!o.histograms.empty()) {
                pub.push_back(o.histograms[0]);
                cn.push_back(o.histograms[1]);
            }
        }
        for (std::size_t k = 0; k < config.measures.size(); ++k) {
            std::vector<double> aucs;
            std::vector<double> precs;
            for (std::size_t r = 0; r < reps; ++r) {
                const RepOutcome& o = outcomes[s * reps + r];
                if (!o.ok) continue;
                aucs.push_back(o.auc[k]);
                precs.push_back(o.precision[k]);
            }
            ExperimentResult row;
            row.dataset = dataset.id;
            row.sampler = spec.method;
            row.sample_fraction = spec.sample_fraction;
            if (spec.method == SamplerMethod::FS) row.walkers = spec.walkers;
            if (spec.method == SamplerMethod::FF) row.burn_probability = spec.burn_probability;
            row.measure = config.measures[k];
            row.reps = static_cast<std::uint32_t>(aucs.size());
            row.failed_reps = failed;
            row.failure = first_error;
            mean_and_std(aucs, row.auc_mean, row.auc_std);
            mean_and_std(precs, row.precision_mean, row.precision_std);
            out.results.push_back(std::move(row));
        }
        if (!pub.empty()) {
            out.histograms.push_back({dataset.id, spec.method, params_label(spec), average_histograms(pub)});
            out.histograms.push_back({dataset.id, spec.method, params_label(spec), average_histograms(cn)});
        }
    }
    return out;
}

ExperimentOutput run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentOutput out;
    for (const DatasetSource& source : config.datasets) {
        const Dataset dataset = prepare_dataset(source, config.load);
        std::vector<SamplerSpec> specs;
        for (SamplerMethod method : config.samplers) {
            SamplerSpec spec;
            spec.method = method;
            spec.sample_fraction = config.sample_fraction;
            spec.walkers = config.walkers;
            spec.burn_probability = config.burn_probability;
            specs.push_back(spec);
        }
        auto part = run_on_dataset(config, dataset, specs);
        std::move(part.results.begin(), part.results.end(), std::back_inserter(out.results));
        std::move(part.histograms.begin(), part.histograms.end(), std::back_inserter(out.histograms));
    }
    return out;
}

std::vector<std::uint32_t> resolve_walker_grid(const std::vector<std::string>& grid, std::size_t node_count) {
    const auto cap = static_cast<std::uint32_t>(std::min<std::size_t>(1000, node_count));
    auto value_of = [&](const std::string& token) -> std::uint32_t {
        if (token == "cap") return cap;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(token, &used);
            if (used != token.size() || v == 0) throw std::invalid_argument(token);
            return static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
            throw ConfigError(fmt::format("sweep_m: '{}' is not a positive integer or 'cap'", token));
        }
    };
    std::vector<std::uint32_t> values;
    for (const std::string& item : grid) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            values.push_back(value_of(item));
            continue;
        }
        // start:stop:step, stop inclusive
        const auto second = item.find(':', colon + 1);
        if (second == std::string::npos) throw ConfigError(fmt::format("sweep_m range '{}' needs start:stop:step", item));
        const std::uint32_t start = value_of(item.substr(0, colon));
        const std::uint32_t stop = value_of(item.substr(colon + 1, second - colon - 1));
        const std::uint32_t step = value_of(item.substr(second + 1));
        for (std::uint32_t v = start; v <= stop; v += step) values.push_back(v);
    }
    if (values.empty()) throw ConfigError("sweep_m grid is empty");
    for (std::uint32_t v : values) {
        if (v > cap) {
            throw SamplerParameterError(fmt::format(
                "FS sweep value m = {} exceeds the cap min{{1000, |V|}} = {} (|V| = {})", v, cap, node_count));
        }
    }
    return values;
}

ExperimentOutput run_sweep(const ExperimentConfig& config) {
    config.validate();
    if (config.sweep_walkers.empty() && config.sweep_burn.empty()) {
        throw ConfigError("sweep needs sweep_m (FS) and/or sweep_pf (FF)");
    }
    ExperimentOutput out;
    for (const DatasetSource& source : config.datasets) {
        const Dataset dataset = prepare_dataset(source, config.load);
        std::vector<SamplerSpec> specs;
        if (!config.sweep_walkers.empty()) {
            for (std::uint32_t m : resolve_walker_grid(config.sweep_walkers, dataset.graph.node_count())) {
                SamplerSpec spec;
                spec.method = SamplerMethod::FS;
                spec.sample_fraction = config.sample_fraction;
                spec.walkers = m;
                specs.push_back(spec);
            }
        }
        for (double pf : config.sweep_burn) {
            SamplerSpec spec;
            spec.method = SamplerMethod::FF;
            spec.sample_fraction = config.sample_fraction;
            spec.burn_probability = pf;
            specs.push_back(spec);
        }
        auto part = run_on_dataset(config, dataset, specs);
        std::move(part.results.begin(), part.results.end(), std::back_inserter(out.results));
        std::move(part.histograms.begin(), part.histograms.end(), std::back_inserter(out.histograms));
    }
    return out;
}

std::vector<BestMeasureRow> best_measure_table(const std::vector<ExperimentResult>& results, double tie_tolerance) {
    std::vector<BestMeasureRow> rows;
    std::map<std::tuple<std::string, SamplerMethod, std::string>, std::size_t> index;
    std::vector<std::vector<const ExperimentResult*>> members;
    for (const ExperimentResult& r : results) {
        if (r.reps == 0) continue;
        const auto key = std::make_tuple(r.dataset, r.sampler, params_label(r));
        auto [it, inserted] = index.try_emplace(key, rows.size());
        if (inserted) {
            rows.push_back({r.dataset, r.sampler, params_label(r), {}, 0.0});
            members.emplace_back();
        }
        members[it->second].push_back(&r);
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
        double best = -1.0;
        for (const ExperimentResult* r : members[c]) best = std::max(best, r->auc_mean);
        rows[c].best_auc = best;
        for (const ExperimentResult* r : members[c]) {
            if (best - r->auc_mean <= tie_tolerance + 1e-12) rows[c].winners.push_back(r->measure);
        }
    }
    return rows;
}

void write_best_table(std::ostream& out, const std::vector<BestMeasureRow>& rows) {
    out << "dataset,sampler,params,best_auc,winners\n";
    for (const BestMeasureRow& row : rows) {
        std::string names;
        for (Measure m : row.winners) {
            if (!names.empty()) names += '/';
            names += measure_name(m);
        }
        out << fmt::format("{},{},{},{:.4f},{}\n", csv_field(row.dataset), sampler_name(row.sampler),
                           csv_field(row.params), row.best_auc, names);
    }
}

void write_results_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
    out << kCsvHeader << '\n';
    for (const ExperimentResult& r : results) {
        const std::string m = r.walkers ? fmt::format("{}", *r.walkers) : "";
        const std::string pf = r.burn_probability ? fmt::format("{}", *r.burn_probability) : "";
        if (r.reps == 0) {
            out << fmt::format("{},{},{},{},{},{},0,,,,\n", csv_field(r.dataset), sampler_name(r.sampler),
                               r.sample_fraction, m, pf, measure_name(r.measure));
            continue;
        }
        out << fmt::format("{},{},{},{},{},{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", csv_field(r.dataset),
                           sampler_name(r.sampler), r.sample_fraction, m, pf, measure_name(r.measure), r.reps,
                           r.auc_mean, r.auc_std, r.precision_mean, r.precision_std);
    }
}

nlohmann::json results_to_json(const std::vector<ExperimentResult>& results, const ExperimentConfig& config) {
    nlohmann::json j;
    j["library_version"] = std::string(kLibraryVersion);
    j["std_kind"] = "population";
    j["config"] = config_to_json(config);
    auto& rows = j["results"] = nlohmann::json::array();
    for (const ExperimentResult& r : results) {
        nlohmann::json row = {{"dataset", r.dataset},
                              {"sampler", std::string(sampler_name(r.sampler))},
                              {"s_f", r.sample_fraction},
                              {"m", r.walkers ? nlohmann::json(*r.walkers) : nlohmann::json(nullptr)},
                              {"p_f", r.burn_probability ? nlohmann::json(*r.burn_probability) : nlohmann::json(nullptr)},
                              {"measure", std::string(measure_name(r.measure))},
                              {"reps", r.reps},
                              {"failed_reps", r.failed_reps},
                              {"auc_mean", r.auc_mean},
                              {"auc_std", r.auc_std},
                              {"precision_mean", r.precision_mean},
                              {"precision_std", r.precision_std},
                              {"failure", r.failure}};
        rows.push_back(std::move(row));
    }
    return j;
}

std::vector<ExperimentResult> results_from_json(const nlohmann::json& j) {
    std::vector<ExperimentResult> out;
    try {
        for (const auto& row : j.at("results")) {
            ExperimentResult r;
            r.dataset = row.at("dataset").get<std::string>();
            const auto sampler = parse_sampler(row.at("sampler").get<std::string>());
            const auto measure = parse_measure(row.at("measure").get<std::string>());
            if (!sampler || !measure) throw ConfigError("unknown sampler or measure in results JSON");
            r.sampler = *sampler;
            r.measure = *measure;
            r.sample_fraction = row.at("s_f").get<double>();
            if (!row.at("m").is_null()) r.walkers = row.at("m").get<std::uint32_t>();
            if (!row.at("p_f").is_null()) r.burn_probability = row.at("p_f").get<double>();
            r.reps = row.at("reps").get<std::uint32_t>();
            r.failed_reps = row.at("failed_reps").get<std::uint32_t>();
            r.auc_mean = row.at("auc_mean").get<double>();
            r.auc_std = row.at("auc_std").get<double>();
            r.precision_mean = row.at("precision_mean").get<double>();
            r.precision_std = row.at("precision_std").get<double>();
            r.failure = row.at("failure").get<std::string>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(fmt::format("malformed results JSON: {}", e.what()));
    }
    return out;
}

void write_histograms_csv(std::ostream& out, const std::vector<HistogramResult>& histograms) {
    out << "dataset,sampler,params,property,bin,lower,upper,mass,reps\n";
    for (const HistogramResult& h : histograms) {
        const Binning& b = h.histogram.binning;
        for (std::size_t bin = 0; bin < h.histogram.mass.size(); ++bin) {
            out << fmt::format("{},{},{},{},{},{},{},{:.9f},{}\n", csv_field(h.dataset), sampler_name(h.sampler),
                               csv_field(h.params), edge_property_name(b.kind), bin, b.lower(bin), b.upper(bin),
                               h.histogram.mass[bin], h.histogram.rep_count);
        }
    }
}

std::vector<std::filesystem::path> emit_results(const ExperimentOutput& output, const ExperimentConfig& config,
                                                const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create output directory '{}': {}", directory.string(), ec.message()));

    std::vector<std::filesystem::path> written;
    auto open = [&](const std::string& name) {
        const auto path = directory / name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
        written.push_back(path);
        return file;
    };
    auto check = [&](std::ofstream& file) {
        file.flush();
        if (!file) throw std::runtime_error(fmt::format("I/O error writing '{}'", written.back().string()));
    };
    if (config.format != OutputFormat::Json) {
        auto file = open("results.csv");
        write_results_csv(file, output.results);
        check(file);
    }
    if (config.format != OutputFormat::Csv) {
        auto file = open("results.json");
        file << results_to_json(output.results, config).dump(2) << '\n';
        check(file);
    }
    if (!output.histograms.empty()) {
        auto file = open("histograms.csv");
        write_histograms_csv(file, output.histograms);
        check(file);
    }
    {
        auto file = open("best_measures.csv");
        write_best_table(file, best_measure_table(output.results));
        check(file);
    }
    return written;
}

std::vector<StatsRow> stats_report(const std::vector<std::string>& paths, const LoadOptions& load) {
    std::vector<StatsRow> rows;
    for (const std::string& path : paths) {
        StatsRow row;
        row.dataset = std::filesystem::path(path).stem().string();
        try {
            const LoadedGraph loaded = load_edge_list_file(path, load);
            row.stats = stats(giant_component(loaded.graph).graph);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_stats_table(std::ostream& out, const std::vector<StatsRow>& rows) {
    out << fmt::format("{:<16} {:>8} {:>9} {:>8} {:>6} {:>7}\n", "dataset", "|V|", "|E|", "<k>", "C", "H");
    for (const StatsRow& row : rows) {
        if (!row.stats) {
            out << fmt::format("{:<16} error: {}\n", row.dataset, row.error);
            continue;
        }
        const GraphStats& s = *row.stats;
        out << fmt::format("{:<16} {:>8} {:>9} {:>8.2f} {:>6.2f} {:>7.2f}\n", row.dataset, s.node_count, s.edge_count,
                           s.avg_degree, s.clustering, s.heterogeneity);
    }
}

}  // namespace lpbench
