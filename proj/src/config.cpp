#include "lpbench/harness.hpp"

#include <fmt/format.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace lpbench {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) throw ConfigError(fmt::format("{}: '{}' is not a valid number", key, value));
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw ConfigError(fmt::format("{}: expected true/false, got '{}'", key, value));
}

std::string dataset_id_for_path(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Both: return "both";
    }
    return "csv";
}

OutputFormat parse_format(const std::string& value) {
    if (value == "csv") return OutputFormat::Csv;
    if (value == "json") return OutputFormat::Json;
    if (value == "both") return OutputFormat::Both;
    throw ConfigError(fmt::format("format: expected csv|json|both, got '{}'", value));
}

}  // namespace

void ExperimentConfig::validate() const {
    if (datasets.empty()) throw ConfigError("no datasets configured");
    if (samplers.empty()) throw ConfigError("no samplers configured");
    if (measures.empty()) throw ConfigError("no measures configured");
    if (repetitions < 1) throw ConfigError("reps must be at least 1");
    if (!(sample_fraction > 0.0 && sample_fraction < 1.0)) {
        throw ConfigError(fmt::format("sf = {} must lie in (0, 1)", sample_fraction));
    }
    if (walkers < 1) throw ConfigError("m must be at least 1");
    if (!(burn_probability > 0.0 && burn_probability < 1.0)) {
        throw ConfigError(fmt::format("pf = {} must lie in (0, 1)", burn_probability));
    }
    for (double p : sweep_burn) {
        if (!(p > 0.0 && p < 1.0)) throw ConfigError(fmt::format("sweep_pf value {} must lie in (0, 1)", p));
    }
    if (auc_comparisons < 1) throw ConfigError("auc_n must be at least 1");
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig config;
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> synthetic_specs;
    std::uint64_t synthetic_seed = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("config line {}: expected key = value", line_no));
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        try {
            if (key == "dataset") {
                config.datasets.push_back({dataset_id_for_path(value), value, {}, 0});
            } else if (key == "synthetic") {
                synthetic_specs.push_back(value);
            } else if (key == "synthetic_seed") {
                synthetic_seed = parse_number<std::uint64_t>(key, value);
            } else if (key == "comment_prefix") {
                config.load.comment_prefixes = split_list(value);
            } else if (key == "separator") {
                config.load.separator = value == "tab" ? "\t" : value;
            } else if (key == "one_indexed") {
                config.load.one_indexed = parse_bool(key, value);
            } else if (key == "samplers") {
                config.samplers.clear();
                for (const auto& name : split_list(value)) {
                    const auto m = parse_sampler(name);
                    if (!m) throw ConfigError(fmt::format("unknown sampler '{}'", name));
                    config.samplers.push_back(*m);
                }
            } else if (key == "measures") {
                config.measures.clear();
                for (const auto& name : split_list(value)) {
                    const auto m = parse_measure(name);
                    if (!m) throw ConfigError(fmt::format("unknown measure '{}'", name));
                    config.measures.push_back(*m);
                }
            } else if (key == "reps") {
                config.repetitions = parse_number<std::uint32_t>(key, value);
            } else if (key == "sf") {
                config.sample_fraction = parse_number<double>(key, value);
            } else if (key == "m") {
                config.walkers = parse_number<std::uint32_t>(key, value);
            } else if (key == "pf") {
                config.burn_probability = parse_number<double>(key, value);
            } else if (key == "sweep_m") {
                config.sweep_walkers = split_list(value);
            } else if (key == "sweep_pf") {
                config.sweep_burn.clear();
                for (const auto& v : split_list(value)) config.sweep_burn.push_back(parse_number<double>(key, v));
            } else if (key == "auc_n") {
                config.auc_comparisons = parse_number<std::uint64_t>(key, value);
            } else if (key == "precision") {
                config.compute_precision = parse_bool(key, value);
            } else if (key == "histograms") {
                config.histograms = parse_bool(key, value);
            } else if (key == "histogram_degrees") {
                if (value == "full") {
                    config.histogram_degrees = DegreeSource::Full;
                } else if (value == "train") {
                    config.histogram_degrees = DegreeSource::Train;
                } else {
                    throw ConfigError("histogram_degrees: expected full|train");
                }
            } else if (key == "seed") {
                config.master_seed = parse_number<std::uint64_t>(key, value);
            } else if (key == "out") {
                config.output_dir = value;
            } else if (key == "format") {
                config.format = parse_format(value);
            } else if (key == "jobs") {
                config.jobs = parse_number<unsigned>(key, value);
            } else {
                throw ConfigError(fmt::format("unknown key '{}'", key));
            }
        } catch (const ConfigError& e) {
            throw ConfigError(fmt::format("config line {}: {}", line_no, e.what()));
        }
    }
    for (const auto& spec : synthetic_specs) config.datasets.push_back({spec, {}, spec, synthetic_seed});
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path));
    auto config = parse_config(in);
    // Relative dataset paths are resolved against the config's directory.
    const auto base = std::filesystem::path(path).parent_path();
    for (auto& d : config.datasets) {
        if (!d.path.empty() && std::filesystem::path(d.path).is_relative() && !std::filesystem::exists(d.path)) {
            d.path = (base / d.path).string();
        }
    }
    return config;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    auto& datasets = j["datasets"] = nlohmann::json::array();
    for (const auto& d : c.datasets) {
        datasets.push_back({{"id", d.id}, {"path", d.path}, {"synthetic", d.synthetic}, {"synthetic_seed", d.synthetic_seed}});
    }
    j["load"] = {{"comment_prefixes", c.load.comment_prefixes},
                 {"separator", c.load.separator},
                 {"one_indexed", c.load.one_indexed}};
    auto& samplers = j["samplers"] = nlohmann::json::array();
    for (auto s : c.samplers) samplers.push_back(std::string(sampler_name(s)));
    auto& measures = j["measures"] = nlohmann::json::array();
    for (auto m : c.measures) measures.push_back(std::string(measure_name(m)));
    j["reps"] = c.repetitions;
    j["sf"] = c.sample_fraction;
    j["m"] = c.walkers;
    j["pf"] = c.burn_probability;
    j["sweep_m"] = c.sweep_walkers;
    j["sweep_pf"] = c.sweep_burn;
    j["auc_n"] = c.auc_comparisons;
    j["precision"] = c.compute_precision;
    j["histograms"] = c.histograms;
    j["histogram_degrees"] = c.histogram_degrees == DegreeSource::Full ? "full" : "train";
    j["seed"] = c.master_seed;
    j["out"] = c.output_dir;
    j["format"] = std::string(format_name(c.format));
    j["jobs"] = c.jobs;
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    try {
        ExperimentConfig c;
        c.datasets.clear();
        for (const auto& d : j.at("datasets")) {
            c.datasets.push_back({d.at("id").get<std::string>(), d.at("path").get<std::string>(),
                                  d.at("synthetic").get<std::string>(), d.at("synthetic_seed").get<std::uint64_t>()});
        }
        const auto& load = j.at("load");
        c.load.comment_prefixes = load.at("comment_prefixes").get<std::vector<std::string>>();
        c.load.separator = load.at("separator").get<std::string>();
        c.load.one_indexed = load.at("one_indexed").get<bool>();
        c.samplers.clear();
        for (const auto& s : j.at("samplers")) {
            const auto m = parse_sampler(s.get<std::string>());
            if (!m) throw ConfigError("unknown sampler in JSON config");
            c.samplers.push_back(*m);
        }
        c.measures.clear();
        for (const auto& s : j.at("measures")) {
            const auto m = parse_measure(s.get<std::string>());
            if (!m) throw ConfigError("unknown measure in JSON config");
            c.measures.push_back(*m);
        }
        c.repetitions = j.at("reps").get<std::uint32_t>();
        c.sample_fraction = j.at("sf").get<double>();
        c.walkers = j.at("m").get<std::uint32_t>();
        c.burn_probability = j.at("pf").get<double>();
        c.sweep_walkers = j.at("sweep_m").get<std::vector<std::string>>();
        c.sweep_burn = j.at("sweep_pf").get<std::vector<double>>();
        c.auc_comparisons = j.at("auc_n").get<std::uint64_t>();
        c.compute_precision = j.at("precision").get<bool>();
        c.histograms = j.at("histograms").get<bool>();
        c.histogram_degrees = j.at("histogram_degrees").get<std::string>() == "train" ? DegreeSource::Train
                                                                                       : DegreeSource::Full;
        c.master_seed = j.at("seed").get<std::uint64_t>();
        c.output_dir = j.at("out").get<std::string>();
        c.format = parse_format(j.at("format").get<std::string>());
        c.jobs = j.at("jobs").get<unsigned>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(fmt::format("malformed JSON config: {}", e.what()));
    }
}

bool same_config(const ExperimentConfig& a, const ExperimentConfig& b) { return config_to_json(a) == config_to_json(b); }

}  // namespace lpbench
