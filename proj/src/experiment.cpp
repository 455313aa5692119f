#include "firman/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace firman {

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

void write_trial_row(std::ofstream& out, const TrialRecord& t) {
    out << t.case_id << ',' << t.scenario_id << ',' << t.trial_index << ',' << t.seed << ','
        << t.n_agents << ',' << t.n_minority << ',' << t.homo_dyads << ',' << t.hetero_dyads << ','
        << t.total_dyads() << ',' << fmt(t.hetero_pct()) << ','
        << fmt(t.mean_ego_alter_similarity) << ',' << fmt(t.mean_similarity_majority) << ','
        << fmt(t.mean_similarity_minority) << ',' << fmt(t.pct_satisfied) << ',' << t.n_isolates
        << '\n';
}

constexpr const char* kTrialsHeader =
    "case,scenario,trial,seed,n_agents,n_minority,homo_dyads,hetero_dyads,total_dyads,"
    "hetero_pct,mean_similarity,mean_similarity_majority,mean_similarity_minority,"
    "pct_satisfied,n_isolates";

constexpr const char* kSummaryHeader =
    "case,scenario,n_trials,mean_total_dyads,sd_total_dyads,mean_homo_dyads,sd_homo_dyads,"
    "mean_hetero_dyads,sd_hetero_dyads,hetero_pct_pooled,mean_hetero_pct,sd_hetero_pct,"
    "mean_similarity,sd_similarity,mean_similarity_majority,sd_similarity_majority,"
    "mean_similarity_minority,sd_similarity_minority,mean_pct_satisfied,sd_pct_satisfied,"
    "mean_minority_share_pct,mean_n_isolates";

constexpr const char* kRatiosHeader =
    "case,q,facebook_mean_similarity,offline_mean_similarity,ratio,reference_ratio,delta";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

long parse_long(const std::string& s, const std::string& path, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw IoError(path + ":" + std::to_string(line_no) + ": expected an integer, got '" + s +
                      "'");
    }
}

}  // namespace

ExperimentConfig ExperimentConfig::paper_preset() {
    ExperimentConfig cfg;
    cfg.cases = {{1, 0.2}, {2, 0.5}, {3, 0.8}};
    cfg.scenarios = {{"offline", 30, 3.0}, {"facebook", 300, 30.0}};
    cfg.p = 0.22;
    cfg.tc_variance = 0.25;
    cfg.weights = {1.0};
    cfg.trials = 100;
    cfg.base_seed = 42;
    cfg.out_dir = "out";
    cfg.workers = 0;
    cfg.export_edges = false;
    return cfg;
}

void ExperimentConfig::validate() const {
    std::vector<std::string> bad;
    if (!(p >= 0.0 && p <= 1.0)) bad.push_back("p (must be in [0, 1])");
    if (!(tc_variance >= 0.0)) bad.push_back("tc_variance (must be >= 0)");
    if (weights.empty()) bad.push_back("weights (at least one dimension)");
    for (double w : weights)
        if (!(w >= 0.0)) {
            bad.push_back("weights (must be non-negative)");
            break;
        }
    if (trials < 1) bad.push_back("trials (must be >= 1)");
    if (out_dir.empty()) bad.push_back("out_dir (must be non-empty)");
    if (workers < 0) bad.push_back("workers (must be >= 0)");
    if (cases.empty()) bad.push_back("cases (at least one)");
    std::set<int> case_ids;
    for (const CaseSpec& c : cases) {
        if (!case_ids.insert(c.case_id).second)
            bad.push_back("cases (duplicate case_id " + std::to_string(c.case_id) + ")");
        if (!(c.q >= 0.0 && c.q <= 1.0))
            bad.push_back("cases[" + std::to_string(c.case_id) + "].q (must be in [0, 1])");
    }
    if (scenarios.empty()) bad.push_back("scenarios (at least one)");
    std::set<std::string> scenario_ids;
    for (const ScenarioParams& s : scenarios) {
        if (s.scenario_id.empty()) bad.push_back("scenarios (empty scenario_id)");
        if (!scenario_ids.insert(s.scenario_id).second)
            bad.push_back("scenarios (duplicate scenario_id '" + s.scenario_id + "')");
        if (s.n < 2) bad.push_back("scenarios['" + s.scenario_id + "'].n (must be >= 2)");
        if (!(s.tc_mean > 0.0))
            bad.push_back("scenarios['" + s.scenario_id + "'].tc_mean (must be > 0)");
    }
    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const std::string& b : bad) msg += " " + b + ";";
        throw ConfigError(msg);
    }
}

const CaseSpec& ExperimentConfig::find_case(int case_id) const {
    for (const CaseSpec& c : cases)
        if (c.case_id == case_id) return c;
    throw ConfigError("unknown case id: " + std::to_string(case_id));
}

const ScenarioParams& ExperimentConfig::find_scenario(std::string_view scenario_id) const {
    for (const ScenarioParams& s : scenarios)
        if (s.scenario_id == scenario_id) return s;
    throw ConfigError("unknown scenario id: " + std::string(scenario_id));
}

PopulationSpec ExperimentConfig::population_spec(const CaseSpec& cs,
                                                 const ScenarioParams& sc) const {
    PopulationSpec spec;
    spec.n = sc.n;
    spec.p = p;
    spec.q = cs.q;
    spec.tc_mean = sc.tc_mean;
    spec.tc_variance = tc_variance;
    spec.space = IdentitySpace(weights);
    return spec;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object: " + path);

    static const std::set<std::string> known = {"p",        "tc_variance", "weights",
                                                "trials",   "base_seed",   "out_dir",
                                                "workers",  "export_edges", "cases",
                                                "scenarios"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigError("unknown config key: '" + key + "'");

    ExperimentConfig cfg = paper_preset();
    try {
        if (j.contains("p")) cfg.p = j.at("p").get<double>();
        if (j.contains("tc_variance")) cfg.tc_variance = j.at("tc_variance").get<double>();
        if (j.contains("weights")) cfg.weights = j.at("weights").get<std::vector<double>>();
        if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
        if (j.contains("base_seed")) cfg.base_seed = j.at("base_seed").get<std::uint64_t>();
        if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
        if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
        if (j.contains("export_edges")) cfg.export_edges = j.at("export_edges").get<bool>();
        if (j.contains("cases")) {
            cfg.cases.clear();
            for (const auto& jc : j.at("cases"))
                cfg.cases.push_back({jc.at("case_id").get<int>(), jc.at("q").get<double>()});
        }
        if (j.contains("scenarios")) {
            cfg.scenarios.clear();
            for (const auto& js : j.at("scenarios"))
                cfg.scenarios.push_back({js.at("scenario_id").get<std::string>(),
                                         js.at("n").get<int>(), js.at("tc_mean").get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config type error in " + path + ": " + e.what());
    }
    cfg.validate();
    return cfg;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int case_id, std::string_view scenario_id,
                         int trial_index) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the scenario label
    for (unsigned char c : scenario_id) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    h = splitmix64(h + static_cast<std::uint32_t>(case_id));
    h = splitmix64(h + static_cast<std::uint32_t>(trial_index));
    return base_seed + h;
}

TrialResult run_trial(const ExperimentConfig& config, const CaseSpec& cs,
                      const ScenarioParams& sc, int trial_index, std::uint64_t seed) {
    const PopulationSpec spec = config.population_spec(cs, sc);
    Rng rng(seed);
    std::vector<Agent> population = sample_population(spec, rng);
    NetworkState state = run_to_equilibrium(std::move(population), spec.space, rng);
    TrialRecord record =
        make_trial_record(state, spec.space, cs.case_id, sc.scenario_id, trial_index, seed);
    return {std::move(record), std::move(state)};
}

void write_agents_csv(const NetworkState& state, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "id,si,to,tc,degree\n";
    for (const Agent& a : state.agents())
        out << a.id << ',' << a.si.at(0) << ',' << a.outreach << ',' << a.capacity << ','
            << state.degree(a.id) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

void write_edges_csv(const NetworkState& state, const std::string& path) {
    std::vector<Edge> sorted = state.edges();
    std::sort(sorted.begin(), sorted.end());
    std::ofstream out = open_output(path);
    out << "ego_id,alter_id,ego_si,alter_si\n";
    for (const Edge& e : sorted)
        out << e.first << ',' << e.second << ',' << state.agent(e.first).si.at(0) << ','
            << state.agent(e.second).si.at(0) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

TrialResult run_single(const ExperimentConfig& config, int case_id,
                       const std::string& scenario_id, std::uint64_t seed, bool export_files) {
    config.validate();
    const CaseSpec& cs = config.find_case(case_id);
    const ScenarioParams& sc = config.find_scenario(scenario_id);
    TrialResult result = run_trial(config, cs, sc, 0, seed);
    if (export_files) {
        std::filesystem::create_directories(config.out_dir);
        const std::string tag =
            "case" + std::to_string(case_id) + "_" + scenario_id + "_seed" + std::to_string(seed);
        write_agents_csv(result.state, config.out_dir + "/agents_" + tag + ".csv");
        write_edges_csv(result.state, config.out_dir + "/edges_" + tag + ".csv");
    }
    return result;
}

SweepResult run_sweep(const ExperimentConfig& config, const SweepHooks& hooks) {
    config.validate();
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.out_dir + "': " + ec.message());

    struct Job {
        const CaseSpec* cs;
        const ScenarioParams* sc;
        int trial;
    };
    std::vector<Job> jobs;
    for (const CaseSpec& cs : config.cases)
        for (const ScenarioParams& sc : config.scenarios)
            for (int t = 0; t < config.trials; ++t) jobs.push_back({&cs, &sc, t});

    SweepResult result;
    result.trials.resize(jobs.size());

    unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || failed.load()) return;
            const Job& job = jobs[i];
            try {
                const std::uint64_t seed = trial_seed(config.base_seed, job.cs->case_id,
                                                      job.sc->scenario_id, job.trial);
                TrialResult tr = run_trial(config, *job.cs, *job.sc, job.trial, seed);
                if (config.export_edges) {
                    const std::string tag = "case" + std::to_string(job.cs->case_id) + "_" +
                                            job.sc->scenario_id + "_t" + std::to_string(job.trial);
                    write_edges_csv(tr.state, config.out_dir + "/edges_" + tag + ".csv");
                }
                if (hooks.on_trial) hooks.on_trial(tr);
                result.trials[i] = std::move(tr.record);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                if (failure.empty()) failure = e.what();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error("sweep trial failed: " + failure);

    // Aggregate per (case, scenario) cell; jobs were laid out cell-major.
    const std::size_t n_cells = config.cases.size() * config.scenarios.size();
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        const auto begin = result.trials.begin() + static_cast<long>(cell * config.trials);
        result.summaries.push_back(summarize(std::vector<TrialRecord>(begin, begin + config.trials)));
    }
    std::map<int, std::map<std::string, const ScenarioSummary*>> by_cell;
    for (const ScenarioSummary& s : result.summaries) by_cell[s.case_id][s.scenario_id] = &s;

    const bool has_both = [&] {
        for (const CaseSpec& cs : config.cases) {
            auto it = by_cell.find(cs.case_id);
            if (it == by_cell.end() || !it->second.count("offline") ||
                !it->second.count("facebook"))
                return false;
        }
        return true;
    }();
    if (has_both) {
        for (const CaseSpec& cs : config.cases) {
            RatioRow row;
            row.case_id = cs.case_id;
            row.q = cs.q;
            row.facebook_mean = by_cell[cs.case_id]["facebook"]->similarity.mean;
            row.offline_mean = by_cell[cs.case_id]["offline"]->similarity.mean;
            row.ratio = fb_offline_ratio(row.facebook_mean, row.offline_mean);
            row.delta = row.ratio - row.reference;
            result.ratios.push_back(row);
        }
    }

    std::ofstream trials_out = open_output(config.out_dir + "/trials.csv");
    trials_out << kTrialsHeader << '\n';
    for (const TrialRecord& t : result.trials) write_trial_row(trials_out, t);
    if (!trials_out) throw IoError("write failed: " + config.out_dir + "/trials.csv");

    std::ofstream summary_out = open_output(config.out_dir + "/summary.csv");
    summary_out << kSummaryHeader << '\n';
    for (const ScenarioSummary& s : result.summaries)
        summary_out << s.case_id << ',' << s.scenario_id << ',' << s.n_trials << ','
                    << fmt(s.total_dyads.mean) << ',' << fmt(s.total_dyads.sd) << ','
                    << fmt(s.homo_dyads.mean) << ',' << fmt(s.homo_dyads.sd) << ','
                    << fmt(s.hetero_dyads.mean) << ',' << fmt(s.hetero_dyads.sd) << ','
                    << fmt(s.hetero_pct_pooled) << ',' << fmt(s.hetero_pct.mean) << ','
                    << fmt(s.hetero_pct.sd) << ',' << fmt(s.similarity.mean) << ','
                    << fmt(s.similarity.sd) << ',' << fmt(s.similarity_majority.mean) << ','
                    << fmt(s.similarity_majority.sd) << ',' << fmt(s.similarity_minority.mean)
                    << ',' << fmt(s.similarity_minority.sd) << ',' << fmt(s.pct_satisfied.mean)
                    << ',' << fmt(s.pct_satisfied.sd) << ',' << fmt(s.minority_share_pct.mean)
                    << ',' << fmt(s.n_isolates.mean) << '\n';
    if (!summary_out) throw IoError("write failed: " + config.out_dir + "/summary.csv");

    std::ofstream ratios_out = open_output(config.out_dir + "/ratios.csv");
    ratios_out << kRatiosHeader << '\n';
    for (const RatioRow& r : result.ratios)
        ratios_out << r.case_id << ',' << fmt(r.q) << ',' << fmt(r.facebook_mean) << ','
                   << fmt(r.offline_mean) << ',' << fmt(r.ratio) << ',' << fmt(r.reference) << ','
                   << fmt(r.delta) << '\n';
    if (!ratios_out) throw IoError("write failed: " + config.out_dir + "/ratios.csv");

    return result;
}

ValidationReport validate_files(const std::string& agents_path, const std::string& edges_path) {
    ValidationReport report;
    auto fail = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    std::ifstream agents_in(agents_path);
    if (!agents_in) throw IoError("cannot open agents file: " + agents_path);
    std::string line;
    if (!std::getline(agents_in, line) || split_csv_line(line) != std::vector<std::string>{
                                              "id", "si", "to", "tc", "degree"})
        throw IoError(agents_path + ": expected header 'id,si,to,tc,degree'");

    std::vector<Agent> agents;
    std::vector<long> stored_degrees;
    std::size_t line_no = 1;
    while (std::getline(agents_in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw IoError(agents_path + ":" + std::to_string(line_no) + ": expected 5 columns");
        Agent a;
        a.id = static_cast<AgentId>(parse_long(fields[0], agents_path, line_no));
        a.si = {static_cast<int>(parse_long(fields[1], agents_path, line_no))};
        a.outreach = static_cast<int>(parse_long(fields[2], agents_path, line_no));
        a.capacity = static_cast<int>(parse_long(fields[3], agents_path, line_no));
        stored_degrees.push_back(parse_long(fields[4], agents_path, line_no));
        agents.push_back(std::move(a));
    }
    const long n = static_cast<long>(agents.size());
    for (long i = 0; i < n; ++i)
        if (agents[static_cast<std::size_t>(i)].id != i) {
            fail("agent ids: expected dense 0..n-1, row " + std::to_string(i) + " has id " +
                 std::to_string(agents[static_cast<std::size_t>(i)].id));
            return report;  // cannot index the network; stop here
        }

    NetworkState state{std::move(agents)};
    const IdentitySpace space = IdentitySpace::single();

    std::ifstream edges_in(edges_path);
    if (!edges_in) throw IoError("cannot open edges file: " + edges_path);
    if (!std::getline(edges_in, line) || split_csv_line(line) != std::vector<std::string>{
                                             "ego_id", "alter_id", "ego_si", "alter_si"})
        throw IoError(edges_path + ": expected header 'ego_id,alter_id,ego_si,alter_si'");
    line_no = 1;
    while (std::getline(edges_in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw IoError(edges_path + ":" + std::to_string(line_no) + ": expected 4 columns");
        const long x = parse_long(fields[0], edges_path, line_no);
        const long y = parse_long(fields[1], edges_path, line_no);
        if (x < 0 || x >= n || y < 0 || y >= n) {
            fail("edge endpoints: (" + std::to_string(x) + ", " + std::to_string(y) +
                 ") reference unknown agents");
            continue;
        }
        const long x_si = parse_long(fields[2], edges_path, line_no);
        const long y_si = parse_long(fields[3], edges_path, line_no);
        if (x_si != state.agent(static_cast<AgentId>(x)).si.at(0) ||
            y_si != state.agent(static_cast<AgentId>(y)).si.at(0))
            fail("si consistency: edge (" + std::to_string(x) + ", " + std::to_string(y) +
                 ") si columns disagree with the agents file");
        state.add_edge_unchecked(static_cast<AgentId>(x), static_cast<AgentId>(y));
    }

    for (AgentId id = 0; id < static_cast<AgentId>(n); ++id)
        if (stored_degrees[static_cast<std::size_t>(id)] != state.degree(id))
            fail("stored degree: agent " + std::to_string(id) + " file says " +
                 std::to_string(stored_degrees[static_cast<std::size_t>(id)]) + ", edges give " +
                 std::to_string(state.degree(id)));

    const ValidationReport inner = validate_network(state, space, /*require_equilibrium=*/true);
    if (!inner.ok) {
        report.ok = false;
        report.violations.insert(report.violations.end(), inner.violations.begin(),
                                 inner.violations.end());
    }
    return report;
}

}  // namespace firman
