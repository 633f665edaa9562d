#include "osculant/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace osculant {

namespace {

using nlohmann::json;

std::string sidecar_path(const std::string& csv_path) { return csv_path + ".state.json"; }

// Replace-by-rename so a crash mid-write never leaves a torn checkpoint.
void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename " + tmp + " -> " + path + " failed");
}

json config_to_json_object(const ExperimentConfig& cfg) {
    json j;
    j["flag_type"]["a"] = cfg.flag_type.a;
    j["flag_type"]["n"] = cfg.flag_type.n;
    json data = json::array();
    for (const auto& [w, count] : cfg.schubert_data)
        data.push_back({{"condition", w.to_string()}, {"count", count}});
    j["schubert_data"] = std::move(data);
    j["expected_degree"] = cfg.expected_degree;
    j["iterations"] = cfg.iterations;
    j["seed"] = cfg.seed;
    j["point_pool_size"] = cfg.point_pool_size;
    j["sampling_range"] = cfg.sampling_range;
    j["output_path"] = cfg.output_path;
    j["worker_count"] = cfg.worker_count;
    j["step_budget"] = cfg.step_budget;
    return j;
}

ExperimentConfig config_from_json_object(const json& j) {
    ExperimentConfig cfg;
    cfg.flag_type = FlagType(j.at("flag_type").at("a").get<std::vector<int>>(),
                             j.at("flag_type").at("n").get<int>());
    for (const auto& entry : j.at("schubert_data")) {
        Permutation w = Permutation::parse(entry.at("condition").get<std::string>());
        int count = entry.at("count").get<int>();
        if (count < 1) throw std::invalid_argument("condition count must be >= 1");
        cfg.schubert_data.emplace_back(std::move(w), count);
    }
    cfg.expected_degree = j.at("expected_degree").get<long>();
    cfg.iterations = j.at("iterations").get<long>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.point_pool_size = j.value("point_pool_size", 0);
    cfg.sampling_range = j.value("sampling_range", 65536L);
    cfg.output_path = j.value("output_path", std::string{});
    cfg.worker_count = j.value("worker_count", 1);
    cfg.step_budget = j.value("step_budget", kDefaultGroebnerBudget);
    return cfg;
}

// Columns of the frequency table: d mod 2, d mod 2 + 2, ..., d.
std::vector<int> count_columns(long degree) {
    std::vector<int> cols;
    for (long c = degree % 2; c <= degree; c += 2) cols.push_back(static_cast<int>(c));
    if (cols.empty()) cols.push_back(0);
    return cols;
}

// Monotone necklace first, remaining rows lexicographic.
std::vector<const std::pair<const Necklace, NecklaceRow>*> ordered_rows(
    const FrequencyTable& table) {
    std::vector<const std::pair<const Necklace, NecklaceRow>*> rows;
    for (const auto& entry : table.rows)
        if (is_monotone(entry.first)) rows.push_back(&entry);
    for (const auto& entry : table.rows)
        if (!is_monotone(entry.first)) rows.push_back(&entry);
    return rows;
}

json table_to_json_object(const FrequencyTable& table) {
    json j;
    j["degree"] = table.degree;
    j["rounds_done"] = table.rounds_done;
    j["monotone_violations"] = table.monotone_violations;
    json rows = json::object();
    for (const auto& [nk, row] : table.rows) {
        json r;
        json counts = json::object();
        for (const auto& [count, occurrences] : row.counts)
            counts[std::to_string(count)] = occurrences;
        r["counts"] = std::move(counts);
        r["set_aside"] = row.set_aside;
        r["statuses"] = row.set_aside_statuses;
        rows[nk] = std::move(r);
    }
    j["table"] = std::move(rows);
    return j;
}

FrequencyTable table_from_json_object(const json& j) {
    FrequencyTable table;
    table.degree = j.at("degree").get<long>();
    table.rounds_done = j.at("rounds_done").get<long>();
    table.monotone_violations = j.value("monotone_violations", 0L);
    for (const auto& [nk, r] : j.at("table").items()) {
        NecklaceRow row;
        for (const auto& [count, occurrences] : r.at("counts").items())
            row.counts[std::stoi(count)] = occurrences.get<long>();
        row.set_aside = r.at("set_aside").get<long>();
        if (r.contains("statuses"))
            row.set_aside_statuses = r.at("statuses").get<std::map<std::string, long>>();
        table.rows[nk] = std::move(row);
    }
    return table;
}

// Outcome of one (round, necklace) solve, in necklace enumeration order.
struct InstanceOutcome {
    SolveStatus status;
    std::optional<int> real_count;
};
using RoundOutcome = std::vector<InstanceOutcome>;

}  // namespace

SchubertData ExperimentConfig::expand() const {
    SchubertData sd;
    sd.flag_type = flag_type;
    for (const auto& [w, count] : schubert_data)
        for (int i = 0; i < count; ++i) sd.conditions.push_back(w);
    return sd;
}

int ExperimentConfig::condition_count() const {
    int total = 0;
    for (const auto& [w, count] : schubert_data) total += count;
    return total;
}

std::string ExperimentConfig::to_json() const { return config_to_json_object(*this).dump(2) + "\n"; }

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    return config_from_json_object(json::parse(text));
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

bool ExperimentConfig::resume_compatible(const ExperimentConfig& other) const {
    // iterations may grow between runs; output_path and worker_count do not
    // affect the table's contents.
    return flag_type == other.flag_type && schubert_data == other.schubert_data &&
           expected_degree == other.expected_degree && seed == other.seed &&
           point_pool_size == other.point_pool_size &&
           sampling_range == other.sampling_range && step_budget == other.step_budget;
}

long FrequencyTable::total_instances() const {
    long total = 0;
    for (const auto& [nk, row] : rows) {
        for (const auto& [count, occurrences] : row.counts) total += occurrences;
        total += row.set_aside;
    }
    return total;
}

std::vector<Rational> sample_points(int count, SplitMix64& rng, long range) {
    if (count < 1) throw std::invalid_argument("need at least one point");
    if (range < 1 || 2 * range < count)
        throw std::invalid_argument("sampling range too small for distinct points");
    std::set<long long> seen;
    while (static_cast<int>(seen.size()) < count) {
        long long v = rng.uniform(-range, range);
        if (v == 0) continue;
        seen.insert(v);
    }
    std::vector<Rational> points;
    points.reserve(seen.size());
    for (long long v : seen) points.emplace_back(static_cast<long>(v));
    return points;
}

Instance assign_by_necklace(const Necklace& nk, const SchubertData& sd,
                            const std::vector<Rational>& points) {
    const Necklace canon = necklace_canonical(nk);
    const std::vector<char> labels = condition_labels(sd);
    if (points.size() != labels.size())
        throw std::invalid_argument("need exactly one point per condition");

    std::string sorted_canon = canon;
    std::sort(sorted_canon.begin(), sorted_canon.end());
    std::string sorted_labels(labels.begin(), labels.end());
    std::sort(sorted_labels.begin(), sorted_labels.end());
    if (sorted_canon != sorted_labels)
        throw std::invalid_argument("necklace " + canon +
                                    " does not match the condition labels");

    // Same-label conditions are drawn in data order.
    std::map<char, std::deque<int>> by_label;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        by_label[labels[i]].push_back(i);

    std::vector<Rational> sorted_points = points;
    std::sort(sorted_points.begin(), sorted_points.end());

    SchubertData arranged;
    arranged.flag_type = sd.flag_type;
    for (char c : canon) {
        auto& queue = by_label[c];
        arranged.conditions.push_back(sd.conditions[queue.front()]);
        queue.pop_front();
    }

    Instance inst = build_instance(arranged, sorted_points);
    assert(inst.necklace == canon);
    return inst;
}

namespace {

void merge_round(FrequencyTable& table, const std::vector<Necklace>& necklaces,
                 const RoundOutcome& outcome, long round, long degree) {
    for (std::size_t ni = 0; ni < necklaces.size(); ++ni) {
        const Necklace& nk = necklaces[ni];
        NecklaceRow& row = table.rows[nk];
        const InstanceOutcome& out = outcome[ni];
        if (out.status == SolveStatus::Solved) {
            row.counts[*out.real_count] += 1;
            if (is_monotone(nk) && *out.real_count < degree) {
                table.monotone_violations += 1;
                std::cerr << "MONOTONE VIOLATION: necklace " << nk << ", round "
                          << round << ": " << *out.real_count << " real solutions of "
                          << degree << "\n";
            }
        } else {
            row.set_aside += 1;
            row.set_aside_statuses[to_string(out.status)] += 1;
        }
    }
    table.rounds_done = round + 1;

    // Conservation: every round contributes exactly one instance per necklace.
    for (const auto& [nk, row] : table.rows) {
        long total = row.set_aside;
        for (const auto& [count, occurrences] : row.counts) total += occurrences;
        if (total != table.rounds_done)
            throw std::logic_error("frequency table lost an instance for " + nk);
    }
}

void write_checkpoint(const FrequencyTable& table, const ExperimentConfig& cfg) {
    if (cfg.output_path.empty()) return;
    write_atomically(cfg.output_path, report(table, ReportFormat::Csv));
    json state;
    state["config"] = config_to_json_object(cfg);
    state.update(table_to_json_object(table));
    write_atomically(sidecar_path(cfg.output_path), state.dump(2) + "\n");
}

}  // namespace

FrequencyTable run_experiment(const ExperimentConfig& cfg) {
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (cfg.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    const SchubertData sd = cfg.expand();
    if (!validate_schubert_data(sd))
        throw std::invalid_argument("condition codimensions must sum to the flag dimension");

    const int m = static_cast<int>(sd.conditions.size());
    const int pool_size = cfg.point_pool_size > 0 ? cfg.point_pool_size : m;
    if (pool_size < m)
        throw std::invalid_argument("point pool smaller than the number of conditions");

    const std::vector<char> labels = condition_labels(sd);
    std::map<char, int> multiset;
    for (char c : labels) multiset[c] += 1;
    const std::vector<Necklace> necklaces = enumerate_necklaces(multiset);

    FrequencyTable table;
    table.degree = cfg.expected_degree;
    for (const Necklace& nk : necklaces) table.rows[nk];

    long start = 0;
    if (!cfg.output_path.empty()) {
        std::ifstream in(sidecar_path(cfg.output_path));
        if (in) {
            json state = json::parse(in);
            ExperimentConfig stored = config_from_json_object(state.at("config"));
            if (!cfg.resume_compatible(stored))
                throw std::runtime_error("checkpoint at " + cfg.output_path +
                                         " belongs to a different experiment");
            table = table_from_json_object(state);
            for (const Necklace& nk : necklaces) table.rows[nk];
            start = table.rounds_done;
        }
    }
    if (start >= cfg.iterations) return table;

    auto compute_round = [&](long round) {
        SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(round)));
        const std::vector<Rational> pool = sample_points(pool_size, rng, cfg.sampling_range);

        // One subset of the pool per round, shared by every necklace.
        std::vector<int> indices(pool.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
        for (int i = 0; i < m; ++i) {
            const int j = i + static_cast<int>(rng.below(indices.size() - i));
            std::swap(indices[i], indices[j]);
        }
        std::vector<Rational> points;
        points.reserve(m);
        for (int i = 0; i < m; ++i) points.push_back(pool[indices[i]]);
        std::sort(points.begin(), points.end());

        RoundOutcome outcome;
        outcome.reserve(necklaces.size());
        const std::uint64_t round_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(round));
        for (std::size_t ni = 0; ni < necklaces.size(); ++ni) {
            Instance inst = assign_by_necklace(necklaces[ni], sd, points);
            SolveResult res = solve_instance(inst, cfg.expected_degree,
                                             derive_seed(round_seed, 1 + ni), cfg.step_budget);
            outcome.push_back({res.status, res.real_count});
        }
        return outcome;
    };

    if (cfg.worker_count == 1 || cfg.iterations - start == 1) {
        for (long round = start; round < cfg.iterations; ++round) {
            merge_round(table, necklaces, compute_round(round), round, cfg.expected_degree);
            write_checkpoint(table, cfg);
        }
        return table;
    }

    // Parallel rounds; merged strictly in round order so the table (and every
    // checkpoint) is identical to a sequential run.
    std::mutex mu;
    std::condition_variable cv;
    std::map<long, RoundOutcome> finished;
    std::atomic<long> next_round{start};
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const long round = next_round.fetch_add(1);
            if (round >= cfg.iterations) return;
            try {
                RoundOutcome outcome = compute_round(round);
                std::lock_guard<std::mutex> lock(mu);
                finished.emplace(round, std::move(outcome));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                next_round.store(cfg.iterations);
            }
            cv.notify_all();
        }
    };

    const int thread_count =
        static_cast<int>(std::min<long>(cfg.worker_count, cfg.iterations - start));
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);

    for (long round = start; round < cfg.iterations; ++round) {
        RoundOutcome outcome;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return failure || finished.count(round) > 0; });
            if (failure) break;
            outcome = std::move(finished.at(round));
            finished.erase(round);
        }
        merge_round(table, necklaces, outcome, round, cfg.expected_degree);
        write_checkpoint(table, cfg);
    }
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    return table;
}

std::string report(const FrequencyTable& table, ReportFormat format) {
    const std::vector<int> cols = count_columns(table.degree);
    const auto rows = ordered_rows(table);

    for (const auto* entry : rows)
        for (const auto& [count, occurrences] : entry->second.counts)
            if (!std::binary_search(cols.begin(), cols.end(), count))
                throw std::logic_error("real count " + std::to_string(count) +
                                       " outside the parity grid");

    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "necklace";
        for (int c : cols) out << ',' << c;
        out << ",set_aside\n";
        for (const auto* entry : rows) {
            out << entry->first;
            for (int c : cols) {
                auto it = entry->second.counts.find(c);
                out << ',' << (it == entry->second.counts.end() ? 0L : it->second);
            }
            out << ',' << entry->second.set_aside << '\n';
        }
        return out.str();
    }

    std::vector<std::string> header{"necklace"};
    for (int c : cols) header.push_back(std::to_string(c));
    header.push_back("set_aside");
    std::vector<std::vector<std::string>> body;
    for (const auto* entry : rows) {
        std::vector<std::string> line{entry->first};
        for (int c : cols) {
            auto it = entry->second.counts.find(c);
            line.push_back(std::to_string(it == entry->second.counts.end() ? 0L : it->second));
        }
        line.push_back(std::to_string(entry->second.set_aside));
        body.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& line : body)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& line, bool left_first) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) out << "  ";
            const int pad = static_cast<int>(width[i] - line[i].size());
            if (i == 0 && left_first)
                out << line[i] << std::string(pad, ' ');
            else
                out << std::string(pad, ' ') << line[i];
        }
        out << '\n';
    };
    emit(header, true);
    for (const auto& line : body) emit(line, true);
    if (table.rounds_done > 0)
        out << "rounds: " << table.rounds_done
            << "  instances: " << table.total_instances() << '\n';
    return out.str();
}

FrequencyTable load_checkpoint_table(const std::string& csv_path) {
    std::ifstream in(sidecar_path(csv_path));
    if (!in) throw std::runtime_error("no checkpoint state at " + sidecar_path(csv_path));
    return table_from_json_object(json::parse(in));
}

std::optional<long> checkpoint_rounds_done(const std::string& csv_path) {
    std::ifstream in(sidecar_path(csv_path));
    if (!in) return std::nullopt;
    json state = json::parse(in);
    return state.at("rounds_done").get<long>();
}

}  // namespace osculant
