#include "rgg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rgg/oracle.hpp"
#include "rgg/rng.hpp"

namespace rgg {

namespace {

LabelCounts add(const LabelCounts& a, const LabelCounts& b) {
    return {a.valid + b.valid, a.invalid + b.invalid, a.unknown + b.unknown};
}

// Uniform random rotation (Shoemake's quaternion method).
Mat3 random_rotation(RandomEngine& rng) {
    const double u1 = rng.unit(), u2 = rng.unit(), u3 = rng.unit();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    const double w = b * std::cos(2.0 * M_PI * u3);
    const double x = a * std::sin(2.0 * M_PI * u2);
    const double y = a * std::cos(2.0 * M_PI * u2);
    const double z = b * std::sin(2.0 * M_PI * u3);
    return Mat3::from_quat(w, x, y, z);
}

}  // namespace

LabelCounts TrialStats::oracle_total() const { return add(oracle[0], oracle[1]); }
LabelCounts TrialStats::rgg_total() const { return add(rgg[0], rgg[1]); }
LabelCounts TrialStats::drm_total() const { return add(drm[0], drm[1]); }

std::vector<TrialStats> run_trials(const Preprocessed& p, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    RandomEngine rng(seed);
    const size_t n_nodes = p.roadmap.nodes.size();
    std::vector<TrialStats> out;
    out.reserve(trials);

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Pose> poses;
        poses.reserve(p.scene.obstacles.size());
        for (const Obstacle& o : p.scene.obstacles)
            poses.push_back({random_rotation(rng), o.pose.translation});

        const auto t0 = clock::now();
        const RggUpdateResult rgg_res = rgg_update(p.rgg, poses, trial + 1);
        const auto t1 = clock::now();
        const LabelMap drm_labels = drm_update(p.drm, p.scene.obstacles, poses, trial + 1);
        const auto t2 = clock::now();
        const GroundTruth gt = ground_truth(p.roadmap, p.scene.robot, p.scene.obstacles, poses);
        const auto t3 = clock::now();

        TrialStats s;
        s.trial = trial;
        s.rgg_ms = ms(t0, t1);
        s.drm_ms = ms(t1, t2);
        s.oracle_ms = ms(t2, t3);
        for (size_t flat = 0; flat < p.roadmap.component_count(); ++flat) {
            const int kind = flat < n_nodes ? 0 : 1;
            const bool invalid = gt.invalid[flat] != 0;
            (invalid ? s.oracle[kind].invalid : s.oracle[kind].valid) += 1;

            const Label rl = rgg_res.labels.labels[flat];
            if (rl == Label::Green) s.rgg[kind].valid += 1;
            else if (rl == Label::Red) s.rgg[kind].invalid += 1;
            else s.rgg[kind].unknown += 1;
            if ((rl == Label::Green && invalid) || (rl == Label::Red && !invalid))
                s.rgg_mislabels[kind] += 1;

            const Label dl = drm_labels.labels[flat];
            if (dl == Label::Green) s.drm[kind].valid += 1;
            else if (dl == Label::Red) s.drm[kind].invalid += 1;
            else s.drm[kind].unknown += 1;
            if ((dl == Label::Green && invalid) || (dl == Label::Red && !invalid))
                s.drm_mislabels[kind] += 1;
        }
        out.push_back(s);
    }
    return out;
}

namespace {

SeriesSummary summarize_series(const std::string& name, std::vector<double> samples,
                               size_t skipped) {
    SeriesSummary s;
    s.name = name;
    s.skipped = skipped;
    s.n = samples.size();
    if (samples.empty()) return s;
    std::sort(samples.begin(), samples.end());
    s.min = samples.front();
    s.max = samples.back();
    const size_t n = samples.size();
    s.median = n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
    double sum = 0.0;
    for (double v : samples) sum += v;
    s.mean = sum / n;
    double var = 0.0;
    for (double v : samples) var += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(var / n);
    return s;
}

}  // namespace

const SeriesSummary* SummaryStats::find(const std::string& name) const {
    for (const SeriesSummary& s : series)
        if (s.name == name) return &s;
    return nullptr;
}

SummaryStats summarize(const std::vector<TrialStats>& stats) {
    if (stats.empty()) throw std::invalid_argument("no trials to summarize");

    struct Ratio {
        const char* name;
        std::function<double(const TrialStats&)> num;
        std::function<double(const TrialStats&)> den;
    };
    const std::vector<Ratio> ratios = {
        {"valid_rgg/valid*", [](const TrialStats& s) { return double(s.rgg_total().valid); },
         [](const TrialStats& s) { return double(s.oracle_total().valid); }},
        {"valid_drm/valid*", [](const TrialStats& s) { return double(s.drm_total().valid); },
         [](const TrialStats& s) { return double(s.oracle_total().valid); }},
        {"invalid_rgg/invalid*", [](const TrialStats& s) { return double(s.rgg_total().invalid); },
         [](const TrialStats& s) { return double(s.oracle_total().invalid); }},
        {"unknown_rgg/unknown_drm",
         [](const TrialStats& s) { return double(s.rgg_total().unknown); },
         [](const TrialStats& s) { return double(s.drm_total().unknown); }},
    };

    SummaryStats out;
    for (const Ratio& r : ratios) {
        std::vector<double> samples;
        size_t skipped = 0;
        for (const TrialStats& s : stats) {
            const double den = r.den(s);
            if (den == 0.0) {
                ++skipped;
                continue;
            }
            samples.push_back(r.num(s) / den);
        }
        out.series.push_back(summarize_series(r.name, std::move(samples), skipped));
    }

    const std::pair<const char*, double TrialStats::*> times[] = {
        {"rgg_update_ms", &TrialStats::rgg_ms},
        {"drm_update_ms", &TrialStats::drm_ms},
        {"oracle_update_ms", &TrialStats::oracle_ms},
    };
    for (const auto& [name, member] : times) {
        std::vector<double> samples;
        samples.reserve(stats.size());
        for (const TrialStats& s : stats) samples.push_back(s.*member);
        out.series.push_back(summarize_series(name, std::move(samples), 0));
    }
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_row(std::ostream& out, int trial, const char* alg, const char* kind,
               const LabelCounts& c, const LabelCounts& star, int64_t mislabels, double ms) {
    out << trial << ',' << alg << ',' << kind << ',' << c.valid << ',' << c.invalid << ','
        << c.unknown << ',' << star.valid << ',' << star.invalid << ',' << mislabels << ','
        << fmt_double(ms) << '\n';
}

}  // namespace

void write_trials_csv(const std::vector<TrialStats>& stats, std::ostream& out) {
    out << "trial,algorithm,kind,valid,invalid,unknown,valid_star,invalid_star,mislabels,"
           "update_ms\n";
    static const char* kinds[2] = {"node", "edge"};
    for (const TrialStats& s : stats) {
        for (int k = 0; k < 2; ++k)
            write_row(out, s.trial, "rgg", kinds[k], s.rgg[k], s.oracle[k], s.rgg_mislabels[k],
                      s.rgg_ms);
        for (int k = 0; k < 2; ++k)
            write_row(out, s.trial, "drm", kinds[k], s.drm[k], s.oracle[k], s.drm_mislabels[k],
                      s.drm_ms);
        for (int k = 0; k < 2; ++k) {
            const LabelCounts oracle_counts{s.oracle[k].valid, s.oracle[k].invalid, 0};
            write_row(out, s.trial, "oracle", kinds[k], oracle_counts, s.oracle[k], 0,
                      s.oracle_ms);
        }
    }
}

void write_trials_csv(const std::vector<TrialStats>& stats, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path.string());
    write_trials_csv(stats, out);
}

std::vector<TrialStats> load_trials_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV file");

    std::map<int, TrialStats> by_trial;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 10) throw std::runtime_error("bad CSV row: " + line);

        const int trial = std::stoi(fields[0]);
        const std::string& alg = fields[1];
        const int kind = fields[2] == "node" ? 0 : 1;
        const LabelCounts counts{std::stoll(fields[3]), std::stoll(fields[4]),
                                 std::stoll(fields[5])};
        const int64_t mislabels = std::stoll(fields[8]);
        const double ms = std::stod(fields[9]);

        TrialStats& s = by_trial[trial];
        s.trial = trial;
        if (alg == "rgg") {
            s.rgg[kind] = counts;
            s.rgg_mislabels[kind] = mislabels;
            s.rgg_ms = ms;
        } else if (alg == "drm") {
            s.drm[kind] = counts;
            s.drm_mislabels[kind] = mislabels;
            s.drm_ms = ms;
        } else if (alg == "oracle") {
            s.oracle[kind] = {counts.valid, counts.invalid, 0};
            s.oracle_ms = ms;
        } else {
            throw std::runtime_error("unknown algorithm in CSV: " + alg);
        }
    }
    std::vector<TrialStats> out;
    out.reserve(by_trial.size());
    for (auto& [trial, s] : by_trial) out.push_back(s);
    return out;
}

void print_summary(const SummaryStats& summary, std::ostream& out) {
    out << std::left << std::setw(26) << "series" << std::right << std::setw(10) << "mean"
        << std::setw(10) << "median" << std::setw(10) << "min" << std::setw(10) << "max"
        << std::setw(10) << "std" << std::setw(8) << "n" << std::setw(8) << "skipped" << '\n';
    for (const SeriesSummary& s : summary.series) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-26s%10.4f%10.4f%10.4f%10.4f%10.4f%8zu%8zu",
                      s.name.c_str(), s.mean, s.median, s.min, s.max, s.stddev, s.n, s.skipped);
        out << buf << '\n';
    }
}

}  // namespace rgg
