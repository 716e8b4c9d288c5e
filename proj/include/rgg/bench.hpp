#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rgg/cache.hpp"

namespace rgg {

struct LabelCounts {
    int64_t valid = 0;    // green (or oracle valid)
    int64_t invalid = 0;  // red (or oracle invalid)
    int64_t unknown = 0;  // gray

    int64_t total() const { return valid + invalid + unknown; }
};

/// Per-trial counts split by component kind (index 0 = nodes, 1 = edges).
struct TrialStats {
    int trial = 0;
    LabelCounts oracle[2];
    LabelCounts rgg[2];
    LabelCounts drm[2];
    int64_t rgg_mislabels[2] = {0, 0};
    int64_t drm_mislabels[2] = {0, 0};
    double rgg_ms = 0.0;
    double drm_ms = 0.0;
    double oracle_ms = 0.0;

    LabelCounts oracle_total() const;
    LabelCounts rgg_total() const;
    LabelCounts drm_total() const;
    int64_t rgg_mislabel_total() const { return rgg_mislabels[0] + rgg_mislabels[1]; }
    int64_t drm_mislabel_total() const { return drm_mislabels[0] + drm_mislabels[1]; }
};

/// Trial protocol: per trial, draw a uniformly random orientation for each
/// obstacle (translation fixed by the scene), run the red-green-gray update,
/// the grid baseline update, and the exact oracle, all wall-clock timed, and
/// cross-check labels against ground truth (green vs invalid, red vs valid).
std::vector<TrialStats> run_trials(const Preprocessed& p, int trials, uint64_t seed);

struct SeriesSummary {
    std::string name;
    size_t n = 0;        // samples that contributed
    size_t skipped = 0;  // trials skipped for a zero denominator
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0;  // population standard deviation
};

struct SummaryStats {
    std::vector<SeriesSummary> series;

    const SeriesSummary* find(const std::string& name) const;
};

/// Ratio series (valid_alg/valid*, invalid_rgg/invalid*,
/// unknown_rgg/unknown_drm) and runtime series with mean/median/min/max/std.
/// Trials with a zero denominator are skipped and counted.
SummaryStats summarize(const std::vector<TrialStats>& stats);

/// CSV schema:
/// trial,algorithm,kind,valid,invalid,unknown,valid_star,invalid_star,mislabels,update_ms
/// with two rows (node, edge) per algorithm (rgg, drm, oracle) per trial.
/// Doubles round-trip exactly.
void write_trials_csv(const std::vector<TrialStats>& stats, std::ostream& out);
void write_trials_csv(const std::vector<TrialStats>& stats, const std::filesystem::path& path);
std::vector<TrialStats> load_trials_csv(const std::filesystem::path& path);

void print_summary(const SummaryStats& summary, std::ostream& out);

}  // namespace rgg
