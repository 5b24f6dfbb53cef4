#pragma once

#include <optional>
#include <string>
#include <vector>

#include "churnlab/frame.hpp"

namespace churnlab {

struct RfmRecord {
    std::string customer_id;
    double recency_raw = 0.0;    // days since last order, lower = more recent
    double frequency_raw = 0.0;  // order count
    double monetary_raw = 0.0;   // value proxy
    int r_score = 0;             // 1-5; higher = more recent
    int f_score = 0;
    int m_score = 0;
    std::string segment;
};

struct RfmMapping {
    std::string id_column = "CustomerID";
    std::string recency_column = "DaySinceLastOrder";
    std::string frequency_column = "OrderCount";
    std::string monetary_column = "CashbackAmount";
};

// Inclusive score bounds; the default 1..5 matches everything.
struct ScoreRange {
    int min = 1;
    int max = 5;
    bool contains(int v) const { return v >= min && v <= max; }
};

struct SegmentRule {
    std::string label;
    ScoreRange r, f, m;
};

// First-match rule table covering the six default segments; anything the
// rules miss falls back to "Other".
std::vector<SegmentRule> default_segment_rules();

std::vector<SegmentRule> load_segment_rules(const std::string& path);
void save_segment_rules(const std::vector<SegmentRule>& rules, const std::string& path);

std::string assign_segment(int r_score, int f_score, int m_score, const std::vector<SegmentRule>& rules);

struct RfmResult {
    std::vector<RfmRecord> records;
    std::vector<std::string> degenerate_columns;  // constant columns scored 3 everywhere
};

// Quintile scores by rank: boundaries at the 20/40/60/80 percentiles, ties
// assigned to the lower bucket; r_score counts recency inversely (recent =
// high score).
RfmResult rfm_score(const Frame& frame, const RfmMapping& mapping, const std::vector<SegmentRule>& rules);

struct SegmentSummary {
    std::string label;
    std::size_t count = 0;
    double mean_recency = 0.0;
    double mean_frequency = 0.0;
    double mean_monetary = 0.0;
    std::optional<double> churn_rate;  // absent when no target column was joined
};

// Per-segment aggregates; churn values (by record index) are optional.
std::vector<SegmentSummary> segment_summary(const std::vector<RfmRecord>& records,
                                            const std::vector<double>* churn);

void save_rfm_csv(const std::vector<RfmRecord>& records, const std::string& path);
void save_segment_summary_csv(const std::vector<SegmentSummary>& summaries, const std::string& path);

}  // namespace churnlab
