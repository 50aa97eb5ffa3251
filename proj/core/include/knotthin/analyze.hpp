#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "knotthin/diagram.hpp"
#include "knotthin/grading.hpp"
#include "knotthin/states.hpp"
#include "knotthin/types.hpp"

namespace knotthin {

struct AnalyzeOptions {
    int marking = 0;  // 0: automatic (bad-edge candidate, else lowest valid)
    BigInt budget = BigInt(100000000);
    bool run_oracles = true;
};

struct AnalysisRecord {
    std::string name;
    std::string pd;  // canonical round-tripped code
    int crossings = 0;
    int writhe = 0;
    int B = 0;
    bool alternating = false;
    int marking_edge = 0;
    bool fallback_marking = false;
    BigInt state_count = 0;
    std::map<int, BigInt> delta_hist_q;  // quarter-unit gradings
    std::optional<int> spread_q;         // absent when over budget
    int bound_q = 0;
    bool certified = false;  // recomputed from delta_hist_q and B at emission
    std::string alexander;   // state-sum polynomial, canonical form
    bool alexander_checks_passed = false;  // vs Fox, symmetry, |Delta(1)| = 1
    bool tree_count_matches = false;       // state count vs matrix-tree oracle
    bool budget_exceeded = false;
    std::string budget_count;  // matrix-tree count when over budget

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

AnalysisRecord analyze(const std::string& name, const Diagram& d, const GradingTable& t,
                       const AnalyzeOptions& opts = {});

// Machine-readable error object for CLI reporting.
nlohmann::ordered_json error_json(const std::string& kind, const std::string& message);

}  // namespace knotthin
