#include "knotthin/analyze.hpp"

#include <algorithm>
#include <sstream>

#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/oracles.hpp"
#include "knotthin/poly.hpp"

namespace knotthin {

namespace {

// Independent of thickness_report: re-derives the certificate from the raw
// histogram and badness numbers only.
bool recompute_certified(const std::map<int, BigInt>& hist, int bound_q) {
    if (hist.empty()) return true;
    int spread = hist.rbegin()->first - hist.begin()->first;
    return spread <= bound_q;
}

}  // namespace

AnalysisRecord analyze(const std::string& name, const Diagram& d, const GradingTable& t,
                       const AnalyzeOptions& opts) {
    AnalysisRecord r;
    r.name = name;
    r.pd = d.to_pd();
    r.crossings = d.n();
    r.writhe = d.writhe();

    BadnessReport b = badness(d);
    r.B = b.B;
    r.alternating = b.alternating;

    MarkedDiagram md{&d, 0, -1, -1};
    if (opts.marking != 0) {
        md = mark(d, opts.marking);
        // requested markings get the weaker generic bound unless the edge is
        // a bad-edge candidate
        bool candidate = std::find(b.candidates.begin(), b.candidates.end(), opts.marking) !=
                         b.candidates.end();
        r.fallback_marking = !candidate && !b.alternating;
        r.bound_q = b.alternating ? 0 : (candidate ? 2 * b.B - 4 : 2 * b.B);
    } else if (d.n() == 0) {
        md = mark(d, 0);
        r.bound_q = 0;
    } else if (b.alternating) {
        for (int e = 1; e <= d.num_edges(); ++e) {
            auto [fa, fb] = d.edge_sides(e);
            if (fa != fb) {
                md = mark(d, e);
                break;
            }
        }
        if (md.edge == 0) throw AmbiguousMarking("no edge with distinct side domains");
        r.bound_q = 0;
    } else {
        MarkingChoice mc = select_bad_edge_marking(d, b);
        md = mark(d, mc.edge);
        r.fallback_marking = mc.fallback;
        r.bound_q = mc.fallback ? 2 * b.B : 2 * b.B - 4;
    }
    r.marking_edge = md.edge;

    try {
        ComplexSummary cs = summarize_complex(md, t, opts.budget);
        r.state_count = cs.state_count;
        r.delta_hist_q = cs.delta_hist;
        r.spread_q = cs.spread_q;
        LaurentPoly sum;
        for_each_state(md, [&](const State& s) {
            StateGrades g = grade_state(d, t, s);
            sum.add(g.A_q, (g.M_q / 4) % 2 == 0 ? 1 : -1);
        });
        r.alexander = sum.pretty();
        if (opts.run_oracles) {
            BigInt trees = spanning_tree_count(d);
            r.tree_count_matches = (trees == cs.state_count);
            LaurentPoly fox = fox_alexander(d);
            BigInt at1 = sum.eval_int(1);
            r.alexander_checks_passed =
                sum.same_up_to_unit(fox) && sum.symmetric() && (at1 == 1 || at1 == -1);
        }
    } catch (const EnumerationBudgetExceeded& e) {
        r.budget_exceeded = true;
        r.budget_count = e.count;
    }

    r.certified = !r.budget_exceeded && recompute_certified(r.delta_hist_q, r.bound_q);
    return r;
}

nlohmann::ordered_json AnalysisRecord::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["pd"] = pd;
    j["crossings"] = crossings;
    j["writhe"] = writhe;
    j["badness"] = B;
    j["alternating"] = alternating;
    j["markingEdge"] = marking_edge;
    j["fallbackMarking"] = fallback_marking;
    if (budget_exceeded) {
        j["stateCount"] = budget_count;
        j["deltaHistogramQuarter"] = nullptr;
        j["spreadQuarter"] = nullptr;
    } else {
        j["stateCount"] = state_count.str();
        nlohmann::ordered_json h = nlohmann::ordered_json::object();
        for (auto& [k, v] : delta_hist_q) h[std::to_string(k)] = v.str();
        j["deltaHistogramQuarter"] = h;
        j["spreadQuarter"] = spread_q.value_or(0);
    }
    j["boundQuarter"] = bound_q;
    j["certified"] = certified;
    j["alexander"] = budget_exceeded ? nlohmann::ordered_json() : nlohmann::ordered_json(alexander);
    j["alexanderChecksPassed"] = alexander_checks_passed;
    j["treeCountMatches"] = tree_count_matches;
    j["budgetExceeded"] = budget_exceeded;
    return j;
}

std::string AnalysisRecord::csv_header() {
    return "name,crossings,writhe,badness,alternating,markingEdge,stateCount,"
           "spreadQuarter,boundQuarter,certified,alexander,oracleChecksPassed,"
           "budgetExceeded";
}

std::string AnalysisRecord::to_csv_row() const {
    std::ostringstream out;
    out << '"' << name << '"' << ',' << crossings << ',' << writhe << ',' << B << ','
        << (alternating ? "true" : "false") << ',' << marking_edge << ','
        << (budget_exceeded ? budget_count : state_count.str()) << ','
        << (budget_exceeded ? "" : std::to_string(spread_q.value_or(0))) << ',' << bound_q << ','
        << (certified ? "true" : "false") << ',' << '"' << alexander << '"' << ','
        << ((alexander_checks_passed && tree_count_matches) ? "true" : "false") << ','
        << (budget_exceeded ? "true" : "false");
    return out.str();
}

nlohmann::ordered_json error_json(const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    return j;
}

}  // namespace knotthin
