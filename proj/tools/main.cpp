// Command-line front end: analyze single diagrams, batch-process knot tables,
// build Montesinos/pretzel diagrams and connected sums.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotthin/analyze.hpp"
#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/surgery.hpp"
#include "knotthin/tangle.hpp"

namespace kt = knotthin;

namespace {

constexpr int kExitError = 2;    // parse/validation failures
constexpr int kExitNotAKnot = 3;

kt::BigInt default_budget() {
    if (const char* env = std::getenv("KNOT_BUDGET"))
        return kt::BigInt(std::string(env));
    return kt::BigInt(100000000);
}

// Accepts PD[X[...],...] as well as bare X[...],X[...] lists.
std::string normalize_pd_text(std::string s) {
    auto l = s.find_first_not_of(" \t\r\n");
    auto r = s.find_last_not_of(" \t\r\n");
    s = l == std::string::npos ? "" : s.substr(l, r - l + 1);
    if (!s.empty() && s.rfind("PD", 0) != 0) s = "PD[" + s + "]";
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kt::MalformedCode("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Row {
    std::string name;
    std::string pd;
};

std::vector<Row> load_rows(const std::string& path) {
    std::vector<Row> rows;
    std::string text = read_file(path);
    auto trimmed = normalize_pd_text(text);
    if (!trimmed.empty() && (trimmed[0] == '[' || trimmed[0] == '{')) {
        auto doc = nlohmann::json::parse(text);
        for (const auto& item : doc)
            rows.push_back({item.at("name").get<std::string>(),
                            item.at("pd").get<std::string>()});
        return rows;
    }
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (first && line.rfind("name,", 0) == 0) {  // optional header row
            first = false;
            continue;
        }
        first = false;
        std::string name, pd;
        if (line[0] == '"') {
            auto q = line.find('"', 1);
            if (q == std::string::npos || q + 1 >= line.size() || line[q + 1] != ',')
                throw kt::MalformedCode("bad CSV row: " + line);
            name = line.substr(1, q - 1);
            pd = line.substr(q + 2);
        } else {
            auto c = line.find(',');
            if (c == std::string::npos) throw kt::MalformedCode("bad CSV row: " + line);
            name = line.substr(0, c);
            pd = line.substr(c + 1);
        }
        rows.push_back({name, pd});
    }
    return rows;
}

void emit_record(const kt::AnalysisRecord& rec, const std::string& format, std::ostream& out) {
    if (format == "csv")
        out << kt::AnalysisRecord::csv_header() << "\n" << rec.to_csv_row() << "\n";
    else
        out << rec.to_json().dump(2) << "\n";
}

int run_analyze(const std::string& pd_text, const std::string& name, int marking,
                const kt::BigInt& budget, const std::string& format) {
    kt::Diagram d = kt::Diagram::parse_pd(normalize_pd_text(pd_text));
    kt::AnalyzeOptions opts;
    opts.marking = marking;
    opts.budget = budget;
    kt::AnalysisRecord rec = kt::analyze(name, d, kt::GradingTable::standard(), opts);
    emit_record(rec, format, std::cout);
    bool ok = rec.certified || rec.budget_exceeded;
    if (!rec.budget_exceeded) ok = ok && rec.alexander_checks_passed && rec.tree_count_matches;
    return ok ? 0 : 1;
}

int run_batch(const std::string& input, const std::string& out_path, int parallel,
              const kt::BigInt& budget, const std::string& format) {
    std::vector<Row> rows = load_rows(input);
    const kt::GradingTable table = kt::GradingTable::standard();

    struct Outcome {
        std::optional<kt::AnalysisRecord> rec;
        std::string error_kind, error_msg;
    };
    std::vector<Outcome> results(rows.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            try {
                kt::Diagram d = kt::Diagram::parse_pd(normalize_pd_text(rows[i].pd));
                kt::AnalyzeOptions opts;
                opts.budget = budget;
                results[i].rec = kt::analyze(rows[i].name, d, table, opts);
            } catch (const kt::Error& e) {
                results[i].error_kind = e.kind();
                results[i].error_msg = e.what();
            }
        }
    };
    int nthreads = std::max(1, parallel);
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw kt::MalformedCode("cannot write " + out_path);
        out = &file_out;
    }

    long certified = 0, violated = 0, over_budget = 0, errors = 0;
    if (format == "csv") {
        *out << kt::AnalysisRecord::csv_header() << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (results[i].rec)
                *out << results[i].rec->to_csv_row() << "\n";
            else
                *out << '"' << rows[i].name << "\",error," << results[i].error_kind << "\n";
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (results[i].rec)
                arr.push_back(results[i].rec->to_json());
            else {
                auto j = kt::error_json(results[i].error_kind, results[i].error_msg);
                j["name"] = rows[i].name;
                arr.push_back(j);
            }
        }
        *out << arr.dump(2) << "\n";
    }
    for (auto& oc : results) {
        if (!oc.rec) {
            ++errors;
        } else if (oc.rec->budget_exceeded) {
            ++over_budget;
        } else if (oc.rec->certified) {
            ++certified;
        } else {
            ++violated;
        }
    }
    std::cerr << "rows=" << rows.size() << " certified=" << certified
              << " violated=" << violated << " budget-exceeded=" << over_budget
              << " errors=" << errors << "\n";
    return violated == 0 ? 0 : 1;
}

int run_montesinos(const std::vector<std::string>& slopes, const std::string& form_name,
                   bool normalize, bool reorder, const kt::BigInt& budget,
                   const std::string& format) {
    std::vector<kt::Frac> params;
    for (const auto& s : slopes) params.push_back(kt::parse_fraction(s));
    if (reorder) params = kt::reorder_tangles(params);

    kt::Diagram d = [&] {
        if (normalize) return kt::normalize_montesinos(params).diagram;
        kt::CfForm form =
            form_name == "alternating" ? kt::CfForm::Alternating : kt::CfForm::Plain;
        return kt::build_montesinos(params, form);
    }();

    kt::AnalyzeOptions opts;
    opts.budget = budget;
    kt::AnalysisRecord rec = kt::analyze("montesinos", d, kt::GradingTable::standard(), opts);
    emit_record(rec, format, std::cout);
    if (normalize && (rec.B > 4 || rec.bound_q > 4))
        throw kt::NormalizationBug("normalized analysis exceeded the Montesinos bound");
    return rec.certified || rec.budget_exceeded ? 0 : 1;
}

int run_connect_sum(const std::string& pd1, const std::string& pd2, int edge1, int edge2,
                    bool auto_bad, const kt::BigInt& budget, const std::string& format) {
    kt::Diagram d1 = kt::Diagram::parse_pd(normalize_pd_text(pd1));
    kt::Diagram d2 = kt::Diagram::parse_pd(normalize_pd_text(pd2));
    std::vector<kt::SumPlan> plan{{&d1, auto_bad ? 0 : edge1}, {&d2, auto_bad ? 0 : edge2}};
    kt::SumResult sum = kt::iterated_sum(plan);
    kt::AnalyzeOptions opts;
    opts.budget = budget;
    opts.marking = sum.splice_edge;
    kt::AnalysisRecord rec =
        kt::analyze("connect-sum", sum.diagram, kt::GradingTable::standard(), opts);
    emit_record(rec, format, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot diagram thinness analyzer"};
    app.require_subcommand(1);

    std::string pd_text, file_path, format = "json", out_path, input_path;
    std::string form_name = "plain";
    std::vector<std::string> slopes;
    int marking = 0, parallel = 1, edge1 = 0, edge2 = 0;
    bool normalize = false, reorder = false, auto_bad = false;
    std::string budget_str;
    std::string pd1, pd2;

    auto* a = app.add_subcommand("analyze", "Analyze one PD code");
    a->add_option("--pd", pd_text, "PD code, e.g. PD[X[1,4,2,5],...]");
    a->add_option("--file", file_path, "File containing a PD code");
    a->add_option("--marking", marking, "Marked edge label (default: automatic)");
    a->add_option("--budget", budget_str, "State enumeration budget");
    a->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* b = app.add_subcommand("batch", "Analyze a table of diagrams");
    b->add_option("--input", input_path, "CSV (name,pd) or JSON input")->required();
    b->add_option("--out", out_path, "Output path (default: stdout)");
    b->add_option("--parallel", parallel, "Worker threads");
    b->add_option("--budget", budget_str, "State enumeration budget");
    b->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* m = app.add_subcommand("montesinos", "Build and analyze a Montesinos knot");
    m->add_option("-r", slopes, "Tangle slope b/a (repeatable)")->required();
    m->add_option("--form", form_name, "plain|alternating")
        ->check(CLI::IsMember({"plain", "alternating"}));
    m->add_flag("--normalize", normalize, "Rewrite to the low-badness alternating form");
    m->add_flag("--reorder", reorder, "Group same-sign tangles together first");
    m->add_option("--budget", budget_str, "State enumeration budget");
    m->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* c = app.add_subcommand("connect-sum", "Connected sum of two diagrams");
    c->add_option("--pd1", pd1, "First PD code")->required();
    c->add_option("--pd2", pd2, "Second PD code")->required();
    c->add_option("--edge1", edge1, "Splice edge in the first diagram");
    c->add_option("--edge2", edge2, "Splice edge in the second diagram");
    c->add_flag("--auto-bad", auto_bad, "Pick bad-edge candidates automatically");
    c->add_option("--budget", budget_str, "State enumeration budget");
    c->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        kt::BigInt budget = budget_str.empty() ? default_budget() : kt::BigInt(budget_str);
        if (a->parsed()) {
            if (pd_text.empty() && file_path.empty())
                throw kt::MalformedCode("provide --pd or --file");
            std::string text = pd_text.empty() ? read_file(file_path) : pd_text;
            return run_analyze(text, pd_text.empty() ? file_path : "input", marking, budget,
                               format);
        }
        if (b->parsed()) return run_batch(input_path, out_path, parallel, budget, format);
        if (m->parsed())
            return run_montesinos(slopes, form_name, normalize, reorder, budget, format);
        if (c->parsed()) {
            if (!auto_bad && (edge1 == 0 || edge2 == 0))
                throw kt::MalformedCode("provide --edge1/--edge2 or --auto-bad");
            return run_connect_sum(pd1, pd2, edge1, edge2, auto_bad, budget, format);
        }
    } catch (const kt::NotAKnot& e) {
        std::cout << kt::error_json(e.kind(), e.what()).dump(2) << "\n";
        return kExitNotAKnot;
    } catch (const kt::Error& e) {
        std::cout << kt::error_json(e.kind(), e.what()).dump(2) << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cout << kt::error_json("InternalError", e.what()).dump(2) << "\n";
        return kExitError;
    }
    return 0;
}
