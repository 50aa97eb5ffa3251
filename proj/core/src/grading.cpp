#include "knotthin/grading.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "knotthin/errors.hpp"

namespace knotthin {

void GradingTable::validate() const {
    for (int si = 0; si < 2; ++si) {
        int sign = si == 0 ? +1 : -1;
        for (int qi = 0; qi < 4; ++qi) {
            auto q = static_cast<Quadrant>(qi);
            if (M(sign, q) % 4 != 0)
                throw InvalidTable(std::string("M at sign ") + (sign > 0 ? "+" : "-") +
                                   " quadrant " + quadrant_name(q) + " is not an integer");
            int d = delta(sign, q);
            if (d != 0 && d != -2 * sign)
                throw InvalidTable(std::string("delta at sign ") + (sign > 0 ? "+" : "-") +
                                   " quadrant " + quadrant_name(q) + " outside {0, -sign/2}");
            int fv = f(sign, q);
            if (fv != 1 && fv != -1)
                throw InvalidTable(std::string("f at sign ") + (sign > 0 ? "+" : "-") +
                                   " quadrant " + quadrant_name(q) + " outside {+-1/4}");
        }
    }
}

GradingTable GradingTable::standard() {
    GradingTable t;
    for (int si = 0; si < 2; ++si) {
        int s = si == 0 ? +1 : -1;
        t.A_q[si][static_cast<int>(Quadrant::N)] = 2 * s;
        t.A_q[si][static_cast<int>(Quadrant::S)] = -2 * s;
        t.M_q[si][static_cast<int>(Quadrant::N)] = 4 * s;
    }
    t.validate();
    return t;
}

GradingTable GradingTable::load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidTable("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidTable(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw InvalidTable("expected object with a \"rows\" array");

    GradingTable t;
    std::array<std::array<bool, 4>, 2> seen{};
    for (const auto& row : doc["rows"]) {
        if (!row.is_object() || !row.contains("sign") || !row.contains("quadrant") ||
            !row.contains("A") || !row.contains("M"))
            throw InvalidTable("row missing sign/quadrant/A/M");
        int sign = row["sign"].get<int>();
        if (sign != 1 && sign != -1) throw InvalidTable("sign must be +-1");
        std::string qs = row["quadrant"].get<std::string>();
        int qi = -1;
        for (int k = 0; k < 4; ++k)
            if (qs == quadrant_name(static_cast<Quadrant>(k))) qi = k;
        if (qi < 0) throw InvalidTable("unknown quadrant \"" + qs + "\"");
        if (!row["A"].is_number_integer() || !row["M"].is_number_integer())
            throw InvalidTable("A and M must be integers (quarter units)");
        int si = sign_index(sign);
        if (seen[si][qi]) throw InvalidTable("duplicate row for sign/quadrant " + qs);
        seen[si][qi] = true;
        t.A_q[si][qi] = row["A"].get<int>();
        t.M_q[si][qi] = row["M"].get<int>();
    }
    for (int si = 0; si < 2; ++si)
        for (int qi = 0; qi < 4; ++qi)
            if (!seen[si][qi])
                throw InvalidTable(std::string("missing row for sign ") +
                                   (si == 0 ? "+1" : "-1") + " quadrant " +
                                   quadrant_name(static_cast<Quadrant>(qi)));
    t.validate();
    return t;
}

}  // namespace knotthin
