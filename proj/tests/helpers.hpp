#pragma once

#include <random>
#include <vector>

#include "knotthin/diagram.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/tangle.hpp"

namespace testutil {

inline const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
inline const char* kFigureEight = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
inline const char* kKink = "PD[X[1,2,2,1]]";

// Random Montesinos spec that closes to a knot: up to max_tangles proper
// slopes b/a with a <= 13, at most one even reduced denominator.
inline std::vector<knotthin::Frac> random_knot_spec(std::mt19937& rng, int max_tangles,
                                                    bool mixed_signs) {
    std::uniform_int_distribution<int> nt_dist(1, max_tangles);
    std::uniform_int_distribution<int> a_dist(2, 13);
    while (true) {
        int nt = nt_dist(rng);
        std::vector<knotthin::Frac> params;
        for (int i = 0; i < nt; ++i) {
            int a = a_dist(rng);
            std::uniform_int_distribution<int> b_dist(1, a - 1);
            int b = b_dist(rng);
            if (mixed_signs && rng() % 2) b = -b;
            params.emplace_back(b, a);
        }
        int evens = 0;
        for (auto& r : params) evens += r.denominator() % 2 == 0;
        if (evens > 1) continue;
        try {
            knotthin::build_montesinos(params, knotthin::CfForm::Plain);
        } catch (const knotthin::NotAKnot&) {
            continue;
        }
        return params;
    }
}

}  // namespace testutil
