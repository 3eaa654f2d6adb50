#pragma once

#include "weylface/cartan.hpp"
#include "weylface/weakface.hpp"

#include <string>
#include <vector>

namespace weylface {

/// Shared knobs for the verification sweeps.
struct VerifyOptions {
    std::vector<CartanType> types;
    int max_coord = 2;       // sweep over dominant lambda with coordinate sum <= max_coord
    unsigned seed = 1;       // for sampled checks
    int subset_bound = kWeakFaceBruteBound;
};

/// Tokens accepted by run_suite (and the CLI verify command).
std::vector<std::string> available_suites();

std::string suite_description(const std::string& token);

/// Runs one named suite and returns one report per instance checked.
/// Unknown tokens raise std::invalid_argument.
std::vector<TheoremReport> run_suite(const std::string& token, const VerifyOptions& opts);

/// Dominant integral weights with coordinate sum <= max_coord (the zero
/// weight included when include_zero).
std::vector<Weight> dominant_grid(int rank, int max_coord, bool include_zero);

} // namespace weylface
