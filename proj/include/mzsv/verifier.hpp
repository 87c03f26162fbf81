#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mzsv/harmonic.hpp"
#include "mzsv/malgebra.hpp"

namespace mzsv {

// One exact comparison. The report passes iff every diff is the zero poly
// and every named check holds.
struct VerifyReport {
    struct Diff {
        std::string label;
        std::variant<HPoly, MPoly> poly;

        bool is_zero() const;
    };

    std::string identity;
    std::vector<std::pair<std::string, int>> parameters;
    std::vector<Diff> diffs;
    std::vector<std::pair<std::string, bool>> checks;
    std::chrono::duration<double> elapsed{0};

    bool pass() const;
    // One line-delimited record; diffs are serialized in canonical order.
    // Timing is left out unless asked for, so output is reproducible.
    nlohmann::json to_json(bool with_timing = false) const;
};

// LHS == RHS in H^1 for the given parameters.
VerifyReport verify_mthm(int a, int b, int c, int m, int n);

// LHS == RHS in A, and every word on both sides has weight (n, n, m).
VerifyReport verify_thm_inA(int m, int n);

// lhs_series(W) == rhs_series(W) == target_series(W).
VerifyReport verify_informal(int bound);

// hom_abc maps both A-sides onto the H^1-sides for every sampled (m, n).
VerifyReport verify_reduction_consistency(int a, int b, int c, const std::vector<std::pair<int, int>>& samples);

// Recursive star / sha / d against their enumerative definitions, on all
// index pairs with depth <= max_depth and entries <= max_entry.
VerifyReport verify_oracles(int max_depth, int max_entry);

// Runs independent jobs on up to `jobs` threads and returns the reports in
// input order.
std::vector<VerifyReport> run_all(const std::vector<std::function<VerifyReport()>>& tasks, unsigned jobs);

} // namespace mzsv
