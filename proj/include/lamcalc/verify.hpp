#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property-verification suites over the whole library.
 *
 * Five suites (ops, qsym, binom, taylor, numeric) re-check every identity the
 * library claims, on randomized inputs. Trial t of a suite derives its own
 * sub-seed from (seed, suite name, t) and is a pure function of it, so trials
 * can run serially (reference runner) or via OpenMP (parallel runner) with a
 * byte-identical report either way. Failures carry the sub-seed and rendered
 * inputs so any counterexample replays exactly.
 *
 * Documented closed-form discrepancies (two-point and Stieltjes-Wigert
 * connection formulas) are reported as notes, never counted as failures.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "lamcalc/qsymbols.hpp"

namespace lamcalc {

struct Counterexample {
    std::string check;
    int trial = 0;
    std::uint64_t sub_seed = 0;
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct SuiteReport {
    std::string name;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> discrepancy_notes;
};

struct VerificationReport {
    std::vector<SuiteReport> suites;

    bool all_passed() const;
    std::string str() const;
};

enum class RunMode { serial, parallel };

/// Canonical suite order: ops, qsym, binom, taylor, numeric.
const std::vector<std::string>& suite_names();

/// Runs the named suites (must each appear in suite_names()) for `trials`
/// trials under `seed`. Numeric checks use cfg's precision/tolerance.
VerificationReport run_verification(const std::vector<std::string>& suites, int trials,
                                    std::uint64_t seed, const TruncationConfig& cfg,
                                    RunMode mode);

}  // namespace lamcalc
