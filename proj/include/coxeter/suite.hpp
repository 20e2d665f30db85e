// Verification suite: one task per (type, check), run on a bounded worker
// pool and reported in canonical order.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter/oshima.hpp"

namespace coxeter {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::vector<std::string> types;    ///< empty: default_type_labels()
    std::vector<std::string> checks;   ///< empty: every check; "folding" expands to the fold-* checks
    std::size_t max_rank = kMaxRank;
    std::size_t jobs = 0;              ///< 0: hardware concurrency
    std::uint64_t seed = 1;
    bool deep = false;                 ///< larger subsystem bound for fold-phi / fold-chamber on H4
};

/// Stable check names in canonical order.
const std::vector<std::string>& check_names();

/// Expands aliases and validates names and labels.  Throws ConfigError.
RunConfig resolve(RunConfig config);

/// Whether a check has instances on a system.  Pairs that do not apply emit
/// no certificates.
bool applies(const RootSystem& s, std::string_view check);

/// Seed of the generator used by the task (type, check).
std::uint64_t task_seed(std::uint64_t seed, std::string_view type, std::string_view check);

/// All certificates of one check on one system.  Unexpected exceptions are
/// left to the caller.
std::vector<Certificate> run_check(const RootSystem& s, std::string_view check, std::mt19937_64& rng, bool deep);

struct TaskResult {
    std::string type;
    std::string check;
    std::vector<Certificate> certificates;
    double seconds = 0;
};

struct Tally {
    std::size_t pass = 0, fail = 0, skipped = 0;
    void add(const Certificate& c);
    void add(const Tally& t);
};

Tally tally(const TaskResult& r);

/// Runs every applicable (type, check) task of a resolved config.  `sink`
/// receives results in canonical order (types as given, checks in
/// check_names() order) from the calling thread.  A task that throws yields
/// one failed certificate carrying the message.
void run_suite(const RunConfig& config, const std::function<void(TaskResult&&)>& sink);

} // namespace coxeter
