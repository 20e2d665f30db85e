#include "coxeter/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "coxeter/datum.hpp"
#include "coxeter/folding.hpp"

namespace coxeter {

namespace {

constexpr std::size_t kPropCSamples = 500;
constexpr std::size_t kChamberSamples = 100;
constexpr std::size_t kChamberOrbitCap = 20000;
constexpr std::size_t kFoldSamples = 200;

bool is_fold_check(std::string_view c) { return c.starts_with("fold-"); }
bool is_string_check(std::string_view c) { return c.starts_with("rootstring-") || c == "decomposition"; }

IndexMask full_mask(const RootSystem& s) { return (IndexMask{1} << s.rank()) - 1; }

std::vector<Certificate> sweep_prop_a(const RootSystem& s) {
    std::vector<Certificate> out;
    for (IndexMask J = 0; J <= full_mask(s); ++J)
        for (RootIndex a = 0; a < s.size(); ++a)
            if (!s.in_parabolic(a, J)) out.push_back(check_prop_a(s, J, a));
    return out;
}

std::vector<Certificate> sweep_prop_b(const RootSystem& s) {
    std::vector<Certificate> out;
    for (IndexMask J = 0; J <= full_mask(s); ++J) out.push_back(check_prop_b(s, J));
    return out;
}

std::vector<Certificate> sweep_prop_c(const RootSystem& s, std::mt19937_64& rng) {
    std::vector<Certificate> out;
    if (s.label() == "H3") {
        for (const auto& e : enumerate_group(s))
            for (IndexMask J = 0; J <= full_mask(s); ++J)
                for (RootIndex b = 0; b < s.size(); ++b) {
                    Certificate c = check_prop_c(s, J, e.element, b);
                    if (c.status != Status::Skipped) out.push_back(std::move(c));
                }
        return out;
    }
    std::uniform_int_distribution<std::size_t> gen(0, s.rank() - 1);
    std::uniform_int_distribution<std::size_t> len(0, s.positive().size());
    std::uniform_int_distribution<IndexMask> mask(0, full_mask(s));
    std::uniform_int_distribution<RootIndex> root(0, static_cast<RootIndex>(s.size() - 1));
    for (std::size_t attempt = 0; out.size() < kPropCSamples && attempt < 100 * kPropCSamples; ++attempt) {
        std::vector<std::size_t> word(len(rng));
        for (auto& j : word) j = gen(rng);
        const GroupElt w = from_word(s, word);
        const IndexMask J = mask(rng);
        Certificate c = check_prop_c(s, J, w, root(rng));
        if (c.status != Status::Skipped) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Certificate> sweep_oshima_x(const RootSystem& s) {
    std::vector<Certificate> out;
    for (const XSpec& spec : realizable_xspecs(s)) out.push_back(check_oshima_x(s, spec));
    return out;
}

std::vector<Certificate> sweep_dihedral(const RootSystem& s) {
    std::vector<Certificate> out;
    for (RootIndex v = 0; v < s.size(); ++v)
        for (RootIndex a = 0; a < s.size(); ++a) out.push_back(check_dihedral(s, s.root(v), a));
    return out;
}

// (alpha, minimal J-decomposition of beta - alpha) tuples, over every
// nonempty J and every alpha <=_J beta outside Phi_J.
struct Decomposition {
    IndexMask J;
    RootIndex alpha, beta;
};

std::vector<Decomposition> decomposition_pairs(const RootSystem& s) {
    std::vector<Decomposition> out;
    for (IndexMask J = 1; J <= full_mask(s); ++J)
        for (RootIndex a = 0; a < s.size(); ++a) {
            if (s.in_parabolic(a, J)) continue;
            for (RootIndex b = 0; b < s.size(); ++b)
                if (b != a && !s.in_parabolic(b, J) && dominates(s, J, s.root(a), s.root(b))) out.push_back({J, a, b});
        }
    return out;
}

std::vector<std::vector<Vec>> decomposition_tuples(const RootSystem& s) {
    std::set<std::vector<RootIndex>> seen;
    std::vector<std::vector<Vec>> out;
    for (const auto& d : decomposition_pairs(s))
        for (const auto& parts : minimal_decompositions(s, d.J, d.alpha, d.beta)) {
            std::vector<RootIndex> key{d.alpha};
            key.insert(key.end(), parts.begin(), parts.end());
            if (!seen.insert(key).second) continue;
            std::vector<Vec> tuple;
            for (RootIndex i : key) tuple.push_back(s.root(i));
            out.push_back(std::move(tuple));
        }
    return out;
}

std::vector<Certificate> sweep_rootstring_b(const RootSystem& s) {
    std::vector<Certificate> out;
    for (RootIndex i = 0; i < s.size(); ++i)
        for (RootIndex j = 0; j < s.size(); ++j)
            for (RootIndex k = 0; k < s.size(); ++k) {
                // The preamble needs the full sum to be a root.
                if (!s.contains(s.root(i) + s.root(j) + s.root(k))) continue;
                Certificate c = check_rootstring_b(s, s.root(i), s.root(j), s.root(k));
                if (c.status != Status::Skipped) out.push_back(std::move(c));
            }
    return out;
}

std::vector<Certificate> sweep_rootstring_a(const RootSystem& s) {
    std::vector<Certificate> out;
    for (RootIndex i = 0; i < s.size(); ++i)
        for (RootIndex j = i; j < s.size(); ++j)
            for (RootIndex k = j; k < s.size(); ++k) {
                const std::vector<Vec> t{s.root(i), s.root(j), s.root(k)};
                if (!s.contains(t[0] + t[1] + t[2]) || !string_preamble(s, t)) continue;
                out.push_back(check_rootstring_a(s, t));
            }
    for (const auto& tuple : decomposition_tuples(s))
        if (tuple.size() > 3) out.push_back(check_rootstring_a(s, tuple));
    return out;
}

std::vector<Certificate> sweep_rootstring_c(const RootSystem& s) {
    std::vector<Certificate> out;
    for (const auto& tuple : decomposition_tuples(s)) out.push_back(check_rootstring_c(s, tuple));
    return out;
}

std::vector<Certificate> sweep_decomposition(const RootSystem& s) {
    std::vector<Certificate> out;
    for (const auto& d : decomposition_pairs(s)) out.push_back(check_decomposition(s, d.J, d.alpha, d.beta));
    return out;
}

std::vector<Certificate> sweep_chamber_vector(const RootSystem& s, std::mt19937_64& rng) {
    std::vector<Certificate> out;
    for (const Vec& v : sample_chamber_vectors(s, rng, kChamberSamples, kChamberOrbitCap))
        out.push_back(check_chamber_vector(s, v, kChamberOrbitCap));
    return out;
}

std::vector<Certificate> sweep_rescale(const RootSystem& s) {
    std::vector<Certificate> out;
    const Rescaled dual = dual_with_correspondence(s);
    for (IndexMask J = 0; J <= full_mask(s); ++J)
        for (RootIndex a = 0; a < s.size(); ++a) {
            if (s.in_parabolic(a, J)) continue;
            out.push_back(check_rescale_invariance(s, dual, J, a));
        }
    return out;
}

std::size_t fold_subsystem_bound(const FoldedSystem& f, bool deep) {
    if (f.source().label() == "H4") return deep ? 4 : 3;
    return f.source().rank();
}

std::vector<Certificate> run_fold_check(const RootSystem& s, std::string_view check, std::mt19937_64& rng, bool deep) {
    const FoldedSystem f = fold(s);
    if (check == "fold-type") return {check_fold_type(f)};
    if (check == "fold-table") return {check_ip_table(f)};
    if (check == "fold-reflections") return {check_reflection_factorization(f)};
    if (check == "fold-length") return {check_length_doubling(f, std::numeric_limits<std::size_t>::max())};
    if (check == "fold-phi") return {check_phi_bijection(f, fold_subsystem_bound(f, deep), rng, kFoldSamples)};
    if (check == "fold-chamber") {
        std::vector<Certificate> out{check_chamber_equivalence(f, fold_subsystem_bound(f, deep))};
        for (IndexMask J = 0; J <= full_mask(s); ++J) out.push_back(check_slice_transfer(f, J));
        return out;
    }
    if (check == "fold-phi-prime") return {check_phi_prime(f, rng, kFoldSamples)};
    throw std::invalid_argument("unknown fold check " + std::string(check));
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "prop-a",        "prop-b",         "prop-c",           "oshima-x",     "dihedral",      "rootstring-a",
        "rootstring-b",  "rootstring-c",   "decomposition",    "chamber-vector", "rescale-invariance",
        "counterexample-a3", "fold-table", "fold-type",        "fold-reflections", "fold-length", "fold-phi",
        "fold-chamber",  "fold-phi-prime",
    };
    return names;
}

RunConfig resolve(RunConfig config) {
    if (config.types.empty()) config.types = default_type_labels();
    for (const auto& t : config.types) {
        try {
            parse_datum(t);
        } catch (const std::exception& e) {
            throw ConfigError("unknown type '" + t + "': " + e.what());
        }
    }
    std::vector<std::string> checks;
    auto add = [&](const std::string& c) {
        if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
    };
    const auto& names = check_names();
    if (config.checks.empty()) checks = names;
    for (const auto& c : config.checks) {
        if (c == "folding") {
            for (const auto& n : names)
                if (is_fold_check(n)) add(n);
        } else if (std::find(names.begin(), names.end(), c) != names.end()) {
            add(c);
        } else {
            throw ConfigError("unknown check '" + c + "'");
        }
    }
    // Canonical order.
    std::vector<std::string> ordered;
    for (const auto& n : names)
        if (std::find(checks.begin(), checks.end(), n) != checks.end()) ordered.push_back(n);
    config.checks = std::move(ordered);
    if (config.max_rank == 0) throw ConfigError("--max-rank must be positive");
    return config;
}

bool applies(const RootSystem& s, std::string_view check) {
    if (check == "prop-a" || check == "prop-b" || check == "prop-c" || check == "chamber-vector") return true;
    if (check == "oshima-x") return s.is_crystallographic() && s.is_irreducible();
    if (check == "dihedral") return s.rank() <= 2;
    if (is_string_check(check)) return s.is_crystallographic();
    if (check == "rescale-invariance") return s.is_crystallographic() && s.length_classes().size() == 2;
    if (check == "counterexample-a3") return s.label() == "A3";
    if (is_fold_check(check)) return expected_fold_type(s.label()).has_value();
    return false;
}

std::uint64_t task_seed(std::uint64_t seed, std::string_view type, std::string_view check) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::string_view text) {
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    mix(type);
    mix("/");
    mix(check);
    return seed ^ h;
}

std::vector<Certificate> run_check(const RootSystem& s, std::string_view check, std::mt19937_64& rng, bool deep) {
    if (check == "prop-a") return sweep_prop_a(s);
    if (check == "prop-b") return sweep_prop_b(s);
    if (check == "prop-c") return sweep_prop_c(s, rng);
    if (check == "oshima-x") return sweep_oshima_x(s);
    if (check == "dihedral") return sweep_dihedral(s);
    if (check == "rootstring-a") return sweep_rootstring_a(s);
    if (check == "rootstring-b") return sweep_rootstring_b(s);
    if (check == "rootstring-c") return sweep_rootstring_c(s);
    if (check == "decomposition") return sweep_decomposition(s);
    if (check == "chamber-vector") return sweep_chamber_vector(s, rng);
    if (check == "rescale-invariance") return sweep_rescale(s);
    if (check == "counterexample-a3") return {check_counterexample_a3()};
    if (is_fold_check(check)) return run_fold_check(s, check, rng, deep);
    throw std::invalid_argument("unknown check " + std::string(check));
}

void Tally::add(const Certificate& c) {
    switch (c.status) {
    case Status::Pass: ++pass; break;
    case Status::Fail: ++fail; break;
    case Status::Skipped: ++skipped; break;
    }
}

void Tally::add(const Tally& t) {
    pass += t.pass;
    fail += t.fail;
    skipped += t.skipped;
}

Tally tally(const TaskResult& r) {
    Tally t;
    for (const auto& c : r.certificates) t.add(c);
    return t;
}

void run_suite(const RunConfig& config, const std::function<void(TaskResult&&)>& sink) {
    std::vector<RootSystem> systems;
    struct Task {
        std::size_t system;
        std::string check;
    };
    std::vector<Task> tasks;
    for (const auto& label : config.types) {
        const CoxeterDatum datum = parse_datum(label);
        if (datum.rank > config.max_rank) continue;
        systems.push_back(RootSystem::generate(datum));
        for (const auto& check : config.checks)
            if (applies(systems.back(), check)) tasks.push_back({systems.size() - 1, check});
    }

    std::vector<std::optional<TaskResult>> results(tasks.size());
    std::mutex m;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const RootSystem& s = systems[tasks[i].system];
            TaskResult r{s.label(), tasks[i].check, {}, 0};
            std::mt19937_64 rng(task_seed(config.seed, r.type, r.check));
            const auto start = std::chrono::steady_clock::now();
            try {
                r.certificates = run_check(s, r.check, rng, config.deep);
            } catch (const std::exception& e) {
                Certificate c = make_certificate(s, r.check);
                c.fail({}, std::string("exception: ") + e.what());
                r.certificates = {std::move(c)};
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::lock_guard lock(m);
            results[i] = std::move(r);
            ready.notify_all();
        }
    };

    std::size_t jobs = config.jobs ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::unique_lock lock(m);
        ready.wait(lock, [&] { return results[i].has_value(); });
        TaskResult r = std::move(*results[i]);
        results[i].reset();
        lock.unlock();
        sink(std::move(r));
    }
}

} // namespace coxeter
