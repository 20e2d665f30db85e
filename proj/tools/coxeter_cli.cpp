// Command-line front end: root system dumps and the verification suite.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "coxeter/datum.hpp"
#include "coxeter/folding.hpp"
#include "coxeter/serialize.hpp"
#include "coxeter/suite.hpp"

using namespace coxeter;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int cmd_roots(const std::string& label) {
    std::cout << root_system_json(RootSystem::generate(label)).dump() << '\n';
    return kOk;
}

int cmd_fold(const std::string& label) {
    std::cout << folded_json(fold(RootSystem::generate(label))).dump() << '\n';
    return kOk;
}

void print_summary_table(std::ostream& os, const std::vector<TaskResult>& done) {
    os << std::left << std::setw(8) << "type" << std::setw(20) << "check" << std::right << std::setw(9) << "pass"
       << std::setw(7) << "fail" << std::setw(9) << "skipped" << std::setw(10) << "seconds" << '\n';
    Tally total;
    double seconds = 0;
    for (const auto& r : done) {
        const Tally t = tally(r);
        total.add(t);
        seconds += r.seconds;
        os << std::left << std::setw(8) << r.type << std::setw(20) << r.check << std::right << std::setw(9) << t.pass
           << std::setw(7) << t.fail << std::setw(9) << t.skipped << std::setw(10) << std::fixed << std::setprecision(3)
           << r.seconds << '\n';
    }
    os << std::left << std::setw(28) << "total" << std::right << std::setw(9) << total.pass << std::setw(7) << total.fail
       << std::setw(9) << total.skipped << std::setw(10) << std::fixed << std::setprecision(3) << seconds << '\n';
}

int cmd_verify(const RunConfig& raw, const std::string& output, const std::string& format) {
    const RunConfig config = resolve(raw);

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw ConfigError("cannot open " + output);
    }
    std::ostream& os = output.empty() ? std::cout : file;

    if (format == "csv") os << csv_header() << '\n';
    std::vector<TaskResult> done;
    Tally total;
    run_suite(config, [&](TaskResult&& r) {
        for (const auto& c : r.certificates) {
            if (format == "json-lines") os << certificate_json(c).dump() << '\n';
            else if (format == "csv") os << certificate_csv(c) << '\n';
        }
        os.flush();
        total.add(tally(r));
        done.push_back(std::move(r));
    });

    if (format == "json-lines") {
        // Counts only, so the stream stays reproducible.
        for (const auto& r : done) {
            const Tally t = tally(r);
            os << nlohmann::ordered_json{{"summary", true}, {"type", r.type}, {"check", r.check}, {"pass", t.pass},
                                 {"fail", t.fail}, {"skipped", t.skipped}}
                      .dump()
               << '\n';
        }
        os << nlohmann::ordered_json{{"summary", true}, {"pass", total.pass}, {"fail", total.fail}, {"skipped", total.skipped}}.dump()
           << '\n';
    } else if (format == "summary") {
        print_summary_table(os, done);
    }
    return total.fail == 0 ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root system computations and orbit theorem verification"};
    app.require_subcommand(1);

    std::string label;
    auto* roots = app.add_subcommand("roots", "Print a root system as JSON");
    roots->add_option("label", label, "Type label, e.g. A2, H4, B3xA1")->required();
    auto* folded = app.add_subcommand("fold", "Print the folded system of H3, H4 or I2(5) as JSON");
    folded->add_option("label", label, "Golden type label")->required();

    RunConfig config;
    std::string output;
    std::string format = "json-lines";
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--types", config.types, "Type labels (default: all supported)")->delimiter(',');
    verify->add_option("--checks", config.checks, "Check names; 'folding' selects every fold-* check")->delimiter(',');
    verify->add_option("--max-rank", config.max_rank, "Skip types above this rank");
    verify->add_option("--output", output, "Output path (default: stdout)");
    verify->add_option("--format", format, "json-lines | csv | summary")
        ->check(CLI::IsMember({"json-lines", "csv", "summary"}));
    verify->add_option("--jobs", config.jobs, "Worker threads (0: all cores)");
    verify->add_option("--seed", config.seed, "Seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*roots) return cmd_roots(label);
        if (*folded) return cmd_fold(label);
        return cmd_verify(config, output, format);
    } catch (const UnknownLabel& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
