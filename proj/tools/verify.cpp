// Runs scenario files or bundled suites and prints their reports.
// Exit status: 0 all pass, 1 any failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "birfol/bundled_suites.hpp"
#include "birfol/frontend/report.hpp"
#include "birfol/oracle/properties.hpp"

namespace {

using namespace birfol;
using namespace birfol::frontend;

struct Input {
    std::string name;
    std::string text;
    std::string path;  // shown in parse errors
};

std::string stem(const std::string& path) {
    std::string s = path.substr(path.find_last_of('/') + 1);
    auto dot = s.rfind('.');
    return dot == std::string::npos ? s : s.substr(0, dot);
}

Report property_report(std::uint64_t seed) {
    Report rep{"properties", {}};
    for (const auto& p : oracle::run_properties(seed)) {
        AssertionResult r;
        r.at = {0, 0};
        r.text = p.name + " (" + std::to_string(p.cases) + " cases, seed " + std::to_string(seed) + ")";
        r.op = "property";
        r.status = p.ok() ? Status::pass : Status::fail;
        if (!p.ok()) {
            r.details.push_back(std::to_string(p.failures) + " failing cases");
            r.details.push_back(p.first_failure);
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks birational foliation scenarios"};
    std::vector<std::string> files, suites;
    std::string format = "text";
    bool list = false, timing = false;
    std::uint64_t seed = 0;
    app.add_option("files", files, "scenario files");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--list-suites", list, "list bundled suites");
    app.add_option("--suite", suites, "run a bundled suite (repeatable)");
    auto* seed_opt = app.add_option("--seed", seed, "seed for the property suite");
    app.add_flag("--timing", timing, "report per-assertion timing");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& [name, text] : bundled::kSuites) std::cout << name << "\n";
        std::cout << "properties\n";
        return 0;
    }

    bool run_properties = seed_opt->count() > 0;
    std::vector<Input> inputs;
    for (const auto& s : suites) {
        if (s == "properties") {
            run_properties = true;
            continue;
        }
        bool found = false;
        for (const auto& [name, text] : bundled::kSuites)
            if (name == s) {
                inputs.push_back({std::string(name), std::string(text), "suite " + std::string(name)});
                found = true;
            }
        if (!found) {
            std::cerr << "verify: unknown suite '" << s << "' (see --list-suites)\n";
            return 2;
        }
    }
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            std::cerr << "verify: cannot read " << f << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        inputs.push_back({stem(f), ss.str(), f});
    }
    if (inputs.empty() && !run_properties) {
        std::cerr << app.help();
        return 2;
    }

    // Parse everything first so that a syntax error reports before any run.
    std::vector<Scenario> scenarios;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        try {
            scenarios.push_back(parse_scenario(inputs[i].text, inputs[i].name));
        } catch (const ParseError& e) {
            std::cerr << inputs[i].path << ":" << e.where().line << ":" << e.where().column << ": parse error: " << e.what() << "\n";
            return 2;
        }
    }

    OutputOptions opt;
    opt.timing = timing;
    std::vector<Report> reports;
    for (const auto& sc : scenarios) reports.push_back(run(sc));
    if (run_properties) reports.push_back(property_report(seed));

    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (format == "json") {
        nlohmann::ordered_json j;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r, opt));
        j["status"] = ok ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << format_text(reports[i], opt);
        }
    }
    return ok ? 0 : 1;
}
