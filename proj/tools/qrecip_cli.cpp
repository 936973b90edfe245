// Copyright 2026 The qrecip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrecip/channel_spec.hpp"
#include "qrecip/tables.hpp"
#include "qrecip/verification.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kUnsupported = 3,
    kCpViolation = 4,
};

int exit_code_for(qrecip::Errc code) {
    switch (code) {
        case qrecip::Errc::cp_violation:
            return kCpViolation;
        case qrecip::Errc::unsupported:
            return kUnsupported;
        default:
            return kUsage;
    }
}

std::string read_spec_argument(const std::string &arg) {
    if (arg.empty() || arg[0] != '@') {
        return arg;
    }
    std::ifstream in(arg.substr(1));
    if (!in) {
        throw qrecip::Error(qrecip::Errc::parse_error, "cannot open spec file " + arg.substr(1));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw qrecip::Error(qrecip::Errc::parse_error, "cannot write " + out_path);
    }
    out << text;
    if (!text.empty() && text.back() != '\n') {
        out << '\n';
    }
}

qrecip::CapacityKind parse_kind(const std::string &kind) {
    if (kind == "ua") {
        return qrecip::CapacityKind::UA;
    }
    if (kind == "ea") {
        return qrecip::CapacityKind::EA;
    }
    return qrecip::CapacityKind::Q_EA;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Capacities of reciprocal pairs of depolarizing and Weyl-covariant channels"};
    app.require_subcommand(1);

    std::string spec_arg;
    std::string kind = "ea";
    std::vector<int> dims;
    int grid = 50;
    int resolution = 21;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    std::string suite = "fast";

    auto *capacity = app.add_subcommand("capacity", "closed-form capacity of one channel (JSON report)");
    capacity->add_option("--spec", spec_arg, "channel spec JSON, or @file")->required();
    capacity->add_option("--kind", kind, "ua | ea | qea")->check(CLI::IsMember({"ua", "ea", "qea"}));
    capacity->add_option("--out", out_path, "output file (default stdout)");

    int scan_d = 3;
    auto *scan = app.add_subcommand("scan", "UA and EA capacity of D_lambda over [lambda_min(d), 1]");
    scan->add_option("--d", scan_d, "dimension")->check(CLI::Range(2, 64));
    scan->add_option("--grid", grid, "number of lambda points (>= 2)")->check(CLI::Range(2, 1000000));
    scan->add_option("--out", out_path, "output file (default stdout)");
    scan->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::string asym_kind;
    auto *asym = app.add_subcommand("asymmetry", "asymmetry ratios of reciprocal DC pairs");
    asym->add_option("--d", dims, "dimensions, e.g. --d 2,3,4 (default 2..10)")
        ->delimiter(',')
        ->check(CLI::Range(2, 10));
    asym->add_option("--kind", asym_kind, "restrict to ua | ea")->check(CLI::IsMember({"ua", "ea"}));
    asym->add_option("--grid", grid, "points per dimension on (0, |lambda_min(d)|]")->check(CLI::Range(1, 1000000));
    asym->add_option("--out", out_path, "output file (default stdout)");
    asym->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto *wcc = app.add_subcommand("wcc-grid", "d=2 WCC simplex grid of maximal EA asymmetry ratios");
    wcc->add_option("--resolution", resolution, "points per axis (>= 5)")->check(CLI::Range(5, 1000));
    wcc->add_option("--out", out_path, "output file (default stdout)");
    wcc->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto *verify = app.add_subcommand("verify", "run property and oracle cross-checks");
    verify->add_option("--suite", suite, "fast | full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*capacity) {
            qrecip::ChannelSpec spec = qrecip::parse_channel_spec(read_spec_argument(spec_arg));
            qrecip::CapacityReport report = qrecip::evaluate_capacity(spec, parse_kind(kind));
            emit(qrecip::to_json(report), out_path);
        } else if (*scan) {
            auto rows = qrecip::capacity_scan(scan_d, grid);
            emit(format == "json" ? qrecip::scan_json(rows) : qrecip::scan_csv(rows), out_path);
        } else if (*asym) {
            if (dims.empty()) {
                dims = {2, 3, 4, 5, 6, 7, 8, 9, 10};
            }
            auto rows = qrecip::asymmetry_table(dims, grid);
            std::optional<qrecip::CapacityKind> only;
            if (!asym_kind.empty()) {
                only = parse_kind(asym_kind);
            }
            emit(format == "json" ? qrecip::asymmetry_json(rows) : qrecip::asymmetry_csv(rows, only), out_path);
        } else if (*wcc) {
            auto rows = qrecip::wcc_asymmetry_grid(resolution);
            emit(format == "json" ? qrecip::wcc_grid_json(rows) : qrecip::wcc_grid_csv(rows), out_path);
        } else if (*verify) {
            auto summary =
                qrecip::run_verification(suite == "full" ? qrecip::Suite::full : qrecip::Suite::fast, seed);
            emit(qrecip::to_json(summary), out_path);
            return summary.all_passed ? kOk : kVerificationFailed;
        }
    } catch (const qrecip::Error &e) {
        std::cerr << "error (" << qrecip::errc_name(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
