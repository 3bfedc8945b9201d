/*
   Copyright 2026 The wirepack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "harness/runner.hpp"
#include "harness/workload.hpp"

namespace wirepack::tools {

namespace {

constexpr int kOk = 0;
constexpr int kRunError = 1;
constexpr int kUsageError = 2;

struct Argv {
    explicit Argv(const std::string& program, const std::vector<std::string>& args) : storage(args) {
        storage.insert(storage.begin(), program);
        for (auto& s : storage) pointers.push_back(s.data());
    }
    int argc() const { return static_cast<int>(pointers.size()); }
    char** argv() { return pointers.data(); }

    std::vector<std::string> storage;
    std::vector<char*> pointers;
};

}  // namespace

int bench_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measure serialize time, parse time and message size for the benchmark workloads."};
    app.name("bench");

    std::string kind_text;
    std::string params_text;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out_path;
    std::string dump_path;
    bool all = false;

    auto* kind_opt = app.add_option("--kind", kind_text, "Workload kind")
                         ->check(CLI::IsMember({"double_array", "sparse_matrix", "hash_map"}));
    app.add_option("--params", params_text,
                   "Workload parameters: n=...; rows=...,nnz=...,cols=...; entries=...,key_len=...");
    app.add_option("--reps", reps, "Timed repetitions per workload (median is reported)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "jsonlines"}));
    app.add_option("--out", out_path, "Write the report to a file instead of stdout");
    auto* dump_opt = app.add_option("--dump", dump_path, "Also write the serialized workload message to a file");
    auto* all_opt = app.add_flag("--all", all, "Run the three workloads with default parameters");
    kind_opt->excludes(all_opt);
    dump_opt->needs(kind_opt);

    Argv argv{"bench", args};
    try {
        app.parse(argv.argc(), argv.argv());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "bench: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }
    if (!all && kind_opt->count() == 0) {
        err << "bench: one of --kind or --all is required\n\n" << app.help();
        return kUsageError;
    }

    std::vector<bench::Workload> workloads;
    if (all) {
        for (auto kind : {bench::WorkloadKind::double_array, bench::WorkloadKind::sparse_matrix,
                          bench::WorkloadKind::hash_map}) {
            workloads.push_back({bench::default_params(kind), seed});
        }
    } else {
        const auto kind = *bench::parse_kind(kind_text);
        auto params = bench::parse_params(kind, params_text);
        if (!params) {
            err << "bench: bad --params: " << params.error().message() << '\n';
            return kUsageError;
        }
        workloads.push_back({*params, seed});
    }

    if (!dump_path.empty()) {
        auto value = bench::generate_workload(workloads.front());
        if (!value) {
            err << "bench: " << value.error().message() << '\n';
            return kUsageError;
        }
        const auto wire = bench::serialize_workload(*value);
        std::ofstream file(dump_path, std::ios::binary);
        file.write(reinterpret_cast<const char*>(wire.data()), static_cast<std::streamsize>(wire.size()));
        if (!file) {
            err << "bench: cannot write '" << dump_path << "'\n";
            return kRunError;
        }
    }

    std::vector<bench::BenchRow> rows;
    for (const auto& workload : workloads) {
        auto row = bench::run_benchmark(workload, reps);
        if (!row) {
            err << "bench: " << bench::to_string(workload.kind()) << ": " << row.error().message() << '\n';
            return row.error().code == Errc::parameter ? kUsageError : kRunError;
        }
        rows.push_back(std::move(*row));
    }
    err << "host: " << bench::host_description() << '\n';

    const auto report =
        bench::emit_report(rows, format == "csv" ? bench::ReportFormat::csv : bench::ReportFormat::jsonlines);
    if (out_path.empty()) {
        out << report;
    } else {
        std::ofstream file(out_path);
        file << report;
        if (!file) {
            err << "bench: cannot write '" << out_path << "'\n";
            return kRunError;
        }
    }
    return kOk;
}

}  // namespace wirepack::tools
