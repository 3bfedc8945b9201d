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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "harness/workload.hpp"
#include "wirepack/buffers.hpp"
#include "wirepack/error.hpp"

namespace wirepack::bench {

struct BenchRow {
    std::string kind;
    std::string params;
    std::size_t size_bytes = 0;
    double serialize_s = 0.0;  // median
    double parse_s = 0.0;      // median
    std::size_t reps = 0;
    std::string host;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

//! Generates the workload, checks one full round trip, then times
//! \p repetitions serializations and parses through the in-memory path.
//! Generation and the correctness check are not timed.
Result<BenchRow> run_benchmark(const Workload& workload, std::size_t repetitions);

WireBytes serialize_workload(const WorkloadValue& value);

//! Compiler, build type, OS and CPU model in one line.
std::string host_description();

enum class ReportFormat { csv, jsonlines };

//! Columns, in order: kind, params, size_bytes, serialize_s, parse_s, reps.
//! jsonlines rows also carry "host".
std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format);

Result<std::vector<BenchRow>> parse_jsonlines(std::string_view text);

}  // namespace wirepack::bench
