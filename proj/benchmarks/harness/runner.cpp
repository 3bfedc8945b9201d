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

#include "harness/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wirepack/api.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <sys/utsname.h>
#endif

namespace wirepack::bench {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

template <class T>
Result<BenchRow> measure(const T& value, std::size_t repetitions) {
    const WireBytes reference = to_bytes(value);
    {
        auto parsed = from_bytes<T>(reference);
        if (!parsed) return parsed.error();
        if (*parsed != value) return Error{Errc::mismatch, 0, "parsed workload differs from the original"};
    }

    std::vector<double> serialize_times;
    std::vector<double> parse_times;
    serialize_times.reserve(repetitions);
    parse_times.reserve(repetitions);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const auto t0 = Clock::now();
        WireBytes bytes = to_bytes(value);
        const auto t1 = Clock::now();
        if (bytes.size() != reference.size()) {
            return Error{Errc::mismatch, 0, "message size changed between repetitions"};
        }
        const auto t2 = Clock::now();
        auto parsed = from_bytes<T>(bytes);
        const auto t3 = Clock::now();
        if (!parsed) return parsed.error();
        serialize_times.push_back(std::chrono::duration<double>(t1 - t0).count());
        parse_times.push_back(std::chrono::duration<double>(t3 - t2).count());
    }

    BenchRow row;
    row.size_bytes = reference.size();
    row.serialize_s = median(std::move(serialize_times));
    row.parse_s = median(std::move(parse_times));
    row.reps = repetitions;
    return row;
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cpu_model() {
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) return line.substr(line.find_first_not_of(' ', colon + 1));
        }
    }
    return "unknown cpu";
}

}  // namespace

Result<BenchRow> run_benchmark(const Workload& workload, std::size_t repetitions) {
    if (repetitions == 0) return Error{Errc::parameter, 0, "repetitions must be at least 1"};
    auto generated = generate_workload(workload);
    if (!generated) return generated.error();

    auto row = std::visit([repetitions](const auto& value) { return measure(value, repetitions); }, *generated);
    if (!row) return row;
    row->kind = std::string(to_string(workload.kind()));
    row->params = format_params(workload.params);
    row->host = host_description();
    return row;
}

WireBytes serialize_workload(const WorkloadValue& value) {
    return std::visit([](const auto& v) { return to_bytes(v); }, value);
}

std::string host_description() {
    std::ostringstream out;
#if defined(__clang__)
    out << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
    out << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
    out << "unknown compiler";
#endif
#ifdef NDEBUG
    out << " optimized";
#else
    out << " debug";
#endif
#if defined(__unix__) || defined(__APPLE__)
    struct utsname info {};
    if (uname(&info) == 0) out << "; " << info.sysname << ' ' << info.release << ' ' << info.machine;
#endif
    out << "; " << cpu_model();
    return out.str();
}

std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::csv) {
        out += "kind,params,size_bytes,serialize_s,parse_s,reps\n";
        for (const auto& row : rows) {
            out += csv_field(row.kind) + ',' + csv_field(row.params) + ',' + std::to_string(row.size_bytes) + ',' +
                   format_double(row.serialize_s) + ',' + format_double(row.parse_s) + ',' +
                   std::to_string(row.reps) + '\n';
        }
        return out;
    }
    for (const auto& row : rows) {
        // ordered_json keeps the column order stable.
        nlohmann::ordered_json line;
        line["kind"] = row.kind;
        line["params"] = row.params;
        line["size_bytes"] = row.size_bytes;
        line["serialize_s"] = row.serialize_s;
        line["parse_s"] = row.parse_s;
        line["reps"] = row.reps;
        line["host"] = row.host;
        out += line.dump() + '\n';
    }
    return out;
}

Result<std::vector<BenchRow>> parse_jsonlines(std::string_view text) {
    std::vector<BenchRow> rows;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t stop = text.find('\n', pos);
        if (stop == std::string_view::npos) stop = text.size();
        const std::string_view line = text.substr(pos, stop - pos);
        const std::size_t line_at = pos;
        pos = stop + 1;
        ++line_no;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            BenchRow row;
            row.kind = j.at("kind").get<std::string>();
            row.params = j.at("params").get<std::string>();
            row.size_bytes = j.at("size_bytes").get<std::size_t>();
            row.serialize_s = j.at("serialize_s").get<double>();
            row.parse_s = j.at("parse_s").get<double>();
            row.reps = j.at("reps").get<std::size_t>();
            row.host = j.value("host", std::string{});
            rows.push_back(std::move(row));
        } catch (const nlohmann::json::exception& e) {
            return Error{Errc::syntax, line_at, "line " + std::to_string(line_no) + ": " + e.what()};
        }
    }
    return rows;
}

}  // namespace wirepack::bench
