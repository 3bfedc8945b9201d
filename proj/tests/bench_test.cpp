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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harness/runner.hpp"
#include "harness/workload.hpp"
#include "support/oracles.hpp"
#include "wirepack/api.hpp"

namespace wirepack::bench {
namespace {

using testing::varint_len_oracle;

WorkloadValue generate(WorkloadParams params, std::uint64_t seed = 1) {
    auto v = generate_workload(Workload{params, seed});
    EXPECT_TRUE(v.ok()) << v.error().message();
    return *v;
}

std::size_t wire_size(WorkloadParams params, std::uint64_t seed = 1) {
    return serialize_workload(generate(params, seed)).size();
}

TEST(Workload, KindNames) {
    for (auto kind : {WorkloadKind::double_array, WorkloadKind::sparse_matrix, WorkloadKind::hash_map}) {
        EXPECT_EQ(parse_kind(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_kind("ring_buffer").has_value());
}

TEST(Workload, EmptyDoubleArray) {
    const auto value = generate(DoubleArrayParams{0});
    EXPECT_TRUE(std::get<DoubleArray>(value).empty());
    EXPECT_EQ(serialize_workload(value), (WireBytes{0x00}));
}

TEST(Workload, Deterministic) {
    for (WorkloadParams p : {WorkloadParams{DoubleArrayParams{1000}}, WorkloadParams{SparseMatrixParams{20, 5, 64}},
                             WorkloadParams{HashMapParams{300, 8}}}) {
        const auto a = generate(p, 1);
        const auto b = generate(p, 1);
        EXPECT_EQ(a, b);
        EXPECT_EQ(serialize_workload(a), serialize_workload(b));
        EXPECT_NE(serialize_workload(a), serialize_workload(generate(p, 2)));
    }
}

TEST(Workload, SparseRowsHaveRequestedShape) {
    const auto value = generate(SparseMatrixParams{3, 2, 128}, 7);
    const auto& m = std::get<SparseMatrix>(value);
    ASSERT_EQ(m.size(), 3u);
    for (const auto& row : m) {
        ASSERT_EQ(row.columns.size(), 2u);
        ASSERT_EQ(row.values.size(), 2u);
        EXPECT_LT(row.columns[0], row.columns[1]);
        EXPECT_LT(row.columns[1], 128u);
    }
}

TEST(Workload, SparseFullRowUsesEveryColumn) {
    const auto value = generate(SparseMatrixParams{4, 16, 16});
    for (const auto& row : std::get<SparseMatrix>(value)) {
        for (std::size_t i = 0; i < row.columns.size(); ++i) EXPECT_EQ(row.columns[i], i);
    }
}

TEST(Workload, HashMapKeys) {
    const auto value = generate(HashMapParams{500, 12});
    const auto& m = std::get<HashMap>(value);
    ASSERT_EQ(m.size(), 500u);
    for (const auto& [key, _] : m) {
        ASSERT_EQ(key.size(), 12u);
        for (char c : key) ASSERT_TRUE(std::isalnum(static_cast<unsigned char>(c)));
    }
}

TEST(Workload, ImpossibleParametersRejected) {
    auto sparse = generate_workload(Workload{SparseMatrixParams{2, 10, 5}});
    ASSERT_FALSE(sparse.ok());
    EXPECT_EQ(sparse.error().code, Errc::parameter);
    auto keys = generate_workload(Workload{HashMapParams{63, 1}});
    ASSERT_FALSE(keys.ok());
    EXPECT_EQ(keys.error().code, Errc::parameter);
    EXPECT_TRUE(generate_workload(Workload{HashMapParams{62, 1}}).ok());
}

TEST(Workload, ParamsText) {
    auto p = parse_params(WorkloadKind::sparse_matrix, "rows=3,nnz=2,cols=128");
    ASSERT_TRUE(p.ok());
    EXPECT_EQ(std::get<SparseMatrixParams>(*p), (SparseMatrixParams{3, 2, 128}));
    EXPECT_EQ(format_params(*p), "rows=3;nnz=2;cols=128");
    auto again = parse_params(WorkloadKind::sparse_matrix, format_params(*p));
    ASSERT_TRUE(again.ok());
    EXPECT_EQ(*again, *p);

    auto partial = parse_params(WorkloadKind::hash_map, "entries=7");
    ASSERT_TRUE(partial.ok());
    EXPECT_EQ(std::get<HashMapParams>(*partial), (HashMapParams{7, 16}));
    EXPECT_EQ(std::get<DoubleArrayParams>(*parse_params(WorkloadKind::double_array, "")).length, 1'000'000u);

    for (const char* bad : {"n=", "n=abc", "rows=3", "n=-1", "n=1,n=2x", "len=5"}) {
        auto r = parse_params(WorkloadKind::double_array, bad);
        EXPECT_FALSE(r.ok()) << bad;
        if (!r.ok()) {
            EXPECT_EQ(r.error().code, Errc::parameter) << bad;
        }
    }
}

TEST(Workload, DoubleArraySizeFormula) {
    for (std::size_t n : {0u, 1u, 1000u, 1'000'000u}) {
        EXPECT_EQ(wire_size(DoubleArrayParams{n}), varint_len_oracle(n) + 8 * n) << n;
    }
    EXPECT_EQ(varint_len_oracle(1'000'000), 3u);
}

TEST(Workload, SparseSizeFormulaForSmallIndices) {
    for (auto [r, k] : {std::pair<std::size_t, std::size_t>{3, 2}, {1, 1}, {200, 127}, {0, 5}}) {
        const std::size_t expected = varint_len_oracle(r) + r * (varint_len_oracle(k) * 2 + k + 8 * k);
        EXPECT_EQ(wire_size(SparseMatrixParams{r, k, 128}), expected) << r << "x" << k;
    }
    EXPECT_EQ(wire_size(SparseMatrixParams{3, 2, 128}), 61u);
}

TEST(Workload, HashMapSizeFormula) {
    EXPECT_EQ(wire_size(HashMapParams{0, 16}), 1u);
    EXPECT_EQ(wire_size(HashMapParams{1000, 16}), varint_len_oracle(1000) + 1000 * (1 + 16 + 8));
}

TEST(Workload, SizeGrowsWithElementCount) {
    for (std::size_t n = 1; n <= 4096; n *= 2) {
        EXPECT_LT(wire_size(DoubleArrayParams{n}), wire_size(DoubleArrayParams{2 * n}));
        EXPECT_LT(wire_size(SparseMatrixParams{n, 3, 1000}), wire_size(SparseMatrixParams{2 * n, 3, 1000}));
        EXPECT_LT(wire_size(HashMapParams{n, 8}), wire_size(HashMapParams{2 * n, 8}));
    }
}

TEST(Workload, SmallUnsignedBeatsFixedWidth) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n < 128; ++n) {
        std::vector<std::uint64_t> v(n);
        for (auto& x : v) x = rng() % 128;
        const std::size_t size = to_bytes(v).size();
        ASSERT_EQ(size, 1 + n);
        ASSERT_LT(size, 8 * n);
    }
}

TEST(Runner, ReportsSizeAndMedians) {
    auto row = run_benchmark(Workload{DoubleArrayParams{1000}}, 5);
    ASSERT_TRUE(row.ok()) << row.error().message();
    EXPECT_EQ(row->kind, "double_array");
    EXPECT_EQ(row->params, "n=1000");
    EXPECT_EQ(row->size_bytes, 8002u);
    EXPECT_EQ(row->reps, 5u);
    EXPECT_GE(row->serialize_s, 0.0);
    EXPECT_GE(row->parse_s, 0.0);
    EXPECT_FALSE(row->host.empty());

    auto zero = run_benchmark(Workload{DoubleArrayParams{10}}, 0);
    ASSERT_FALSE(zero.ok());
    EXPECT_EQ(zero.error().code, Errc::parameter);
}

TEST(Runner, EveryKindRoundTrips) {
    for (WorkloadParams p : {WorkloadParams{SparseMatrixParams{50, 10, 100000}}, WorkloadParams{HashMapParams{50, 4}}}) {
        auto row = run_benchmark(Workload{p}, 1);
        ASSERT_TRUE(row.ok()) << row.error().message();
        EXPECT_EQ(row->size_bytes, wire_size(p));
    }
}

TEST(Report, EmptyCsvIsHeaderOnly) {
    EXPECT_EQ(emit_report({}, ReportFormat::csv), "kind,params,size_bytes,serialize_s,parse_s,reps\n");
    EXPECT_EQ(emit_report({}, ReportFormat::jsonlines), "");
}

TEST(Report, CsvRowHasSixFields) {
    const BenchRow row{"sparse_matrix", "rows=3;nnz=2;cols=128", 61, 0.5, 0.25, 5, "test host"};
    const std::string text = emit_report({row}, ReportFormat::csv);
    std::istringstream lines(text);
    std::string header, data, extra;
    ASSERT_TRUE(std::getline(lines, header));
    ASSERT_TRUE(std::getline(lines, data));
    EXPECT_FALSE(std::getline(lines, extra));
    EXPECT_EQ(std::count(data.begin(), data.end(), ','), 5);
    EXPECT_EQ(data.rfind("sparse_matrix,rows=3;nnz=2;cols=128,61,", 0), 0u) << data;
}

TEST(Report, JsonLinesParseBack) {
    const std::vector<BenchRow> rows{
        {"double_array", "n=1000", 8002, 1.25e-5, 3.5e-6, 5, "host a"},
        {"hash_map", "entries=10;key_len=16", 251, 0.001, 0.002, 7, "host \"b\""},
    };
    const std::string text = emit_report(rows, ReportFormat::jsonlines);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    auto back = parse_jsonlines(text);
    ASSERT_TRUE(back.ok()) << back.error().message();
    EXPECT_EQ(*back, rows);
}

}  // namespace
}  // namespace wirepack::bench
