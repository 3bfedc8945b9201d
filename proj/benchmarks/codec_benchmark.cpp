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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "harness/workload.hpp"
#include "wirepack/api.hpp"

namespace {

using wirepack::bench::Workload;

template <class T>
const T& workload_value(const Workload& workload) {
    static const auto value = std::get<T>(*wirepack::bench::generate_workload(workload));
    return value;
}

const wirepack::bench::DoubleArray& double_array() {
    return workload_value<wirepack::bench::DoubleArray>(Workload{wirepack::bench::DoubleArrayParams{}, 1});
}
const wirepack::bench::SparseMatrix& sparse_matrix() {
    return workload_value<wirepack::bench::SparseMatrix>(Workload{wirepack::bench::SparseMatrixParams{}, 1});
}
const wirepack::bench::HashMap& hash_map() {
    return workload_value<wirepack::bench::HashMap>(Workload{wirepack::bench::HashMapParams{}, 1});
}

template <class T>
void serialize_bench(benchmark::State& state, const T& value) {
    std::size_t bytes = 0;
    for (auto _ : state) {
        auto wire = wirepack::to_bytes(value);
        bytes = wire.size();
        benchmark::DoNotOptimize(wire);
    }
    state.counters["size_bytes"] = static_cast<double>(bytes);
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}

template <class T>
void parse_bench(benchmark::State& state, const T& value) {
    const auto wire = wirepack::to_bytes(value);
    for (auto _ : state) {
        auto parsed = wirepack::from_bytes<T>(wire);
        benchmark::DoNotOptimize(parsed);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * wire.size()));
}

void BM_DoubleArraySerialize(benchmark::State& state) { serialize_bench(state, double_array()); }
void BM_DoubleArrayParse(benchmark::State& state) { parse_bench(state, double_array()); }
void BM_SparseMatrixSerialize(benchmark::State& state) { serialize_bench(state, sparse_matrix()); }
void BM_SparseMatrixParse(benchmark::State& state) { parse_bench(state, sparse_matrix()); }
void BM_HashMapSerialize(benchmark::State& state) { serialize_bench(state, hash_map()); }
void BM_HashMapParse(benchmark::State& state) { parse_bench(state, hash_map()); }

BENCHMARK(BM_DoubleArraySerialize)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleArrayParse)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseMatrixSerialize)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseMatrixParse)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HashMapSerialize)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HashMapParse)->Unit(benchmark::kMillisecond);

// Varint throughput over values of a fixed encoded length.
void BM_VarintEncode(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<std::uint64_t> values(4096);
    for (auto& v : values) v = (rng() >> (64 - bits)) | (std::uint64_t{1} << (bits - 1));
    std::uint8_t out[wirepack::kMaxVarintBytes];
    for (auto _ : state) {
        for (auto v : values) {
            benchmark::DoNotOptimize(wirepack::encode_varint(v, out));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * values.size()));
}
BENCHMARK(BM_VarintEncode)->Arg(7)->Arg(21)->Arg(35)->Arg(64);

void BM_VarintDecode(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    wirepack::OutputBuffer out;
    for (int i = 0; i < 4096; ++i) out.write_varint((rng() >> (64 - bits)) | (std::uint64_t{1} << (bits - 1)));
    const auto wire = out.take();
    for (auto _ : state) {
        std::size_t pos = 0;
        std::uint64_t v = 0;
        while (pos < wire.size()) {
            wirepack::decode_varint(wire.span(), pos, v);
            benchmark::DoNotOptimize(v);
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * 4096));
}
BENCHMARK(BM_VarintDecode)->Arg(7)->Arg(21)->Arg(35)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
