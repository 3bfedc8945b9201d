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

// The three benchmark data shapes: a flat array of doubles, a sparse matrix
// stored as a list of rows (column indices + values), and a hash map from
// strings to doubles. Generation is deterministic in (params, seed).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wirepack/error.hpp"

namespace wirepack::bench {

enum class WorkloadKind { double_array, sparse_matrix, hash_map };

std::string_view to_string(WorkloadKind kind) noexcept;
std::optional<WorkloadKind> parse_kind(std::string_view text) noexcept;

struct DoubleArrayParams {
    std::size_t length = 1'000'000;
    friend bool operator==(const DoubleArrayParams&, const DoubleArrayParams&) = default;
};

struct SparseMatrixParams {
    std::size_t rows = 10'000;
    std::size_t nonzeros_per_row = 100;
    std::size_t columns = 10'000;  // column indices are drawn from [0, columns)
    friend bool operator==(const SparseMatrixParams&, const SparseMatrixParams&) = default;
};

struct HashMapParams {
    std::size_t entries = 100'000;
    std::size_t key_length = 16;
    friend bool operator==(const HashMapParams&, const HashMapParams&) = default;
};

using WorkloadParams = std::variant<DoubleArrayParams, SparseMatrixParams, HashMapParams>;

struct Workload {
    WorkloadParams params;
    std::uint64_t seed = 1;

    WorkloadKind kind() const noexcept { return static_cast<WorkloadKind>(params.index()); }
};

//! Default parameters for \p kind.
WorkloadParams default_params(WorkloadKind kind);

//! Parses "key=value" pairs separated by ',' or ';' on top of the defaults.
//! Keys: double_array n; sparse_matrix rows, nnz, cols; hash_map entries, key_len.
Result<WorkloadParams> parse_params(WorkloadKind kind, std::string_view text);

//! "n=1000", "rows=3;nnz=2;cols=128", "entries=10;key_len=16".
std::string format_params(const WorkloadParams& params);

struct SparseRow {
    std::vector<std::uint64_t> columns;  // ascending, distinct
    std::vector<double> values;          // same length as columns

    static constexpr std::size_t min_wire_size = 2;

    template <class B>
    void serialize(B& buf) const {
        buf << columns << values;
    }

    template <class B>
    void parse(B& buf) {
        buf >> columns >> values;
    }

    friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

using DoubleArray = std::vector<double>;
using SparseMatrix = std::vector<SparseRow>;
using HashMap = std::unordered_map<std::string, double>;

using WorkloadValue = std::variant<DoubleArray, SparseMatrix, HashMap>;

//! Errc::parameter when the parameters make distinct indices or keys
//! impossible (more nonzeros per row than columns, more entries than keys).
Result<WorkloadValue> generate_workload(const Workload& workload);

}  // namespace wirepack::bench
