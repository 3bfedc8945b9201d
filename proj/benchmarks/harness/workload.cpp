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

#include "harness/workload.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <unordered_set>

namespace wirepack::bench {

namespace {

constexpr std::string_view kAlphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

// Number of distinct keys of the given length, saturating.
std::size_t key_space(std::size_t key_length) {
    std::size_t space = 1;
    for (std::size_t i = 0; i < key_length; ++i) {
        if (space > std::numeric_limits<std::size_t>::max() / kAlphabet.size()) {
            return std::numeric_limits<std::size_t>::max();
        }
        space *= kAlphabet.size();
    }
    return space;
}

DoubleArray make_double_array(const DoubleArrayParams& p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DoubleArray out(p.length);
    for (auto& x : out) x = dist(rng);
    return out;
}

// k distinct values from [0, n), ascending (Floyd's sampling).
std::vector<std::uint64_t> sample_columns(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(k);
    for (std::size_t j = n - k; j < n; ++j) {
        std::uniform_int_distribution<std::uint64_t> dist(0, j);
        const std::uint64_t t = dist(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SparseMatrix make_sparse_matrix(const SparseMatrixParams& p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SparseMatrix out(p.rows);
    for (auto& row : out) {
        row.columns = sample_columns(p.columns, p.nonzeros_per_row, rng);
        row.values.resize(p.nonzeros_per_row);
        for (auto& v : row.values) v = dist(rng);
    }
    return out;
}

HashMap make_hash_map(const HashMapParams& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    HashMap out;
    out.reserve(p.entries);
    std::string key(p.key_length, '0');
    while (out.size() < p.entries) {
        for (auto& c : key) c = kAlphabet[pick(rng)];
        out.emplace(key, dist(rng));
    }
    return out;
}

bool parse_size(std::string_view text, std::size_t& out) {
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto r = std::from_chars(first, last, out);
    return r.ec == std::errc{} && r.ptr == last && !text.empty();
}

}  // namespace

std::string_view to_string(WorkloadKind kind) noexcept {
    switch (kind) {
        case WorkloadKind::double_array: return "double_array";
        case WorkloadKind::sparse_matrix: return "sparse_matrix";
        case WorkloadKind::hash_map: return "hash_map";
    }
    return "?";
}

std::optional<WorkloadKind> parse_kind(std::string_view text) noexcept {
    for (auto kind : {WorkloadKind::double_array, WorkloadKind::sparse_matrix, WorkloadKind::hash_map}) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

WorkloadParams default_params(WorkloadKind kind) {
    switch (kind) {
        case WorkloadKind::sparse_matrix: return SparseMatrixParams{};
        case WorkloadKind::hash_map: return HashMapParams{};
        case WorkloadKind::double_array: break;
    }
    return DoubleArrayParams{};
}

Result<WorkloadParams> parse_params(WorkloadKind kind, std::string_view text) {
    WorkloadParams params = default_params(kind);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t stop = text.find_first_of(",;", pos);
        if (stop == std::string_view::npos) stop = text.size();
        const std::string_view item = text.substr(pos, stop - pos);
        const std::size_t item_at = pos;
        pos = stop + 1;
        if (item.empty()) continue;

        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            return Error{Errc::parameter, item_at, "expected key=value, got '" + std::string(item) + "'"};
        }
        const std::string_view key = item.substr(0, eq);
        std::size_t value = 0;
        if (!parse_size(item.substr(eq + 1), value)) {
            return Error{Errc::parameter, item_at + eq + 1, "not a non-negative integer: '" + std::string(item) + "'"};
        }

        bool known = false;
        std::visit(
            [&](auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, DoubleArrayParams>) {
                    if (key == "n") p.length = value, known = true;
                } else if constexpr (std::is_same_v<P, SparseMatrixParams>) {
                    if (key == "rows") p.rows = value, known = true;
                    if (key == "nnz") p.nonzeros_per_row = value, known = true;
                    if (key == "cols") p.columns = value, known = true;
                } else {
                    if (key == "entries") p.entries = value, known = true;
                    if (key == "key_len") p.key_length = value, known = true;
                }
            },
            params);
        if (!known) {
            return Error{Errc::parameter, item_at,
                         "unknown parameter '" + std::string(key) + "' for " + std::string(to_string(kind))};
        }
    }
    return params;
}

std::string format_params(const WorkloadParams& params) {
    struct Visitor {
        std::string operator()(const DoubleArrayParams& p) const { return "n=" + std::to_string(p.length); }
        std::string operator()(const SparseMatrixParams& p) const {
            return "rows=" + std::to_string(p.rows) + ";nnz=" + std::to_string(p.nonzeros_per_row) +
                   ";cols=" + std::to_string(p.columns);
        }
        std::string operator()(const HashMapParams& p) const {
            return "entries=" + std::to_string(p.entries) + ";key_len=" + std::to_string(p.key_length);
        }
    };
    return std::visit(Visitor{}, params);
}

Result<WorkloadValue> generate_workload(const Workload& workload) {
    std::mt19937_64 rng(workload.seed);
    if (const auto* p = std::get_if<SparseMatrixParams>(&workload.params)) {
        if (p->nonzeros_per_row > p->columns) {
            return Error{Errc::parameter, 0,
                         "nnz=" + std::to_string(p->nonzeros_per_row) + " exceeds cols=" + std::to_string(p->columns)};
        }
        return WorkloadValue{make_sparse_matrix(*p, rng)};
    }
    if (const auto* p = std::get_if<HashMapParams>(&workload.params)) {
        if (p->entries > key_space(p->key_length)) {
            return Error{Errc::parameter, 0,
                         "entries=" + std::to_string(p->entries) + " exceeds the number of distinct keys of length " +
                             std::to_string(p->key_length)};
        }
        return WorkloadValue{make_hash_map(*p, rng)};
    }
    return WorkloadValue{make_double_array(std::get<DoubleArrayParams>(workload.params), rng)};
}

}  // namespace wirepack::bench
