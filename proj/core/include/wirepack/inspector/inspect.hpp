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
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wirepack/error.hpp"
#include "wirepack/inspector/schema.hpp"

namespace wirepack::inspector {

//! One node of a decoded message. Byte ranges are half-open offsets into the
//! message. Sibling ranges are contiguous, and a node's range is its length
//! or count prefix followed by its children.
struct DecodedValue {
    using Scalar = std::variant<std::monostate, std::uint64_t, std::int64_t, double, bool, std::string>;

    Kind kind{Kind::u8};
    std::size_t begin = 0;
    std::size_t end = 0;
    // Containers and strings: element count / byte length, and the end of
    // the varint prefix holding it (the prefix spans [begin, prefix_end)).
    std::optional<std::size_t> count;
    std::size_t prefix_end = 0;
    Scalar scalar;
    // Map entries are pair nodes holding (key, value).
    std::vector<DecodedValue> children;
};

//! Decodes \p bytes as one value of \p schema using the library's decoding
//! rules. Errors report the byte offset and the schema path ("$", "$[3]",
//! "$.field", "$[0].key", ...) of the value that failed. Bytes left over after
//! the value are an Errc::trailing_bytes error.
Result<DecodedValue> inspect(const Schema& schema, std::span<const std::uint8_t> bytes);

//! Indented text, one node per line.
void print_tree(std::ostream& out, const Schema& schema, const DecodedValue& value);

//! Structured JSON document.
void print_json(std::ostream& out, const Schema& schema, const DecodedValue& value);

//! Parses hex text: pairs of hex digits in either case, whitespace ignored.
//! An odd digit count or a non-hex character is an Errc::syntax error at
//! the offending character.
Result<std::vector<std::uint8_t>> parse_hex(std::string_view text);

}  // namespace wirepack::inspector
