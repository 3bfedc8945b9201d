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

// Schema expressions describing what a tag-free message contains.
//
//   type   := scalar | seq<type> | set<type> | map<type,type>
//           | pair<type,type> | record{name:type, ...}
//   scalar := u8 | u16 | u32 | u64 | i8 | i16 | i32 | i64 | f32 | f64 | bool | str
//
// Whitespace is allowed between tokens. Integer widths do not change the
// bytes on the wire; they only decide when a decoded value overflows.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wirepack/error.hpp"

namespace wirepack::inspector {

enum class Kind : std::uint8_t {
    u8, u16, u32, u64,
    i8, i16, i32, i64,
    f32, f64,
    boolean,
    str,
    seq, set, map, pair, record,
};

inline constexpr std::size_t kMaxSchemaDepth = 32;

struct Schema {
    Kind kind{Kind::u8};
    std::vector<Schema> children;    // seq/set: element; map: key, value; pair: first, second; record: fields
    std::vector<std::string> names;  // record field names, parallel to children

    friend bool operator==(const Schema&, const Schema&) = default;
};

//! Parses a schema expression. Syntax errors carry the character offset at
//! which parsing stopped; expressions nested deeper than kMaxSchemaDepth are
//! rejected with Errc::depth_exceeded.
Result<Schema> parse_schema(std::string_view text);

//! Canonical text form; parse_schema(to_string(s)) == s.
std::string to_string(const Schema& schema);

std::string_view kind_name(Kind kind) noexcept;
bool is_scalar(Kind kind) noexcept;
bool is_integer(Kind kind) noexcept;
bool is_container(Kind kind) noexcept;  // seq, set, map

//! Smallest number of bytes any value of this schema occupies on the wire.
std::size_t min_wire_size(const Schema& schema) noexcept;

//! Nesting depth, counting a scalar as 1.
std::size_t depth(const Schema& schema) noexcept;

}  // namespace wirepack::inspector
