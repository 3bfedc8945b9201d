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

#include <istream>
#include <new>
#include <ostream>
#include <span>

#include "wirepack/buffers.hpp"
#include "wirepack/error.hpp"
#include "wirepack/serializer.hpp"

namespace wirepack {

//! Serializes \p value into a fresh message.
template <Serializable T>
WireBytes to_bytes(const T& value) {
    OutputBuffer out;
    serialize_value(value, out);
    return out.take();
}

//! Parses exactly one T from \p bytes. Bytes left over after the value are an
//! Errc::trailing_bytes error.
template <Serializable T>
Result<T> from_bytes(std::span<const std::uint8_t> bytes) {
    InputBuffer in{bytes};
    T value{};
    try {
        if (!parse_value(value, in)) return in.error();
    } catch (const std::bad_alloc&) {
        return Error{Errc::resource, in.position(), "allocation failed"};
    }
    if (!in.at_end()) {
        return Error{Errc::trailing_bytes, in.position(),
                     std::to_string(bytes.size() - in.position()) + " unconsumed byte(s)"};
    }
    return value;
}

//! Writes the message for \p value to \p out and flushes. The bytes are
//! identical to to_bytes(value).
template <Serializable T>
Status to_stream(const T& value, std::ostream& out) {
    StreamOutputBuffer buffer{out};
    serialize_value(value, buffer);
    return buffer.flush();
}

//! Reads one message from \p in. The stream is left positioned right after
//! the message, so several messages can be read back to back.
template <Serializable T>
Result<T> from_stream(std::istream& in) {
    StreamInputBuffer buffer{in};
    T value{};
    try {
        if (!parse_value(value, buffer)) return buffer.error();
    } catch (const std::bad_alloc&) {
        return Error{Errc::resource, buffer.position(), "allocation failed"};
    }
    return value;
}

}  // namespace wirepack
