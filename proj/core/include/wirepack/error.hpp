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
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

namespace wirepack {

enum class Errc : std::uint8_t {
    none = 0,
    truncated,       // source exhausted before the value was complete
    overflow,        // varint longer than 10 bytes or wider than the destination
    malformed_bool,  // boolean byte outside {0x00, 0x01}
    size_sanity,     // declared element count cannot fit in the remaining bytes
    trailing_bytes,  // bytes left over after a complete message
    io,              // underlying stream failure
    resource,        // allocation failure
    syntax,          // schema text did not parse
    depth_exceeded,  // schema nested deeper than the grammar allows
    parameter,       // invalid workload or CLI parameter
    mismatch,        // decoded value differs from the value that was encoded
};

std::string_view to_string(Errc code) noexcept;

//! \brief A structured failure: what went wrong, the byte (or character)
//! offset where the failing item started, and optional context such as a
//! schema path or an I/O detail.
struct Error {
    Errc code{Errc::none};
    std::size_t offset{0};
    std::string context;

    std::string message() const;

    friend bool operator==(const Error&, const Error&) = default;
};

//! Either a value or an Error. A deliberately small stand-in for
//! std::expected, which is not available in C++20.
template <class T>
class Result {
  public:
    Result(T value) : storage_(std::in_place_index<0>, std::move(value)) {}  // NOLINT(implicit)
    Result(Error error) : storage_(std::in_place_index<1>, std::move(error)) {}  // NOLINT(implicit)

    bool ok() const noexcept { return storage_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    T& value() & { return std::get<0>(storage_); }
    const T& value() const& { return std::get<0>(storage_); }
    T&& value() && { return std::get<0>(std::move(storage_)); }

    const Error& error() const { return std::get<1>(storage_); }

    T& operator*() & { return value(); }
    const T& operator*() const& { return value(); }
    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }

  private:
    std::variant<T, Error> storage_;
};

template <>
class Result<void> {
  public:
    Result() = default;
    Result(Error error) : error_(std::move(error)) {}  // NOLINT(implicit)

    bool ok() const noexcept { return error_.code == Errc::none; }
    explicit operator bool() const noexcept { return ok(); }
    const Error& error() const noexcept { return error_; }

  private:
    Error error_{};
};

using Status = Result<void>;

}  // namespace wirepack
