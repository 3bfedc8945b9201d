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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wirepack/error.hpp"
#include "wirepack/wirecodec.hpp"

namespace wirepack {

//! An immutable serialized message.
class WireBytes {
  public:
    WireBytes() = default;
    explicit WireBytes(std::vector<std::uint8_t> bytes) noexcept : bytes_(std::move(bytes)) {}
    WireBytes(std::initializer_list<std::uint8_t> bytes) : bytes_(bytes) {}

    const std::uint8_t* data() const noexcept { return bytes_.data(); }
    std::size_t size() const noexcept { return bytes_.size(); }
    bool empty() const noexcept { return bytes_.empty(); }
    auto begin() const noexcept { return bytes_.begin(); }
    auto end() const noexcept { return bytes_.end(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return bytes_[i]; }

    std::span<const std::uint8_t> span() const noexcept { return bytes_; }
    operator std::span<const std::uint8_t>() const noexcept { return bytes_; }  // NOLINT(implicit)
    const std::vector<std::uint8_t>& vector() const noexcept { return bytes_; }

    //! Lower-case hex pairs separated by single spaces, e.g. "02 16 cd 02".
    std::string hex() const;

    friend bool operator==(const WireBytes&, const WireBytes&) = default;

  private:
    std::vector<std::uint8_t> bytes_;
};

// A sink accepts bytes in order; a source hands them back out with a cursor.
// The serializer is written against these two concepts only.

template <class B>
concept ByteSink = requires(B& b, const std::uint8_t* p, std::size_t n, std::uint64_t v) {
    b.put(std::uint8_t{});
    b.write(p, n);
    b.write_varint(v);
    { b.size() } -> std::convertible_to<std::size_t>;
};

template <class B>
concept ByteSource = requires(B& b, const B& cb, std::uint8_t* p, std::size_t n, std::uint64_t& v,
                              std::uint8_t& c) {
    { b.read(p, n) } -> std::same_as<bool>;
    { b.read_byte(c) } -> std::same_as<bool>;
    { b.read_varint(v) } -> std::same_as<bool>;
    { cb.position() } -> std::convertible_to<std::size_t>;
    { cb.remaining() } -> std::same_as<std::optional<std::size_t>>;
    { cb.ok() } -> std::same_as<bool>;
    b.fail(Errc::truncated, n);
};

//! Growable in-memory sink.
class OutputBuffer {
  public:
    OutputBuffer() = default;
    explicit OutputBuffer(std::size_t capacity) { bytes_.resize(capacity); }

    void put(std::uint8_t byte) {
        ensure(1);
        bytes_[size_++] = byte;
    }

    void write(const std::uint8_t* data, std::size_t n) {
        if (n == 0) return;
        ensure(n);
        std::memcpy(bytes_.data() + size_, data, n);
        size_ += n;
    }

    void write(std::span<const std::uint8_t> bytes) { write(bytes.data(), bytes.size()); }

    void write_varint(std::uint64_t value) {
        ensure(kMaxVarintBytes);
        size_ += encode_varint(value, bytes_.data() + size_);
    }

    //! Reserves \p n bytes at the end and returns a pointer to them.
    std::uint8_t* extend(std::size_t n) {
        ensure(n);
        std::uint8_t* out = bytes_.data() + size_;
        size_ += n;
        return out;
    }

    std::size_t size() const noexcept { return size_; }
    std::span<const std::uint8_t> view() const noexcept { return {bytes_.data(), size_}; }

    //! Hands out everything written so far and resets the buffer.
    WireBytes take() {
        bytes_.resize(size_);
        size_ = 0;
        return WireBytes{std::exchange(bytes_, {})};
    }

    void clear() noexcept { size_ = 0; }

  private:
    void ensure(std::size_t n) {
        if (bytes_.size() - size_ < n) {
            bytes_.resize(std::max({bytes_.size() * 2, size_ + n, std::size_t{64}}));
        }
    }

    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

//! Source over a contiguous byte range that the caller keeps alive.
//!
//! The first failure is sticky: once a read fails, every later read fails
//! too and error() keeps reporting the original problem.
class InputBuffer {
  public:
    explicit InputBuffer(std::span<const std::uint8_t> bytes) noexcept : bytes_(bytes) {}

    bool read(std::uint8_t* dst, std::size_t n) noexcept {
        if (!ok()) return false;
        if (bytes_.size() - pos_ < n) {
            fail(Errc::truncated, pos_);
            pos_ = bytes_.size();
            return false;
        }
        if (n != 0) std::memcpy(dst, bytes_.data() + pos_, n);
        pos_ += n;
        return true;
    }

    //! Zero-copy read; on failure returns an empty span and poisons the buffer.
    Result<std::span<const std::uint8_t>> read_bytes(std::size_t n) {
        if (!ok()) return error_;
        if (bytes_.size() - pos_ < n) {
            fail(Errc::truncated, pos_);
            pos_ = bytes_.size();
            return error_;
        }
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    bool read_byte(std::uint8_t& byte) noexcept {
        if (!ok()) return false;
        if (pos_ == bytes_.size()) {
            fail(Errc::truncated, pos_);
            return false;
        }
        byte = bytes_[pos_++];
        return true;
    }

    bool read_varint(std::uint64_t& value) noexcept {
        if (!ok()) return false;
        const std::size_t start = pos_;
        const Errc ec = decode_varint(bytes_, pos_, value);
        if (ec == Errc::none) return true;
        fail(ec, start);
        if (ec == Errc::truncated) pos_ = bytes_.size();
        return false;
    }

    std::size_t position() const noexcept { return pos_; }
    std::optional<std::size_t> remaining() const noexcept { return bytes_.size() - pos_; }
    bool at_end() const noexcept { return pos_ == bytes_.size(); }

    bool ok() const noexcept { return error_.code == Errc::none; }
    const Error& error() const noexcept { return error_; }
    Status status() const { return ok() ? Status{} : Status{error_}; }

    //! Records a failure unless one is already recorded.
    void fail(Errc code, std::size_t offset, std::string context = {}) {
        if (ok()) error_ = Error{code, offset, std::move(context)};
    }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
    Error error_{};
};

inline constexpr std::size_t kDefaultStreamChunk = 64 * 1024;

//! Sink writing to a std::ostream through an internal chunk. Bytes reach the
//! stream when the chunk fills, on flush(), and on destruction.
class StreamOutputBuffer {
  public:
    explicit StreamOutputBuffer(std::ostream& out, std::size_t chunk_size = kDefaultStreamChunk);
    ~StreamOutputBuffer();

    StreamOutputBuffer(const StreamOutputBuffer&) = delete;
    StreamOutputBuffer& operator=(const StreamOutputBuffer&) = delete;

    void put(std::uint8_t byte) {
        if (used_ == chunk_.size()) drain();
        chunk_[used_++] = byte;
    }

    void write(const std::uint8_t* data, std::size_t n);
    void write(std::span<const std::uint8_t> bytes) { write(bytes.data(), bytes.size()); }

    void write_varint(std::uint64_t value) {
        if (chunk_.size() - used_ < kMaxVarintBytes) drain();
        used_ += encode_varint(value, chunk_.data() + used_);
    }

    //! Total bytes accepted, flushed or not.
    std::size_t size() const noexcept { return flushed_ + used_; }

    //! Pushes buffered bytes to the stream and flushes it.
    Status flush();

    bool ok() const noexcept { return error_.code == Errc::none; }
    const Error& error() const noexcept { return error_; }

  private:
    void drain();
    void raw_write(const std::uint8_t* data, std::size_t n);

    std::ostream* out_;
    std::vector<std::uint8_t> chunk_;
    std::size_t used_ = 0;
    std::size_t flushed_ = 0;
    Error error_{};
};

//! Source reading from a std::istream. Reads go through the stream's own
//! buffer and never run ahead of the value being decoded, so after a complete
//! message the stream is positioned immediately past it.
class StreamInputBuffer {
  public:
    explicit StreamInputBuffer(std::istream& in);

    StreamInputBuffer(const StreamInputBuffer&) = delete;
    StreamInputBuffer& operator=(const StreamInputBuffer&) = delete;

    bool read(std::uint8_t* dst, std::size_t n);
    bool read_byte(std::uint8_t& byte);
    bool read_varint(std::uint64_t& value);

    std::size_t position() const noexcept { return pos_; }
    //! Known only for seekable streams.
    std::optional<std::size_t> remaining() const noexcept {
        if (!available_) return std::nullopt;
        return *available_ - pos_;
    }

    bool ok() const noexcept { return error_.code == Errc::none; }
    const Error& error() const noexcept { return error_; }
    Status status() const { return ok() ? Status{} : Status{error_}; }

    void fail(Errc code, std::size_t offset, std::string context = {}) {
        if (ok()) error_ = Error{code, offset, std::move(context)};
    }

  private:
    void mark_eof();

    std::istream* in_;
    std::size_t pos_ = 0;
    std::optional<std::size_t> available_;
    Error error_{};
};

static_assert(ByteSink<OutputBuffer>);
static_assert(ByteSink<StreamOutputBuffer>);
static_assert(ByteSource<InputBuffer>);
static_assert(ByteSource<StreamInputBuffer>);

}  // namespace wirepack
