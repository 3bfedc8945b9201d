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

#include "wirepack/buffers.hpp"

#include <istream>
#include <ostream>
#include <streambuf>

namespace wirepack {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

std::string WireBytes::hex() const {
    std::string out;
    out.reserve(bytes_.size() * 3);
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        if (i != 0) out += ' ';
        out += kHexDigits[bytes_[i] >> 4];
        out += kHexDigits[bytes_[i] & 0x0f];
    }
    return out;
}

// --- StreamOutputBuffer ----------------------------------------------------

StreamOutputBuffer::StreamOutputBuffer(std::ostream& out, std::size_t chunk_size)
    : out_(&out), chunk_(std::max(chunk_size, kMaxVarintBytes)) {
    if (!out.good()) {
        error_ = Error{Errc::io, 0, "output stream is not writable"};
    }
}

StreamOutputBuffer::~StreamOutputBuffer() {
    try {
        drain();
    } catch (...) {
    }
}

void StreamOutputBuffer::write(const std::uint8_t* data, std::size_t n) {
    if (chunk_.size() - used_ >= n) {
        if (n != 0) std::memcpy(chunk_.data() + used_, data, n);
        used_ += n;
        return;
    }
    drain();
    if (n >= chunk_.size()) {
        raw_write(data, n);
        return;
    }
    std::memcpy(chunk_.data(), data, n);
    used_ = n;
}

void StreamOutputBuffer::drain() {
    if (used_ == 0) return;
    const std::size_t n = used_;
    used_ = 0;
    raw_write(chunk_.data(), n);
}

void StreamOutputBuffer::raw_write(const std::uint8_t* data, std::size_t n) {
    const std::size_t start = flushed_;
    flushed_ += n;
    if (!ok()) return;
    out_->write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!*out_) {
        error_ = Error{Errc::io, start, "stream write failed"};
    }
}

Status StreamOutputBuffer::flush() {
    drain();
    if (ok()) {
        out_->flush();
        if (!*out_) error_ = Error{Errc::io, flushed_, "stream flush failed"};
    }
    return ok() ? Status{} : Status{error_};
}

// --- StreamInputBuffer -----------------------------------------------------

StreamInputBuffer::StreamInputBuffer(std::istream& in) : in_(&in) {
    if (!in.good() || in.rdbuf() == nullptr) {
        error_ = Error{Errc::io, 0, "input stream is not readable"};
        return;
    }
    // Seekable streams report how many bytes are left, which lets container
    // decoding reject impossible element counts up front.
    std::streambuf* buf = in.rdbuf();
    const auto here = buf->pubseekoff(0, std::ios_base::cur, std::ios_base::in);
    if (here == std::streampos(-1)) return;
    const auto last = buf->pubseekoff(0, std::ios_base::end, std::ios_base::in);
    buf->pubseekpos(here, std::ios_base::in);
    if (last != std::streampos(-1) && last >= here) {
        available_ = static_cast<std::size_t>(last - here);
    }
}

void StreamInputBuffer::mark_eof() {
    try {
        in_->setstate(std::ios_base::eofbit);
    } catch (...) {
    }
}

bool StreamInputBuffer::read(std::uint8_t* dst, std::size_t n) {
    if (!ok()) return false;
    if (n == 0) return true;
    const std::size_t start = pos_;
    std::streamsize got = 0;
    try {
        got = in_->rdbuf()->sgetn(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    } catch (const std::exception& e) {
        fail(Errc::io, start, e.what());
        return false;
    }
    pos_ += static_cast<std::size_t>(std::max<std::streamsize>(got, 0));
    if (static_cast<std::size_t>(got) != n) {
        fail(Errc::truncated, start);
        mark_eof();
        return false;
    }
    return true;
}

bool StreamInputBuffer::read_byte(std::uint8_t& byte) {
    if (!ok()) return false;
    std::streambuf::int_type c;
    try {
        c = in_->rdbuf()->sbumpc();
    } catch (const std::exception& e) {
        fail(Errc::io, pos_, e.what());
        return false;
    }
    if (std::streambuf::traits_type::eq_int_type(c, std::streambuf::traits_type::eof())) {
        fail(Errc::truncated, pos_);
        mark_eof();
        return false;
    }
    byte = static_cast<std::uint8_t>(std::streambuf::traits_type::to_char_type(c));
    ++pos_;
    return true;
}

bool StreamInputBuffer::read_varint(std::uint64_t& value) {
    if (!ok()) return false;
    const std::size_t start = pos_;
    std::uint64_t result = 0;
    for (std::size_t i = 0; i < kMaxVarintBytes; ++i) {
        std::uint8_t byte = 0;
        if (!read_byte(byte)) {
            error_.offset = start;
            return false;
        }
        if (i == kMaxVarintBytes - 1 && byte > 1) {
            fail(Errc::overflow, start);
            return false;
        }
        result |= static_cast<std::uint64_t>(byte & 0x7f) << (7 * i);
        if ((byte & 0x80) == 0) {
            value = result;
            return true;
        }
    }
    fail(Errc::overflow, start);
    return false;
}

}  // namespace wirepack
