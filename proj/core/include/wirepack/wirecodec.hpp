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

// Byte-level primitives of the wire format:
//   - unsigned integers are base-128 varints, least-significant group first,
//     high bit set on every byte except the last;
//   - signed integers are ZigZag-mapped and then varint encoded;
//   - floating-point values are copied as little-endian IEEE-754 bytes.

#include <array>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "wirepack/error.hpp"

namespace wirepack {

inline constexpr std::size_t kMaxVarintBytes = 10;

//! Number of bytes the canonical varint form of \p value occupies.
constexpr std::size_t varint_size(std::uint64_t value) noexcept {
    return value == 0 ? 1 : (static_cast<std::size_t>(std::bit_width(value)) + 6) / 7;
}

//! Writes the canonical varint form of \p value into \p out, which must have
//! room for kMaxVarintBytes. Returns the number of bytes written.
constexpr std::size_t encode_varint(std::uint64_t value, std::uint8_t* out) noexcept {
    std::size_t n = 0;
    while (value >= 0x80) {
        out[n++] = static_cast<std::uint8_t>(value | 0x80);
        value >>= 7;
    }
    out[n++] = static_cast<std::uint8_t>(value);
    return n;
}

inline std::vector<std::uint8_t> encode_varint(std::uint64_t value) {
    std::array<std::uint8_t, kMaxVarintBytes> tmp{};
    const std::size_t n = encode_varint(value, tmp.data());
    return {tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(n)};
}

//! Decodes one varint starting at \p pos. On success advances \p pos past the
//! terminating byte and returns Errc::none. On failure \p pos and \p value are
//! left untouched and the result is Errc::truncated or Errc::overflow.
//! Non-canonical (zero-padded) encodings are accepted.
constexpr Errc decode_varint(std::span<const std::uint8_t> in, std::size_t& pos,
                             std::uint64_t& value) noexcept {
    std::uint64_t result = 0;
    for (std::size_t i = 0; i < kMaxVarintBytes; ++i) {
        if (pos + i >= in.size()) {
            return Errc::truncated;
        }
        const std::uint8_t byte = in[pos + i];
        // The 10th byte carries bit 63 only; anything else (including a
        // continuation bit) does not fit in 64 bits.
        if (i == kMaxVarintBytes - 1 && byte > 1) {
            return Errc::overflow;
        }
        result |= static_cast<std::uint64_t>(byte & 0x7f) << (7 * i);
        if ((byte & 0x80) == 0) {
            pos += i + 1;
            value = result;
            return Errc::none;
        }
    }
    return Errc::overflow;  // unreachable: the 10th byte check returns first
}

constexpr std::uint64_t zigzag_encode(std::int64_t value) noexcept {
    return (static_cast<std::uint64_t>(value) << 1) ^ static_cast<std::uint64_t>(value >> 63);
}

constexpr std::int64_t zigzag_decode(std::uint64_t mapped) noexcept {
    return static_cast<std::int64_t>((mapped >> 1) ^ (~(mapped & 1) + 1));
}

template <class F>
concept WireFloat = std::floating_point<F> && (sizeof(F) == 4 || sizeof(F) == 8) &&
                    std::numeric_limits<F>::is_iec559;

namespace detail {

template <class F>
using float_bits_t = std::conditional_t<sizeof(F) == 4, std::uint32_t, std::uint64_t>;

constexpr std::uint32_t byteswap(std::uint32_t v) noexcept { return __builtin_bswap32(v); }
constexpr std::uint64_t byteswap(std::uint64_t v) noexcept { return __builtin_bswap64(v); }

}  // namespace detail

//! Writes the little-endian IEEE-754 bytes of \p value to \p out
//! (sizeof(F) bytes). Bit-exact for NaN payloads, signed zeros and infinities.
template <WireFloat F>
inline void encode_float(F value, std::uint8_t* out) noexcept {
    auto bits = std::bit_cast<detail::float_bits_t<F>>(value);
    if constexpr (std::endian::native == std::endian::big) {
        bits = detail::byteswap(bits);
    }
    std::memcpy(out, &bits, sizeof bits);
}

template <WireFloat F>
inline std::array<std::uint8_t, sizeof(F)> encode_float(F value) noexcept {
    std::array<std::uint8_t, sizeof(F)> out{};
    encode_float(value, out.data());
    return out;
}

//! Reads sizeof(F) little-endian bytes from \p in.
template <WireFloat F>
inline F decode_float(const std::uint8_t* in) noexcept {
    detail::float_bits_t<F> bits;
    std::memcpy(&bits, in, sizeof bits);
    if constexpr (std::endian::native == std::endian::big) {
        bits = detail::byteswap(bits);
    }
    return std::bit_cast<F>(bits);
}

//! Bounds-checked form: Errc::truncated when fewer than sizeof(F) bytes
//! remain at \p pos, otherwise decodes and advances \p pos.
template <WireFloat F>
constexpr Errc decode_float(std::span<const std::uint8_t> in, std::size_t& pos, F& value) noexcept {
    if (in.size() < pos || in.size() - pos < sizeof(F)) {
        return Errc::truncated;
    }
    value = decode_float<F>(in.data() + pos);
    pos += sizeof(F);
    return Errc::none;
}

}  // namespace wirepack
