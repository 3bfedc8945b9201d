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

// Type-directed encode/decode rules.
//
// Every supported C++ type is classified into exactly one Shape at compile
// time and Codec<T> carries that shape's write/read pair:
//
//   bool                     one byte, 0x00 or 0x01
//   unsigned integers        varint
//   signed integers          ZigZag + varint
//   float, double            4 / 8 little-endian bytes
//   std::string              varint length + raw bytes
//   sequences (vector, ...)  varint count + elements
//   sets, maps               varint count + elements (maps: key, value, ...)
//   std::pair, std::tuple    fields in order, no count
//   records                  the type's own serialize(B&) / parse(B&) hooks
//
// No type tags or field numbers are written; decoding needs the same type.
//
// Decoding errors are reported through the source's sticky error state, so
// read() only returns whether the source is still healthy.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ranges>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>

#include "wirepack/buffers.hpp"
#include "wirepack/error.hpp"
#include "wirepack/wirecodec.hpp"

namespace wirepack {

enum class Shape : std::uint8_t {
    unsupported,
    boolean,
    unsigned_integral,
    signed_integral,
    floating,
    string,
    byte_sequence,
    sequence,
    set,
    map,
    tuple,
    record,
};

// --- classification ----------------------------------------------------------

template <class T>
concept HasSerializeHook = requires(const T& value, OutputBuffer& out) { value.serialize(out); };

template <class T>
concept HasParseHook = requires(T& value, InputBuffer& in) { value.parse(in); };

//! A user type taking part in serialization through its own hooks. Both hooks
//! must exist; fields are written and read in the same fixed order.
template <class T>
concept Record = HasSerializeHook<T> && HasParseHook<T>;

namespace detail {

template <class>
inline constexpr bool always_false = false;

template <class T>
concept CharType = std::same_as<T, char> || std::same_as<T, wchar_t> || std::same_as<T, char8_t> ||
                   std::same_as<T, char16_t> || std::same_as<T, char32_t>;

template <class T, template <class...> class Tmpl>
inline constexpr bool is_specialization_v = false;
template <template <class...> class Tmpl, class... Args>
inline constexpr bool is_specialization_v<Tmpl<Args...>, Tmpl> = true;

template <class T>
concept StdString = is_specialization_v<T, std::basic_string> && std::same_as<typename T::value_type, char>;

template <class T>
concept TupleLike = is_specialization_v<T, std::pair> || is_specialization_v<T, std::tuple>;

template <class C>
concept KeyedContainer = std::ranges::sized_range<C> && requires { typename C::key_type; };

template <class C>
concept MapContainer = KeyedContainer<C> && requires(C& c, typename C::key_type k, typename C::mapped_type m) {
    c.emplace(std::move(k), std::move(m));
};

template <class C>
concept SetContainer = KeyedContainer<C> && !requires { typename C::mapped_type; } &&
                       requires(C& c, typename C::key_type k) { c.insert(std::move(k)); };

template <class C>
concept SequenceContainer = std::ranges::sized_range<C> && !KeyedContainer<C> &&
                            requires(C& c, typename C::value_type v) {
                                c.push_back(std::move(v));
                                c.clear();
                            };

template <class C>
concept ByteVector = SequenceContainer<C> && std::ranges::contiguous_range<C> &&
                     std::same_as<typename C::value_type, std::byte> && requires(C& c) { c.resize(1); };

template <class C>
concept FloatVector = SequenceContainer<C> && std::ranges::contiguous_range<C> &&
                      WireFloat<typename C::value_type> && requires(C& c) { c.resize(1); };

template <class T>
consteval Shape classify() {
    if constexpr (Record<T>) {
        return Shape::record;
    } else if constexpr (std::same_as<T, bool>) {
        return Shape::boolean;
    } else if constexpr (CharType<T>) {
        return Shape::unsupported;  // signedness of char is platform-defined
    } else if constexpr (std::unsigned_integral<T>) {
        return Shape::unsigned_integral;
    } else if constexpr (std::signed_integral<T>) {
        return Shape::signed_integral;
    } else if constexpr (WireFloat<T>) {
        return Shape::floating;
    } else if constexpr (StdString<T>) {
        return Shape::string;
    } else if constexpr (ByteVector<T>) {
        return Shape::byte_sequence;
    } else if constexpr (TupleLike<T>) {
        return Shape::tuple;
    } else if constexpr (MapContainer<T>) {
        return Shape::map;
    } else if constexpr (SetContainer<T>) {
        return Shape::set;
    } else if constexpr (SequenceContainer<T>) {
        return Shape::sequence;
    } else {
        return Shape::unsupported;
    }
}

}  // namespace detail

template <class T>
inline constexpr Shape shape_of = detail::classify<std::remove_cvref_t<T>>();

namespace detail {

template <class T>
consteval bool supported();

template <class Tuple, std::size_t... I>
consteval bool tuple_supported(std::index_sequence<I...>) {
    return (supported<std::remove_cv_t<std::tuple_element_t<I, Tuple>>>() && ...);
}

template <class T>
consteval bool supported() {
    constexpr Shape shape = shape_of<T>;
    if constexpr (shape == Shape::unsupported) {
        return false;
    } else if constexpr (shape == Shape::sequence) {
        return supported<typename T::value_type>();
    } else if constexpr (shape == Shape::set) {
        return supported<typename T::key_type>();
    } else if constexpr (shape == Shape::map) {
        return supported<typename T::key_type>() && supported<typename T::mapped_type>();
    } else if constexpr (shape == Shape::tuple) {
        return tuple_supported<T>(std::make_index_sequence<std::tuple_size_v<T>>{});
    } else {
        return true;
    }
}

}  // namespace detail

//! True when T and, recursively, all of its element types have a wire rule.
template <class T>
concept Serializable = detail::supported<std::remove_cvref_t<T>>();

template <class T, Shape S = shape_of<T>>
struct Codec;

// --- shared decoding helpers -------------------------------------------------

namespace detail {

// Upper bound on elements allocated ahead of decoding them when the source
// cannot say how many bytes are left.
inline constexpr std::size_t kBlindReserve = 4096;
// Speculative reservations stay within this multiple of the remaining bytes.
inline constexpr std::size_t kReserveBytesPerInputByte = 16;

//! Reads a container's element count and rejects counts that cannot possibly
//! fit: count * max(min_element_size, 1) must not exceed the bytes left.
template <ByteSource S>
bool read_count(S& in, std::size_t min_element_size, std::size_t& count) {
    const std::size_t start = in.position();
    std::uint64_t raw = 0;
    if (!in.read_varint(raw)) return false;
    const std::size_t per_element = std::max<std::size_t>(min_element_size, 1);
    if (const auto left = in.remaining()) {
        if (raw > *left / per_element) {
            in.fail(Errc::size_sanity, start);
            return false;
        }
    } else if (raw > std::numeric_limits<std::size_t>::max() / per_element) {
        in.fail(Errc::size_sanity, start);
        return false;
    }
    count = static_cast<std::size_t>(raw);
    return true;
}

//! How many elements of T to reserve up front for a declared count.
template <class T, ByteSource S>
std::size_t reserve_hint(const S& in, std::size_t count) {
    const auto left = in.remaining();
    if (!left) return std::min(count, kBlindReserve);
    const std::size_t budget = *left * kReserveBytesPerInputByte / sizeof(T);
    return std::min(count, budget);
}

//! Reads \p count raw units of T into contiguous storage of \p out, growing it
//! in bounded steps when the source length is unknown.
template <class T, class C, ByteSource S>
bool read_contiguous(C& out, std::size_t count, S& in) {
    constexpr std::size_t kStep = (std::size_t{1} << 20) / sizeof(T);
    out.clear();
    std::size_t done = 0;
    while (done < count) {
        const std::size_t step = in.remaining() ? count - done : std::min(count - done, kStep);
        out.resize(done + step);
        if (!in.read(reinterpret_cast<std::uint8_t*>(std::ranges::data(out) + done), step * sizeof(T))) {
            return false;
        }
        done += step;
    }
    return true;
}

template <class C>
concept Reservable = requires(C& c, std::size_t n) { c.reserve(n); };

}  // namespace detail

// --- scalar rules ------------------------------------------------------------

template <class T>
struct Codec<T, Shape::boolean> {
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(bool value, B& out) {
        out.put(value ? 1 : 0);
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        const std::size_t start = in.position();
        std::uint8_t byte = 0;
        if (!in.read_byte(byte)) return false;
        if (byte > 1) {
            in.fail(Errc::malformed_bool, start);
            return false;
        }
        value = byte == 1;
        return true;
    }
};

template <class T>
struct Codec<T, Shape::unsigned_integral> {
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(T value, B& out) {
        out.write_varint(static_cast<std::uint64_t>(value));
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        const std::size_t start = in.position();
        std::uint64_t raw = 0;
        if (!in.read_varint(raw)) return false;
        if (raw > std::numeric_limits<T>::max()) {
            in.fail(Errc::overflow, start);
            return false;
        }
        value = static_cast<T>(raw);
        return true;
    }
};

template <class T>
struct Codec<T, Shape::signed_integral> {
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(T value, B& out) {
        out.write_varint(zigzag_encode(static_cast<std::int64_t>(value)));
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        const std::size_t start = in.position();
        std::uint64_t raw = 0;
        if (!in.read_varint(raw)) return false;
        const std::int64_t wide = zigzag_decode(raw);
        if (wide < std::numeric_limits<T>::min() || wide > std::numeric_limits<T>::max()) {
            in.fail(Errc::overflow, start);
            return false;
        }
        value = static_cast<T>(wide);
        return true;
    }
};

template <class T>
struct Codec<T, Shape::floating> {
    static constexpr std::size_t min_wire_size = sizeof(T);

    template <ByteSink B>
    static void write(T value, B& out) {
        const auto bytes = encode_float(value);
        out.write(bytes.data(), bytes.size());
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::uint8_t bytes[sizeof(T)];
        if (!in.read(bytes, sizeof(T))) return false;
        value = decode_float<T>(bytes);
        return true;
    }
};

// --- block-copied rules ------------------------------------------------------

template <class T>
struct Codec<T, Shape::string> {
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(const T& value, B& out) {
        out.write_varint(value.size());
        out.write(reinterpret_cast<const std::uint8_t*>(value.data()), value.size());
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::size_t length = 0;
        if (!detail::read_count(in, 1, length)) return false;
        return detail::read_contiguous<char>(value, length, in);
    }
};

template <class T>
struct Codec<T, Shape::byte_sequence> {
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(const T& value, B& out) {
        out.write_varint(value.size());
        out.write(reinterpret_cast<const std::uint8_t*>(std::ranges::data(value)), value.size());
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::size_t length = 0;
        if (!detail::read_count(in, 1, length)) return false;
        return detail::read_contiguous<std::byte>(value, length, in);
    }
};

// --- container rules ---------------------------------------------------------

template <class T>
struct Codec<T, Shape::sequence> {
    using Element = typename T::value_type;
    using ElementCodec = Codec<Element>;
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(const T& value, B& out) {
        out.write_varint(std::ranges::size(value));
        if constexpr (detail::FloatVector<T> && std::endian::native == std::endian::little) {
            out.write(reinterpret_cast<const std::uint8_t*>(std::ranges::data(value)),
                      value.size() * sizeof(Element));
        } else {
            for (const auto& element : value) ElementCodec::write(element, out);
        }
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::size_t count = 0;
        if (!detail::read_count(in, ElementCodec::min_wire_size, count)) return false;
        if constexpr (detail::FloatVector<T>) {
            if (!detail::read_contiguous<Element>(value, count, in)) return false;
            if constexpr (std::endian::native != std::endian::little) {
                for (auto& x : value) x = decode_float<Element>(reinterpret_cast<const std::uint8_t*>(&x));
            }
            return true;
        } else {
            value.clear();
            if constexpr (detail::Reservable<T>) value.reserve(detail::reserve_hint<Element>(in, count));
            for (std::size_t i = 0; i < count; ++i) {
                Element element{};
                if (!ElementCodec::read(element, in)) return false;
                value.push_back(std::move(element));
            }
            return true;
        }
    }
};

template <class T>
struct Codec<T, Shape::set> {
    using Key = typename T::key_type;
    using KeyCodec = Codec<Key>;
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(const T& value, B& out) {
        out.write_varint(std::ranges::size(value));
        for (const auto& key : value) KeyCodec::write(key, out);
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::size_t count = 0;
        if (!detail::read_count(in, KeyCodec::min_wire_size, count)) return false;
        value.clear();
        if constexpr (detail::Reservable<T>) value.reserve(detail::reserve_hint<Key>(in, count));
        for (std::size_t i = 0; i < count; ++i) {
            Key key{};
            if (!KeyCodec::read(key, in)) return false;
            value.insert(std::move(key));
        }
        return true;
    }
};

template <class T>
struct Codec<T, Shape::map> {
    using Key = typename T::key_type;
    using Mapped = typename T::mapped_type;
    using KeyCodec = Codec<Key>;
    using MappedCodec = Codec<Mapped>;
    static constexpr std::size_t min_wire_size = 1;

    template <ByteSink B>
    static void write(const T& value, B& out) {
        out.write_varint(std::ranges::size(value));
        for (const auto& [key, mapped] : value) {
            KeyCodec::write(key, out);
            MappedCodec::write(mapped, out);
        }
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        std::size_t count = 0;
        if (!detail::read_count(in, KeyCodec::min_wire_size + MappedCodec::min_wire_size, count)) {
            return false;
        }
        value.clear();
        if constexpr (detail::Reservable<T>) {
            value.reserve(detail::reserve_hint<std::pair<Key, Mapped>>(in, count));
        }
        for (std::size_t i = 0; i < count; ++i) {
            Key key{};
            Mapped mapped{};
            if (!KeyCodec::read(key, in) || !MappedCodec::read(mapped, in)) return false;
            value.emplace(std::move(key), std::move(mapped));
        }
        return true;
    }
};

template <class T>
struct Codec<T, Shape::tuple> {
  private:
    template <std::size_t... I>
    static constexpr std::size_t min_size(std::index_sequence<I...>) {
        return (std::size_t{0} + ... + Codec<std::remove_cv_t<std::tuple_element_t<I, T>>>::min_wire_size);
    }
    using Indices = std::make_index_sequence<std::tuple_size_v<T>>;

  public:
    static constexpr std::size_t min_wire_size = min_size(Indices{});

    template <ByteSink B>
    static void write(const T& value, B& out) {
        std::apply([&out](const auto&... fields) { (Codec<std::remove_cvref_t<decltype(fields)>>::write(fields, out), ...); },
                   value);
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        return std::apply(
            [&in](auto&... fields) { return (Codec<std::remove_cvref_t<decltype(fields)>>::read(fields, in) && ...); },
            value);
    }
};

template <class T>
struct Codec<T, Shape::record> {
    //! Records may declare `static constexpr std::size_t min_wire_size` to
    //! tighten the element-count check when they appear inside containers.
    static constexpr std::size_t min_wire_size = [] {
        if constexpr (requires { T::min_wire_size; }) {
            return static_cast<std::size_t>(T::min_wire_size);
        } else {
            return std::size_t{0};
        }
    }();

    template <ByteSink B>
    static void write(const T& value, B& out) {
        value.serialize(out);
    }

    template <ByteSource S>
    static bool read(T& value, S& in) {
        value.parse(in);
        return in.ok();
    }
};

template <class T>
struct Codec<T, Shape::unsupported> {
    static_assert(!(HasSerializeHook<T> && !HasParseHook<T>),
                  "record type defines serialize() but not parse(); both hooks are required");
    static_assert(!(HasParseHook<T> && !HasSerializeHook<T>),
                  "record type defines parse() but not serialize(); both hooks are required");
    static_assert(HasSerializeHook<T> || HasParseHook<T> || detail::always_false<T>,
                  "type has no wire encoding rule");
};

// --- entry points ------------------------------------------------------------

//! Appends the wire bytes of \p value to \p out.
template <class T, ByteSink B>
void serialize_value(const T& value, B& out) {
    Codec<std::remove_cvref_t<T>>::write(value, out);
}

//! Decodes one value of type T from \p in into \p value. Returns false and
//! leaves the error in \p in on failure.
template <class T, ByteSource S>
bool parse_value(T& value, S& in) {
    return Codec<T>::read(value, in);
}

// Stream-style operators, used inside record hooks:
//   buf << a << b;   buf >> a >> b;

template <ByteSink B, class T>
B& operator<<(B& out, const T& value) {
    serialize_value(value, out);
    return out;
}

template <ByteSource S, class T>
S& operator>>(S& in, T& value) {
    parse_value(value, in);
    return in;
}

}  // namespace wirepack
