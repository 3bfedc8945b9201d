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

#include "wirepack/inspector/inspect.hpp"

#include <charconv>
#include <cmath>
#include <new>
#include <string>
#include <system_error>

#include "json.hpp"
#include "wirepack/buffers.hpp"
#include "wirepack/serializer.hpp"

namespace wirepack::inspector {

namespace {

// Walks a schema over an InputBuffer, reusing the library's codecs for
// scalars and its count/sanity rule for containers.
class Decoder {
  public:
    explicit Decoder(std::span<const std::uint8_t> bytes) : in_(bytes) {}

    bool decode(const Schema& schema, DecodedValue& out) {
        out.kind = schema.kind;
        out.begin = in_.position();
        const bool ok = decode_body(schema, out);
        out.end = in_.position();
        return ok;
    }

    InputBuffer& input() { return in_; }

    Error error() const {
        Error e = in_.error();
        e.context = "path " + failed_path_;
        return e;
    }

  private:
    bool decode_body(const Schema& schema, DecodedValue& out) {
        switch (schema.kind) {
            case Kind::u8: return unsigned_scalar<std::uint8_t>(out);
            case Kind::u16: return unsigned_scalar<std::uint16_t>(out);
            case Kind::u32: return unsigned_scalar<std::uint32_t>(out);
            case Kind::u64: return unsigned_scalar<std::uint64_t>(out);
            case Kind::i8: return signed_scalar<std::int8_t>(out);
            case Kind::i16: return signed_scalar<std::int16_t>(out);
            case Kind::i32: return signed_scalar<std::int32_t>(out);
            case Kind::i64: return signed_scalar<std::int64_t>(out);
            case Kind::f32: return float_scalar<float>(out);
            case Kind::f64: return float_scalar<double>(out);
            case Kind::boolean: {
                bool v = false;
                if (!Codec<bool>::read(v, in_)) return fail_here();
                out.scalar = v;
                return true;
            }
            case Kind::str: return string_scalar(out);
            case Kind::seq:
            case Kind::set: return elements(schema.children[0], out);
            case Kind::map: return entries(schema, out);
            case Kind::pair: return fields(schema, out);
            case Kind::record: return fields(schema, out);
        }
        return fail_here();
    }

    template <class T>
    bool unsigned_scalar(DecodedValue& out) {
        T v{};
        if (!Codec<T>::read(v, in_)) return fail_here();
        out.scalar = static_cast<std::uint64_t>(v);
        return true;
    }

    template <class T>
    bool signed_scalar(DecodedValue& out) {
        T v{};
        if (!Codec<T>::read(v, in_)) return fail_here();
        out.scalar = static_cast<std::int64_t>(v);
        return true;
    }

    template <class T>
    bool float_scalar(DecodedValue& out) {
        T v{};
        if (!Codec<T>::read(v, in_)) return fail_here();
        out.scalar = static_cast<double>(v);
        return true;
    }

    bool string_scalar(DecodedValue& out) {
        std::size_t length = 0;
        if (!detail::read_count(in_, 1, length)) return fail_here();
        out.count = length;
        out.prefix_end = in_.position();
        std::string text;
        if (!detail::read_contiguous<char>(text, length, in_)) return fail_here();
        out.scalar = std::move(text);
        return true;
    }

    // Per-element size used by the count sanity check. Mirrors the typed
    // codecs: a record counts as its declared minimum, which a schema cannot
    // express, so it counts as zero like an undeclared typed record.
    static std::size_t sanity_unit(const Schema& schema) noexcept {
        if (schema.kind == Kind::record) return 0;
        if (schema.kind == Kind::pair) return sanity_unit(schema.children[0]) + sanity_unit(schema.children[1]);
        return min_wire_size(schema);
    }

    bool read_prefix(std::size_t min_element, DecodedValue& out) {
        std::size_t count = 0;
        if (!detail::read_count(in_, min_element, count)) return fail_here();
        out.count = count;
        out.prefix_end = in_.position();
        out.children.reserve(detail::reserve_hint<DecodedValue>(in_, count));
        return true;
    }

    bool elements(const Schema& element, DecodedValue& out) {
        if (!read_prefix(sanity_unit(element), out)) return false;
        for (std::size_t i = 0; i < *out.count; ++i) {
            const std::size_t mark = push_index(i);
            out.children.emplace_back();
            const bool ok = decode(element, out.children.back());
            path_.resize(mark);
            if (!ok) return false;
        }
        return true;
    }

    bool entries(const Schema& schema, DecodedValue& out) {
        if (!read_prefix(sanity_unit(schema.children[0]) + sanity_unit(schema.children[1]), out)) {
            return false;
        }
        for (std::size_t i = 0; i < *out.count; ++i) {
            const std::size_t mark = push_index(i);
            DecodedValue& entry = out.children.emplace_back();
            entry.kind = Kind::pair;
            entry.begin = in_.position();
            entry.children.resize(2);
            bool ok = named_child(".key", schema.children[0], entry.children[0]) &&
                      named_child(".value", schema.children[1], entry.children[1]);
            entry.end = in_.position();
            path_.resize(mark);
            if (!ok) return false;
        }
        return true;
    }

    bool fields(const Schema& schema, DecodedValue& out) {
        out.children.resize(schema.children.size());
        for (std::size_t i = 0; i < schema.children.size(); ++i) {
            const std::string suffix = schema.kind == Kind::pair ? (i == 0 ? ".first" : ".second")
                                                                  : "." + schema.names[i];
            if (!named_child(suffix, schema.children[i], out.children[i])) return false;
        }
        return true;
    }

    bool named_child(std::string_view suffix, const Schema& schema, DecodedValue& out) {
        const std::size_t mark = path_.size();
        path_ += suffix;
        const bool ok = decode(schema, out);
        path_.resize(mark);
        return ok;
    }

    std::size_t push_index(std::size_t i) {
        const std::size_t mark = path_.size();
        path_ += '[';
        path_ += std::to_string(i);
        path_ += ']';
        return mark;
    }

    // The innermost failing node records its path; enclosing nodes only
    // propagate the failure.
    bool fail_here() {
        if (!failed_) {
            failed_ = true;
            failed_path_ = path_;
        }
        return false;
    }

    InputBuffer in_;
    std::string path_ = "$";
    std::string failed_path_;
    bool failed_ = false;
};

std::string format_float(double v, Kind kind) {
    char buf[64];
    std::to_chars_result r;
    if (kind == Kind::f32) {
        r = std::to_chars(buf, buf + sizeof buf, static_cast<float>(v));
    } else {
        r = std::to_chars(buf, buf + sizeof buf, v);
    }
    return std::string(buf, r.ptr);
}

std::string quote(const std::string& s) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "\"";
    for (const char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        if (c == '"' || c == '\\') {
            out += '\\';
            out += ch;
        } else if (c >= 0x20 && c < 0x7f) {
            out += ch;
        } else {
            out += "\\x";
            out += kHex[c >> 4];
            out += kHex[c & 0x0f];
        }
    }
    out += '"';
    return out;
}

std::string scalar_text(const DecodedValue& value) {
    struct Visitor {
        Kind kind;
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_float(v, kind); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return quote(v); }
    };
    return std::visit(Visitor{value.kind}, value.scalar);
}

std::string range(std::size_t begin, std::size_t end) {
    return "@[" + std::to_string(begin) + "," + std::to_string(end) + ")";
}

void tree_node(std::ostream& out, const Schema& schema, const DecodedValue& value, const std::string& label,
               int indent) {
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << label << ": ";
    if (is_scalar(schema.kind)) {
        out << kind_name(schema.kind) << " = " << scalar_text(value) << ' ' << range(value.begin, value.end);
        if (schema.kind == Kind::str) out << " len=" << *value.count << ' ' << range(value.begin, value.prefix_end);
        out << '\n';
        return;
    }
    out << to_string(schema) << ' ' << range(value.begin, value.end);
    if (value.count) out << " count=" << *value.count << ' ' << range(value.begin, value.prefix_end);
    out << '\n';
    for (std::size_t i = 0; i < value.children.size(); ++i) {
        const DecodedValue& child = value.children[i];
        switch (schema.kind) {
            case Kind::seq:
            case Kind::set:
                tree_node(out, schema.children[0], child, "[" + std::to_string(i) + "]", indent + 1);
                break;
            case Kind::map:
                out << std::string(static_cast<std::size_t>(indent + 1) * 2, ' ') << '[' << i
                    << "]: entry " << range(child.begin, child.end) << '\n';
                tree_node(out, schema.children[0], child.children[0], "key", indent + 2);
                tree_node(out, schema.children[1], child.children[1], "value", indent + 2);
                break;
            case Kind::pair:
                tree_node(out, schema.children[i], child, i == 0 ? "first" : "second", indent + 1);
                break;
            case Kind::record:
                tree_node(out, schema.children[i], child, schema.names[i], indent + 1);
                break;
            default:
                break;
        }
    }
}

nlohmann::ordered_json json_scalar(const DecodedValue& value) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            // JSON has no NaN or infinity literals.
            if (std::isnan(v)) return "nan";
            if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
            return v;
        }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, value.scalar);
}

nlohmann::ordered_json json_node(const Schema& schema, const DecodedValue& value, const std::string& path) {
    nlohmann::ordered_json node;
    node["path"] = path;
    node["type"] = to_string(schema);
    node["range"] = {value.begin, value.end};
    if (value.count) {
        node["count"] = *value.count;
        node["prefix_range"] = {value.begin, value.prefix_end};
    }
    if (is_scalar(schema.kind)) {
        node["value"] = json_scalar(value);
        return node;
    }
    nlohmann::ordered_json children = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < value.children.size(); ++i) {
        const DecodedValue& child = value.children[i];
        switch (schema.kind) {
            case Kind::seq:
            case Kind::set:
                children.push_back(json_node(schema.children[0], child, path + "[" + std::to_string(i) + "]"));
                break;
            case Kind::map: {
                const std::string at = path + "[" + std::to_string(i) + "]";
                nlohmann::ordered_json entry;
                entry["path"] = at;
                entry["range"] = {child.begin, child.end};
                entry["key"] = json_node(schema.children[0], child.children[0], at + ".key");
                entry["value"] = json_node(schema.children[1], child.children[1], at + ".value");
                children.push_back(std::move(entry));
                break;
            }
            case Kind::pair:
                children.push_back(json_node(schema.children[i], child, path + (i == 0 ? ".first" : ".second")));
                break;
            case Kind::record:
                children.push_back(json_node(schema.children[i], child, path + "." + schema.names[i]));
                break;
            default:
                break;
        }
    }
    node["children"] = std::move(children);
    return node;
}

}  // namespace

Result<DecodedValue> inspect(const Schema& schema, std::span<const std::uint8_t> bytes) {
    Decoder decoder{bytes};
    DecodedValue root;
    try {
        if (!decoder.decode(schema, root)) return decoder.error();
    } catch (const std::bad_alloc&) {
        return Error{Errc::resource, decoder.input().position(), "allocation failed"};
    }
    if (!decoder.input().at_end()) {
        return Error{Errc::trailing_bytes, root.end,
                     std::to_string(bytes.size() - root.end) + " unconsumed byte(s)"};
    }
    return root;
}

void print_tree(std::ostream& out, const Schema& schema, const DecodedValue& value) {
    tree_node(out, schema, value, "$", 0);
}

void print_json(std::ostream& out, const Schema& schema, const DecodedValue& value) {
    out << json_node(schema, value, "$").dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << '\n';
}

}  // namespace wirepack::inspector
