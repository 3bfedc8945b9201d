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

#include "wirepack/inspector/schema.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace wirepack::inspector {

namespace {

struct NamedKind {
    std::string_view name;
    Kind kind;
};

constexpr std::array<NamedKind, 17> kKinds{{
    {"u8", Kind::u8},     {"u16", Kind::u16},   {"u32", Kind::u32},      {"u64", Kind::u64},
    {"i8", Kind::i8},     {"i16", Kind::i16},   {"i32", Kind::i32},      {"i64", Kind::i64},
    {"f32", Kind::f32},   {"f64", Kind::f64},   {"bool", Kind::boolean}, {"str", Kind::str},
    {"seq", Kind::seq},   {"set", Kind::set},   {"map", Kind::map},      {"pair", Kind::pair},
    {"record", Kind::record},
}};

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Result<Schema> run() {
        Schema root;
        if (!parse_type(root, 1)) return error_;
        skip_space();
        if (pos_ != text_.size()) {
            return Error{Errc::syntax, pos_, "unexpected trailing input"};
        }
        return root;
    }

  private:
    bool parse_type(Schema& out, std::size_t level) {
        skip_space();
        const std::size_t start = pos_;
        if (level > kMaxSchemaDepth) {
            return fail(Errc::depth_exceeded, start,
                        "nesting deeper than " + std::to_string(kMaxSchemaDepth));
        }
        const std::string_view word = identifier();
        if (word.empty()) return fail(Errc::syntax, start, "expected a type name");
        const auto found = std::find_if(kKinds.begin(), kKinds.end(),
                                         [word](const NamedKind& k) { return k.name == word; });
        if (found == kKinds.end()) {
            return fail(Errc::syntax, start, "unknown type '" + std::string(word) + "'");
        }
        out.kind = found->kind;
        switch (out.kind) {
            case Kind::seq:
            case Kind::set:
                out.children.resize(1);
                return expect('<') && parse_type(out.children[0], level + 1) && expect('>');
            case Kind::map:
            case Kind::pair:
                out.children.resize(2);
                return expect('<') && parse_type(out.children[0], level + 1) && expect(',') &&
                       parse_type(out.children[1], level + 1) && expect('>');
            case Kind::record:
                return parse_fields(out, level);
            default:
                return true;
        }
    }

    bool parse_fields(Schema& out, std::size_t level) {
        if (!expect('{')) return false;
        skip_space();
        if (peek('}')) {
            ++pos_;
            return true;
        }
        while (true) {
            skip_space();
            const std::size_t name_at = pos_;
            const std::string_view name = identifier();
            if (name.empty()) return fail(Errc::syntax, name_at, "expected a field name");
            if (std::find(out.names.begin(), out.names.end(), name) != out.names.end()) {
                return fail(Errc::syntax, name_at, "duplicate field '" + std::string(name) + "'");
            }
            if (!expect(':')) return false;
            out.names.emplace_back(name);
            out.children.emplace_back();
            if (!parse_type(out.children.back(), level + 1)) return false;
            skip_space();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            return expect('}');
        }
    }

    std::string_view identifier() {
        const std::size_t start = pos_;
        if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
            ++pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    bool expect(char c) {
        skip_space();
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return fail(Errc::syntax, pos_, std::string("expected '") + c + "'");
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool fail(Errc code, std::size_t at, std::string what) {
        error_ = Error{code, at, std::move(what)};
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Error error_{};
};

void print(const Schema& schema, std::string& out) {
    out += kind_name(schema.kind);
    switch (schema.kind) {
        case Kind::seq:
        case Kind::set:
            out += '<';
            print(schema.children[0], out);
            out += '>';
            break;
        case Kind::map:
        case Kind::pair:
            out += '<';
            print(schema.children[0], out);
            out += ',';
            print(schema.children[1], out);
            out += '>';
            break;
        case Kind::record:
            out += '{';
            for (std::size_t i = 0; i < schema.children.size(); ++i) {
                if (i != 0) out += ',';
                out += schema.names[i];
                out += ':';
                print(schema.children[i], out);
            }
            out += '}';
            break;
        default:
            break;
    }
}

}  // namespace

Result<Schema> parse_schema(std::string_view text) { return Parser{text}.run(); }

std::string to_string(const Schema& schema) {
    std::string out;
    print(schema, out);
    return out;
}

std::string_view kind_name(Kind kind) noexcept {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k.name;
    }
    return "?";
}

bool is_integer(Kind kind) noexcept { return kind <= Kind::i64; }

bool is_scalar(Kind kind) noexcept { return kind <= Kind::str; }

bool is_container(Kind kind) noexcept {
    return kind == Kind::seq || kind == Kind::set || kind == Kind::map;
}

std::size_t min_wire_size(const Schema& schema) noexcept {
    switch (schema.kind) {
        case Kind::f32: return 4;
        case Kind::f64: return 8;
        case Kind::pair:
        case Kind::record: {
            std::size_t total = 0;
            for (const auto& child : schema.children) total += min_wire_size(child);
            return total;
        }
        default: return 1;
    }
}

std::size_t depth(const Schema& schema) noexcept {
    std::size_t deepest = 0;
    for (const auto& child : schema.children) deepest = std::max(deepest, depth(child));
    return deepest + 1;
}

}  // namespace wirepack::inspector
