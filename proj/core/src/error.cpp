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

#include "wirepack/error.hpp"

namespace wirepack {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::none: return "ok";
        case Errc::truncated: return "truncated";
        case Errc::overflow: return "overflow";
        case Errc::malformed_bool: return "malformed bool";
        case Errc::size_sanity: return "size sanity";
        case Errc::trailing_bytes: return "trailing bytes";
        case Errc::io: return "i/o error";
        case Errc::resource: return "resource exhausted";
        case Errc::syntax: return "syntax error";
        case Errc::depth_exceeded: return "depth exceeded";
        case Errc::parameter: return "invalid parameter";
        case Errc::mismatch: return "round-trip mismatch";
    }
    return "unknown";
}

std::string Error::message() const {
    std::string out{to_string(code)};
    out += " at offset ";
    out += std::to_string(offset);
    if (!context.empty()) {
        out += " (";
        out += context;
        out += ')';
    }
    return out;
}

}  // namespace wirepack
