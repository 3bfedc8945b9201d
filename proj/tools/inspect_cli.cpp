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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "wirepack/inspector/inspect.hpp"
#include "wirepack/inspector/schema.hpp"

namespace wirepack::tools {

namespace {

constexpr int kOk = 0;
constexpr int kDecodeError = 1;
constexpr int kUsageError = 2;

std::vector<std::uint8_t> slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// CLI11 wants argc/argv; keep the strings alive alongside the pointers.
struct Argv {
    explicit Argv(const std::string& program, const std::vector<std::string>& args) : storage(args) {
        storage.insert(storage.begin(), program);
        for (auto& s : storage) pointers.push_back(s.data());
    }
    int argc() const { return static_cast<int>(pointers.size()); }
    char** argv() { return pointers.data(); }

    std::vector<std::string> storage;
    std::vector<char*> pointers;
};

}  // namespace

int inspect_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decode a wirepack message against a schema expression and print its annotated structure."};
    app.name("inspect");

    std::string schema_text;
    std::string hex_text;
    std::string in_path;
    std::string format = "tree";
    app.add_option("--schema", schema_text, "Schema expression, e.g. 'seq<u32>' or 'record{n:u32, s:set<u32>}'")
        ->required();
    auto* hex_opt = app.add_option("--hex", hex_text, "Message as hex digit pairs; whitespace is ignored");
    auto* in_opt = app.add_option("--in", in_path, "Read the raw message from a file");
    hex_opt->excludes(in_opt);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tree", "json"}));
    app.footer("With neither --hex nor --in the raw message is read from stdin.\n"
               "Exit status: 0 decoded, 1 decode error, 2 usage error.");

    Argv argv{"inspect", args};
    try {
        app.parse(argv.argc(), argv.argv());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "inspect: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    auto schema = inspector::parse_schema(schema_text);
    if (!schema) {
        err << "inspect: bad schema: " << schema.error().message() << '\n'
            << "  " << schema_text << '\n'
            << "  " << std::string(schema.error().offset, ' ') << "^\n";
        return kUsageError;
    }

    std::vector<std::uint8_t> bytes;
    if (hex_opt->count() > 0) {
        auto parsed = inspector::parse_hex(hex_text);
        if (!parsed) {
            err << "inspect: bad --hex: " << parsed.error().message() << '\n';
            return kUsageError;
        }
        bytes = std::move(*parsed);
    } else if (in_opt->count() > 0) {
        std::ifstream file(in_path, std::ios::binary);
        if (!file) {
            err << "inspect: cannot open '" << in_path << "'\n";
            return kUsageError;
        }
        bytes = slurp(file);
    } else {
        bytes = slurp(in);
    }

    auto decoded = inspector::inspect(*schema, bytes);
    if (!decoded) {
        err << "decode error: " << decoded.error().message() << '\n';
        return kDecodeError;
    }
    if (format == "json") {
        inspector::print_json(out, *schema, *decoded);
    } else {
        inspector::print_tree(out, *schema, *decoded);
    }
    return kOk;
}

}  // namespace wirepack::tools
