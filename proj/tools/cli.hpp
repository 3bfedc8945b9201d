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

#include <iosfwd>
#include <string>
#include <vector>

namespace wirepack::tools {

// Both entry points take the arguments without the program name and return
// the process exit status: 0 success, 1 decode/run failure, 2 usage error.

int inspect_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int bench_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirepack::tools
