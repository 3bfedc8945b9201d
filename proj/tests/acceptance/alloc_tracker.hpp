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

namespace wirepack::acceptance {

//! Heap accounting for the whole process, fed by replacement global
//! operator new/delete. Counting is off until a Scope is active.
struct AllocStats {
    std::size_t live = 0;     // bytes currently allocated since the scope opened
    std::size_t peak = 0;     // high-water mark of live
    std::size_t largest = 0;  // largest single request
    std::size_t count = 0;    // number of requests
};

class AllocScope {
public:
    AllocScope();
    ~AllocScope();
    AllocScope(const AllocScope&) = delete;
    AllocScope& operator=(const AllocScope&) = delete;

    AllocStats stats() const;
};

}  // namespace wirepack::acceptance
