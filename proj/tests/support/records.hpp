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

// Record types used across the tests, each with the schema expression that
// describes its wire layout for the inspector.

#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "generators.hpp"

namespace wirepack::testing {

//! Electron configuration change: count plus source and target orbitals.
struct QuantumState {
    unsigned n_elects = 0;
    std::unordered_set<unsigned> orbs_from;
    std::unordered_set<unsigned> orbs_to;

    template <class B>
    void serialize(B& buf) const {
        buf << n_elects << orbs_from << orbs_to;
    }

    template <class B>
    void parse(B& buf) {
        buf >> n_elects >> orbs_from >> orbs_to;
    }

    auto tie() const { return std::tie(n_elects, orbs_from, orbs_to); }
    friend bool operator==(const QuantumState&, const QuantumState&) = default;

    static QuantumState random(Gen& g) {
        QuantumState s;
        s.n_elects = random_value<unsigned>(g);
        s.orbs_from = random_value<std::unordered_set<unsigned>>(g);
        s.orbs_to = random_value<std::unordered_set<unsigned>>(g);
        return s;
    }

    static constexpr const char* kSchema = "record{n:u32, from:set<u32>, to:set<u32>}";
};

struct Empty {
    template <class B>
    void serialize(B&) const {}
    template <class B>
    void parse(B&) {}

    auto tie() const { return std::tie(); }
    friend bool operator==(const Empty&, const Empty&) = default;
    static Empty random(Gen&) { return {}; }
};

//! A record holding other records, nested to depth four.
struct Molecule {
    std::string name;
    QuantumState ground;
    std::vector<QuantumState> excited;
    std::pair<double, std::int64_t> energy{};

    template <class B>
    void serialize(B& buf) const {
        buf << name << ground << excited << energy;
    }

    template <class B>
    void parse(B& buf) {
        buf >> name >> ground >> excited >> energy;
    }

    auto tie() const { return std::tie(name, ground, excited, energy); }
    friend bool operator==(const Molecule&, const Molecule&) = default;

    static Molecule random(Gen& g) {
        Molecule m;
        m.name = random_value<std::string>(g);
        m.ground = QuantumState::random(g);
        m.excited = random_value<std::vector<QuantumState>>(g);
        m.energy = random_value<std::pair<double, std::int64_t>>(g);
        return m;
    }

    static constexpr const char* kSchema =
        "record{name:str, ground:record{n:u32, from:set<u32>, to:set<u32>}, "
        "excited:seq<record{n:u32, from:set<u32>, to:set<u32>}>, energy:pair<f64,i64>}";
};

}  // namespace wirepack::testing
