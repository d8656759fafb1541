// Copyright 2026 The qmentropy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QME_SERIALIZE_HPP_
#define QME_SERIALIZE_HPP_

#include <json.hpp>

#include "qme/covering.hpp"
#include "qme/entropy.hpp"
#include "qme/quasimetric.hpp"
#include "qme/theorems.hpp"

namespace qme {

// JSON documents with stable field names and insertion-ordered keys.
using Json = nlohmann::ordered_json;

// Witness ids are embedded only for clouds up to this size.
inline constexpr std::size_t kWitnessJsonLimit = 256;

Json to_json(const AxiomReport& report);
Json to_json(const CountGrid& grid);
Json to_json(const EntropyEstimate& estimate);
Json to_json(const CheckResult& check);
Json to_json(const TheoremReport& report);
Json to_json(const PowerReport& report);

}  // namespace qme

#endif  // QME_SERIALIZE_HPP_
