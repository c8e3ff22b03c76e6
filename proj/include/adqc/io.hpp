// Copyright 2026 The ADQC Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "adqc/interaction.hpp"
#include "adqc/sim.hpp"
#include "adqc/tgs.hpp"
#include "adqc/translate.hpp"

namespace adqc::io {

using Json = nlohmann::json;

/// Rounds every number to 12 significant digits and writes keys in sorted order.
std::string dump(const Json& j);

/// Rounds a double to 12 significant digits; magnitudes below 1e-12 become zero.
double round12(double x);

Json to_json(const Matrix& m);     // rows of [re, im] pairs
Json to_json(const Complex& c);    // [re, im]
Json to_json(const PauliString& p);  // "+X_a Z_s"

Json to_json(const TwistedGraph& g);
/// Angles are multiplied by angle_scale. Throws Error on schema violations.
TwistedGraph graph_from_json(const Json& j, double angle_scale = 1.0);

Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j, double angle_scale = 1.0);

Json to_json(const MbqcPattern& m);
/// Reads the open graph, measurements and the optional output map; commands
/// and flow are not read back.
MbqcPattern mbqc_from_json(const Json& j, double angle_scale = 1.0);

Json to_json(const FlowResult& f);
Json to_json(const Classification& c);
Json to_json(const DeterminismResult& d);
Json to_json(const CptpMap& m, const std::vector<QubitId>& ancillas);
Json to_json(const DepthMetrics& d);

enum class JsonKind { Graph, Circuit, Mbqc, Unknown };
JsonKind detect_kind(const Json& j);

}  // namespace adqc::io
