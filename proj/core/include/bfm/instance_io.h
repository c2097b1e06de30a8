// Copyright 2026 The Authors.
//
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

#ifndef BFM_INSTANCE_IO_H_
#define BFM_INSTANCE_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "bfm/adversarial.h"
#include "bfm/mechanisms.h"
#include "bfm/verification.h"

namespace bfm {

// Instance documents are JSON:
//
//   {"budget": "10",
//    "agents": [{"id": 0, "cost": "2", "value": "6"}, ...],
//    "valuation": {"kind": "additive"}}
//
// Numbers may be JSON numbers or strings holding an integer, "p/q" or a
// decimal; all are read exactly (0.7 is 7/10). Other valuation kinds:
//   {"kind": "explicit", "table": [{"set": [0, 1], "value": "3"}, ...]}
//     listing every nonempty subset of the agents;
//   {"kind": "coverage", "weights": [...], "covers": [[0, 1], [1, 2], ...]}
//     with one cover list per agent in id order.
// An agent with a "type" makes the document a typed (heterogeneous)
// instance; then every agent needs a type and a value, and the valuation
// must be additive. Unknown fields are rejected. Errors are InputError with
// the JSON line/column or the field path.
AnyInstance ParseInstance(std::string_view text);
AnyInstance LoadInstanceFile(const std::filesystem::path& path);
std::string SerializeInstance(const AnyInstance& instance);

// {"family": "...", "members": [{"probability": "1/6", "instance": {...}}]}
WeightedInstanceFamily ParseFamilyDocument(std::string_view text);
std::string SerializeFamily(const WeightedInstanceFamily& family);

std::string OutcomeToJson(std::string_view mechanism,
                          const RandomizedOutcome& outcome);

// CSV with columns instance,mechanism,value,opt,ratio,pass,witness. Ratios
// are decimals with up to 30 digits ("inf" for an infinite ratio). Property
// reports put the property name in the mechanism column.
std::string RatioTableCsv(std::span<const RatioRow> rows);
std::string PropertyReportCsv(std::span<const PropertyReport> reports);

}  // namespace bfm

#endif  // BFM_INSTANCE_IO_H_
