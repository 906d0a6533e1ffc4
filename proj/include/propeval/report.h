// Copyright 2026 The Propeval Authors.
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

// JSON and text renderings of scores, graphs and evaluation reports. Key
// order is fixed so identical inputs give byte-identical output.

#ifndef PROPEVAL_REPORT_H_
#define PROPEVAL_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "propeval/datasets.h"
#include "propeval/scene_graph.h"
#include "propeval/scoring.h"

namespace propeval {

using OrderedJson = nlohmann::ordered_json;

OrderedJson PrfJson(const PrfScore& score);

// {objects: [{canonical, aliases}], attributes: [[object, attribute]],
//  relations: [[subject, relation, object]]}
OrderedJson SceneGraphJson(const SceneGraph& graph);

// {id, precision, recall, f, matched, candidate_total, reference_total,
//  categories: {...}} plus "graphs" when the record kept them.
OrderedJson RecordJson(const RecordResult& result);

OrderedJson SystemLevelJson(const SystemLevelResult& result);
OrderedJson CaptionLevelJson(const CaptionLevelResult& result);
OrderedJson PreferenceJson(const PreferenceResult& result);

OrderedJson BreakdownJson(const std::vector<BreakdownRow>& rows);
// Aligned plain-text table of category F-scores, one row per system.
// Categories with no tuples on either side print as "-".
std::string BreakdownTable(const std::vector<BreakdownRow>& rows);

}  // namespace propeval

#endif  // PROPEVAL_REPORT_H_
