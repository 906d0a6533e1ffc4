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

#include "propeval/report.h"

#include <algorithm>
#include <cstdio>

namespace propeval {

OrderedJson PrfJson(const PrfScore& score) {
  OrderedJson j;
  j["precision"] = score.precision;
  j["recall"] = score.recall;
  j["f"] = score.f_score;
  j["matched"] = score.matched;
  j["candidate_total"] = score.candidate_total;
  j["reference_total"] = score.reference_total;
  return j;
}

OrderedJson SceneGraphJson(const SceneGraph& graph) {
  OrderedJson objects = OrderedJson::array();
  for (const ObjectNode& node : graph.objects()) {
    OrderedJson o;
    o["canonical"] = node.canonical;
    o["aliases"] = node.aliases;
    objects.push_back(std::move(o));
  }
  OrderedJson attributes = OrderedJson::array();
  for (const AttributeBinding& a : graph.attributes()) {
    attributes.push_back({graph.object(a.object).canonical, a.attribute});
  }
  OrderedJson relations = OrderedJson::array();
  for (const RelationEdge& r : graph.relations()) {
    relations.push_back({graph.object(r.subject).canonical, r.relation,
                         graph.object(r.object).canonical});
  }
  OrderedJson j;
  j["objects"] = std::move(objects);
  j["attributes"] = std::move(attributes);
  j["relations"] = std::move(relations);
  return j;
}

OrderedJson RecordJson(const RecordResult& result) {
  OrderedJson j;
  j["id"] = result.id;
  const OrderedJson overall = PrfJson(result.report.overall);
  for (const auto& [key, value] : overall.items()) j[key] = value;
  OrderedJson categories;
  for (TupleCategory c : kAllCategories) {
    auto it = result.report.per_category.find(c);
    if (it != result.report.per_category.end()) {
      categories[std::string(CategoryName(c))] = PrfJson(it->second);
    }
  }
  j["categories"] = std::move(categories);
  if (result.graphs) {
    j["graphs"] = {{"candidate", SceneGraphJson(result.graphs->candidate)},
                   {"reference", SceneGraphJson(result.graphs->reference)}};
  }
  return j;
}

OrderedJson SystemLevelJson(const SystemLevelResult& result) {
  OrderedJson systems = OrderedJson::array();
  for (const SystemSummary& s : result.systems) {
    OrderedJson row;
    row["system"] = s.system_id;
    row["captions"] = s.captions;
    row["mean_f"] = s.mean_metric;
    row["human"] = s.human_metric;
    systems.push_back(std::move(row));
  }
  OrderedJson j;
  j["analysis"] = "system";
  j["question"] = result.question;
  j["per_system"] = std::move(systems);
  j["correlations"] = {{"pearson", result.correlation.coefficient},
                       {"p_value", result.correlation.p_value}};
  return j;
}

OrderedJson CaptionLevelJson(const CaptionLevelResult& result) {
  OrderedJson j;
  j["analysis"] = "caption";
  j["per_system"] = OrderedJson::array();
  j["correlations"] = {{"kendall_tau", result.tau}, {"captions", result.captions}};
  return j;
}

OrderedJson PreferenceJson(const PreferenceResult& result) {
  OrderedJson j;
  j["analysis"] = "preference";
  j["per_system"] = OrderedJson::array();
  j["correlations"] = {{"pairwise_accuracy", result.accuracy},
                       {"pairs", result.pairs}};
  return j;
}

OrderedJson BreakdownJson(const std::vector<BreakdownRow>& rows) {
  OrderedJson out = OrderedJson::array();
  for (const BreakdownRow& row : rows) {
    OrderedJson j;
    j["system"] = row.key;
    j["captions"] = row.captions;
    j["overall"] = PrfJson(row.overall);
    OrderedJson categories;
    for (TupleCategory c : kAllCategories) {
      categories[std::string(CategoryName(c))] = PrfJson(row.per_category.at(c));
    }
    j["categories"] = std::move(categories);
    out.push_back(std::move(j));
  }
  return {{"breakdown", std::move(out)}};
}

std::string BreakdownTable(const std::vector<BreakdownRow>& rows) {
  size_t key_width = 6;  // "system"
  for (const BreakdownRow& row : rows) key_width = std::max(key_width, row.key.size());

  std::string out;
  char cell[32];
  auto pad = [](std::string s, size_t width) {
    s.resize(std::max(width, s.size()), ' ');
    return s;
  };
  out += pad("system", key_width);
  for (const char* header : {"overall", "object", "relation", "attribute",
                             "color", "count", "size"}) {
    std::snprintf(cell, sizeof(cell), "  %9s", header);
    out += cell;
  }
  out += '\n';
  for (const BreakdownRow& row : rows) {
    out += pad(row.key, key_width);
    std::snprintf(cell, sizeof(cell), "  %9.4f", row.overall.f_score);
    out += cell;
    for (TupleCategory c : kAllCategories) {
      const PrfScore& score = row.per_category.at(c);
      // No tuples of this kind on either side: nothing was measured.
      if (score.candidate_total == 0 && score.reference_total == 0) {
        std::snprintf(cell, sizeof(cell), "  %9s", "-");
      } else {
        std::snprintf(cell, sizeof(cell), "  %9.4f", score.f_score);
      }
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace propeval
