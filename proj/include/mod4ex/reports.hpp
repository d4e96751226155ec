// Copyright 2026 The mod4ex Authors
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

#pragma once

#include <json.hpp>

#include "mod4ex/extremal_search.hpp"
#include "mod4ex/lemma_lab.hpp"
#include "mod4ex/modcycle.hpp"

namespace mod4ex {

// JSON views of the result types. Wall-clock fields are only written when
// `timing` is set, so that repeated runs produce identical output.

nlohmann::ordered_json to_json(const SearchResult& result, bool timing = false);
nlohmann::ordered_json to_json(const RefuteResult& result, bool timing = false);
nlohmann::ordered_json to_json(const LemmaReport& report, const TrialConfig& config,
                               bool timing = false);
nlohmann::ordered_json to_json(const InstanceRecord& record);
nlohmann::ordered_json to_json(const ReplayTrace& trace);
nlohmann::ordered_json to_json(const ResidueHistogram& histogram);
nlohmann::ordered_json to_json(const CycleWitness& cycle);

/// Throws std::invalid_argument when fields are missing or mistyped.
InstanceRecord record_from_json(const nlohmann::json& j);
/// Inverse of to_json(SearchResult); used by the results cache.
SearchResult search_result_from_json(const nlohmann::json& j);

}  // namespace mod4ex
