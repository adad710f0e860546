#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vbraid/kernel_hunt.hpp"
#include "vbraid/vb2_cert.hpp"

namespace vbraid {

// {"config":{...},"words_tested":N,"base_fixers":[{"word","moved_fraction",
//  "samples","moved"}],"seed_partition":"word-index","runtime_seconds":T}
nlohmann::json to_json(const hunt::HuntReport& report);
nlohmann::json to_json(const hunt::HuntConfig& config);

// One JSON document per base fixer, newline terminated.
std::string to_jsonl(const hunt::HuntReport& report);

// Words in a serialized report that do not fix the report's base probe.
// Empty for every report produced by run_hunt.
std::vector<std::string> recheck_base_fixers(const nlohmann::json& report);

nlohmann::json to_json(const vb2::ArrowReport& report);
nlohmann::json to_json(const vb2::DiagramReport& report);
nlohmann::json to_json(const vb2::Certificate& cert);

}  // namespace vbraid
