#include "vbraid/report_json.hpp"

namespace vbraid {

using nlohmann::json;

namespace {

std::string quad_csv(const Quad& q) {
  return q.a.get_str() + "," + q.b.get_str() + "," + q.c.get_str() + "," + q.d.get_str();
}

json candidate_json(const hunt::Candidate& c) {
  return {{"word", format_word(c.word)},
          {"moved_fraction", c.moved_fraction()},
          {"samples", c.samples},
          {"moved", c.moved},
          {"provably_trivial", c.provably_trivial}};
}

}  // namespace

json to_json(const hunt::HuntConfig& config) {
  json injected = json::array();
  for (const auto& w : config.injected) injected.push_back(format_word(w));
  return {{"strands", config.strands},
          {"min_length", config.min_length},
          {"max_length", config.max_length},
          {"word_count", config.word_count},
          {"seed", config.seed},
          {"battery_size", config.battery_size},
          {"coefficient_bound", config.coefficient_bound},
          {"base", format_coordinates(config.base_or_default())},
          {"injected", std::move(injected)}};
}

json to_json(const hunt::HuntReport& report) {
  json fixers = json::array();
  std::size_t battery_passers = 0;
  for (const auto& c : report.base_fixers) {
    fixers.push_back(candidate_json(c));
    if (c.passes_battery()) ++battery_passers;
  }
  json flagged = json::array();
  for (const auto& c : report.potential_counterexamples()) flagged.push_back(format_word(c.word));
  return {{"config", to_json(report.config)},
          {"words_tested", report.words_tested},
          {"base_fixers", std::move(fixers)},
          {"battery_passers", battery_passers},
          {"potential_counterexamples", std::move(flagged)},
          {"seed_partition", "word-index"},
          {"runtime_seconds", report.runtime_seconds}};
}

std::string to_jsonl(const hunt::HuntReport& report) {
  std::string out;
  for (const auto& c : report.base_fixers) {
    out += candidate_json(c).dump();
    out += '\n';
  }
  return out;
}

std::vector<std::string> recheck_base_fixers(const json& report) {
  const auto& cfg = report.at("config");
  const int n = cfg.at("strands").get<int>();
  const auto base = parse_coordinates(cfg.at("base").get<std::string>());
  std::vector<std::string> bad;
  for (const auto& entry : report.at("base_fixers")) {
    const auto text = entry.at("word").get<std::string>();
    const auto word = parse_word(text, n);
    if (word.empty() || act_word(base, word) != base) bad.push_back(text);
  }
  return bad;
}

json to_json(const vb2::ArrowReport& r) {
  json j = {{"arrow", r.label},
            {"samples", r.samples},
            {"passed", r.passed},
            {"ok", r.ok()},
            {"closed_form_mismatches", r.closed_form_mismatches},
            {"target_misses", r.target_misses},
            {"norm_failures", r.norm_failures},
            {"even_sum_failures", r.even_sum_failures}};
  j["counterexample"] = r.counterexample ? json(quad_csv(*r.counterexample)) : json(nullptr);
  return j;
}

json to_json(const vb2::DiagramReport& r) {
  json arrows = json::array();
  for (const auto& a : r.arrows) arrows.push_back(to_json(a));
  json missing = json::array();
  for (const auto& m : r.closure.missing) {
    missing.push_back({{"box", vb2::to_string(m.box)},
                       {"generator", format_letter(Letter{m.generator, 1}).substr(0, 1)}});
  }
  return {{"ok", r.ok()},
          {"arrows", std::move(arrows)},
          {"closure", {{"closed", r.closure.closed()}, {"missing", std::move(missing)}}}};
}

json to_json(const vb2::Certificate& c) {
  json path = json::array();
  for (auto b : c.path) path.push_back(vb2::to_string(b));
  json norms = json::array();
  for (const auto& x : c.norms) norms.push_back(x.get_str());
  return {{"status", vb2::to_string(c.status)},
          {"reduced_word", format_word(c.reduced)},
          {"start", quad_csv(c.start)},
          {"image", quad_csv(c.image)},
          {"path", std::move(path)},
          {"norms", std::move(norms)},
          {"message", c.message}};
}

}  // namespace vbraid
