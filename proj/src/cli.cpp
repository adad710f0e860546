#include "vbraid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vbraid/dynnikov.hpp"
#include "vbraid/report_json.hpp"
#include "vbraid/kernel_hunt.hpp"
#include "vbraid/vb2_cert.hpp"
#include "vbraid/word.hpp"
#include "vbraid/word_problem.hpp"

namespace vbraid::cli {

namespace {

// Raised for a failed verification (exit status 2), as opposed to bad input.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> opt_n(int n) { return n > 0 ? std::optional<int>(n) : std::nullopt; }

Coordinates resolve_vector(const std::string& text, int n) {
  if (text == "base") {
    if (n < 2) throw std::invalid_argument("--vector base needs --n or a word to fix the strand count");
    return base_vector(n);
  }
  auto v = parse_coordinates(text);
  if (n > 0 && v.strands() != n) {
    throw std::invalid_argument("vector has " + std::to_string(v.strands()) +
                                " strands but --n is " + std::to_string(n));
  }
  return v;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
  f << data;
}

std::string path_text(const std::vector<vb2::Box>& path) {
  std::string out;
  for (auto b : path) {
    if (!out.empty()) out += " -> ";
    out += vb2::to_string(b);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynnikov coordinates on classical and virtual braid groups"};
  app.require_subcommand(1);

  // act
  int act_n = 0;
  std::string act_vector, act_text;
  auto* act = app.add_subcommand("act", "Act on a coordinate vector by a word");
  act->add_option("--n", act_n, "Strand count")->check(CLI::Range(2, 1 << 20));
  act->add_option("--vector", act_vector, "Comma-separated integers or 'base'")->required();
  act->add_option("--word", act_text, "Braid word, e.g. \"s1 S2 r1\"")->required();

  // eq
  std::string eq_group, eq_w1, eq_w2;
  int eq_n = 0;
  int eq_battery = kDefaultBattery;
  std::uint64_t eq_seed = 0;
  auto* eq = app.add_subcommand("eq", "Decide or test equality of two words");
  eq->add_option("--group", eq_group, "bn, vb2 or vbn")
      ->required()
      ->check(CLI::IsMember({"bn", "vb2", "vbn"}));
  eq->add_option("--n", eq_n, "Strand count")->check(CLI::Range(2, 1 << 20));
  eq->add_option("--w1", eq_w1, "First word")->required();
  eq->add_option("--w2", eq_w2, "Second word")->required();
  eq->add_option("--battery", eq_battery, "Random probe vectors (vbn)")->check(CLI::NonNegativeNumber);
  eq->add_option("--seed", eq_seed, "Battery seed (vbn)");

  // perm / reduce
  std::string perm_word, reduce_word;
  int perm_n = 0, reduce_n = 0;
  auto* perm = app.add_subcommand("perm", "Image of a word in the symmetric group");
  perm->add_option("--word", perm_word)->required();
  perm->add_option("--n", perm_n)->check(CLI::Range(2, 1 << 20));
  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  reduce->add_option("--word", reduce_word)->required();
  reduce->add_option("--n", reduce_n)->check(CLI::Range(2, 1 << 20));

  // hunt
  hunt::HuntConfig hc;
  std::string hunt_out, hunt_jsonl, hunt_base;
  std::vector<std::string> hunt_inject;
  auto* hunt_cmd = app.add_subcommand("hunt", "Randomized search for words acting trivially");
  hunt_cmd->add_option("--n", hc.strands, "Strand count")->required()->check(CLI::Range(2, 64));
  hunt_cmd->add_option("--count", hc.word_count, "Random words to test")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hunt_cmd->add_option("--min-length", hc.min_length)->capture_default_str();
  hunt_cmd->add_option("--max-length", hc.max_length)->capture_default_str();
  hunt_cmd->add_option("--seed", hc.seed)->required();
  hunt_cmd->add_option("--battery", hc.battery_size)->capture_default_str()->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--bound", hc.coefficient_bound)->capture_default_str()->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--workers", hc.workers, "0 = OpenMP default")->check(CLI::NonNegativeNumber);
  hunt_cmd->add_option("--base", hunt_base, "Base probe (default 0,1,...,0,1)");
  hunt_cmd->add_option("--inject", hunt_inject, "Extra word tested ahead of the corpus");
  hunt_cmd->add_option("--out", hunt_out, "JSON report path")->required();
  hunt_cmd->add_option("--jsonl", hunt_jsonl, "Base fixers as JSON lines");

  // moved-fraction
  std::string mf_word;
  int mf_n = 0;
  std::int64_t mf_samples = 100000, mf_bound = kBatteryBound;
  std::uint64_t mf_seed = 0;
  auto* mf = app.add_subcommand("moved-fraction", "Fraction of random vectors moved by a word");
  mf->add_option("--word", mf_word)->required();
  mf->add_option("--n", mf_n)->check(CLI::Range(2, 1 << 20));
  mf->add_option("--samples", mf_samples)->capture_default_str()->check(CLI::PositiveNumber);
  mf->add_option("--bound", mf_bound)->capture_default_str()->check(CLI::PositiveNumber);
  mf->add_option("--seed", mf_seed)->required();

  // verify-diagram
  std::int64_t vd_samples = 10000;
  std::uint64_t vd_seed = 0;
  std::string vd_json;
  auto* vd = app.add_subcommand("verify-diagram", "Check every VB_2 diagram arrow and closure");
  vd->add_option("--samples", vd_samples, "Samples per arrow")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  vd->add_option("--seed", vd_seed)->required();
  vd->add_option("--json", vd_json, "Write the JSON report here");

  // certify
  std::string cert_word, cert_start;
  auto* cert = app.add_subcommand("certify", "Certify a VB_2 word nontrivial via the diagram");
  cert->add_option("--word", cert_word)->required();
  cert->add_option("--start", cert_start, "Start vector 0,x,0,y (default 0,2,0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*act) {
      int n = act_n;
      if (n == 0 && act_vector != "base") n = parse_coordinates(act_vector).strands();
      const auto word = parse_word(act_text, opt_n(n));
      const auto v = resolve_vector(act_vector, word.strands());
      out << format_coordinates(act_word(v, word)) << '\n';
    } else if (*eq) {
      std::optional<int> n = opt_n(eq_n);
      if (eq_group == "vb2") n = 2;
      auto w1 = parse_word(eq_w1, n);
      auto w2 = parse_word(eq_w2, n);
      if (!n) {
        const int m = std::max(w1.strands(), w2.strands());
        w1 = parse_word(eq_w1, m);
        w2 = parse_word(eq_w2, m);
      }
      EqualityVerdict verdict;
      if (eq_group == "bn") {
        verdict = are_equal_bn(w1, w2);
      } else if (eq_group == "vb2") {
        verdict = are_equal_vb2(w1, w2);
      } else {
        verdict = distinguish_vbn(w1, w2, eq_battery, eq_seed);
      }
      out << to_string(verdict.status) << '\n' << verdict.reason << '\n';
      if (verdict.vector_witness) {
        const auto& wit = *verdict.vector_witness;
        out << "probe: " << format_coordinates(wit.probe) << '\n'
            << "w1: " << format_coordinates(wit.image1) << '\n'
            << "w2: " << format_coordinates(wit.image2) << '\n';
      }
    } else if (*perm) {
      out << format_permutation(permutation(parse_word(perm_word, opt_n(perm_n)))) << '\n';
    } else if (*reduce) {
      out << format_word(free_reduce(parse_word(reduce_word, opt_n(reduce_n)))) << '\n';
    } else if (*hunt_cmd) {
      if (!hunt_base.empty()) hc.base = parse_coordinates(hunt_base);
      for (const auto& w : hunt_inject) hc.injected.push_back(parse_word(w, hc.strands));
      hc.validate();
      const auto report = hunt::run_hunt(hc);
      write_file(hunt_out, to_json(report).dump(2) + "\n");
      if (!hunt_jsonl.empty()) write_file(hunt_jsonl, to_jsonl(report));
      out << "words tested: " << report.words_tested << '\n'
          << "base fixers: " << report.base_fixers.size() << '\n'
          << "fixing base and battery: "
          << std::count_if(report.base_fixers.begin(), report.base_fixers.end(),
                           [](const hunt::Candidate& c) { return c.passes_battery(); })
          << '\n'
          << "potential counterexamples: " << report.potential_counterexamples().size() << '\n';
      for (const auto& c : report.potential_counterexamples()) out << "  " << format_word(c.word) << '\n';
    } else if (*mf) {
      const auto word = parse_word(mf_word, opt_n(mf_n));
      const auto r = hunt::moved_fraction(word, mf_samples, mf_bound, mf_seed);
      out << std::setprecision(6) << std::fixed << r.value() << '\n';
    } else if (*vd) {
      const auto report = vb2::verify_diagram(vd_samples, vd_seed);
      for (const auto& a : report.arrows) {
        out << (a.ok() ? "PASS " : "FAIL ") << a.label << " (" << a.passed << "/" << a.samples
            << ")\n";
      }
      out << (report.closure.closed() ? "PASS " : "FAIL ") << "closure\n";
      for (const auto& m : report.closure.missing) {
        out << "  missing " << vb2::to_string(m.box) << " "
            << format_letter(Letter{m.generator, 1}) << '\n';
      }
      if (!vd_json.empty()) write_file(vd_json, to_json(report).dump(2) + "\n");
      if (!report.ok()) throw VerificationFailure("diagram verification failed");
    } else if (*cert) {
      const auto word = parse_word(cert_word, 2);
      vb2::Certificate c;
      if (cert_start.empty()) {
        c = vb2::certify_nontrivial(word);
      } else {
        const auto s = parse_coordinates(cert_start);
        if (s.strands() != 2) throw std::invalid_argument("--start must have 4 entries");
        c = vb2::certify_nontrivial(word, s.quad(1));
      }
      out << vb2::to_string(c.status) << '\n'
          << "image: " << c.image.a.get_str() << ',' << c.image.b.get_str() << ','
          << c.image.c.get_str() << ',' << c.image.d.get_str() << '\n'
          << "path: " << path_text(c.path) << '\n'
          << "norms:";
      for (const auto& x : c.norms) out << ' ' << x.get_str();
      out << '\n';
      if (c.status == vb2::CertStatus::TheoremViolation) {
        throw VerificationFailure(c.message);
      }
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace vbraid::cli
