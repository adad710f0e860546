#include "vbraid/vb2_cert.hpp"

#include <stdexcept>

namespace vbraid::vb2 {

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Zero: return "0";
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::PlusZero: return "+0";
    case Sign::MinusZero: return "-0";
  }
  return "?";
}

bool SignPattern::matches(const Quad& q) const {
  return sign_contains(symbols[0], q.a) && sign_contains(symbols[1], q.b) &&
         sign_contains(symbols[2], q.c) && sign_contains(symbols[3], q.d);
}

std::string SignPattern::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ',';
    out += to_string(symbols[k]);
  }
  return out + ")";
}

namespace {

using enum Sign;

constexpr std::array<SignPattern, 9> kPatterns = {{
    {{Zero, Plus, Zero, Plus}},            // B1
    {{Plus, Zero, Zero, Plus}},            // B2
    {{Minus, Zero, Zero, Plus}},           // B3
    {{Zero, Plus, Plus, Zero}},            // B4
    {{Zero, Plus, Minus, Zero}},           // B5
    {{Minus, Minus, PlusZero, Plus}},      // B6
    {{Plus, Minus, MinusZero, Plus}},      // B7
    {{PlusZero, Plus, Minus, Minus}},      // B8
    {{MinusZero, Plus, Plus, Minus}},      // B9
}};

constexpr auto S = LetterKind::SigmaPositive;
constexpr auto Si = LetterKind::SigmaNegative;
constexpr auto R = LetterKind::Rho;

Quad rho_map(const Quad& q) { return {q.c, q.d, q.a, q.b}; }

// Closed forms valid on the source box of each numbered arrow.
const std::vector<Arrow> kArrows = {
    {1, Box::B1, Si, Box::B3, [](const Quad& q) -> Quad { return {-q.b, 0, 0, q.b + q.d}; }},
    {2, Box::B1, S, Box::B2, [](const Quad& q) -> Quad { return {q.b, 0, 0, q.b + q.d}; }},
    {3, Box::B3, Si, Box::B6, [](const Quad& q) -> Quad { return {q.a, q.a, 0, q.d - q.a}; }},
    {4, Box::B2, S, Box::B7, [](const Quad& q) -> Quad { return {q.a, -q.a, 0, q.a + q.d}; }},
    {5, Box::B5, Si, Box::B3, [](const Quad& q) -> Quad { return {q.c - q.b, 0, 0, q.b}; }},
    {6, Box::B4, S, Box::B2, [](const Quad& q) -> Quad { return {q.b + q.c, 0, 0, q.b}; }},
    {7, Box::B5, S, Box::B7, [](const Quad& q) -> Quad { return {q.b, q.c, q.c, q.b - q.c}; }},
    {8, Box::B4, Si, Box::B6, [](const Quad& q) -> Quad { return {-q.b, -q.c, q.c, q.b + q.c}; }},
    {9, Box::B6, Si, Box::B6,
     [](const Quad& q) -> Quad { return {q.a, q.a + q.b - q.c, q.c, q.c + q.d - q.a}; }},
    {10, Box::B8, Si, Box::B6,
     [](const Quad& q) -> Quad { return {q.c - q.b, q.d, q.a - q.d, q.b}; }},
    {11, Box::B8, S, Box::B7,
     [](const Quad& q) -> Quad { return {q.a + q.b, q.d - q.a + q.c, q.c + q.d, q.b + q.a - q.c}; }},
    {12, Box::B7, S, Box::B7,
     [](const Quad& q) -> Quad { return {q.a, q.b + q.c - q.a, q.c, q.a - q.c + q.d}; }},
    {13, Box::B9, S, Box::B7, [](const Quad& q) -> Quad { return {q.b + q.c, q.d, q.d + q.a, q.b}; }},
    {14, Box::B9, Si, Box::B6,
     [](const Quad& q) -> Quad { return {q.a - q.b, q.d + q.a - q.c, q.c - q.d, q.b - q.a + q.c}; }},
    // rho arrows, oriented as drawn; reduced words never need the reverse
    // direction because B4, B5, B8, B9 are entered only through rho.
    {0, Box::B1, R, Box::B1, rho_map},
    {0, Box::B2, R, Box::B4, rho_map},
    {0, Box::B3, R, Box::B5, rho_map},
    {0, Box::B6, R, Box::B8, rho_map},
    {0, Box::B7, R, Box::B9, rho_map},
};

std::string generator_name(LetterKind g) {
  switch (g) {
    case LetterKind::SigmaPositive: return "sigma";
    case LetterKind::SigmaNegative: return "sigma^-1";
    case LetterKind::Rho: break;
  }
  return "rho";
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

const SignPattern& pattern(Box b) { return kPatterns[static_cast<std::size_t>(b)]; }

std::string to_string(Box b) { return "B" + std::to_string(static_cast<int>(b) + 1); }

std::vector<Box> classify(const Quad& q) {
  std::vector<Box> out;
  for (auto b : kAllBoxes) {
    if (pattern(b).matches(q)) out.push_back(b);
  }
  return out;
}

std::string Arrow::label() const {
  if (generator == LetterKind::Rho) {
    return "rho " + to_string(source) + "->" + to_string(target);
  }
  return std::to_string(case_number) + "." + generator_name(generator);
}

const std::vector<Arrow>& arrow_table() { return kArrows; }

const Arrow* find_arrow(Box source, LetterKind g) {
  for (const auto& a : kArrows) {
    if (a.source == source && a.generator == g) return &a;
  }
  return nullptr;
}

BigInt l1_norm(const Quad& q) {
  return abs_big(q.a) + abs_big(q.b) + abs_big(q.c) + abs_big(q.d);
}

Quad sample_region(const SignPattern& p, Rng& rng) {
  std::uniform_int_distribution<int> quarter(0, 3);
  std::uniform_int_distribution<long> big(1, 1'000'000);
  auto magnitude = [&]() -> long { return quarter(rng) == 0 ? 1 : big(rng); };
  auto draw = [&](Sign s) -> BigInt {
    switch (s) {
      case Sign::Zero: return 0;
      case Sign::Plus: return magnitude();
      case Sign::Minus: return -magnitude();
      case Sign::PlusZero: return quarter(rng) == 0 ? 0 : magnitude();
      case Sign::MinusZero: return quarter(rng) == 0 ? 0 : -magnitude();
    }
    return 0;
  };
  Quad q;
  q.a = draw(p.symbols[0]);
  q.b = draw(p.symbols[1]);
  q.c = draw(p.symbols[2]);
  q.d = draw(p.symbols[3]);
  return q;
}

ArrowReport verify_arrow(const Arrow& arrow, std::int64_t samples, Rng& rng) {
  ArrowReport r;
  r.label = arrow.label();
  const auto& src = pattern(arrow.source);
  const auto& dst = pattern(arrow.target);
  for (std::int64_t k = 0; k < samples; ++k) {
    const Quad q = sample_region(src, rng);
    const Quad general = act_quad(q, arrow.generator);
    const Quad closed = arrow.closed_form(q);
    bool good = true;
    if (general != closed) {
      ++r.closed_form_mismatches;
      good = false;
    }
    if (!dst.matches(general)) {
      ++r.target_misses;
      good = false;
    }
    if (general.b + general.d != q.b + q.d) {
      ++r.even_sum_failures;
      good = false;
    }
    const BigInt before = l1_norm(q);
    const BigInt after = l1_norm(general);
    const bool norm_ok =
        arrow.generator == LetterKind::Rho ? after == before : after > before;
    if (!norm_ok) {
      ++r.norm_failures;
      good = false;
    }
    ++r.samples;
    if (good) {
      ++r.passed;
    } else if (!r.counterexample) {
      r.counterexample = q;
    }
  }
  return r;
}

ClosureReport verify_closure() {
  ClosureReport report;
  auto require = [&](Box box, LetterKind g) {
    if (find_arrow(box, g)) return;
    for (const auto& m : report.missing) {
      if (m.box == box && m.generator == g) return;
    }
    report.missing.push_back({box, g});
  };
  for (auto g : {S, Si, R}) require(Box::B1, g);
  for (const auto& a : kArrows) {
    const Letter incoming{a.generator, 1};
    for (auto g : {S, Si, R}) {
      if (cancels(incoming, Letter{g, 1})) continue;
      require(a.target, g);
    }
  }
  return report;
}

bool DiagramReport::ok() const {
  for (const auto& a : arrows) {
    if (!a.ok()) return false;
  }
  return closure.closed();
}

DiagramReport verify_diagram(std::int64_t samples_per_arrow, std::uint64_t seed) {
  const auto& table = arrow_table();
  DiagramReport report;
  report.arrows.resize(table.size());
  const int count = static_cast<int>(table.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(k));
    report.arrows[static_cast<std::size_t>(k)] =
        verify_arrow(table[static_cast<std::size_t>(k)], samples_per_arrow, rng);
  }
  report.closure = verify_closure();
  return report;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Trivial: return "trivial";
    case CertStatus::Nontrivial: return "nontrivial";
    case CertStatus::TheoremViolation: break;
  }
  return "theorem-violation";
}

Certificate certify_nontrivial(const BraidWord& w) {
  return certify_nontrivial(w, Quad{0, 2, 0, 1});
}

Certificate certify_nontrivial(const BraidWord& w, const Quad& start) {
  if (w.strands() != 2) throw std::invalid_argument("certification requires a VB_2 word");
  if (start.a != 0 || start.c != 0 || start.b <= 0 || start.d <= 0 || start.b == start.d) {
    throw std::invalid_argument("start vector must be (0,x,0,y) with x != y positive");
  }
  Certificate cert;
  cert.reduced = free_reduce(w);
  cert.start = start;
  cert.image = start;
  cert.path.push_back(Box::B1);
  cert.norms.push_back(l1_norm(start));
  if (cert.reduced.empty()) {
    cert.status = CertStatus::Trivial;
    cert.message = "word freely reduces to the identity";
    return cert;
  }

  auto violation = [&](std::size_t step, const std::string& what) {
    cert.status = CertStatus::TheoremViolation;
    cert.message = "step " + std::to_string(step + 1) + ": " + what;
    return cert;
  };

  Quad q = start;
  Box box = Box::B1;
  const auto& letters = cert.reduced.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Arrow* arrow = find_arrow(box, letters[k].kind);
    if (!arrow) {
      return violation(k, "no arrow from " + to_string(box) + " labelled " +
                              generator_name(letters[k].kind));
    }
    const Quad next = act_quad(q, letters[k].kind);
    if (!pattern(arrow->target).matches(next)) {
      return violation(k, "image leaves box " + to_string(arrow->target));
    }
    BigInt norm = l1_norm(next);
    const bool norm_ok =
        letters[k].is_sigma() ? norm > cert.norms.back() : norm == cert.norms.back();
    if (!norm_ok) return violation(k, "norm is not monotone along arrow " + arrow->label());
    q = next;
    box = arrow->target;
    cert.image = q;
    cert.path.push_back(box);
    cert.norms.push_back(std::move(norm));
  }
  if (q == start) return violation(letters.size() - 1, "reduced word fixes the start vector");
  cert.status = CertStatus::Nontrivial;
  cert.message = "image differs from start vector";
  return cert;
}

}  // namespace vbraid::vb2
