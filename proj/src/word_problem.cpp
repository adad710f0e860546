#include "vbraid/word_problem.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace vbraid {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: break;
  }
  return "Unknown";
}

namespace {

void require_same_strands(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) {
    throw std::invalid_argument("words have different strand counts (" +
                                std::to_string(w1.strands()) + " vs " +
                                std::to_string(w2.strands()) + ")");
  }
}

// Compares the images of `probe`; fills a Distinct verdict when they differ.
std::optional<EqualityVerdict> compare_on(const Coordinates& probe, const BraidWord& w1,
                                          const BraidWord& w2) {
  auto image1 = act_word(probe, w1);
  auto image2 = act_word(probe, w2);
  if (image1 == image2) return std::nullopt;
  EqualityVerdict v;
  v.status = Verdict::Distinct;
  v.reason = "vector " + format_coordinates(probe) + " maps to " +
             format_coordinates(image1) + " vs " + format_coordinates(image2);
  v.vector_witness = VectorWitness{probe, std::move(image1), std::move(image2)};
  return v;
}

EqualityVerdict equal_by(std::string reason) {
  return EqualityVerdict{Verdict::Equal, std::move(reason), std::nullopt, std::nullopt};
}

}  // namespace

bool witness_holds(const EqualityVerdict& v, const BraidWord& w1, const BraidWord& w2) {
  if (v.status != Verdict::Distinct) return false;
  if (v.vector_witness) {
    const auto& wit = *v.vector_witness;
    auto i1 = act_word(wit.probe, w1);
    auto i2 = act_word(wit.probe, w2);
    return i1 == wit.image1 && i2 == wit.image2 && i1 != i2;
  }
  if (v.permutation_witness) {
    const auto& [p1, p2] = *v.permutation_witness;
    return permutation(w1) == p1 && permutation(w2) == p2 && p1 != p2;
  }
  return false;
}

EqualityVerdict are_equal_bn(const BraidWord& w1, const BraidWord& w2) {
  require_same_strands(w1, w2);
  if (w1.has_rho() || w2.has_rho()) {
    throw std::invalid_argument("classical braid words may not contain rho letters");
  }
  if (auto d = compare_on(base_vector(w1.strands()), w1, w2)) return *d;
  return equal_by("Dynnikov coordinates agree (faithful on B_n)");
}

EqualityVerdict are_equal_vb2(const BraidWord& w1, const BraidWord& w2) {
  return are_equal_vb2(w1, w2, Coordinates(2, {0, 2, 0, 1}));
}

EqualityVerdict are_equal_vb2(const BraidWord& w1, const BraidWord& w2,
                              const Coordinates& start) {
  if (w1.strands() != 2 || w2.strands() != 2) {
    throw std::invalid_argument("VB_2 comparison requires words on 2 strands");
  }
  const auto& e = start.entries();
  if (start.strands() != 2 || e[0] != 0 || e[2] != 0 || e[1] <= 0 || e[3] <= 0 ||
      e[1] == e[3]) {
    throw std::invalid_argument("VB_2 start vector must be (0,x,0,y) with x != y positive");
  }
  if (auto d = compare_on(start, w1, w2)) return *d;
  return equal_by("images of " + format_coordinates(start) + " agree (VB_2 action is faithful)");
}

EqualityVerdict distinguish_vbn(const BraidWord& w1, const BraidWord& w2, int battery,
                                std::uint64_t seed) {
  require_same_strands(w1, w2);
  const int n = w1.strands();
  if (n == 2) return are_equal_vb2(w1, w2);

  if (free_reduce(w1) == free_reduce(w2)) {
    return equal_by("freely reduced words are letter-identical");
  }

  auto p1 = permutation(w1);
  auto p2 = permutation(w2);
  if (p1 != p2) {
    EqualityVerdict v;
    v.status = Verdict::Distinct;
    v.reason = "permutation images differ: [" + format_permutation(p1) + "] vs [" +
               format_permutation(p2) + "]";
    v.permutation_witness = std::make_pair(std::move(p1), std::move(p2));
    return v;
  }

  if (auto d = compare_on(base_vector(n), w1, w2)) return *d;

  // Battery: fast int64 evaluation, exact re-evaluation for the witness.
  std::vector<std::int64_t> probe(2 * static_cast<std::size_t>(n));
  std::vector<std::int64_t> x1(probe.size()), x2(probe.size());
  std::uniform_int_distribution<std::int64_t> coeff(-kBatteryBound, kBatteryBound);
  for (int k = 0; k < battery; ++k) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(k));
    for (auto& x : probe) x = coeff(rng);
    x1 = probe;
    x2 = probe;
    const bool fast = act_word_fast(x1, w1) && act_word_fast(x2, w2);
    if (fast && x1 == x2) continue;
    if (auto d = compare_on(Coordinates::from_int64(probe), w1, w2)) {
      d->reason += " (battery vector " + std::to_string(k) + ")";
      return *d;
    }
  }
  return EqualityVerdict{Verdict::Unknown,
                         "no distinguishing vector found among base vector and " +
                             std::to_string(battery) + " battery vectors",
                         std::nullopt, std::nullopt};
}

namespace {

using Code = std::uint16_t;
using CodeWord = std::vector<Code>;

Code encode(const Letter& l) {
  return static_cast<Code>(3 * (l.index - 1) + static_cast<int>(l.kind));
}

Code inverse_code(Code c) {
  switch (c % 3) {
    case 0: return static_cast<Code>(c + 1);
    case 1: return static_cast<Code>(c - 1);
    default: return c;
  }
}

CodeWord inverse_codes(const CodeWord& w) {
  CodeWord out(w.rbegin(), w.rend());
  for (auto& c : out) c = inverse_code(c);
  return out;
}

// Freely and cyclically reduced, rotated to its lexicographically least form,
// so conjugate words share one representative.
CodeWord cyclic_normal_form(const CodeWord& w) {
  CodeWord stack;
  for (Code c : w) {
    if (!stack.empty() && stack.back() == inverse_code(c)) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[hi - 1] == inverse_code(stack[lo])) {
    ++lo;
    --hi;
  }
  CodeWord core(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                stack.begin() + static_cast<std::ptrdiff_t>(hi));
  CodeWord best = core;
  CodeWord rot(core.size());
  for (std::size_t r = 1; r < core.size(); ++r) {
    std::rotate_copy(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r), core.end(),
                     rot.begin());
    if (rot < best) best = rot;
  }
  return best;
}

struct Rule {
  CodeWord piece;
  CodeWord replacement;
};

// Every cyclic rotation of every relator and its inverse, split as u v with
// |u| >= |v|; u may then be replaced by v^-1.
std::vector<Rule> rewrite_rules(int strands) {
  std::set<CodeWord> variants;
  for (const auto& r : defining_relators(strands)) {
    CodeWord w;
    for (const auto& l : r.letters()) w.push_back(encode(l));
    for (const auto& base : {w, inverse_codes(w)}) {
      CodeWord rot = base;
      for (std::size_t k = 0; k < base.size(); ++k) {
        variants.insert(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
    }
  }
  std::vector<Rule> rules;
  for (const auto& v : variants) {
    for (std::size_t k = (v.size() + 1) / 2; k <= v.size(); ++k) {
      CodeWord tail(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
      rules.push_back({CodeWord(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)),
                       inverse_codes(tail)});
    }
  }
  return rules;
}

}  // namespace

bool derives_identity(const BraidWord& w, std::size_t max_states) {
  CodeWord start;
  for (const auto& l : w.letters()) start.push_back(encode(l));
  start = cyclic_normal_form(start);
  if (start.empty()) return true;
  const auto rules = rewrite_rules(w.strands());

  // Shortest words first; ties in discovery order.
  using Entry = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<CodeWord> states{start};
  std::set<CodeWord> seen{start};
  queue.push({start.size(), 0});
  CodeWord rotated, next;
  while (!queue.empty()) {
    const CodeWord cur = states[queue.top().second];
    queue.pop();
    const std::size_t len = cur.size();
    rotated.resize(len);
    for (std::size_t r = 0; r < len; ++r) {
      std::rotate_copy(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(r), cur.end(),
                       rotated.begin());
      for (const auto& rule : rules) {
        if (rule.piece.size() > len ||
            !std::equal(rule.piece.begin(), rule.piece.end(), rotated.begin())) {
          continue;
        }
        next = rule.replacement;
        next.insert(next.end(), rotated.begin() + static_cast<std::ptrdiff_t>(rule.piece.size()),
                    rotated.end());
        next = cyclic_normal_form(next);
        if (next.empty()) return true;
        if (seen.size() >= max_states || !seen.insert(next).second) continue;
        states.push_back(next);
        queue.push({next.size(), states.size() - 1});
      }
    }
  }
  return false;
}

}  // namespace vbraid
