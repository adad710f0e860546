#include "vbraid/dynnikov.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace vbraid {

Quad act_quad_sigma(const Quad& q) { return kernel::sigma(q.a, q.b, q.c, q.d); }

Quad act_quad_sigma_inv(const Quad& q) { return kernel::sigma_inv(q.a, q.b, q.c, q.d); }

Quad act_quad_rho(const Quad& q) { return {q.c, q.d, q.a, q.b}; }

Quad act_quad(const Quad& q, LetterKind kind) {
  switch (kind) {
    case LetterKind::SigmaPositive: return act_quad_sigma(q);
    case LetterKind::SigmaNegative: return act_quad_sigma_inv(q);
    case LetterKind::Rho: break;
  }
  return act_quad_rho(q);
}

Coordinates::Coordinates(int strands, std::vector<BigInt> entries)
    : strands_(strands), entries_(std::move(entries)) {
  if (strands_ < 2) throw std::invalid_argument("coordinates need at least 2 strands");
  if (entries_.size() != 2 * static_cast<std::size_t>(strands_)) {
    throw std::invalid_argument("coordinate vector must have 2 * strands entries");
  }
}

Coordinates Coordinates::from_int64(std::span<const std::int64_t> entries) {
  std::vector<BigInt> big;
  big.reserve(entries.size());
  for (auto x : entries) big.emplace_back(static_cast<long>(x));
  return Coordinates(static_cast<int>(entries.size() / 2), std::move(big));
}

Quad Coordinates::quad(int i) const {
  const auto k = 2 * static_cast<std::size_t>(i - 1);
  return {entries_[k], entries_[k + 1], entries_[k + 2], entries_[k + 3]};
}

void Coordinates::set_quad(int i, const Quad& q) {
  const auto k = 2 * static_cast<std::size_t>(i - 1);
  entries_[k] = q.a;
  entries_[k + 1] = q.b;
  entries_[k + 2] = q.c;
  entries_[k + 3] = q.d;
}

Coordinates base_vector(int strands) {
  if (strands < 2) throw std::invalid_argument("base vector needs at least 2 strands");
  std::vector<BigInt> e(2 * static_cast<std::size_t>(strands));
  for (std::size_t k = 1; k < e.size(); k += 2) e[k] = 1;
  return Coordinates(strands, std::move(e));
}

Coordinates act_generator(const Coordinates& v, const Letter& g) {
  if (g.index < 1 || g.index > v.strands() - 1) {
    throw std::invalid_argument("generator index " + std::to_string(g.index) +
                                " out of range for " + std::to_string(v.strands()) +
                                " strands");
  }
  Coordinates out = v;
  out.set_quad(g.index, act_quad(v.quad(g.index), g.kind));
  return out;
}

Coordinates act_word(const Coordinates& v, const BraidWord& w) {
  if (w.strands() != v.strands()) {
    throw std::invalid_argument("word has " + std::to_string(w.strands()) +
                                " strands but vector has " + std::to_string(v.strands()));
  }
  Coordinates out = v;
  for (const auto& g : w.letters()) {
    out.set_quad(g.index, act_quad(out.quad(g.index), g.kind));
  }
  return out;
}

BigInt even_sum(const Coordinates& v) {
  BigInt s = 0;
  for (int k = 1; k <= v.strands(); ++k) s += v.b(k);
  return s;
}

std::string format_coordinates(const Coordinates& v) {
  std::string out;
  for (const auto& x : v.entries()) {
    if (!out.empty()) out += ',';
    out += x.get_str();
  }
  return out;
}

Coordinates parse_coordinates(std::string_view csv) {
  std::vector<BigInt> entries;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string field(csv.substr(start, end - start));
    field.erase(std::remove_if(field.begin(), field.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                field.end());
    if (!field.empty() && field.front() == '+') field.erase(0, 1);
    BigInt x;
    if (field.empty() || x.set_str(field, 10) != 0) {
      throw std::invalid_argument("malformed coordinate '" + field + "'");
    }
    entries.push_back(std::move(x));
    start = end + 1;
  }
  if (entries.size() < 4 || entries.size() % 2 != 0) {
    throw std::invalid_argument("a coordinate vector needs an even number (>= 4) of entries");
  }
  const int strands = static_cast<int>(entries.size() / 2);
  return Coordinates(strands, std::move(entries));
}

namespace {

inline bool within_limit(std::int64_t x) { return x <= kFastLimit && x >= -kFastLimit; }

}  // namespace

bool act_generator_fast(std::span<std::int64_t> v, const Letter& g) {
  const auto k = 2 * static_cast<std::size_t>(g.index - 1);
  std::int64_t* p = v.data() + k;
  if (g.kind == LetterKind::Rho) {
    std::swap(p[0], p[2]);
    std::swap(p[1], p[3]);
    return true;
  }
  if (!(within_limit(p[0]) && within_limit(p[1]) && within_limit(p[2]) &&
        within_limit(p[3]))) {
    return false;
  }
  const auto q = g.kind == LetterKind::SigmaPositive
                     ? kernel::sigma<std::int64_t>(p[0], p[1], p[2], p[3])
                     : kernel::sigma_inv<std::int64_t>(p[0], p[1], p[2], p[3]);
  p[0] = q.a;
  p[1] = q.b;
  p[2] = q.c;
  p[3] = q.d;
  return true;
}

bool act_word_fast(std::span<std::int64_t> v, const BraidWord& w) {
  if (v.size() != 2 * static_cast<std::size_t>(w.strands())) {
    throw std::invalid_argument("vector length does not match word strand count");
  }
  for (const auto& g : w.letters()) {
    if (!act_generator_fast(v, g)) return false;
  }
  return true;
}

bool fixes(std::span<const std::int64_t> v, const BraidWord& w) {
  std::vector<std::int64_t> work(v.begin(), v.end());
  if (act_word_fast(work, w)) return std::equal(work.begin(), work.end(), v.begin());
  const auto start = Coordinates::from_int64(v);
  return act_word(start, w) == start;
}

}  // namespace vbraid
