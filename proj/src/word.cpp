#include "vbraid/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace vbraid {

namespace {

void check_letter(int strands, const Letter& l) {
  if (l.index < 1 || l.index > strands - 1) {
    throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                " out of range for " + std::to_string(strands) +
                                " strands");
  }
}

// Exponent expansion is capped so a typo cannot allocate gigabytes.
constexpr long long kMaxExponent = 10'000'000;

struct Token {
  LetterKind kind;
  int index;
  long long exponent;
};

Token parse_token(std::string_view tok, std::size_t pos) {
  Token t{};
  switch (tok.front()) {
    case 's': t.kind = LetterKind::SigmaPositive; break;
    case 'S': t.kind = LetterKind::SigmaNegative; break;
    case 'r': t.kind = LetterKind::Rho; break;
    default:
      throw ParseError(pos, "unknown generator '" + std::string(1, tok.front()) +
                                "' in token '" + std::string(tok) + "'");
  }
  std::string_view rest = tok.substr(1);
  const auto caret = rest.find('^');
  std::string_view index_text = rest.substr(0, caret);
  if (index_text.empty() ||
      !std::all_of(index_text.begin(), index_text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(pos, "malformed index in token '" + std::string(tok) + "'");
  }
  auto [iptr, iec] = std::from_chars(index_text.data(),
                                     index_text.data() + index_text.size(), t.index);
  if (iec != std::errc{} || iptr != index_text.data() + index_text.size()) {
    throw ParseError(pos, "index too large in token '" + std::string(tok) + "'");
  }
  if (t.index == 0) {
    throw ParseError(pos, "index 0 in token '" + std::string(tok) + "'");
  }

  t.exponent = 1;
  if (caret != std::string_view::npos) {
    std::string_view exp_text = rest.substr(caret + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [eptr, eec] = std::from_chars(exp_text.data(),
                                       exp_text.data() + exp_text.size(), t.exponent);
    if (exp_text.empty() || eec != std::errc{} ||
        eptr != exp_text.data() + exp_text.size()) {
      throw ParseError(pos, "non-integer exponent in token '" + std::string(tok) + "'");
    }
    if (t.exponent > kMaxExponent || t.exponent < -kMaxExponent) {
      throw ParseError(pos, "exponent out of range in token '" + std::string(tok) + "'");
    }
  }
  return t;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) {
    throw std::invalid_argument("a braid word needs at least 2 strands");
  }
  for (const auto& l : letters_) check_letter(strands_, l);
}

bool BraidWord::has_rho() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return !l.is_sigma(); });
}

void BraidWord::push_back(Letter l) {
  check_letter(strands_, l);
  letters_.push_back(l);
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands_ != strands_) {
    throw std::invalid_argument("cannot concatenate words on different strand counts");
  }
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(out));
}

ParseError::ParseError(std::size_t token, const std::string& what)
    : std::runtime_error("token " + std::to_string(token) + ": " + what), token_(token) {}

BraidWord parse_word(std::string_view text, std::optional<int> strands) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    tokens.push_back(parse_token(text.substr(i, j - i), pos++));
    i = j;
  }

  int n = 2;
  if (strands) {
    if (*strands < 2) throw std::invalid_argument("strand count must be at least 2");
    n = *strands;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (tokens[k].index >= n) {
        throw ParseError(k, "index " + std::to_string(tokens[k].index) +
                                " requires more than " + std::to_string(n) + " strands");
      }
    }
  } else {
    for (const auto& t : tokens) n = std::max(n, t.index + 1);
  }

  std::vector<Letter> letters;
  for (const auto& t : tokens) {
    if (t.kind == LetterKind::Rho) {
      if (t.exponent % 2 != 0) letters.push_back(Letter::rho(t.index));
      continue;
    }
    Letter l{t.kind, t.index};
    if (t.exponent < 0) l = l.inverse();
    letters.insert(letters.end(), static_cast<std::size_t>(std::llabs(t.exponent)), l);
  }
  return BraidWord(n, std::move(letters));
}

std::string format_letter(const Letter& l) {
  char c = 's';
  if (l.kind == LetterKind::SigmaNegative) c = 'S';
  if (l.kind == LetterKind::Rho) c = 'r';
  return c + std::to_string(l.index);
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  // Stack-based: a single left-to-right pass reaches the fully reduced form.
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::vector<BraidWord> defining_relators(int strands, bool with_rho) {
  if (strands < 2) throw std::invalid_argument("relators need at least 2 strands");
  using L = Letter;
  std::vector<BraidWord> out;
  auto add = [&](std::vector<Letter> letters) { out.emplace_back(strands, std::move(letters)); };
  for (int i = 1; i < strands; ++i) {
    if (i + 1 < strands) {
      add({L::sigma(i), L::sigma(i + 1), L::sigma(i), L::sigma_inv(i + 1), L::sigma_inv(i),
           L::sigma_inv(i + 1)});
    }
    for (int j = i + 2; j < strands; ++j) {
      add({L::sigma(i), L::sigma(j), L::sigma_inv(i), L::sigma_inv(j)});
    }
  }
  if (!with_rho) return out;
  for (int i = 1; i < strands; ++i) {
    add({L::rho(i), L::rho(i)});
    if (i + 1 < strands) {
      add({L::rho(i), L::rho(i + 1), L::rho(i), L::rho(i + 1), L::rho(i), L::rho(i + 1)});
      add({L::rho(i), L::rho(i + 1), L::sigma(i), L::rho(i + 1), L::rho(i), L::sigma_inv(i + 1)});
      add({L::rho(i + 1), L::rho(i), L::sigma(i + 1), L::rho(i), L::rho(i + 1), L::sigma_inv(i)});
    }
    for (int j = i + 2; j < strands; ++j) {
      add({L::rho(i), L::rho(j), L::rho(i), L::rho(j)});
      add({L::sigma(i), L::rho(j), L::sigma_inv(i), L::rho(j)});
      add({L::rho(i), L::sigma(j), L::rho(i), L::sigma_inv(j)});
    }
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord random_reduced_word(int strands, std::size_t length, Rng& rng) {
  if (strands < 2) throw std::invalid_argument("strand count must be at least 2");
  // Alphabet code 3*(i-1) + kind.
  const int alphabet = 3 * (strands - 1);
  auto decode = [](int code) {
    return Letter{static_cast<LetterKind>(code % 3), code / 3 + 1};
  };
  auto encode = [](const Letter& l) {
    return 3 * (l.index - 1) + static_cast<int>(l.kind);
  };

  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (letters.empty()) {
      std::uniform_int_distribution<int> pick(0, alphabet - 1);
      letters.push_back(decode(pick(rng)));
      continue;
    }
    const int forbidden = encode(letters.back().inverse());
    std::uniform_int_distribution<int> pick(0, alphabet - 2);
    int code = pick(rng);
    if (code >= forbidden) ++code;
    letters.push_back(decode(code));
  }
  return BraidWord(strands, std::move(letters));
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p.images[static_cast<std::size_t>(k)] = k + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (const auto& l : w.letters()) {
    std::swap(p.images[static_cast<std::size_t>(l.index - 1)],
              p.images[static_cast<std::size_t>(l.index)]);
  }
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.images.size(); ++k) {
    if (k) os << ' ';
    os << p.images[k];
  }
  return os.str();
}

}  // namespace vbraid
