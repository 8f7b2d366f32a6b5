#include "largeness/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "largeness/error.hpp"

namespace largeness {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::UnknownGenerator: return "E_UNKNOWN_GEN";
    case ErrorCode::DuplicateGenerator: return "E_DUP_GEN";
    case ErrorCode::EmptyRelator: return "E_EMPTY_RELATOR";
    case ErrorCode::EmptyWord: return "E_EMPTY_WORD";
    case ErrorCode::MissingImage: return "E_MISSING_IMAGE";
    case ErrorCode::DimensionMismatch: return "E_DIM_MISMATCH";
    case ErrorCode::InvalidZMap: return "E_INVALID_ZMAP";
    case ErrorCode::NonzeroTSum: return "E_NONZERO_T_SUM";
    case ErrorCode::WrongDeficiency: return "E_WRONG_DEFICIENCY";
    case ErrorCode::InfiniteAbelianisation: return "E_INFINITE_ABELIANISATION";
    case ErrorCode::BadSampleSpec: return "E_BAD_SPEC";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) add(n);
}

std::size_t Alphabet::add(std::string name) {
  if (!is_identifier(name))
    throw Error(ErrorCode::Parse, "invalid generator name '" + name + "'");
  if (find(name) != size())
    throw Error(ErrorCode::DuplicateGenerator, "duplicate generator '" + name + "'");
  gens_.push_back({gens_.size(), std::move(name)});
  return gens_.size() - 1;
}

std::size_t Alphabet::find(std::string_view name) const {
  auto it = std::find_if(gens_.begin(), gens_.end(),
                         [&](const GeneratorId& g) { return g.name == name; });
  return static_cast<std::size_t>(it - gens_.begin());
}

Word free_reduce(std::span<const Letter> raw) {
  Word out;
  auto& stack = out.letters_;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return free_reduce(inv);
}

Word& Word::operator*=(const Word& rhs) {
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  *this = free_reduce(raw);
  return *this;
}

namespace {

// Length of the conjugating prefix c in w = c v c^-1 with v cyclically reduced.
std::size_t conjugator_length(std::span<const Letter> w) {
  std::size_t n = w.size();
  std::size_t len = 0;
  while (2 * (len + 1) < n + 1 && w[len] == w[n - 1 - len].inverse()) ++len;
  return len;
}

}  // namespace

Word Word::pow(std::int64_t k) const {
  if (k == 0 || empty()) return {};
  const Word& base = k > 0 ? *this : inverse();
  auto reps = static_cast<std::uint64_t>(k > 0 ? k : -k);
  std::size_t c = conjugator_length(base.letters_);
  std::span<const Letter> all = base.letters_;
  auto core = all.subspan(c, all.size() - 2 * c);
  std::vector<Letter> raw(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(c));
  raw.reserve(2 * c + core.size() * reps);
  for (std::uint64_t i = 0; i < reps; ++i) raw.insert(raw.end(), core.begin(), core.end());
  raw.insert(raw.end(), all.end() - static_cast<std::ptrdiff_t>(c), all.end());
  return free_reduce(raw);
}

PowerRelator minimal_root(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "minimal root of the empty word");
  auto all = w.letters();
  std::size_t c = conjugator_length(all);
  auto core = all.subspan(c, all.size() - 2 * c);

  // Smallest period of the cyclically reduced core (KMP failure function).
  std::size_t n = core.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(core[i] == core[k])) k = fail[k];
    if (core[i] == core[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t period = n - fail[n];
  if (n % period != 0) period = n;

  std::vector<Letter> raw(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(c));
  raw.insert(raw.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(period));
  raw.insert(raw.end(), all.end() - static_cast<std::ptrdiff_t>(c), all.end());
  return {free_reduce(raw), n / period};
}

PowerRelator PowerRelator::make(const Word& w, std::uint64_t power) {
  PowerRelator r = minimal_root(w);
  if (power != 0 && r.power > std::numeric_limits<std::uint64_t>::max() / power)
    throw Error(ErrorCode::Parse, "relator power overflows 64 bits");
  r.power *= power;
  return r;
}

Word PowerRelator::full() const { return root.pow(static_cast<std::int64_t>(power)); }

std::vector<Integer> exponent_vector(const Word& w, std::size_t d) {
  std::vector<Integer> v(d, 0);
  for (const Letter& l : w.letters()) {
    if (l.gen >= d)
      throw Error(ErrorCode::DimensionMismatch, "letter outside the generator range");
    v[l.gen] += l.sign;
  }
  return v;
}

std::vector<Letter> substitute_letters(const Word& w, const Substitution& images) {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end())
      throw Error(ErrorCode::MissingImage,
                  "no image for generator #" + std::to_string(l.gen));
    auto img = it->second.letters();
    if (l.sign > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto r = img.rbegin(); r != img.rend(); ++r) raw.push_back(r->inverse());
    }
  }
  return raw;
}

Word substitute(const Word& w, const Substitution& images) {
  return free_reduce(substitute_letters(w, images));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long run = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet.name(letters[i].gen);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace largeness
