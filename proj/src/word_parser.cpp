#include <cctype>
#include <limits>

#include "largeness/error.hpp"
#include "parser_detail.hpp"

namespace largeness {
namespace detail {

namespace {
constexpr std::uint64_t kMaxExpandedLength = 50'000'000;

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
}  // namespace

std::string Reader::location() const {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void Reader::fail(const std::string& what) const {
  throw Error(ErrorCode::Parse, location() + ": " + what);
}

void Reader::skip_space() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
}

bool Reader::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Reader::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Reader::accept(char c) {
  if (peek() == c) {
    ++pos_;
    return true;
  }
  return false;
}

void Reader::expect(char c) {
  if (!accept(c)) {
    char got = peek();
    fail(std::string("expected '") + c + "' but found " +
         (got == '\0' ? std::string("end of input") : "'" + std::string(1, got) + "'"));
  }
}

std::string Reader::identifier() {
  skip_space();
  if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a generator name");
  std::size_t start = pos_;
  while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

std::int64_t Reader::integer() {
  bool braced = accept('{');
  bool negative = accept('-');
  skip_space();
  if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
    fail("expected an integer exponent");
  std::uint64_t value = 0;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
    if (value > (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - digit) / 10)
      fail("exponent out of range");
    value = value * 10 + digit;
    ++pos_;
  }
  if (braced) expect('}');
  auto v = static_cast<std::int64_t>(value);
  return negative ? -v : v;
}

Word Reader::atom() {
  char c = peek();
  if (c == '(') {
    ++pos_;
    Word w = word();
    expect(')');
    return w;
  }
  if (c == '[') {
    ++pos_;
    Word u = word();
    expect(',');
    Word v = word();
    expect(']');
    return u * v * u.inverse() * v.inverse();
  }
  if (c == '1') {
    ++pos_;
    return {};
  }
  std::string name = identifier();
  std::size_t idx = alphabet_->find(name);
  if (idx == alphabet_->size())
    throw Error(ErrorCode::UnknownGenerator,
                location() + ": unknown generator '" + name + "'");
  return Word::generator(idx);
}

Factor Reader::factor() {
  Factor f{atom(), 1};
  if (accept('^')) f.exponent = integer();
  return f;
}

std::vector<Factor> Reader::factors() {
  std::vector<Factor> out;
  out.push_back(factor());
  for (;;) {
    char c = peek();
    if (c == '(' || c == '[' || c == '1' || ident_start(c))
      out.push_back(factor());
    else
      break;
  }
  return out;
}

Word expand(const std::vector<Factor>& factors) {
  Word out;
  for (const Factor& f : factors) {
    std::uint64_t reps = f.exponent < 0 ? static_cast<std::uint64_t>(-(f.exponent + 1)) + 1
                                        : static_cast<std::uint64_t>(f.exponent);
    if (!f.atom.empty() && reps > kMaxExpandedLength / f.atom.size())
      throw Error(ErrorCode::Parse, "word expansion exceeds the supported length");
    out *= f.atom.pow(f.exponent);
  }
  return out;
}

Word Reader::word() { return expand(factors()); }

}  // namespace detail

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  detail::Reader reader(text, &alphabet);
  Word w = reader.word();
  if (!reader.at_end()) reader.fail("unexpected trailing input");
  return w;
}

}  // namespace largeness
