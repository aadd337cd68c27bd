#include "symfunc_text.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "parthom/json.hpp"

namespace parthom::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymFunc parse() {
    std::optional<SymFunc> total;
    bool negative = false;
    skip_space();
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    while (true) {
      SymFunc t = term();
      if (negative) t *= Rational(-1);
      if (!total) {
        total = std::move(t);
      } else {
        *total += t;
      }
      skip_space();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return *total;
  }

 private:
  SymFunc term() {
    skip_space();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      skip_space();
      if (peek() != '*') return SymFunc::term(Basis::p, IntPartition(), coeff);
      take();
      skip_space();
    }
    const char b = take();
    const Basis basis = parse_basis(std::string_view(&b, 1));
    skip_space();
    if (take() != '(') fail("expected '(' after basis letter");
    const auto close = text_.find(')', pos_);
    if (close == std::string_view::npos) fail("missing ')'");
    const IntPartition lambda = parse_partition(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return SymFunc::term(basis, lambda, coeff);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() {
    if (at_end()) fail("unexpected end of input");
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse symmetric function '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPartition parse_partition(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string tok(text.substr(start, comma - start));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
    start = comma + 1;
  }
  return IntPartition::from_unsorted(std::move(parts));
}

SymFunc parse_symfunc(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw std::invalid_argument("empty symmetric function");
  if (text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    return symfunc_from_json(j);
  }
  if (text.substr(first) == "0") return SymFunc::zero();
  return Parser(text).parse();
}

}  // namespace parthom::cli
