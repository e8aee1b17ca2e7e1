#include "grpcalc/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "grpcalc/errors.hpp"

namespace grpcalc {

namespace {

// Appends `x` to a reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == x.inverse())
    out.pop_back();
  else
    out.push_back(x);
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x.sign != 1 && x.sign != -1) throw InputError("letter sign must be +1 or -1");
    push_reduced(letters_, x);
  }
}

std::size_t Word::max_generator_bound() const noexcept {
  std::size_t bound = 0;
  for (Letter x : letters_) bound = std::max<std::size_t>(bound, x.generator + 1);
  return bound;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::power(std::int64_t n) const {
  if (n < 0) return inverse().power(-n);
  Word result;
  for (std::int64_t i = 0; i < n; ++i) result = result * *this;
  return result;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  for (Letter x : v.letters_) push_reduced(w.letters_, x);
  return w;
}

bool ShortLex::operator()(const Word& a, const Word& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  auto la = a.letters();
  auto lb = b.letters();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word concat(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& w) { return w.inverse(); }

CyclicReduction cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core = Word(letters.subspan(lo, hi - lo));
  r.conjugator = Word(letters.subspan(0, lo));
  return r;
}

std::size_t word_length(const Word& w) { return w.size(); }

std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).core.size(); }

std::int64_t exponent_sum(const Word& w, std::uint32_t g) {
  std::int64_t s = 0;
  for (Letter x : w.letters())
    if (x.generator == g) s += x.sign;
  return s;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  if (names_.empty()) throw InputError("a presentation needs at least one generator");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
  for (auto& r : relators) {
    if (r.max_generator_bound() > names_.size())
      throw InputError("relator references an undeclared generator");
    Word core = cyclic_reduce(r).core;
    if (!core.empty()) relators_.push_back(std::move(core));
  }
}

std::optional<std::uint32_t> Presentation::find(std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

NormalGeneratorSpec default_normal_generators(const Presentation& p) {
  NormalGeneratorSpec spec;
  for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
    std::uint64_t order = 0;
    for (const Word& r : p.relators()) {
      bool pure = std::all_of(r.letters().begin(), r.letters().end(),
                              [&](Letter x) { return x.generator == g; });
      if (!pure) continue;
      std::uint64_t n = r.size();  // reduced, so all letters share one sign
      order = order == 0 ? n : std::min(order, n);
    }
    spec.elements.push_back(Word::generator(g));
    spec.orders.push_back(order == 0 ? Order::infinite() : Order::finite(order));
  }
  return spec;
}

// ----------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { name, integer, punct, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        t.type = Tok::end;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        t.type = Tok::name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        t.type = Tok::integer;
        t.text += advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          t.text += advance();
      } else if (std::string_view(":;,*^()[]").find(c) != std::string_view::npos) {
        t.type = Tok::punct;
        t.text += advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<ParseWarning>* warnings)
      : tokens_(Lexer(text).run()), warnings_(warnings) {}

  Presentation presentation() {
    expect_keyword("gens");
    expect(":");
    if (peek().type != Tok::name) fail("empty generator list");
    std::vector<std::string> names;
    while (true) {
      const Token& t = next();
      if (t.type != Tok::name) fail_at(t, "expected generator name");
      if (std::find(names.begin(), names.end(), t.text) != names.end())
        fail_at(t, "duplicate generator '" + t.text + "'");
      names.push_back(t.text);
      if (!accept(",")) break;
    }
    expect(";");
    names_ = &names;

    expect_keyword("rels");
    expect(":");
    std::vector<Word> relators;
    if (!is_punct(peek(), ";")) {
      while (true) {
        const Token start = peek();
        Word w = word();
        CyclicReduction cr = cyclic_reduce(w);
        if (cr.core.empty()) {
          warn(start, "relator reduces to the empty word and is dropped");
        } else {
          if (!cr.conjugator.empty())
            warn(start, "relator is not cyclically reduced; the conjugator is discarded");
          relators.push_back(std::move(cr.core));
        }
        if (!accept(",")) break;
      }
    }
    expect(";");
    expect_end();
    return Presentation(std::move(names), std::move(relators));
  }

  void bind(const std::vector<std::string>& names) { names_ = &names; }

  std::vector<Word> word_list() {
    std::vector<Word> out;
    if (peek().type == Tok::end) return out;
    while (true) {
      out.push_back(word());
      if (!accept(",")) break;
    }
    expect_end();
    return out;
  }

  NormalGeneratorSpec normal_spec() {
    NormalGeneratorSpec spec;
    while (true) {
      spec.elements.push_back(word());
      expect(":");
      const Token& t = next();
      if (t.type != Tok::name && t.type != Tok::integer) fail_at(t, "expected element order");
      try {
        spec.orders.push_back(Order::parse(t.text));
      } catch (const InputError& e) {
        fail_at(t, e.what());
      }
      if (!accept(",")) break;
    }
    expect_end();
    return spec;
  }

  Word word() {
    Word w = term();
    while (accept("*")) w = w * term();
    return w;
  }

  void expect_end() {
    if (peek().type != Tok::end) fail_at(peek(), "unexpected trailing input '" + peek().text + "'");
  }

 private:
  Word term() {
    const Token& t = next();
    Word base;
    if (t.type == Tok::name) {
      auto it = std::find(names_->begin(), names_->end(), t.text);
      if (it == names_->end()) fail_at(t, "undeclared generator '" + t.text + "'");
      base = Word::generator(static_cast<std::uint32_t>(it - names_->begin()));
    } else if (is_punct(t, "(")) {
      base = word();
      expect(")");
    } else if (is_punct(t, "[")) {
      Word u = word();
      expect(",");
      Word v = word();
      expect("]");
      return u.inverse() * v.inverse() * u * v;
    } else {
      fail_at(t, t.type == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
    if (accept("^")) {
      const Token& e = next();
      if (e.type != Tok::integer) fail_at(e, "expected integer exponent");
      long long n = 0;
      try {
        n = std::stoll(e.text);
      } catch (const std::exception&) {
        fail_at(e, "exponent out of range");
      }
      if (n > 100000 || n < -100000) fail_at(e, "exponent out of range");
      if (n == 0) warn(e, "exponent 0 yields the empty word");
      base = base.power(n);
    }
    return base;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  static bool is_punct(const Token& t, std::string_view p) {
    return t.type == Tok::punct && t.text == p;
  }
  bool accept(std::string_view p) {
    if (is_punct(peek(), p)) {
      next();
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    const Token& t = next();
    if (!is_punct(t, p)) {
      fail_at(t, "expected '" + std::string(p) + "'" +
                     (t.type == Tok::end ? " before end of input" : " but found '" + t.text + "'"));
    }
  }
  void expect_keyword(std::string_view kw) {
    const Token& t = next();
    if (t.type != Tok::name || t.text != kw) fail_at(t, "expected '" + std::string(kw) + ":'");
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }
  void warn(const Token& t, std::string msg) {
    if (warnings_) warnings_->push_back({t.line, t.column, std::move(msg)});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseWarning>* warnings_;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text, std::vector<ParseWarning>* warnings) {
  return Parser(text, warnings).presentation();
}

std::vector<Word> parse_word_list(std::string_view text, const Presentation& p) {
  Parser parser(text, nullptr);
  parser.bind(p.generator_names());
  return parser.word_list();
}

Word parse_word(std::string_view text, const Presentation& p) {
  Parser parser(text, nullptr);
  parser.bind(p.generator_names());
  Word w = parser.word();
  parser.expect_end();
  return w;
}

NormalGeneratorSpec parse_normal_generators(std::string_view text, const Presentation& p) {
  Parser parser(text, nullptr);
  parser.bind(p.generator_names());
  return parser.normal_spec();
}

std::string render_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += '*';
    out += names[letters[i].generator];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string render(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.name(static_cast<std::uint32_t>(i));
  }
  out += ";\nrels: ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += render_word(p.relators()[i], p.generator_names());
  }
  out += ";\n";
  return out;
}

}  // namespace grpcalc
