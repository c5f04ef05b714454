#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "alexstrat/errors.hpp"
#include "alexstrat/presentation.hpp"

namespace alexstrat {

namespace {

enum class Tok { Ident, Colon, Comma, Semi, Caret, Integer, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_blanks();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src_[pos_];
    if (c == '\n') {
      advance();
      t.kind = Tok::Newline;
      return t;
    }
    if (c == ':') { advance(); t.kind = Tok::Colon; return t; }
    if (c == ',') { advance(); t.kind = Tok::Comma; return t; }
    if (c == ';') { advance(); t.kind = Tok::Semi; return t; }
    if (c == '^') { advance(); t.kind = Tok::Caret; return t; }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        id += src_[pos_];
        advance();
      }
      t.kind = Tok::Ident;
      t.text = std::move(id);
      return t;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '-') {
        num += c;
        advance();
      }
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError(t.line, t.col, "expected digits after '-'");
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num += src_[pos_];
        advance();
      }
      t.kind = Tok::Integer;
      t.text = num;
      try {
        t.value = std::stol(num);
      } catch (const std::exception&) {
        throw ParseError(t.line, t.col, "integer out of range: " + num);
      }
      return t;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_blanks() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r')
        advance();
      else
        break;
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { shift(); }

  Presentation parse_file() {
    Presentation p;
    skip_newlines();
    expect_keyword("gens");
    expect(Tok::Colon, "':'");
    parse_generator_list(p);
    skip_separators();
    if (cur_.kind == Tok::Ident && cur_.text == "rels") {
      shift();
      expect(Tok::Colon, "':'");
      parse_relators(p);
    }
    skip_separators();
    if (cur_.kind != Tok::End)
      throw ParseError(cur_.line, cur_.col, "unexpected trailing input");
    return p;
  }

  Word parse_bare_word(const Presentation& pres) {
    for (int i = 0; i < pres.rank(); ++i)
      gen_index_[pres.generators[static_cast<std::size_t>(i)]] = i + 1;
    skip_newlines();
    std::vector<int> letters;
    if (cur_.kind == Tok::End)
      throw ParseError(cur_.line, cur_.col, "expected a word");
    while (cur_.kind == Tok::Ident) parse_atom(letters);
    skip_newlines();
    if (cur_.kind != Tok::End)
      throw ParseError(cur_.line, cur_.col, "unexpected input after word");
    return free_reduce(letters);
  }

 private:
  void shift() { cur_ = lex_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(cur_.line, cur_.col, std::string("expected ") + what);
    shift();
  }

  void expect_keyword(const std::string& kw) {
    if (cur_.kind != Tok::Ident || cur_.text != kw)
      throw ParseError(cur_.line, cur_.col, "expected '" + kw + ":' clause");
    shift();
  }

  void skip_newlines() {
    while (cur_.kind == Tok::Newline) shift();
  }

  void skip_separators() {
    while (cur_.kind == Tok::Newline || cur_.kind == Tok::Semi) shift();
  }

  void parse_generator_list(Presentation& p) {
    while (true) {
      if (cur_.kind != Tok::Ident)
        throw ParseError(cur_.line, cur_.col, "expected generator name");
      const int index = static_cast<int>(p.generators.size()) + 1;
      if (!gen_index_.emplace(cur_.text, index).second)
        throw ParseError(cur_.line, cur_.col, "duplicate generator '" + cur_.text + "'");
      p.generators.push_back(cur_.text);
      shift();
      if (cur_.kind == Tok::Comma) {
        shift();
        skip_newlines();
        continue;
      }
      break;
    }
  }

  void parse_relators(Presentation& p) {
    while (true) {
      skip_separators();
      if (cur_.kind == Tok::End) break;
      if (cur_.kind != Tok::Ident)
        throw ParseError(cur_.line, cur_.col, "expected a relator word");
      std::vector<int> letters;
      while (cur_.kind == Tok::Ident) parse_atom(letters);
      p.relators.push_back(free_reduce(letters));
    }
  }

  // atom := name | name '^' integer
  void parse_atom(std::vector<int>& letters) {
    auto it = gen_index_.find(cur_.text);
    if (it == gen_index_.end())
      throw ParseError(cur_.line, cur_.col, "unknown generator '" + cur_.text + "'");
    const int g = it->second;
    shift();
    long exp = 1;
    if (cur_.kind == Tok::Caret) {
      shift();
      if (cur_.kind != Tok::Integer)
        throw ParseError(cur_.line, cur_.col, "expected integer exponent after '^'");
      exp = cur_.value;
      shift();
    }
    const int letter = exp >= 0 ? g : -g;
    for (long k = 0; k < std::labs(exp); ++k) letters.push_back(letter);
  }

  Lexer lex_;
  Token cur_;
  std::unordered_map<std::string, int> gen_index_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  return Parser(text).parse_file();
}

Word parse_word(const std::string& text, const Presentation& pres) {
  return Parser(text).parse_bare_word(pres);
}

}  // namespace alexstrat
