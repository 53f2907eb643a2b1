#include "regmap/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace regmap {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(col_)),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  enum Kind { Name, Int, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, Equals, End };
  Kind kind;
  std::string text;
  long long value = 0;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src_[pos_];
    auto one = [&](Token::Kind k) {
      t.kind = k;
      t.text = c;
      advance();
      return t;
    };
    switch (c) {
      case '*': return one(Token::Star);
      case '^': return one(Token::Caret);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      case '[': return one(Token::LBracket);
      case ']': return one(Token::RBracket);
      case ',': return one(Token::Comma);
      case '=': return one(Token::Equals);
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      if (c == '-') advance();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("malformed exponent", t.line, t.col);
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      t.kind = Token::Int;
      t.text = std::string(src_.substr(start, pos_ - start));
      t.value = std::stoll(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_' || src_[pos_] == '\''))
        advance();
      t.kind = Token::Name;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class ExprParser {
 public:
  ExprParser(std::string_view src, const std::map<std::string, int>& gens, int line_offset)
      : lexer_(src), gens_(gens), line_offset_(line_offset) {
    cur_ = lexer_.next();
  }

  // expr (',' expr)*. Words that reduce to the empty word are dropped.
  std::vector<Word> parse_list() {
    std::vector<Word> out;
    if (cur_.kind == Token::End) return out;
    auto keep = [&](Word w) {
      if (!w.empty()) out.push_back(std::move(w));
    };
    keep(parse_relator());
    while (cur_.kind == Token::Comma) {
      consume();
      keep(parse_relator());
    }
    expect(Token::End, "expected ',' or end of list");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line + line_offset_, t.col);
  }
  void consume() { cur_ = lexer_.next(); }
  void expect(Token::Kind k, const std::string& msg) {
    if (cur_.kind != k) fail(msg, cur_);
  }

  Word parse_relator() {
    Word lhs = parse_expr();
    if (cur_.kind == Token::Equals) {
      consume();
      Word rhs = parse_expr();
      lhs = word_concat(lhs, word_invert(rhs));
    }
    return lhs;
  }

  Word parse_expr() {
    if (cur_.kind == Token::Comma || cur_.kind == Token::End || cur_.kind == Token::RParen ||
        cur_.kind == Token::RBracket || cur_.kind == Token::Equals)
      fail("empty relator", cur_);
    Word w = parse_factor();
    while (cur_.kind == Token::Star) {
      consume();
      w = word_concat(w, parse_factor());
    }
    return w;
  }

  Word parse_factor() {
    Word w = parse_atom();
    while (cur_.kind == Token::Caret) {
      consume();
      if (cur_.kind == Token::Int) {
        long long e = cur_.value;
        if (e < -1000000 || e > 1000000) fail("malformed exponent", cur_);
        consume();
        w = word_pow(w, static_cast<int>(e));
      } else {
        // conjugation u^v = v^-1 u v
        Word v = parse_atom();
        w = word_conjugate(w, v);
      }
    }
    return w;
  }

  Word parse_atom() {
    if (cur_.kind == Token::Name) {
      auto it = gens_.find(cur_.text);
      if (it == gens_.end()) fail("unknown generator name '" + cur_.text + "'", cur_);
      consume();
      return Word::generator(it->second);
    }
    if (cur_.kind == Token::LParen) {
      consume();
      Word w = parse_expr();
      expect(Token::RParen, "expected ')'");
      consume();
      return w;
    }
    if (cur_.kind == Token::LBracket) {
      consume();
      Word u = parse_expr();
      expect(Token::Comma, "expected ',' in commutator");
      consume();
      Word v = parse_expr();
      expect(Token::RBracket, "expected ']'");
      consume();
      return word_commutator(u, v);
    }
    fail("expected generator, '(' or '['", cur_);
  }

  Lexer lexer_;
  Token cur_;
  const std::map<std::string, int>& gens_;
  int line_offset_;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  // Split into sections keyed by a header at the start of a line.
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::string section;
  std::string gen_text, rel_text, sub_text;
  int rel_line = 0, sub_line = 0;
  bool saw_gens = false, saw_rels = false, saw_sub = false;
  auto append = [&](std::string& dst, const std::string& s) { dst += s; dst += '\n'; };
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    auto first = body.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto starts_section = [&](const char* name) {
      size_t n = std::string(name).size();
      if (body.compare(first, n, name) != 0) return false;
      auto rest = body.find_first_not_of(" \t", first + n);
      return rest != std::string::npos && body[rest] == ':';
    };
    auto section_body = [&](const char* name) {
      auto colon = body.find(':', first + std::string(name).size());
      return body.substr(colon + 1);
    };
    if (starts_section("generators")) {
      if (saw_gens) throw ParseError("duplicate 'generators' section", lineno, 1);
      saw_gens = true;
      section = "generators";
      append(gen_text, section_body("generators"));
    } else if (starts_section("relators")) {
      if (saw_rels) throw ParseError("duplicate 'relators' section", lineno, 1);
      saw_rels = true;
      section = "relators";
      rel_line = lineno - 1;
      append(rel_text, section_body("relators"));
    } else if (starts_section("subgroup")) {
      if (saw_sub) throw ParseError("duplicate 'subgroup' section", lineno, 1);
      saw_sub = true;
      section = "subgroup";
      sub_line = lineno - 1;
      append(sub_text, section_body("subgroup"));
    } else {
      if (section.empty())
        throw ParseError("expected 'generators:' section", lineno, static_cast<int>(first) + 1);
      if (section == "generators") append(gen_text, body);
      else if (section == "relators") append(rel_text, body);
      else append(sub_text, body);
    }
  }
  if (!saw_gens) throw ParseError("missing 'generators' section", lineno, 1);

  Presentation p;
  std::map<std::string, int> gen_index;
  {
    std::istringstream gs(gen_text);
    std::string name;
    while (gs >> name) {
      if (gen_index.count(name))
        throw ParseError("duplicate generator name '" + name + "'", 1, 1);
      gen_index[name] = static_cast<int>(p.generator_names.size());
      p.generator_names.push_back(name);
    }
  }
  if (p.generator_names.empty()) throw ParseError("no generators declared", 1, 1);

  if (saw_rels) {
    ExprParser ep(rel_text, gen_index, rel_line);
    p.relators = ep.parse_list();
  }
  if (saw_sub) {
    ExprParser ep(sub_text, gen_index, sub_line);
    p.subgroup_generators = ep.parse_list();
  }
  return p;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) throw std::logic_error("cannot render the empty word");
  std::string out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out += "*";
    first = false;
    out += names.at(static_cast<size_t>(s.gen));
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& n : p.generator_names) out += " " + n;
  out += "\n";
  auto render_list = [&](const char* header, const std::vector<Word>& ws) {
    if (ws.empty()) return;
    out += header;
    bool first = true;
    for (const auto& w : ws) {
      out += first ? " " : ", ";
      first = false;
      out += render_word(w, p.generator_names);
    }
    out += "\n";
  };
  render_list("relators:", p.relators);
  render_list("subgroup:", p.subgroup_generators);
  return out;
}

}  // namespace regmap
