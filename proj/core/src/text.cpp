#include "rimforge/text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace rimforge {

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << msg;
    throw error(os.str());
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool ident_start(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos])) fail("expected identifier");
    std::size_t b = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(b, pos - b));
  }
  long integer() {
    skip_ws();
    std::size_t b = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::stol(std::string(s.substr(b, pos - b)));
  }
};

struct WordParser {
  Lexer& lx;
  const std::map<std::string, int>& gens;

  Word word() {
    Word w = term();
    while (lx.accept('*')) w = w * term();
    return w;
  }

  Word term() {
    Word b = base();
    if (lx.accept('^')) {
      long e = lx.integer();
      return b.pow(e);
    }
    return b;
  }

  Word base() {
    char c = lx.peek();
    if (c == '(') {
      lx.expect('(');
      Word w = word();
      lx.expect(')');
      return w;
    }
    if (c == '[') {
      lx.expect('[');
      Word u = word();
      lx.expect(',');
      Word v = word();
      lx.expect(']');
      return Word::commutator(u, v);
    }
    if (c == '1') {
      // identity token, but only when it is not the start of a longer number
      lx.expect('1');
      return Word();
    }
    std::size_t at = lx.pos;
    std::string id = lx.ident();
    auto it = gens.find(id);
    if (it == gens.end()) {
      lx.pos = at;
      lx.fail("unknown generator '" + id + "'");
    }
    return Word::letter(it->second);
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Lexer lx{text};
  lx.expect('<');
  std::vector<std::string> names;
  std::map<std::string, int> index;
  if (lx.peek() != '|') {
    while (true) {
      std::size_t at = lx.pos;
      std::string id = lx.ident();
      if (index.count(id)) {
        lx.pos = at;
        lx.fail("duplicate generator '" + id + "'");
      }
      index[id] = static_cast<int>(names.size());
      names.push_back(id);
      if (!lx.accept(',')) break;
    }
  }
  lx.expect('|');
  std::vector<Word> relators;
  if (lx.peek() != '>') {
    WordParser wp{lx, index};
    while (true) {
      relators.push_back(wp.word());
      if (!lx.accept(',')) break;
    }
  }
  lx.expect('>');
  if (!lx.done()) lx.fail("trailing input after presentation");
  return Presentation(std::move(names), std::move(relators));
}

Word parse_word(std::string_view text, const Presentation& p) {
  std::map<std::string, int> index;
  for (int g = 0; g < p.ngens(); ++g) index[p.name(g)] = g;
  Lexer lx{text};
  WordParser wp{lx, index};
  Word w = wp.word();
  if (!lx.done()) lx.fail("trailing input after word");
  return w;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < w.size()) {
    int g = w.gen_at(i);
    int s = w.sign_at(i);
    std::size_t j = i;
    while (j < w.size() && w.gen_at(j) == g && w.sign_at(j) == s) ++j;
    long exp = static_cast<long>(j - i) * s;
    if (!first) os << "*";
    first = false;
    if (g >= static_cast<int>(names.size())) throw error("word generator has no name");
    os << names[g];
    if (exp != 1) os << "^" << exp;
    i = j;
  }
  return os.str();
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "<";
  for (int g = 0; g < p.ngens(); ++g) {
    if (g) os << ",";
    os << p.name(g);
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) os << ", ";
    os << print_word(p.relators()[i], p.names());
  }
  os << ">";
  return os.str();
}

}  // namespace rimforge
