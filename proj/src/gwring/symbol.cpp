#include "gwdn/gwsymbol.hpp"

#include "gwdn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gwdn {

int GWSymbol::sum_d() const noexcept {
  int s = tail.d;
  for (const auto& h : heads) s += h.d;
  return s;
}

bool GWSymbol::has_negative_entry() const noexcept {
  if (tail.d < 0 || tail.e < 0) return true;
  return std::any_of(heads.begin(), heads.end(), [](const GWSlot& h) { return h.d < 0 || h.e < 0; });
}

namespace {

std::string slot_text(const GWSlot& s, char mark) {
  std::string out;
  if (s.d != 0) out += "t" + std::to_string(s.d) + " ";
  out += "H";
  out += mark;
  out += std::to_string(s.e);
  return out;
}

std::string slot_latex(const GWSlot& s, char mark) {
  std::string out;
  if (s.d != 0) out += "\\tau_{" + std::to_string(s.d) + "}";
  out += "H";
  out += mark;
  out += "{" + std::to_string(s.e) + "}";
  return out;
}

class SymbolLexer {
 public:
  explicit SymbolLexer(std::string_view t) : text_(t) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    int sign = 1;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    int v = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return sign * v;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad symbol '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GWSymbol::str() const {
  std::string out = "<";
  for (const auto& h : heads) out += slot_text(h, '^') + ", ";
  return out + slot_text(tail, '_') + ">";
}

std::string GWSymbol::latex() const {
  std::string out = "\\langle ";
  for (const auto& h : heads) out += slot_latex(h, '^') + ", ";
  return out + slot_latex(tail, '_') + "\\rangle";
}

GWSymbol GWSymbol::parse(std::string_view text) {
  SymbolLexer lex(text);
  lex.expect('<');
  GWSymbol s;
  bool have_tail = false;
  do {
    if (have_tail) lex.fail("the subscript slot must be last");
    GWSlot slot;
    if (lex.eat('t')) {
      lex.eat('_');
      slot.d = lex.integer();
    }
    lex.expect('H');
    if (lex.eat('^')) {
      slot.e = lex.integer();
      s.heads.push_back(slot);
    } else if (lex.eat('_')) {
      slot.e = lex.integer();
      s.tail = slot;
      have_tail = true;
    } else {
      lex.fail("expected '^' or '_'");
    }
  } while (lex.eat(','));
  lex.expect('>');
  if (!lex.at_end()) lex.fail("trailing input");
  if (!have_tail) lex.fail("missing subscript slot H_r");
  return s;
}

GWSymbol canonicalize(GWSymbol s) {
  std::sort(s.heads.begin(), s.heads.end(), [](const GWSlot& a, const GWSlot& b) {
    return a.e != b.e ? a.e < b.e : a.d < b.d;
  });
  return s;
}

int degree(const GWSymbol& s) noexcept {
  int v = s.sum_d() - s.tail.e + 3 - s.n();
  for (const auto& h : s.heads) v += h.e;
  return v;
}

}  // namespace gwdn
