#include <cctype>

#include "placticc/words.hpp"

namespace placticc {

std::string format_column(const Column& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

std::string format_word(const DecoratedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += format_column(w[i]);
  }
  return s;
}

std::string format_plain(const PlainWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int n) : s_(s), n_(n) { check_rank(n); }

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  std::size_t pos() const { return i_; }

  void skip_spaces() {
    while (!done() && s_[i_] == ' ') ++i_;
  }

  void expect(char c) {
    if (peek() != c) {
      std::string got = done() ? "end of input" : std::string("'") + peek() + "'";
      throw ParseError(i_, std::string("expected '") + c + "', got " + got);
    }
    ++i_;
  }

  Letter letter() {
    const std::size_t start = i_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(i_, "expected a digit");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1'000'000) throw ParseError(start, "letter too large");
      ++i_;
    }
    if (v < 1 || v > n_)
      throw ParseError(start, "letter " + std::string(s_.substr(start, i_ - start)) +
                                  " outside 1.." + std::to_string(n_));
    return static_cast<Letter>(neg ? -v : v);
  }

  Column column() {
    const std::size_t start = i_;
    expect('[');
    Column col;
    if (peek() != ']') {
      col.push_back(letter());
      while (peek() == ' ') {
        skip_spaces();
        col.push_back(letter());
      }
    }
    expect(']');
    if (!is_column(col))
      throw ParseError(start, format_column(col) + " is not strictly increasing");
    if (!is_admissible(col, n_))
      throw ParseError(start, format_column(col) + " is not admissible at rank " +
                                  std::to_string(n_));
    return col;
  }

 private:
  std::string_view s_;
  int n_;
  std::size_t i_ = 0;
};

}  // namespace

Column parse_column(std::string_view s, int n) {
  Cursor cur(s, n);
  Column c = cur.column();
  if (!cur.done()) throw ParseError(cur.pos(), "trailing characters");
  return c;
}

DecoratedWord parse_word(std::string_view s, int n) {
  Cursor cur(s, n);
  DecoratedWord w;
  cur.skip_spaces();
  w.push_back(cur.column());
  cur.skip_spaces();
  while (!cur.done()) {
    w.push_back(cur.column());
    cur.skip_spaces();
  }
  return w;
}

PlainWord parse_plain(std::string_view s, int n) {
  Cursor cur(s, n);
  PlainWord w;
  cur.skip_spaces();
  while (!cur.done()) {
    w.push_back(cur.letter());
    if (!cur.done() && cur.peek() != ' ')
      throw ParseError(cur.pos(), "expected a space between letters");
    cur.skip_spaces();
  }
  return w;
}

}  // namespace placticc
