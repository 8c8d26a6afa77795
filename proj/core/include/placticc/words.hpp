#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace placticc {

// A letter is a signed integer: i stands for the unbarred letter i and -i
// for its bar. Negation reverses the order exactly like barring does.
using Letter = int;
using Column = std::vector<Letter>;
using PlainWord = std::vector<Letter>;
using DecoratedWord = std::vector<Column>;

struct BlockSpec {
  int a = 0;
  int b = 0;
  int c = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what);
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

constexpr Letter bar(Letter x) { return -x; }
constexpr int letter_index(Letter x) { return x < 0 ? -x : x; }
constexpr bool is_barred(Letter x) { return x < 0; }

// 1 < 2 < ... < n < -n < ... < -1, independent of n.
constexpr int letter_key(Letter x) { return x > 0 ? x : (1 << 20) + x; }
constexpr bool letter_less(Letter a, Letter b) {
  return letter_key(a) < letter_key(b);
}

void check_rank(int n);
void check_letters(const PlainWord& w, int n);

bool is_column(const Column& c);
int n_z(const Column& col, int z, int n);

// The empty column counts as admissible unless strict is set.
bool is_admissible(const Column& col, int n, bool strict = false);
bool is_almost_admissible(const Column& col, int n);

Column block(const BlockSpec& spec, int n);
bool block_admissible(const std::vector<Column>& blocks, int n);

// c ⪯ d. Every column precedes the empty column.
bool precedes(const Column& c, const Column& d, int n);

// Ordered by length, then letter order; the empty column first if present.
std::vector<Column> admissible_columns(int n, bool strict);

std::string format_column(const Column& c);
std::string format_word(const DecoratedWord& w);
std::string format_plain(const PlainWord& w);

// Parsers check letter range, column shape and admissibility at rank n.
Column parse_column(std::string_view s, int n);
DecoratedWord parse_word(std::string_view s, int n);
PlainWord parse_plain(std::string_view s, int n);

}  // namespace placticc
