#include "placticc/words.hpp"

#include <algorithm>

namespace placticc {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(pos) +
                         ": " + what),
      pos_(pos) {}

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
}

void check_letters(const PlainWord& w, int n) {
  check_rank(n);
  for (Letter x : w) {
    if (x == 0 || letter_index(x) > n)
      throw std::invalid_argument("letter " + std::to_string(x) +
                                  " out of range for rank " +
                                  std::to_string(n));
  }
}

bool is_column(const Column& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!letter_less(c[i - 1], c[i])) return false;
  return true;
}

namespace {

int count_up_to(const Column& col, int z) {
  int k = 0;
  for (Letter x : col)
    if (letter_index(x) <= z) ++k;
  return k;
}

void check_column(const Column& col, int n) {
  check_letters(col, n);
  if (!is_column(col))
    throw std::invalid_argument(format_column(col) +
                                " is not strictly increasing");
}

}  // namespace

int n_z(const Column& col, int z, int n) {
  check_rank(n);
  if (z < 1 || z > n)
    throw std::domain_error("z=" + std::to_string(z) + " outside 1.." +
                            std::to_string(n));
  return count_up_to(col, z);
}

bool is_admissible(const Column& col, int n, bool strict) {
  check_column(col, n);
  if (col.empty()) return !strict;
  for (int z = 1; z <= n; ++z)
    if (count_up_to(col, z) > z) return false;
  return true;
}

bool is_almost_admissible(const Column& col, int n) {
  check_column(col, n);
  if (col.empty() || is_admissible(col, n)) return false;
  // Every strict factor lies inside one of these two.
  Column head(col.begin(), col.end() - 1);
  Column tail(col.begin() + 1, col.end());
  return is_admissible(head, n) && is_admissible(tail, n);
}

Column block(const BlockSpec& spec, int n) {
  check_rank(n);
  const auto [a, b, c] = spec;
  if (a < 0 || b < 0 || c < 0 || a + b > n || c > a + b)
    throw std::domain_error("block (" + std::to_string(a) + ";" +
                            std::to_string(b) + "," + std::to_string(c) +
                            ") does not fit rank " + std::to_string(n));
  Column out;
  for (int x = a + 1; x <= a + b; ++x) out.push_back(x);
  for (int x = a + b; x > a + b - c; --x) out.push_back(-x);
  return out;
}

bool block_admissible(const std::vector<Column>& blocks, int n) {
  Column all;
  std::vector<int> points;
  bool seen_barred = false;
  for (const Column& blk : blocks) {
    check_column(blk, n);
    if (blk.empty()) continue;
    std::size_t split = 0;
    while (split < blk.size() && !is_barred(blk[split])) ++split;
    for (std::size_t i = 1; i < blk.size(); ++i) {
      bool ok = i < split ? blk[i] == blk[i - 1] + 1
                          : (i == split ? blk[i] == -blk[i - 1]
                                        : blk[i] == blk[i - 1] + 1);
      if (!ok)
        throw std::invalid_argument(format_column(blk) +
                                    " is not a block column");
    }
    if (split > 0 && seen_barred)
      throw std::invalid_argument("unbarred block after a barred block");
    if (split > 0) points.push_back(blk[split - 1]);
    if (split < blk.size()) {
      points.push_back(-blk[split]);
      seen_barred = true;
    }
    all.insert(all.end(), blk.begin(), blk.end());
  }
  if (!is_column(all))
    throw std::invalid_argument("blocks do not concatenate to a column");
  for (int z : points)
    if (count_up_to(all, z) > z) return false;
  return true;
}

bool precedes(const Column& c, const Column& d, int n) {
  if (!is_admissible(c, n) || !is_admissible(d, n))
    throw std::invalid_argument("precedes needs admissible columns");
  const std::size_t k = c.size(), l = d.size();
  if (l == 0) return true;
  if (k < l) return false;
  for (std::size_t i = 0; i < l; ++i)
    if (letter_less(d[i], c[i])) return false;

  // 1-based positions, 0 when absent; only the first l letters of c matter.
  auto pos = [l](const Column& col, Letter x) -> std::size_t {
    for (std::size_t i = 0; i < l; ++i)
      if (col[i] == x) return i + 1;
    return 0;
  };
  for (int a = 1; a <= n; ++a) {
    const std::size_t p = pos(c, a), s = pos(d, -a);
    if (p == 0 || s == 0) continue;
    for (int b = a; b <= n; ++b) {
      const long need = b - a;
      std::size_t q = pos(d, b), r = pos(d, -b);
      if (q && r && p <= q && q < r && r <= s &&
          static_cast<long>((s - r) + (q - p)) >= need)
        return false;
      q = pos(c, b);
      r = pos(c, -b);
      if (q && r && p <= q && q < r && r <= s &&
          static_cast<long>((s - r) + (q - p)) >= need)
        return false;
    }
  }
  return true;
}

std::vector<Column> admissible_columns(int n, bool strict) {
  check_rank(n);
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.push_back(i);
  for (int i = n; i >= 1; --i) alphabet.push_back(-i);

  std::vector<Column> out;
  const std::size_t m = alphabet.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Column col;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) col.push_back(alphabet[i]);
    if (is_admissible(col, n, strict)) out.push_back(std::move(col));
  }
  std::sort(out.begin(), out.end(), [](const Column& x, const Column& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        letter_less);
  });
  return out;
}

}  // namespace placticc
