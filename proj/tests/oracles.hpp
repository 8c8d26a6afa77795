#pragma once

// Reference implementations used only by the tests. None of them calls the
// library's crystal, insertion or rewriting code.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "placticc/words.hpp"

namespace oracle {

using placticc::Column;
using placticc::DecoratedWord;
using placticc::Letter;
using placticc::PlainWord;

// Crystal graph of a single letter: i -> i+1 and -(i+1) -> -i under f_i
// for i < n, n -> -n under f_n.
inline std::optional<Letter> f_letter(Letter x, int i, int n) {
  if (i < n) {
    if (x == i) return i + 1;
    if (x == -(i + 1)) return -i;
    return std::nullopt;
  }
  if (x == n) return -n;
  return std::nullopt;
}

inline std::optional<Letter> e_letter(Letter x, int i, int n) {
  for (Letter y = -n; y <= n; ++y)
    if (y != 0 && f_letter(y, i, n) == x) return y;
  return std::nullopt;
}

struct Stats {
  int eps = 0;
  int phi = 0;
};

// Tensor rule on u = w[from], v = w[from+1..].
inline Stats stats(const PlainWord& w, int i, int n, std::size_t from = 0) {
  if (from == w.size()) return {};
  Stats u{e_letter(w[from], i, n) ? 1 : 0, f_letter(w[from], i, n) ? 1 : 0};
  Stats v = stats(w, i, n, from + 1);
  return {u.eps + std::max(0, v.eps - u.phi), v.phi + std::max(0, u.phi - v.eps)};
}

inline std::optional<PlainWord> tensor_e(const PlainWord& w, int i, int n) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int phi_u = f_letter(w[k], i, n) ? 1 : 0;
    const int eps_v = stats(w, i, n, k + 1).eps;
    if (phi_u >= eps_v) {
      auto y = e_letter(w[k], i, n);
      if (!y) return std::nullopt;
      PlainWord out = w;
      out[k] = *y;
      return out;
    }
  }
  return std::nullopt;
}

inline std::optional<PlainWord> tensor_f(const PlainWord& w, int i, int n) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int phi_u = f_letter(w[k], i, n) ? 1 : 0;
    const int eps_v = stats(w, i, n, k + 1).eps;
    if (phi_u > eps_v) {
      PlainWord out = w;
      out[k] = *f_letter(w[k], i, n);
      return out;
    }
  }
  return std::nullopt;
}

inline int nz_scan(const Column& c, int z) {
  int k = 0;
  for (Letter x : c)
    if ((x > 0 && x <= z) || (x < 0 && -x <= z)) ++k;
  return k;
}

inline bool admissible_scan(const Column& c, int n) {
  for (int z = 1; z <= n; ++z)
    if (nz_scan(c, z) > z) return false;
  return true;
}

// Normal form by transport of structure: raise to the highest weight with the
// tensor rule, write down the highest-weight tableau of that weight, then
// lower it along the same path. Columns in reading order, shortest first.
inline std::vector<Column> tableau_of(const PlainWord& w, int n) {
  PlainWord cur = w;
  std::vector<int> path;
  for (int i = 1; i <= n;) {
    if (auto up = tensor_e(cur, i, n)) {
      cur = *up;
      path.push_back(i);
      i = 1;
    } else {
      ++i;
    }
  }
  std::vector<int> lambda(n, 0);
  for (Letter x : cur) lambda[std::abs(x) - 1] += x > 0 ? 1 : -1;
  std::vector<int> lengths;
  for (int j = lambda.empty() ? 0 : lambda[0]; j >= 1; --j) {
    int c = 0;
    for (int v : lambda)
      if (v >= j) ++c;
    lengths.push_back(c);
  }
  PlainWord t;
  for (int len : lengths)
    for (int x = 1; x <= len; ++x) t.push_back(x);
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = *tensor_f(t, *it, n);

  std::vector<Column> cols;
  std::size_t at = 0;
  for (int len : lengths) {
    cols.emplace_back(t.begin() + at, t.begin() + at + len);
    at += len;
  }
  return cols;
}

inline PlainWord flatten(const DecoratedWord& w) {
  PlainWord out;
  for (const Column& c : w) out.insert(out.end(), c.begin(), c.end());
  return out;
}

// Empty columns first, then the tableau; same length as w.
inline DecoratedWord decorated_normal_form(const DecoratedWord& w, int n) {
  std::vector<Column> cols = tableau_of(flatten(w), n);
  DecoratedWord out(w.size() - cols.size());
  out.insert(out.end(), cols.begin(), cols.end());
  return out;
}

// c precedes d exactly when the two-column word d c is already a normal form.
inline bool precedes_by_normal_form(const Column& c, const Column& d, int n) {
  if (d.empty()) return true;
  if (c.empty()) return false;
  return tableau_of(flatten({d, c}), n) == std::vector<Column>{d, c};
}

inline std::vector<Column> all_columns(int n) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.push_back(i);
  for (int i = n; i >= 1; --i) alphabet.push_back(-i);
  std::vector<Column> out;
  for (unsigned mask = 0; mask < (1u << alphabet.size()); ++mask) {
    Column c;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (mask >> i & 1) c.push_back(alphabet[i]);
    out.push_back(c);
  }
  return out;
}

inline std::vector<Column> admissible(int n) {
  std::vector<Column> out;
  for (Column& c : all_columns(n))
    if (admissible_scan(c, n)) out.push_back(std::move(c));
  return out;
}

inline DecoratedWord random_word(std::mt19937_64& rng, const std::vector<Column>& gens,
                                 std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  DecoratedWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(gens[pick(rng)]);
  return w;
}

}  // namespace oracle
