#include "placticc/crystal.hpp"

#include <deque>
#include <set>

namespace placticc {

namespace {

void check_i(int i, int n) {
  check_rank(n);
  if (i < 1 || i > n)
    throw std::domain_error("crystal index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
}

bool has_f(Letter x, int i, int n) {
  return i < n ? (x == i || x == -(i + 1)) : x == n;
}

bool has_e(Letter x, int i, int n) {
  return i < n ? (x == i + 1 || x == -i) : x == -n;
}

}  // namespace

std::optional<Letter> apply_letter(Letter x, Op op, int i, int n) {
  check_i(i, n);
  if (op == Op::F) {
    if (!has_f(x, i, n)) return std::nullopt;
    if (i == n) return -n;
    return x == i ? i + 1 : -i;
  }
  if (!has_e(x, i, n)) return std::nullopt;
  if (i == n) return n;
  return x == i + 1 ? i : -(i + 1);
}

Signature signature(const PlainWord& w, int i, int n) {
  check_i(i, n);
  Signature sig;
  // An f-mark followed later by an unmatched e-mark cancels, as brackets do.
  std::vector<std::size_t> open_f;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (has_f(w[k], i, n)) {
      open_f.push_back(k);
    } else if (has_e(w[k], i, n)) {
      if (!open_f.empty()) {
        open_f.pop_back();
      } else {
        ++sig.p;
        sig.e_position = k;
      }
    }
  }
  sig.q = static_cast<int>(open_f.size());
  if (!open_f.empty()) sig.f_position = open_f.front();
  return sig;
}

std::optional<PlainWord> apply(const PlainWord& w, Op op, int i, int n) {
  const Signature sig = signature(w, i, n);
  const auto& at = op == Op::E ? sig.e_position : sig.f_position;
  if (!at) return std::nullopt;
  PlainWord out = w;
  out[*at] = *apply_letter(w[*at], op, i, n);
  return out;
}

std::optional<DecoratedWord> apply(const DecoratedWord& w, Op op, int i,
                                   int n) {
  const Signature sig = signature(reading(w), i, n);
  const auto& at = op == Op::E ? sig.e_position : sig.f_position;
  if (!at) return std::nullopt;
  DecoratedWord out = w;
  std::size_t k = *at;
  for (Column& col : out) {
    if (k < col.size()) {
      col[k] = *apply_letter(col[k], op, i, n);
      break;
    }
    k -= col.size();
  }
  return out;
}

std::pair<int, int> phi_eps(const PlainWord& w, int i, int n) {
  const Signature sig = signature(w, i, n);
  return {sig.q, sig.p};
}

std::pair<int, int> phi_eps(const DecoratedWord& w, int i, int n) {
  return phi_eps(reading(w), i, n);
}

namespace {

template <class W>
W raise_fully(const W& w, int n, std::vector<int>* path) {
  W cur = w;
  for (int i = 1; i <= n;) {
    if (auto up = apply(cur, Op::E, i, n)) {
      cur = std::move(*up);
      if (path) path->push_back(i);
      i = 1;
    } else {
      ++i;
    }
  }
  return cur;
}

}  // namespace

PlainWord highest_weight(const PlainWord& w, int n, std::vector<int>* path) {
  check_letters(w, n);
  return raise_fully(w, n, path);
}

DecoratedWord highest_weight(const DecoratedWord& w, int n,
                             std::vector<int>* path) {
  return raise_fully(w, n, path);
}

bool is_highest_weight(const PlainWord& w, int n) {
  for (int i = 1; i <= n; ++i)
    if (signature(w, i, n).p > 0) return false;
  return true;
}

bool is_highest_weight(const DecoratedWord& w, int n) {
  return is_highest_weight(reading(w), n);
}

Weight weight(const PlainWord& w, int n) {
  check_letters(w, n);
  Weight wt(n, 0);
  for (Letter x : w) wt[letter_index(x) - 1] += is_barred(x) ? -1 : 1;
  return wt;
}

Weight weight(const DecoratedWord& w, int n) { return weight(reading(w), n); }

PlainWord reading(const DecoratedWord& w) {
  PlainWord out;
  for (const Column& c : w) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<PlainWord> component(const PlainWord& w, int n, std::size_t cap) {
  check_letters(w, n);
  std::set<PlainWord> seen{w};
  std::deque<PlainWord> todo{w};
  std::vector<PlainWord> out;
  while (!todo.empty()) {
    PlainWord cur = std::move(todo.front());
    todo.pop_front();
    out.push_back(cur);
    for (int i = 1; i <= n; ++i) {
      for (Op op : {Op::E, Op::F}) {
        auto next = apply(cur, op, i, n);
        if (next && seen.insert(*next).second) {
          if (seen.size() > cap)
            throw std::length_error("crystal component exceeds cap");
          todo.push_back(std::move(*next));
        }
      }
    }
  }
  return out;
}

}  // namespace placticc
