#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "placticc/words.hpp"

namespace placticc {

enum class Op { E, F };

// p unmatched e-marks, q unmatched f-marks; positions are 0-based indices
// into the word.
struct Signature {
  int p = 0;
  int q = 0;
  std::optional<std::size_t> e_position;
  std::optional<std::size_t> f_position;
};

using Weight = std::vector<int>;

std::optional<Letter> apply_letter(Letter x, Op op, int i, int n);

Signature signature(const PlainWord& w, int i, int n);

std::optional<PlainWord> apply(const PlainWord& w, Op op, int i, int n);
std::optional<DecoratedWord> apply(const DecoratedWord& w, Op op, int i, int n);

// (phi_i, epsilon_i)
std::pair<int, int> phi_eps(const PlainWord& w, int i, int n);
std::pair<int, int> phi_eps(const DecoratedWord& w, int i, int n);

// Applies e_i with the smallest available i until none applies. The indices
// used are appended to path when given.
PlainWord highest_weight(const PlainWord& w, int n,
                         std::vector<int>* path = nullptr);
DecoratedWord highest_weight(const DecoratedWord& w, int n,
                             std::vector<int>* path = nullptr);

bool is_highest_weight(const PlainWord& w, int n);
bool is_highest_weight(const DecoratedWord& w, int n);

Weight weight(const PlainWord& w, int n);
Weight weight(const DecoratedWord& w, int n);

PlainWord reading(const DecoratedWord& w);

// Breadth-first closure under all e_i, f_i; throws std::length_error past cap.
std::vector<PlainWord> component(const PlainWord& w, int n,
                                 std::size_t cap = 1'000'000);

}  // namespace placticc
