#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "placticc/words.hpp"

namespace placticc {

// Columns in reading order: the rightmost column of the drawn tableau first.
// A valid tableau has each column succeeding the next one under precedes,
// i.e. precedes(columns[i+1], columns[i]).
struct Tableau {
  std::vector<Column> columns;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Stands for eps_count copies of the empty column followed by the tableau.
struct DecoratedElement {
  Tableau tableau;
  int eps_count = 0;
  friend bool operator==(const DecoratedElement&,
                         const DecoratedElement&) = default;
};

using ColumnPair = std::pair<Column, Column>;

enum class Relation { R1a, R1b, R2a, R2b, R3 };

// Left-to-right application of a relation as written, on the three letters
// starting at `at`; otherwise R3 when w[at..] is an almost admissible column.
std::optional<PlainWord> apply_relation(const PlainWord& w, std::size_t at,
                                        int n, Relation* which = nullptr);

// Result of c <- x, padded with the empty column in the first slot when a
// single column (or none) remains.
ColumnPair insert_letter_column(const Column& c, Letter x, int n);

ColumnPair insert_pair(const Column& c1, const Column& c2, int n);

bool is_tableau(const Tableau& t, int n);
Tableau insert_tableau(const Tableau& t, Letter x, int n);
Tableau product(const Tableau& t1, const Tableau& t2, int n);
Tableau plactic_normal_form(const PlainWord& w, int n);

PlainWord tableau_reading(const Tableau& t);
DecoratedWord to_word(const DecoratedElement& e);

DecoratedElement normal_form(const DecoratedWord& w, int n);
DecoratedElement decorated_product(const DecoratedElement& a,
                                   const DecoratedElement& b, int n);

}  // namespace placticc
