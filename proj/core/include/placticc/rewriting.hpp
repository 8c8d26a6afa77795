#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "placticc/insertion.hpp"
#include "placticc/words.hpp"

namespace placticc {

enum class Variant { ACol, ACol_bullet };
enum class StrategyKind { Leftmost, Rightmost };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

class TerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One application of c1 c2 => (c1 <- c2) at 0-based position.
// In ACol_bullet the empty columns of `after` are dropped from the word.
struct RewriteStep {
  std::size_t position = 0;
  ColumnPair before;
  ColumnPair after;
};

struct Strategy {
  StrategyKind kind = StrategyKind::Leftmost;
  std::vector<RewriteStep> trace;
  std::vector<DecoratedWord> words;  // source first, normal form last
};

struct ConfShape {
  int a_len = 0;
  int b_len = 0;
  friend auto operator<=>(const ConfShape&, const ConfShape&) = default;
};

// The rule table over the admissible columns of rank n. Insertions are
// precomputed for every pair, so a Polygraph is cheap to query and safe to
// share between threads once built.
class Polygraph {
 public:
  Polygraph(int n, Variant v);

  int rank() const { return n_; }
  Variant variant() const { return variant_; }

  // Generators of the variant, in admissible_columns order.
  std::vector<Column> generators() const;

  int id(const Column& c) const;
  const Column& column(int id) const { return cols_[id]; }
  std::size_t size() const { return cols_.size(); }

  // A pair a b is reducible iff b does not precede a.
  bool reducible(int a, int b) const { return reducible_[a * size() + b]; }
  std::pair<int, int> rewrite(int a, int b) const {
    return rewrite_[a * size() + b];
  }
  bool reducible(const Column& a, const Column& b) const {
    return reducible(id(a), id(b));
  }
  ColumnPair rewrite(const Column& a, const Column& b) const;

  bool allows(const DecoratedWord& w) const;
  bool is_normal(const DecoratedWord& w) const;

 private:
  int n_;
  Variant variant_;
  std::vector<Column> cols_;  // index 0 is the empty column
  std::map<Column, int> index_;
  std::vector<char> reducible_;
  std::vector<std::pair<int, int>> rewrite_;
};

DecoratedWord project(const DecoratedWord& w);

// Default cap |w|^2 (3|w|+3); PLACTICC_STEP_LIMIT overrides it.
std::size_t step_limit(std::size_t length);

Strategy run_strategy(const Polygraph& p, const DecoratedWord& w,
                      StrategyKind kind);

bool is_branching_source(const Polygraph& p, const DecoratedWord& w);
ConfShape conf(const Polygraph& p, const DecoratedWord& w);

// Steps of the form c e => e c with c nonempty.
int epsilon_count(const Strategy& s);
// 4 * count <= t^2 (3t+1) with t the length of the source.
bool check_epsilon_bound(const Strategy& s);
// |s| - count, the length of the projected sequence.
int projected_length(const Strategy& s);
// The projection of every step is an identity or a step of ACol_bullet.
bool projection_is_valid(const Strategy& s, const Polygraph& p);

// All sources t u v of critical branchings, sorted by serialized text.
std::vector<DecoratedWord> enumerate_branchings(const Polygraph& p,
                                                int max_rank = 4);

struct Violation {
  std::string word;
  std::string reason;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct BranchingResult {
  DecoratedWord source;
  ConfShape shape;
  ConfShape hw_shape;
  DecoratedWord normal_form;
  std::vector<std::string> failures;
};

struct CoherenceReport {
  int n = 0;
  Variant variant = Variant::ACol;
  std::size_t total = 0;
  ConfShape max_shape;
  std::vector<Violation> violations;
  std::map<std::pair<int, int>, std::size_t> shape_histogram;
};

BranchingResult check_branching(const Polygraph& p, const DecoratedWord& w);

// Output does not depend on jobs.
CoherenceReport verify_coherence(const Polygraph& p, unsigned jobs = 1,
                                 int max_rank = 4);
CoherenceReport verify_sources(const Polygraph& p,
                               const std::vector<DecoratedWord>& sources,
                               unsigned jobs = 1);

}  // namespace placticc
