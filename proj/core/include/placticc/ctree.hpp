#pragma once

#include <optional>
#include <string>
#include <vector>

#include "placticc/words.hpp"

namespace placticc {

// depth 0 is the strand root, 2m-1 the outer vertex i.m, 2m the inner
// vertex i.m-. Both i.m and i.m- sit on level i+m.
struct Vertex {
  int strand = 1;
  int depth = 0;

  bool is_root() const { return depth == 0; }
  bool is_inner() const { return depth > 0 && depth % 2 == 0; }
  int m() const { return (depth + 1) / 2; }
  int level() const { return strand + m(); }

  static Vertex root(int i) { return {i, 0}; }
  static Vertex outer(int i, int m) { return {i, 2 * m - 1}; }
  static Vertex inner(int i, int m) { return {i, 2 * m}; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// "i.0", "i.m+" or "i.m-".
std::string vertex_key(const Vertex& v);
std::optional<Vertex> parse_vertex_key(const std::string& key);

class CTree {
 public:
  CTree(int rank, int n);

  int rank() const { return k_; }
  int n() const { return n_; }

  bool contains(const Vertex& v) const;
  int label(const Vertex& v) const { return s_[slot(v)]; }
  void set_label(const Vertex& v, int value);

  // Vertices of the truncation, strand by strand, root first.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const CTree&, const CTree&) = default;

 private:
  std::size_t slot(const Vertex& v) const;

  int k_;
  int n_;
  std::vector<int> s_;
};

int valuation(const CTree& t, const Vertex& v);

// Messages name the broken condition; empty iff the tree is valid.
std::vector<std::string> validate(const CTree& t);
bool is_n_labeling(const CTree& t);

// omega_t for t = 1..rank; needs only an n-labeling.
Column level_reading(const CTree& t, int level);
DecoratedWord reading(const CTree& t);

// q_1 .. q_k with q_i = q(i.(k-i)-) and q_k the root label of strand k.
std::vector<int> strand_valuations(const CTree& t);
DecoratedWord tree_normal_form(const CTree& t);

// The tree whose reading is c(a_k) ... c(a_1), for a_1 >= ... >= a_k.
CTree standard_tree(const std::vector<int>& a, int n);
bool is_standard(const CTree& t);

CTree truncate(const CTree& t, int rank);

// Replace levels 1..k by the standard tree with the same strand valuations.
CTree standardize_truncation(const CTree& t);
// Rewrite the last two levels of a tree whose truncation is standard so that
// they read the normal form of omega_k omega_{k+1}.
CTree fold_last_levels(const CTree& t);

// Inverse of reading on highest-weight decorated words.
CTree encode(const DecoratedWord& u, int n);

// All valid trees of the given rank, in lexicographic label order.
std::vector<CTree> enumerate_trees(int rank, int n, unsigned jobs = 1);

}  // namespace placticc
