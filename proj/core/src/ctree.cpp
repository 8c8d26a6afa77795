#include "placticc/ctree.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <thread>

#include "placticc/crystal.hpp"

namespace placticc {

std::string vertex_key(const Vertex& v) {
  std::string s = std::to_string(v.strand) + ".";
  if (v.is_root()) return s + "0";
  return s + std::to_string(v.m()) + (v.is_inner() ? "-" : "+");
}

std::optional<Vertex> parse_vertex_key(const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos || dot == 0) return std::nullopt;
  int i = 0, m = 0;
  const char* b = key.data();
  auto r1 = std::from_chars(b, b + dot, i);
  if (r1.ec != std::errc{} || r1.ptr != b + dot || i < 1) return std::nullopt;
  const char* rest = b + dot + 1;
  const char* end = b + key.size();
  auto r2 = std::from_chars(rest, end, m);
  if (r2.ec != std::errc{} || r2.ptr == rest) return std::nullopt;
  if (m == 0 && r2.ptr == end) return Vertex::root(i);
  if (m < 1 || r2.ptr + 1 != end) return std::nullopt;
  if (*r2.ptr == '+') return Vertex::outer(i, m);
  if (*r2.ptr == '-') return Vertex::inner(i, m);
  return std::nullopt;
}

CTree::CTree(int rank, int n) : k_(rank), n_(n) {
  if (rank < 1) throw std::invalid_argument("tree rank must be at least 1");
  check_rank(n);
  s_.assign(std::size_t(rank) * rank, 0);
}

bool CTree::contains(const Vertex& v) const {
  return v.strand >= 1 && v.strand <= k_ && v.depth >= 0 &&
         v.depth <= 2 * (k_ - v.strand);
}

std::size_t CTree::slot(const Vertex& v) const {
  if (!contains(v))
    throw std::out_of_range("vertex " + vertex_key(v) + " outside rank " +
                            std::to_string(k_));
  std::size_t off = 0;
  for (int i = 1; i < v.strand; ++i) off += 1 + 2 * (k_ - i);
  return off + v.depth;
}

void CTree::set_label(const Vertex& v, int value) {
  if (value < 0) throw std::invalid_argument("labels are nonnegative");
  s_[slot(v)] = value;
}

std::vector<Vertex> CTree::vertices() const {
  std::vector<Vertex> out;
  for (int i = 1; i <= k_; ++i)
    for (int j = 0; j <= 2 * (k_ - i); ++j) out.push_back({i, j});
  return out;
}

int valuation(const CTree& t, const Vertex& v) {
  if (!t.contains(v))
    throw std::out_of_range("vertex " + vertex_key(v) + " outside the tree");
  int q = 0;
  for (int j = 0; j <= v.depth; ++j) {
    const Vertex u{v.strand, j};
    q += u.is_inner() ? -t.label(u) : t.label(u);
  }
  return q;
}

bool is_n_labeling(const CTree& t) {
  for (const Vertex& v : t.vertices()) {
    const int q = valuation(t, v);
    if (q < 0 || q > t.n()) return false;
  }
  return true;
}

namespace {

// The vertex on level t of strand t-l at depth index l, outer or root.
Vertex outer_on_level(int t, int l) {
  return l == 0 ? Vertex::root(t) : Vertex::outer(t - l, l);
}

Column rho(const CTree& t, const Vertex& v) {
  const int s = t.label(v);
  if (v.is_root()) return block({0, s, 0}, t.n());
  if (v.is_inner()) return block({valuation(t, {v.strand, v.depth - 1}), 0, s}, t.n());
  return block({valuation(t, {v.strand, v.depth - 1}), s, 0}, t.n());
}

}  // namespace

std::vector<std::string> validate(const CTree& t) {
  std::vector<std::string> out;
  const int k = t.rank();
  for (const Vertex& v : t.vertices()) {
    const int q = valuation(t, v);
    if (q < 0 || q > t.n())
      out.push_back("q(" + vertex_key(v) + ")=" + std::to_string(q) +
                    " outside 0.." + std::to_string(t.n()));
  }
  if (!out.empty()) return out;

  for (int i = 2; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      const Vertex v = j == 0 ? Vertex::root(i) : Vertex::outer(i, j);
      const Vertex w1 = Vertex::inner(i - 1, j + 1);
      const Vertex w2 = j == 0 ? Vertex::root(i - 1) : Vertex::inner(i - 1, j);
      for (const Vertex& w : {w1, w2}) {
        if (valuation(t, v) > valuation(t, w))
          out.push_back("level " + std::to_string(v.level()) +
                        ": column condition q(" + vertex_key(v) + ")=" +
                        std::to_string(valuation(t, v)) + " > q(" +
                        vertex_key(w) + ")=" + std::to_string(valuation(t, w)));
      }
    }
  }
  for (int lev = 1; lev <= k; ++lev) {
    int sum = 0;
    for (int l = 0; l < lev; ++l) {
      sum += t.label(outer_on_level(lev, l));
      if (l > 0) sum += t.label(Vertex::inner(lev - l, l));
      const int bound = valuation(t, outer_on_level(lev, l));
      if (sum > bound)
        out.push_back("level " + std::to_string(lev) +
                      ": admissibility condition l=" + std::to_string(l) +
                      " fails (" + std::to_string(sum) + " > " +
                      std::to_string(bound) + ")");
    }
  }
  return out;
}

Column level_reading(const CTree& t, int level) {
  if (level < 1 || level > t.rank())
    throw std::out_of_range("level " + std::to_string(level) + " outside the tree");
  if (!is_n_labeling(t)) throw std::invalid_argument("labels are not an n-labeling");
  Column out;
  for (int l = 0; l < level; ++l) {
    Column c = rho(t, outer_on_level(level, l));
    out.insert(out.end(), c.begin(), c.end());
  }
  for (int l = 1; l < level; ++l) {
    Column c = rho(t, Vertex::inner(l, level - l));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

DecoratedWord reading(const CTree& t) {
  DecoratedWord w;
  for (int lev = 1; lev <= t.rank(); ++lev) w.push_back(level_reading(t, lev));
  return w;
}

std::vector<int> strand_valuations(const CTree& t) {
  const int k = t.rank();
  std::vector<int> q;
  for (int i = 1; i < k; ++i) q.push_back(valuation(t, Vertex::inner(i, k - i)));
  q.push_back(t.label(Vertex::root(k)));
  return q;
}

DecoratedWord tree_normal_form(const CTree& t) {
  if (!validate(t).empty()) throw std::invalid_argument("tree is not valid");
  const std::vector<int> q = strand_valuations(t);
  DecoratedWord w;
  for (auto it = q.rbegin(); it != q.rend(); ++it)
    w.push_back(block({0, *it, 0}, t.n()));
  return w;
}

CTree standard_tree(const std::vector<int>& a, int n) {
  const int k = int(a.size());
  if (k < 1) throw std::invalid_argument("standard tree needs a_1 .. a_k");
  for (int i = 0; i < k; ++i) {
    if (a[i] < 0 || a[i] > n || (i && a[i] > a[i - 1]))
      throw std::invalid_argument("standard tree needs n >= a_1 >= ... >= a_k >= 0");
  }
  CTree t(k, n);
  // a is 0-based here: a_j is a[j-1], with a_{k+1} = 0.
  auto at = [&](int j) { return j >= 1 && j <= k ? a[j - 1] : 0; };
  for (int i = 1; i <= k; ++i) {
    t.set_label(Vertex::root(i), at(k));
    for (int m = 1; i + m <= k; ++m)
      t.set_label(Vertex::outer(i, m), at(k - m) - at(k - m + 1));
  }
  return t;
}

bool is_standard(const CTree& t) {
  const std::vector<int> q = strand_valuations(t);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < 0 || q[i] > t.n() || (i && q[i] > q[i - 1])) return false;
  return t == standard_tree(q, t.n());
}

CTree truncate(const CTree& t, int rank) {
  if (rank < 1 || rank > t.rank()) throw std::invalid_argument("bad truncation rank");
  CTree out(rank, t.n());
  for (const Vertex& v : out.vertices()) out.set_label(v, t.label(v));
  return out;
}

namespace {

CTree extend(const CTree& t, int rank) {
  CTree out(rank, t.n());
  for (const Vertex& v : t.vertices()) out.set_label(v, t.label(v));
  return out;
}

}  // namespace

CTree standardize_truncation(const CTree& t) {
  if (t.rank() < 2) throw std::invalid_argument("needs rank at least 2");
  if (!validate(t).empty()) throw std::invalid_argument("tree is not valid");
  const CTree q = standard_tree(strand_valuations(truncate(t, t.rank() - 1)), t.n());
  CTree out = t;
  for (const Vertex& v : q.vertices()) out.set_label(v, q.label(v));
  return out;
}

CTree fold_last_levels(const CTree& t) {
  const int k = t.rank() - 1;
  if (k < 1) throw std::invalid_argument("needs rank at least 2");
  if (!validate(t).empty()) throw std::invalid_argument("tree is not valid");
  if (!is_standard(truncate(t, k)))
    throw std::invalid_argument("truncation is not a standard tree");

  const std::vector<int> q = strand_valuations(t);
  CTree out = t;
  for (int i = 1; i <= k; ++i) {
    out.set_label(outer_on_level(k, k - i), t.label(outer_on_level(k + 1, k - i)));
  }
  for (int i = 1; i <= k; ++i) {
    const Vertex below = outer_on_level(k + 1, k - i);  // (i+1).(k-i) of t
    out.set_label(Vertex::outer(i, k + 1 - i), q[i - 1] - valuation(t, below));
    out.set_label(Vertex::inner(i, k + 1 - i), 0);
  }
  out.set_label(Vertex::root(k + 1), t.label(Vertex::root(k + 1)));
  return out;
}

CTree encode(const DecoratedWord& u, int n) {
  if (u.empty()) throw std::invalid_argument("cannot encode the empty word");
  for (const Column& c : u)
    if (!is_admissible(c, n))
      throw std::invalid_argument(format_column(c) + " is not admissible");
  if (!is_highest_weight(u, n))
    throw std::invalid_argument(format_word(u) + " is not of highest weight");

  CTree t(1, n);
  for (int r = 1; r <= int(u.size()); ++r) {
    if (r > 1) t = extend(t, r);
    const Column& col = u[r - 1];
    std::vector<Vertex> slots;
    slots.push_back(Vertex::root(r));
    for (int i = 1; i < r; ++i) {
      slots.push_back(Vertex::outer(i, r - i));
      slots.push_back(Vertex::inner(i, r - i));
    }
    for (std::size_t len = 1; len <= col.size(); ++len) {
      const Column prefix(col.begin(), col.begin() + len);
      std::vector<CTree> hits;
      for (const Vertex& v : slots) {
        CTree cand = t;
        cand.set_label(v, t.label(v) + 1);
        if (!is_n_labeling(cand) || level_reading(cand, r) != prefix) continue;
        if (!validate(cand).empty()) continue;
        hits.push_back(std::move(cand));
      }
      if (hits.size() != 1)
        throw std::logic_error(std::to_string(hits.size()) +
                               " candidate vertices while encoding " +
                               format_word(u));
      t = std::move(hits.front());
    }
  }
  return t;
}

namespace {

void grow(CTree& t, const std::vector<Vertex>& vs, std::size_t at,
          std::vector<CTree>& out) {
  if (at == vs.size()) {
    if (validate(t).empty()) out.push_back(t);
    return;
  }
  const Vertex& v = vs[at];
  const int base = v.depth == 0 ? 0 : valuation(t, {v.strand, v.depth - 1});
  // Keep the strand prefix sums inside 0..n while choosing the label.
  const int top = v.is_inner() ? base : t.n() - base;
  for (int s = 0; s <= top; ++s) {
    t.set_label(v, s);
    grow(t, vs, at + 1, out);
  }
  t.set_label(v, 0);
}

}  // namespace

std::vector<CTree> enumerate_trees(int rank, int n, unsigned jobs) {
  CTree seed(rank, n);
  const std::vector<Vertex> vs = seed.vertices();
  std::vector<std::vector<CTree>> parts(n + 1);
  auto work = [&](int root) {
    CTree t = seed;
    t.set_label(vs[0], root);
    grow(t, vs, 1, parts[root]);
  };
  jobs = std::max(1u, jobs);
  for (int first = 0; first <= n; first += int(jobs)) {
    std::vector<std::thread> pool;
    for (int r = first; r <= n && r < first + int(jobs); ++r) {
      if (jobs == 1) work(r);
      else pool.emplace_back(work, r);
    }
    for (auto& th : pool) th.join();
  }
  std::vector<CTree> out;
  for (auto& p : parts)
    for (auto& t : p) out.push_back(std::move(t));
  return out;
}

}  // namespace placticc
