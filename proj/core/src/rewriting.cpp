#include "placticc/rewriting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

#include "placticc/crystal.hpp"

namespace placticc {

const char* variant_name(Variant v) {
  return v == Variant::ACol ? "acol" : "acol_bullet";
}

Variant parse_variant(const std::string& s) {
  if (s == "acol") return Variant::ACol;
  if (s == "acol_bullet" || s == "acol-bullet" || s == "bullet")
    return Variant::ACol_bullet;
  throw std::invalid_argument("unknown variant '" + s +
                              "' (expected acol or acol_bullet)");
}

Polygraph::Polygraph(int n, Variant v) : n_(n), variant_(v) {
  cols_ = admissible_columns(n, false);
  const std::size_t m = cols_.size();
  for (std::size_t i = 0; i < m; ++i) index_.emplace(cols_[i], int(i));
  reducible_.assign(m * m, 0);
  rewrite_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const bool red = !precedes(cols_[b], cols_[a], n);
      reducible_[a * m + b] = red;
      if (red) {
        auto [d1, d2] = insert_pair(cols_[a], cols_[b], n);
        rewrite_[a * m + b] = {index_.at(d1), index_.at(d2)};
      } else {
        rewrite_[a * m + b] = {int(a), int(b)};
      }
    }
  }
}

std::vector<Column> Polygraph::generators() const {
  if (variant_ == Variant::ACol) return cols_;
  return {cols_.begin() + 1, cols_.end()};
}

int Polygraph::id(const Column& c) const {
  auto it = index_.find(c);
  if (it == index_.end())
    throw std::invalid_argument(format_column(c) +
                                " is not an admissible column of rank " +
                                std::to_string(n_));
  return it->second;
}

ColumnPair Polygraph::rewrite(const Column& a, const Column& b) const {
  auto [x, y] = rewrite(id(a), id(b));
  return {cols_[x], cols_[y]};
}

bool Polygraph::allows(const DecoratedWord& w) const {
  for (const Column& c : w) {
    if (!index_.count(c)) return false;
    if (variant_ == Variant::ACol_bullet && c.empty()) return false;
  }
  return true;
}

bool Polygraph::is_normal(const DecoratedWord& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (reducible(w[i], w[i + 1])) return false;
  return true;
}

DecoratedWord project(const DecoratedWord& w) {
  DecoratedWord out;
  for (const Column& c : w)
    if (!c.empty()) out.push_back(c);
  return out;
}

std::size_t step_limit(std::size_t length) {
  static const std::optional<std::size_t> forced = []() -> std::optional<std::size_t> {
    const char* env = std::getenv("PLACTICC_STEP_LIMIT");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end) return std::nullopt;
    return static_cast<std::size_t>(v);
  }();
  if (forced) return *forced;
  return length * length * (3 * length + 3);
}

Strategy run_strategy(const Polygraph& p, const DecoratedWord& w,
                      StrategyKind kind) {
  if (!p.allows(w))
    throw std::invalid_argument(format_word(w) + " is not a word of " +
                                variant_name(p.variant()));
  const bool bullet = p.variant() == Variant::ACol_bullet;
  const std::size_t limit = step_limit(w.size());

  std::vector<int> ids;
  for (const Column& c : w) ids.push_back(p.id(c));

  Strategy s;
  s.kind = kind;
  s.words.push_back(w);
  for (;;) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      if (p.reducible(ids[i], ids[i + 1])) {
        at = i;
        if (kind == StrategyKind::Leftmost) break;
      }
    }
    if (!at) break;
    if (s.trace.size() >= limit)
      throw TerminationError("step limit " + std::to_string(limit) +
                             " exceeded on " + format_word(w));

    const std::size_t i = *at;
    auto [d1, d2] = p.rewrite(ids[i], ids[i + 1]);
    s.trace.push_back({i,
                       {p.column(ids[i]), p.column(ids[i + 1])},
                       {p.column(d1), p.column(d2)}});
    ids.erase(ids.begin() + i, ids.begin() + i + 2);
    std::vector<int> put;
    for (int d : {d1, d2})
      if (!bullet || d != 0) put.push_back(d);
    ids.insert(ids.begin() + i, put.begin(), put.end());

    DecoratedWord cur;
    for (int id : ids) cur.push_back(p.column(id));
    s.words.push_back(std::move(cur));
  }
  return s;
}

bool is_branching_source(const Polygraph& p, const DecoratedWord& w) {
  return w.size() == 3 && p.allows(w) && p.reducible(w[0], w[1]) &&
         p.reducible(w[1], w[2]);
}

ConfShape conf(const Polygraph& p, const DecoratedWord& w) {
  if (!is_branching_source(p, w))
    throw std::invalid_argument(format_word(w) +
                                " is not the source of a critical branching");
  return {int(run_strategy(p, w, StrategyKind::Leftmost).trace.size()),
          int(run_strategy(p, w, StrategyKind::Rightmost).trace.size())};
}

int epsilon_count(const Strategy& s) {
  int k = 0;
  for (const RewriteStep& st : s.trace)
    if (!st.before.first.empty() && st.before.second.empty()) ++k;
  return k;
}

bool check_epsilon_bound(const Strategy& s) {
  const long t = s.words.empty() ? 0 : long(s.words.front().size());
  return 4L * epsilon_count(s) <= t * t * (3 * t + 1);
}

int projected_length(const Strategy& s) {
  return int(s.trace.size()) - epsilon_count(s);
}

bool projection_is_valid(const Strategy& s, const Polygraph& p) {
  for (std::size_t k = 0; k < s.trace.size(); ++k) {
    const RewriteStep& st = s.trace[k];
    const DecoratedWord before = project(s.words[k]);
    const DecoratedWord after = project(s.words[k + 1]);
    if (!st.before.first.empty() && st.before.second.empty()) {
      if (before != after) return false;
      continue;
    }
    if (st.before.first.empty() || !p.reducible(st.before.first, st.before.second))
      return false;
    // Locate the pair inside the projected word and replay the bullet rule.
    std::size_t j = 0;
    for (std::size_t i = 0; i < st.position; ++i)
      if (!s.words[k][i].empty()) ++j;
    DecoratedWord replay(before.begin(), before.begin() + j);
    for (const Column& c : {st.after.first, st.after.second})
      if (!c.empty()) replay.push_back(c);
    replay.insert(replay.end(), before.begin() + j + 2, before.end());
    if (replay != after) return false;
  }
  return true;
}

std::vector<DecoratedWord> enumerate_branchings(const Polygraph& p,
                                                int max_rank) {
  if (p.rank() > max_rank)
    throw std::length_error("refusing to enumerate branchings at rank " +
                            std::to_string(p.rank()) + " (cap " +
                            std::to_string(max_rank) + ")");
  const int first = p.variant() == Variant::ACol ? 0 : 1;
  const int m = int(p.size());
  std::vector<std::pair<std::string, DecoratedWord>> keyed;
  for (int t = first; t < m; ++t)
    for (int u = first; u < m; ++u) {
      if (!p.reducible(t, u)) continue;
      for (int v = first; v < m; ++v) {
        if (!p.reducible(u, v)) continue;
        DecoratedWord w{p.column(t), p.column(u), p.column(v)};
        keyed.emplace_back(format_word(w), std::move(w));
      }
    }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DecoratedWord> out;
  out.reserve(keyed.size());
  for (auto& kw : keyed) out.push_back(std::move(kw.second));
  return out;
}

namespace {

std::vector<std::size_t> positions(const Strategy& s) {
  std::vector<std::size_t> out;
  for (const RewriteStep& st : s.trace) out.push_back(st.position);
  return out;
}

}  // namespace

BranchingResult check_branching(const Polygraph& p, const DecoratedWord& w) {
  BranchingResult r;
  r.source = w;
  auto fail = [&r](std::string why) { r.failures.push_back(std::move(why)); };
  if (!is_branching_source(p, w)) {
    fail("not a branching source");
    return r;
  }
  try {
    const Strategy a = run_strategy(p, w, StrategyKind::Leftmost);
    const Strategy b = run_strategy(p, w, StrategyKind::Rightmost);
    r.shape = {int(a.trace.size()), int(b.trace.size())};
    r.normal_form = a.words.back();
    if (a.words.back() != b.words.back()) fail("strategies disagree on the normal form");

    DecoratedWord expect = to_word(normal_form(w, p.rank()));
    if (p.variant() == Variant::ACol_bullet) expect = project(expect);
    if (a.words.back() != expect) fail("normal form differs from insertion");

    if (r.shape.a_len > 4 || r.shape.b_len > 3)
      fail("shape (" + std::to_string(r.shape.a_len) + "," +
           std::to_string(r.shape.b_len) + ") exceeds (4,3)");

    const DecoratedWord hw = highest_weight(w, p.rank());
    const Strategy ha = run_strategy(p, hw, StrategyKind::Leftmost);
    const Strategy hb = run_strategy(p, hw, StrategyKind::Rightmost);
    r.hw_shape = {int(ha.trace.size()), int(hb.trace.size())};
    if (r.hw_shape != r.shape) fail("conf differs from conf of the highest weight");
    if (positions(ha) != positions(a) || positions(hb) != positions(b))
      fail("reduction positions differ from the highest weight");

    if (p.variant() == Variant::ACol) {
      for (const Strategy* s : {&a, &b}) {
        if (!check_epsilon_bound(*s)) fail("epsilon bound violated");
        const long t = long(w.size());
        const long len = long(s->trace.size());
        const long proj = projected_length(*s);
        if (4 * (len - proj) > t * t * (3 * t + 1) || proj > len)
          fail("projection length out of bounds");
        if (!projection_is_valid(*s, p)) fail("projection is not a bullet sequence");
      }
    }
  } catch (const TerminationError& e) {
    fail(e.what());
  }
  return r;
}

CoherenceReport verify_sources(const Polygraph& p,
                               const std::vector<DecoratedWord>& sources,
                               unsigned jobs) {
  std::vector<BranchingResult> results(sources.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < sources.size();)
      results[i] = check_branching(p, sources[i]);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  CoherenceReport rep;
  rep.n = p.rank();
  rep.variant = p.variant();
  rep.total = sources.size();
  for (const BranchingResult& r : results) {
    rep.max_shape.a_len = std::max(rep.max_shape.a_len, r.shape.a_len);
    rep.max_shape.b_len = std::max(rep.max_shape.b_len, r.shape.b_len);
    ++rep.shape_histogram[{r.shape.a_len, r.shape.b_len}];
    for (const std::string& f : r.failures)
      rep.violations.push_back({format_word(r.source), f});
  }
  return rep;
}

CoherenceReport verify_coherence(const Polygraph& p, unsigned jobs,
                                 int max_rank) {
  return verify_sources(p, enumerate_branchings(p, max_rank), jobs);
}

}  // namespace placticc
