#include "placticc/insertion.hpp"

#include <array>

#include "placticc/crystal.hpp"

namespace placticc {

namespace {

bool leq(Letter a, Letter b) { return letter_key(a) <= letter_key(b); }
bool lt(Letter a, Letter b) { return letter_key(a) < letter_key(b); }

using Triple = std::array<Letter, 3>;

std::optional<Triple> match(Relation r, Letter a, Letter b, Letter c, int n) {
  switch (r) {
    case Relation::R1a:  // yzx -> yxz, x <= y < z, z != -x
      if (leq(c, a) && lt(a, b) && b != -c) return Triple{a, c, b};
      break;
    case Relation::R1b:  // xzy -> zxy, x < y <= z, z != -x
      if (lt(a, c) && leq(c, b) && b != -a) return Triple{b, a, c};
      break;
    case Relation::R2a:  // y -(x-1) (x-1) -> y x -x
      if (c >= 1 && c < n && b == -c) {
        const Letter x = c + 1;
        if (leq(x, a) && leq(a, -x)) return Triple{a, x, -x};
      }
      break;
    case Relation::R2b:  // x -x y -> -(x-1) (x-1) y
      if (a > 1 && a <= n && b == -a && leq(a, c) && leq(c, -a))
        return Triple{-(a - 1), a - 1, c};
      break;
    case Relation::R3:
      break;
  }
  return std::nullopt;
}

constexpr std::array<Relation, 4> kLocal = {Relation::R1a, Relation::R1b,
                                            Relation::R2a, Relation::R2b};

Column delete_pair(const Column& w, int n) {
  for (int z = 1; z <= n; ++z) {
    bool both = false, has_z = false;
    for (Letter x : w) {
      if (x == z) has_z = true;
      if (x == -z) both = has_z;
    }
    if (both && n_z(w, z, n) == z + 1) {
      Column out;
      for (Letter x : w)
        if (x != z && x != -z) out.push_back(x);
      return out;
    }
  }
  throw std::logic_error("no deletable pair in " + format_column(w));
}

struct Bump {
  int kind;  // 1, 2 or 3 as in the three highest-weight shapes
  Letter y = 0;
  Column col;
};

Bump bump(const Column& c, Letter x, int n) {
  PlainWord w = c;
  w.push_back(x);
  const PlainWord hw = highest_weight(w, n);
  const Letter p = static_cast<Letter>(c.size());
  const Letter last = hw.back();

  if (last == p + 1) {
    if (!is_admissible(w, n, true))
      throw std::logic_error("case 1 produced " + format_column(w));
    return {1, 0, w};
  }
  if (last == -p) {
    if (!is_almost_admissible(w, n))
      throw std::logic_error(format_column(w) + " is not almost admissible");
    return {3, 0, delete_pair(w, n)};
  }
  if (last != 1)
    throw std::logic_error("unexpected highest weight " + format_plain(hw));

  for (std::size_t s = w.size() >= 3 ? w.size() - 3 + 1 : 0; s-- > 0;) {
    std::optional<Triple> hit;
    for (Relation r : kLocal) {
      if (auto t = match(r, w[s], w[s + 1], w[s + 2], n)) {
        if (hit) throw std::logic_error("two relations match in " + format_plain(w));
        hit = t;
      }
    }
    if (hit) std::copy(hit->begin(), hit->end(), w.begin() + s);
  }
  Column rest(w.begin() + 1, w.end());
  if (!is_admissible(rest, n, true))
    throw std::logic_error("bumping left " + format_plain(w));
  return {2, w.front(), rest};
}

}  // namespace

std::optional<PlainWord> apply_relation(const PlainWord& w, std::size_t at,
                                        int n, Relation* which) {
  check_letters(w, n);
  if (at >= w.size()) return std::nullopt;
  if (at + 3 <= w.size()) {
    for (Relation r : kLocal) {
      if (auto t = match(r, w[at], w[at + 1], w[at + 2], n)) {
        PlainWord out = w;
        std::copy(t->begin(), t->end(), out.begin() + at);
        if (which) *which = r;
        return out;
      }
    }
  }
  Column tail(w.begin() + at, w.end());
  if (is_column(tail) && is_almost_admissible(tail, n)) {
    PlainWord out(w.begin(), w.begin() + at);
    Column cut = delete_pair(tail, n);
    out.insert(out.end(), cut.begin(), cut.end());
    if (which) *which = Relation::R3;
    return out;
  }
  return std::nullopt;
}

ColumnPair insert_letter_column(const Column& c, Letter x, int n) {
  if (!is_admissible(c, n))
    throw std::invalid_argument(format_column(c) + " is not admissible");
  check_letters({x}, n);
  Bump b = bump(c, x, n);
  if (b.kind == 2) return {Column{b.y}, b.col};
  return {Column{}, b.col};
}

bool is_tableau(const Tableau& t, int n) {
  for (const Column& c : t.columns)
    if (!is_admissible(c, n, true)) return false;
  for (std::size_t i = 0; i + 1 < t.columns.size(); ++i)
    if (!precedes(t.columns[i + 1], t.columns[i], n)) return false;
  return true;
}

namespace {

void insert_into(std::vector<Column>& cols, Letter x, int n) {
  if (cols.empty()) {
    cols.push_back(Column{x});
    return;
  }
  Bump b = bump(cols.back(), x, n);
  cols.pop_back();
  switch (b.kind) {
    case 1:
      cols.push_back(std::move(b.col));
      break;
    case 2:
      insert_into(cols, b.y, n);
      cols.push_back(std::move(b.col));
      break;
    default:
      for (Letter y : b.col) insert_into(cols, y, n);
      break;
  }
}

}  // namespace

Tableau insert_tableau(const Tableau& t, Letter x, int n) {
  if (!is_tableau(t, n)) throw std::invalid_argument("not a symplectic tableau");
  check_letters({x}, n);
  Tableau out = t;
  insert_into(out.columns, x, n);
  return out;
}

Tableau product(const Tableau& t1, const Tableau& t2, int n) {
  if (!is_tableau(t1, n) || !is_tableau(t2, n))
    throw std::invalid_argument("not a symplectic tableau");
  Tableau out = t1;
  for (Letter x : tableau_reading(t2)) insert_into(out.columns, x, n);
  return out;
}

Tableau plactic_normal_form(const PlainWord& w, int n) {
  check_letters(w, n);
  Tableau out;
  for (Letter x : w) insert_into(out.columns, x, n);
  return out;
}

ColumnPair insert_pair(const Column& c1, const Column& c2, int n) {
  if (!is_admissible(c1, n) || !is_admissible(c2, n))
    throw std::invalid_argument("insert_pair needs admissible columns");
  std::vector<Column> cols;
  if (!c1.empty()) cols.push_back(c1);
  for (Letter x : c2) insert_into(cols, x, n);
  switch (cols.size()) {
    case 0:
      return {Column{}, Column{}};
    case 1:
      return {Column{}, cols[0]};
    case 2:
      return {cols[0], cols[1]};
    default:
      throw std::logic_error("column insertion produced three columns");
  }
}

PlainWord tableau_reading(const Tableau& t) {
  PlainWord out;
  for (const Column& c : t.columns) out.insert(out.end(), c.begin(), c.end());
  return out;
}

DecoratedWord to_word(const DecoratedElement& e) {
  DecoratedWord w(static_cast<std::size_t>(e.eps_count));
  w.insert(w.end(), e.tableau.columns.begin(), e.tableau.columns.end());
  return w;
}

DecoratedElement normal_form(const DecoratedWord& w, int n) {
  for (const Column& c : w)
    if (!is_admissible(c, n))
      throw std::invalid_argument(format_column(c) + " is not admissible");
  DecoratedElement e;
  e.tableau = plactic_normal_form(reading(w), n);
  e.eps_count = static_cast<int>(w.size()) -
                static_cast<int>(e.tableau.columns.size());
  if (e.eps_count < 0)
    throw std::logic_error("normal form has more columns than the word");
  return e;
}

DecoratedElement decorated_product(const DecoratedElement& a,
                                   const DecoratedElement& b, int n) {
  if (a.eps_count < 0 || b.eps_count < 0)
    throw std::invalid_argument("negative epsilon count");
  DecoratedElement e;
  e.tableau = product(a.tableau, b.tableau, n);
  const int col = static_cast<int>(a.tableau.columns.size() +
                                   b.tableau.columns.size()) -
                  static_cast<int>(e.tableau.columns.size());
  e.eps_count = a.eps_count + b.eps_count + col;
  return e;
}

}  // namespace placticc
