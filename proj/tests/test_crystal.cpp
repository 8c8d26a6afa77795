#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "placticc/crystal.hpp"
#include "placticc/insertion.hpp"

using namespace placticc;

namespace {

std::vector<PlainWord> all_words(int n, std::size_t len) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.push_back(i);
  for (int i = n; i >= 1; --i) alphabet.push_back(-i);
  std::vector<PlainWord> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<PlainWord> next;
    for (const PlainWord& w : out)
      for (Letter x : alphabet) {
        next.push_back(w);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("crystal") {
  TEST_CASE("signature examples") {
    Signature s = signature({1, 2}, 1, 2);
    CHECK(s.p == 0);
    CHECK(s.q == 0);
    CHECK_FALSE(s.e_position);
    s = signature({2, 1}, 1, 2);
    CHECK(s.p == 1);
    CHECK(s.q == 1);
    CHECK(s.e_position == 0u);
    CHECK(s.f_position == 1u);
    s = signature({}, 1, 2);
    CHECK(s.p + s.q == 0);
  }

  TEST_CASE("apply on letters and words") {
    CHECK(apply(PlainWord{1}, Op::F, 1, 2) == PlainWord{2});
    CHECK(apply(PlainWord{1, 1}, Op::F, 1, 2) == PlainWord{2, 1});
    CHECK(apply(PlainWord{2}, Op::F, 2, 2) == PlainWord{-2});
    CHECK(apply(PlainWord{-2}, Op::F, 1, 2) == PlainWord{-1});
    CHECK_FALSE(apply(PlainWord{-1}, Op::F, 1, 2));
    CHECK(phi_eps(PlainWord{2, 1}, 1, 2) == std::pair{1, 1});
    CHECK(phi_eps(PlainWord{1, 2}, 1, 2) == std::pair{0, 0});
    CHECK(phi_eps(PlainWord{}, 1, 2) == std::pair{0, 0});
    CHECK_THROWS_AS(signature({1}, 3, 2), std::domain_error);
  }

  TEST_CASE("highest weight") {
    CHECK(highest_weight(PlainWord{2, 1}, 2) == PlainWord{1, 1});
    CHECK(highest_weight(PlainWord{1, 2}, 2) == PlainWord{1, 2});
    const DecoratedWord witness{{1, 2}, {1}, {2, -2}};
    for (int i = 1; i <= 2; ++i) CHECK_FALSE(apply(witness, Op::E, i, 2));
    CHECK(highest_weight(witness, 2) == witness);
  }

  TEST_CASE("weight") {
    CHECK(weight(PlainWord{1, 2}, 2) == Weight{1, 1});
    CHECK(weight(PlainWord{2, -2}, 2) == Weight{0, 0});
    CHECK(weight(PlainWord{1, 2, 1, 2, -2}, 2) == Weight{2, 1});
  }

  TEST_CASE("signature rule agrees with the tensor rule") {
    for (std::size_t len = 0; len <= 4; ++len)
      for (const PlainWord& w : all_words(3, len))
        for (int i = 1; i <= 3; ++i) {
          CHECK(apply(w, Op::E, i, 3) == oracle::tensor_e(w, i, 3));
          CHECK(apply(w, Op::F, i, 3) == oracle::tensor_f(w, i, 3));
          const oracle::Stats st = oracle::stats(w, i, 3);
          CHECK(phi_eps(w, i, 3) == std::pair{st.phi, st.eps});
        }
  }

  TEST_CASE("round trip and weight step") {
    for (const PlainWord& w : all_words(2, 4))
      for (int i = 1; i <= 2; ++i) {
        if (auto down = apply(w, Op::F, i, 2)) {
          CHECK(apply(*down, Op::E, i, 2) == w);
          Weight a = weight(w, 2), b = weight(*down, 2);
          if (i < 2) {
            a[i - 1] -= 1;
            a[i] += 1;
          } else {
            a[1] -= 2;
          }
          CHECK(a == b);
        }
        if (auto up = apply(w, Op::E, i, 2)) CHECK(apply(*up, Op::F, i, 2) == w);
      }
  }

  TEST_CASE("highest weight does not depend on the order of raising") {
    for (const PlainWord& w : all_words(2, 4)) {
      std::set<PlainWord> tops, seen{w};
      std::vector<PlainWord> todo{w};
      while (!todo.empty()) {
        PlainWord cur = todo.back();
        todo.pop_back();
        bool any = false;
        for (int i = 1; i <= 2; ++i)
          if (auto up = apply(cur, Op::E, i, 2)) {
            any = true;
            if (seen.insert(*up).second) todo.push_back(*up);
          }
        if (!any) tops.insert(cur);
      }
      CHECK(tops.size() == 1);
      CHECK(*tops.begin() == highest_weight(w, 2));
      CHECK(highest_weight(highest_weight(w, 2), 2) == highest_weight(w, 2));
    }
  }

  TEST_CASE("decorated words act through the reading") {
    std::mt19937_64 rng(7);
    const auto gens = admissible_columns(3, false);
    for (int trial = 0; trial < 500; ++trial) {
      const DecoratedWord w = oracle::random_word(rng, gens, 1 + trial % 5);
      for (int i = 1; i <= 3; ++i)
        for (Op op : {Op::E, Op::F}) {
          auto d = apply(w, op, i, 3);
          auto p = apply(reading(w), op, i, 3);
          REQUIRE(bool(d) == bool(p));
          if (!d) continue;
          CHECK(reading(*d) == *p);
          CHECK(d->size() == w.size());
          for (const Column& c : *d) CHECK(is_admissible(c, 3));
        }
    }
  }

  TEST_CASE("highest-weight decorated words are products of c(a)") {
    std::mt19937_64 rng(11);
    const auto gens = admissible_columns(3, false);
    for (int trial = 0; trial < 300; ++trial) {
      const DecoratedWord hw =
          highest_weight(oracle::random_word(rng, gens, 1 + trial % 4), 3);
      const DecoratedWord nf = to_word(normal_form(hw, 3));
      for (std::size_t j = 0; j < nf.size(); ++j) {
        CHECK(nf[j] == block({0, int(nf[j].size()), 0}, 3));
        if (j) CHECK(nf[j - 1].size() <= nf[j].size());
      }
    }
  }

  TEST_CASE("component is closed and bounded") {
    const auto comp = component({1}, 2);
    CHECK(comp.size() == 4);
    CHECK_THROWS_AS(component({1, 1, 1}, 3, 5), std::length_error);
  }
}
