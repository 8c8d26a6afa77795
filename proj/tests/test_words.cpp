#include <doctest.h>

#include "oracles.hpp"
#include "placticc/insertion.hpp"
#include "placticc/words.hpp"

using namespace placticc;

TEST_SUITE("words") {
  TEST_CASE("n_z counts Set_z") {
    CHECK(n_z({2, 3, -3}, 3, 3) == 3);
    CHECK(n_z({}, 2, 3) == 0);
    CHECK(n_z({1, -3}, 1, 3) == 1);
    CHECK_THROWS_AS(n_z({1}, 0, 3), std::domain_error);
    CHECK_THROWS_AS(n_z({1}, 4, 3), std::domain_error);

    for (int n = 1; n <= 4; ++n)
      for (const Column& c : oracle::all_columns(n))
        for (int z = 1; z <= n; ++z) {
          CHECK(n_z(c, z, n) == oracle::nz_scan(c, z));
          if (z < n) CHECK(n_z(c, z, n) <= n_z(c, z + 1, n));
        }
  }

  TEST_CASE("admissibility") {
    CHECK(is_admissible({1, -3}, 3));
    CHECK(is_admissible({1}, 5));
    CHECK_FALSE(is_admissible({1, -1}, 1));
    CHECK(is_admissible({}, 2));
    CHECK_FALSE(is_admissible({}, 2, true));
    CHECK_THROWS_AS(is_admissible({2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_admissible({4}, 3), std::invalid_argument);

    const std::size_t expect[] = {0, 3, 10, 35, 126};
    for (int n = 1; n <= 4; ++n) {
      CHECK(admissible_columns(n, false).size() == expect[n]);
      CHECK(admissible_columns(n, true).size() == expect[n] - 1);
      for (const Column& c : oracle::all_columns(n))
        CHECK(is_admissible(c, n) == oracle::admissible_scan(c, n));
    }
    const auto one = admissible_columns(1, true);
    CHECK(one == std::vector<Column>{{1}, {-1}});
  }

  TEST_CASE("almost admissible") {
    CHECK(is_almost_admissible({1, 2, -2}, 2));
    CHECK(is_almost_admissible({1, -1}, 3));
    CHECK_FALSE(is_almost_admissible({1, 2}, 2));
    // every strict factor must be admissible
    CHECK_FALSE(is_almost_admissible({1, 2, -2, -1}, 2));
  }

  TEST_CASE("block columns") {
    CHECK(block({3, 1, 0}, 4) == Column{4});
    CHECK(block({4, 0, 2}, 4) == Column{-4, -3});
    CHECK(block({0, 0, 0}, 4).empty());
    CHECK(block({1, 2, 2}, 3) == Column{2, 3, -3, -2});
    CHECK_THROWS_AS(block({3, 2, 0}, 4), std::domain_error);
    CHECK_THROWS_AS(block({0, 1, 2}, 4), std::domain_error);

    for (int n = 1; n <= 4; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (int c = 0; a + b + c <= n; ++c) {
            Column left = block({a, b, 0}, n), right = block({a + b, c, 0}, n);
            left.insert(left.end(), right.begin(), right.end());
            CHECK(left == block({a, b + c, 0}, n));
          }
  }

  TEST_CASE("block criterion on a non-admissible level") {
    CHECK_FALSE(block_admissible({block({0, 2, 0}, 4), block({3, 1, 0}, 4),
                                  block({4, 0, 2}, 4)},
                                 4));
    CHECK(block_admissible({block({0, 3, 0}, 3)}, 3));
    CHECK(block_admissible({block({0, 2, 0}, 3), block({3, 0, 1}, 3)}, 3));
    CHECK_THROWS_AS(block_admissible({Column{1, 3}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(block_admissible({Column{-2}, Column{1}}, 3), std::invalid_argument);
  }

  TEST_CASE("precedes on small examples") {
    CHECK_FALSE(precedes({2, 3, -3}, {2, 3, -2}, 3));
    CHECK(precedes({1}, {1}, 3));
    CHECK(precedes({1, 2}, {1}, 3));
    CHECK(precedes({1, 2}, {}, 3));
    CHECK(precedes({}, {}, 3));
    CHECK_FALSE(precedes({}, {1}, 3));
    // columns of the symplectic tableau with rows 1 1 2 / 2 -3
    CHECK(precedes({1, 2}, {1, -3}, 3));
    CHECK(precedes({1, -3}, {2}, 3));
    CHECK_THROWS_AS(precedes({1, -1}, {1}, 1), std::invalid_argument);
  }

  TEST_CASE("precedes agrees with the normal-form oracle") {
    for (int n = 1; n <= 3; ++n) {
      const auto cols = admissible_columns(n, false);
      for (const Column& c : cols)
        for (const Column& d : cols) {
          INFO(format_column(c), " ", format_column(d));
          CHECK(precedes(c, d, n) == oracle::precedes_by_normal_form(c, d, n));
          const bool fixed = insert_pair(c, d, n) == ColumnPair{c, d};
          CHECK(precedes(d, c, n) == fixed);
        }
    }
  }

  TEST_CASE("format and parse") {
    CHECK(format_column({1, 2, -2}) == "[1 2 -2]");
    CHECK(format_column({}) == "[]");
    CHECK(parse_word("[1][2 3][2]", 3) == DecoratedWord{{1}, {2, 3}, {2}});
    CHECK(parse_word("[] [2] [1 2 3]", 3) == DecoratedWord{{}, {2}, {1, 2, 3}});
    CHECK(parse_plain("1 2 -2", 2) == PlainWord{1, 2, -2});

    for (int n = 1; n <= 3; ++n)
      for (const Column& c : admissible_columns(n, false))
        CHECK(parse_column(format_column(c), n) == c);

    auto pos_of = [](const char* text, int n) -> long {
      try {
        parse_word(text, n);
      } catch (const ParseError& e) {
        return long(e.position());
      }
      return -1;
    };
    CHECK(pos_of("[1 4]", 3) == 3);
    CHECK(pos_of("[1 2", 3) == 4);
    CHECK(pos_of("[2 1]", 3) == 0);
    CHECK(pos_of("[1 -1]", 1) == 0);
    CHECK(pos_of("[1]x", 3) == 3);
    CHECK(pos_of("", 3) == 0);
    CHECK(pos_of("[0]", 3) == 1);
  }
}
