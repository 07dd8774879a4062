#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symforms/field.hpp"
#include "symforms/matrix.hpp"

using namespace symforms;

namespace {

const FieldSpec Q{0};
const FieldSpec F2{2};
const FieldSpec F3{3};
const FieldSpec F5{5};

FieldScalar s(FieldSpec f, long long v) { return FieldScalar(f, v); }

ExactMatrix from_rows(FieldSpec f,
                      std::vector<std::vector<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = s(f, rows[i][j]);
  return m;
}

bool is_zero_vector(const std::vector<FieldScalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("field spec validation") {
  CHECK_NOTHROW(FieldSpec(0));
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(101));
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(91), std::invalid_argument);  // 7*13
}

TEST_CASE("scalar arithmetic") {
  SUBCASE("negate in characteristic 2 is the identity") {
    CHECK(-s(F2, 1) == s(F2, 1));
    CHECK(-s(F2, 0) == s(F2, 0));
  }
  SUBCASE("rational inverse") {
    FieldScalar two_thirds(Q, BigRational(2, 3));
    CHECK(two_thirds.inverse() == FieldScalar(Q, BigRational(3, 2)));
    CHECK(two_thirds * two_thirds.inverse() == s(Q, 1));
  }
  SUBCASE("mod-5 product") { CHECK(s(F5, 3) * s(F5, 4) == s(F5, 2)); }
  SUBCASE("residues reduced on construction") {
    CHECK(s(F5, 12) == s(F5, 2));
    CHECK(s(F5, -1) == s(F5, 4));
  }
  SUBCASE("mixed fields rejected") {
    CHECK_THROWS_AS(s(F2, 1) + s(F3, 1), std::invalid_argument);
  }
  SUBCASE("zero has no inverse") {
    CHECK_THROWS_AS(s(Q, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(s(F3, 0).inverse(), std::domain_error);
  }
  SUBCASE("inverses in every prime field") {
    for (auto f : {F2, F3, F5}) {
      for (long long v = 1; v < (long long)f.characteristic(); ++v) {
        CHECK(s(f, v) * s(f, v).inverse() == FieldScalar::one(f));
      }
    }
  }
}

TEST_CASE("kernel examples") {
  SUBCASE("identity has trivial kernel") {
    CHECK(kernel_basis(ExactMatrix::identity(Q, 3)).empty());
  }
  SUBCASE("zero matrix has full kernel") {
    auto ker = kernel_basis(ExactMatrix(Q, 2, 4));
    REQUIRE(ker.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(ker[i][j] == (i == j ? s(Q, 1) : s(Q, 0)));
      }
    }
  }
  SUBCASE("all-ones 2x2 over F2") {
    auto m = from_rows(F2, {{1, 1}, {1, 1}});
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<FieldScalar>{s(F2, 1), s(F2, 1)});
  }
  SUBCASE("rational elimination with fractions") {
    // x + 2y + 3z = 0, 2x + 5y + 7z = 0 -> kernel spanned by (-1, -1, 1)
    auto m = from_rows(Q, {{1, 2, 3}, {2, 5, 7}});
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<FieldScalar>{s(Q, -1), s(Q, -1), s(Q, 1)});
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix::identity(F3, 5)) == 5);
  CHECK(rank(ExactMatrix(Q, 3, 7)) == 0);
  CHECK(rank(from_rows(F2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("rank-nullity and exact kernel membership on random matrices") {
  std::mt19937 rng(20260824);
  for (auto f : {Q, F2, F3, F5}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 6;
      std::size_t c = 1 + rng() % 6;
      ExactMatrix m(f, r, c);
      long long bound = f.is_rational() ? 9 : (long long)f.characteristic();
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m.at(i, j) = s(f, (long long)(rng() % (2 * bound + 1)) - bound);
      auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
    }
  }
}

TEST_CASE("kernel basis is deterministic and reduced") {
  auto m = from_rows(F3, {{1, 2, 0, 1}, {2, 1, 1, 0}, {0, 0, 0, 0}});
  auto k1 = kernel_basis(m);
  auto k2 = kernel_basis(m);
  CHECK(k1 == k2);
  // Reduced echelon form: each kernel vector has a 1 in its own free column
  // and 0 in every other kernel vector's free column.
  std::vector<std::size_t> free_cols;
  for (const auto& v : k1) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    // the free column is where the vector first holds exactly 1 among
    // coordinates not touched by earlier vectors
    for (std::size_t c = 0; c < v.size(); ++c) {
      bool is_own_free = false;
      if (v[c].is_one()) {
        is_own_free = true;
        for (const auto& w : k1)
          if (&w != &v && !w[c].is_zero()) is_own_free = false;
      }
      if (is_own_free) {
        free_cols.push_back(c);
        break;
      }
    }
    (void)lead;
  }
  CHECK(free_cols.size() == k1.size());
}

TEST_CASE("sparse-row entry point matches the dense one") {
  auto m = from_rows(Q, {{0, 1, -1}, {1, 0, -1}});
  std::vector<SparseRow> rows = {
      {{1, s(Q, 1)}, {2, s(Q, -1)}},
      {{0, s(Q, 1)}, {2, s(Q, -1)}},
  };
  CHECK(kernel_basis(m) == kernel_basis(Q, 3, rows));
  CHECK(rank(m) == rank(Q, 3, rows));
}
