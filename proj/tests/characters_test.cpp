#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "kronkit/characters.hpp"
#include "kronkit/errors.hpp"
#include "oracles.hpp"

using namespace kronkit;

namespace {

Partition ones(std::int64_t n) { return Partition(std::vector<Part>(static_cast<std::size_t>(n), 1)); }

} // namespace

TEST_CASE("class sizes")
{
  CHECK(class_size(CycleType(Partition{1, 1, 1})) == 1);
  CHECK(class_size(CycleType(Partition{3})) == 2);
  CHECK(class_size(CycleType(Partition{2, 1})) == 3);

  for (int n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& rho : conjugacy_classes(n))
      total += class_size(CycleType(rho));
    REQUIRE(total == factorial(static_cast<unsigned long>(n)));
  }
  for (int n = 1; n <= 7; ++n)
    for (const auto& [rho, size] : oracle::class_sizes_by_enumeration(n))
      REQUIRE(class_size(CycleType(rho)) == size);
}

TEST_CASE("cycle type sign")
{
  CHECK(CycleType(Partition{1, 1, 1}).sign() == 1);
  CHECK(CycleType(Partition{2, 1}).sign() == -1);
  CHECK(CycleType(Partition{3}).sign() == 1);
  CHECK(CycleType(Partition{2, 2}).sign() == 1);
}

TEST_CASE("Murnaghan-Nakayama values")
{
  CHECK(mn_value(Partition{2, 1}, CycleType(Partition{1, 1, 1})) == 2);
  CHECK(oracle::count_standard_tableaux(Partition{2, 1}) == 2);
  CHECK(mn_value(Partition{2, 1}, CycleType(Partition{3})) == -1);
  for (const auto& rho : conjugacy_classes(6))
    CHECK(mn_value(Partition{6}, CycleType(rho)) == 1);
  CHECK(mn_value(Partition{}, CycleType(Partition{})) == 1);
  CHECK_THROWS_AS(mn_value(Partition{2, 1}, CycleType(Partition{2})), SizeMismatch);
}

TEST_CASE("border strip removal")
{
  // The only 3-strip of (3,2) spans both rows, leaving (1,1).
  const auto strips = remove_border_strips(Partition{3, 2}, 3);
  REQUIRE(strips.size() == 1);
  CHECK(strips[0].first == Partition{1, 1});
  CHECK(strips[0].second == -1);
  // (2,2) has a single 3-hook, at the corner cell.
  const auto square = remove_border_strips(Partition{2, 2}, 3);
  REQUIRE(square.size() == 1);
  CHECK(square[0] == std::make_pair(Partition{1}, -1));
  CHECK(remove_border_strips(Partition{2, 2}, 4).empty());
  CHECK(remove_border_strips(Partition{}, 1).empty());
  const auto ones3 = remove_border_strips(Partition{1, 1, 1}, 3);
  REQUIRE(ones3.size() == 1);
  CHECK(ones3[0] == std::make_pair(Partition{}, 1));
}

TEST_CASE("values agree with the Jacobi-Trudi oracle")
{
  for (int n = 0; n <= 7; ++n) {
    const auto table = character_table(n);
    for (const auto& lambda : table->irreps())
      for (const auto& rho : table->classes()) {
        const BigInt want = oracle::jacobi_trudi_character(lambda, rho);
        REQUIRE(table->value(lambda, rho) == want);
        REQUIRE(mn_value(lambda, CycleType(rho)) == want);
      }
  }
}

TEST_CASE("character table layout")
{
  const auto t2 = character_table(2);
  CHECK(t2->classes() == std::vector<Partition>{Partition{1, 1}, Partition{2}});
  CHECK(t2->irreps() == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(t2->values() == std::vector<std::vector<BigInt>>{{1, 1}, {1, -1}});

  const auto t0 = character_table(0);
  CHECK(t0->values() == std::vector<std::vector<BigInt>>{{1}});

  const auto t3 = character_table(3);
  CHECK(t3->row(Partition{2, 1}) == std::vector<BigInt>{2, 0, -1});
  CHECK_THROWS_AS(t3->row(Partition{2, 2}), SizeMismatch);
}

TEST_CASE("orthogonality, dimensions and conjugation twist")
{
  for (int n = 0; n <= 8; ++n) {
    const auto table = character_table(n);
    const auto& irreps = table->irreps();
    for (std::size_t a = 0; a < irreps.size(); ++a)
      for (std::size_t b = 0; b < irreps.size(); ++b)
        REQUIRE(inner_product(table->character(irreps[a]), table->character(irreps[b])) ==
                (a == b ? 1 : 0));
    for (const auto& lambda : irreps) {
      const auto twisted = table->row(conjugate(lambda));
      for (std::size_t c = 0; c < table->classes().size(); ++c)
        REQUIRE(twisted[c] == CycleType(table->classes()[c]).sign() * table->row(lambda)[c]);
    }
  }
  for (int n = 0; n <= 10; ++n)
    for_each_partition(n, {}, [&](const Partition& lambda) {
      REQUIRE(mn_value(lambda, CycleType(ones(n))) == dimension(lambda));
      REQUIRE(dimension(lambda) == oracle::count_standard_tableaux(lambda));
    });
}

TEST_CASE("dimension examples")
{
  CHECK(dimension(Partition{5}) == 1);
  CHECK(dimension(Partition{2, 1}) == 2);
  CHECK(dimension(Partition{2, 2}) == 2);
  CHECK(dimension(Partition{}) == 1);
}

TEST_CASE("inner products")
{
  const auto c21 = irreducible_character(Partition{2, 1});
  const auto c3 = irreducible_character(Partition{3});
  CHECK(inner_product(c21, c21) == 1);
  CHECK(inner_product(c21, c3) == 0);
  CHECK(inner_product(pointwise_product(c21, c21), c21) == 1);
  CHECK_THROWS_AS(inner_product(c21, irreducible_character(Partition{2})), SizeMismatch);

  // A class function that is not a character: indicator of the identity.
  CharacterVector delta{3, {1, 0, 0}};
  CHECK_THROWS_AS(inner_product(delta, c3), InternalError);
}

TEST_CASE("character vector lookup")
{
  const auto c = irreducible_character(Partition{3, 1});
  CHECK(c.at(CycleType(Partition{1, 1, 1, 1})) == 3);
  CHECK(c.at(CycleType(Partition{4})) == -1);
  CHECK_THROWS_AS(c.at(CycleType(Partition{3})), SizeMismatch);
}

TEST_CASE("skew characters")
{
  CHECK(skew_character(skew(Partition{3, 1}, Partition{2, 1})) == Decomposition{{Partition{1}, 1}});
  CHECK(skew_character(skew(Partition{3, 1}, Partition{3, 1})) == Decomposition{{Partition{}, 1}});
  CHECK(oracle::induced_lr(Partition{2, 2}, Partition{1}, Partition{2, 1}) == 1);
  CHECK(oracle::induced_lr(Partition{2, 2}, Partition{1}, Partition{3}) == 0);
  CHECK(oracle::induced_lr(Partition{2, 2}, Partition{1}, Partition{1, 1, 1}) == 0);
  CHECK(skew_character(skew(Partition{2, 2}, Partition{1})) == Decomposition{{Partition{2, 1}, 1}});

  // sum_tau c * f^tau counts the standard fillings of the skew shape.
  const auto sc = skew_character(skew(Partition{4, 2, 1}, Partition{2, 1}));
  BigInt degree = 0;
  for (const auto& [tau, c] : sc)
    degree += c * dimension(tau);
  const auto standard = oracle::count_fillings(
      Partition{4, 2, 1}, Partition{2, 1}, 4, [](const auto& cells, const std::vector<int>& v) {
        std::map<std::pair<std::size_t, Part>, int> at;
        std::vector<int> seen(5, 0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          at[cells[i]] = v[i];
          if (seen[static_cast<std::size_t>(v[i])]++)
            return false;
        }
        for (const auto& [cell, x] : at) {
          if (auto it = at.find({cell.first, cell.second + 1}); it != at.end() && it->second <= x)
            return false;
          if (auto it = at.find({cell.first + 1, cell.second}); it != at.end() && it->second <= x)
            return false;
        }
        return true;
      });
  CHECK(degree == static_cast<unsigned long>(standard));
}

TEST_CASE("evaluate decomposition")
{
  const auto v = evaluate(Decomposition{{Partition{3}, 1}, {Partition{2, 1}, 1}}, 3);
  // Permutation character on 3 points: fixed points per class.
  CHECK(v.values == std::vector<BigInt>{3, 1, 0});
}

TEST_CASE("concurrent table access is value-transparent")
{
  std::vector<std::thread> pool;
  std::vector<BigInt> seen(8);
  for (int k = 0; k < 8; ++k)
    pool.emplace_back([&seen, k] {
      const auto t = character_table(9 + k % 3);
      seen[static_cast<std::size_t>(k)] = t->value(t->irreps()[3], t->classes()[2]);
    });
  for (auto& t : pool)
    t.join();
  for (int k = 0; k < 8; ++k) {
    const auto t = character_table(9 + k % 3);
    CHECK(seen[static_cast<std::size_t>(k)] ==
          mn_value(t->irreps()[3], CycleType(t->classes()[2])));
  }
}
