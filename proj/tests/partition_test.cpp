#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kronkit/errors.hpp"
#include "kronkit/partition.hpp"
#include "oracles.hpp"

using namespace kronkit;

TEST_CASE("partition canonical form drops trailing zeros")
{
  CHECK(Partition{3, 2, 1, 0, 0} == Partition{3, 2, 1});
  CHECK(Partition{3, 2, 1, 0, 0}.length() == 3);
  CHECK(Partition{3, 2, 1}.size() == 6);
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({1, 3}), PreconditionError);
  CHECK_THROWS_AS(Partition({2, -1}), PreconditionError);
}

TEST_CASE("padded view")
{
  CHECK(Partition{2, 1}.padded(4) == std::vector<Part>{2, 1, 0, 0});
  CHECK_THROWS_AS(Partition({2, 1}).padded(1), PreconditionError);
  CHECK(Partition{2, 1}[3] == 0);
}

TEST_CASE("conjugate")
{
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});

  for (std::int64_t m = 0; m <= 12; ++m)
    for_each_partition(m, {}, [](const Partition& p) {
      REQUIRE(conjugate(conjugate(p)) == p);
      REQUIRE(conjugate(p).size() == p.size());
    });
}

TEST_CASE("intersect")
{
  CHECK(intersect(Partition{3, 1}, Partition{2, 2}) == Partition{2, 1});
  CHECK(intersect(Partition{4, 2, 1}, Partition{4, 2, 1}) == Partition{4, 2, 1});
  // Rowwise minimum of (2,2) and its conjugate, which is itself.
  CHECK(intersect(Partition{2, 2}, conjugate(Partition{2, 2})) == Partition{2, 2});

  const auto parts = partitions_of(6);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const auto ab = intersect(a, b);
      REQUIRE(ab == intersect(b, a));
      REQUIRE(ab.contained_in(a));
      REQUIRE(ab.contained_in(b));
      REQUIRE(intersect(a, a) == a);
    }
}

TEST_CASE("add and subtract rectangles")
{
  CHECK(add_rectangle(Partition{2, 1}, Rectangle(1, 4)) == Partition{3, 2, 1, 1});
  CHECK(add_rectangle(Partition{}, Rectangle(2, 2)) == Partition{2, 2});
  CHECK(add_rectangle(Partition{1, 1}, Rectangle(3, 2)) == Partition{4, 4});
  CHECK_THROWS_AS(add_rectangle(Partition{1, 1, 1}, Rectangle(1, 2)), PreconditionError);

  CHECK(subtract_rectangle(Partition{3, 2, 1, 1}, Rectangle(1, 4)) == Partition{2, 1});
  CHECK(subtract_rectangle(Partition{2, 2}, Rectangle(2, 2)) == Partition{});
  CHECK(subtract_rectangle(Partition{4, 3}, Rectangle(2, 2)) == Partition{2, 1});
  CHECK_THROWS_AS(subtract_rectangle(Partition{3, 1}, Rectangle(2, 2)), PreconditionError);
  CHECK_THROWS_AS(subtract_rectangle(Partition{3, 3, 3}, Rectangle(1, 2)), PreconditionError);
  CHECK_THROWS_AS(subtract_rectangle(Partition{3}, Rectangle(1, 2)), PreconditionError);

  CHECK_THROWS_AS(Rectangle(0, 2), PreconditionError);
  CHECK_THROWS_AS(Rectangle(1, 0), PreconditionError);
  CHECK_THROWS_AS(add_rectangle(Partition{2147483647}, Rectangle(1, 1)), PreconditionError);

  for (std::int64_t m = 0; m <= 8; ++m)
    for_each_partition(m, {}, [](const Partition& p) {
      for (Part n = std::max<Part>(1, static_cast<Part>(p.length())); n <= 5; ++n)
        for (Part t = 1; t <= 3; ++t) {
          const Rectangle r(t, n);
          const auto big = add_rectangle(p, r);
          REQUIRE(big.length() == static_cast<std::size_t>(n));
          REQUIRE(big.size() == p.size() + t * n);
          REQUIRE(subtract_rectangle(big, r) == p);
        }
    });
}

TEST_CASE("skew shapes")
{
  const auto s = skew(Partition{3, 1}, Partition{2, 1});
  CHECK(s.size() == 1);
  CHECK(s.cells() == std::vector<std::pair<std::size_t, Part>>{{1, 3}});
  CHECK(skew(Partition{3, 1}, Partition{3, 1}).empty());
  CHECK(skew(Partition{2, 2}, Partition{2, 1}).cells() ==
        std::vector<std::pair<std::size_t, Part>>{{2, 2}});
  CHECK_THROWS_AS(skew(Partition{2, 1}, Partition{1, 1, 1}), PreconditionError);

  const auto parts = partitions_of(5);
  for (const auto& a : parts)
    for (std::int64_t k = 0; k <= 5; ++k)
      for_each_partition(k, {}, [&](const Partition& d) {
        if (d.contained_in(a))
          REQUIRE(skew(a, d).size() == a.size() - d.size());
      });
}

TEST_CASE("partition enumeration")
{
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(5, {2, std::nullopt}) ==
        std::vector<Partition>{Partition{5}, Partition{4, 1}, Partition{3, 2}});
  CHECK(partitions_of(4) == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                                   Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
  CHECK(partitions_of(6, {std::nullopt, 2}).size() == 4);
  CHECK(partitions_of(-1).empty());

  const auto p = oracle::partition_numbers(20);
  for (int m = 0; m <= 20; ++m) {
    const auto all = partitions_of(m);
    REQUIRE(BigInt(static_cast<unsigned long>(all.size())) == p[static_cast<std::size_t>(m)]);
    REQUIRE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
    REQUIRE(std::set<Partition>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("parse and format")
{
  CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
  CHECK(parse_partition("3,2,1,0,0") == Partition{3, 2, 1});
  CHECK(parse_partition("[3, 2]") == Partition{3, 2});
  CHECK(parse_partition("(5)") == Partition{5});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("[]") == Partition{});
  CHECK_THROWS_AS(parse_partition("1,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("a,b"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("[2,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,-1"), ParseError);
  CHECK(format_partition(Partition{4, 2, 1}) == "4,2,1");
  CHECK(format_partition(Partition{}) == "");

  for (std::int64_t m = 0; m <= 10; ++m)
    for_each_partition(m, {}, [](const Partition& p) {
      REQUIRE(parse_partition(format_partition(p)) == p);
    });
}

TEST_CASE("compositions")
{
  Composition c{1, 3, 2};
  CHECK(c.size() == 6);
  CHECK(c.sorted() == Partition{3, 2, 1});
  CHECK_THROWS_AS(Composition({2, 0, 1}), PreconditionError);
}
