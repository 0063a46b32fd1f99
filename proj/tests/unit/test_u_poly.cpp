#include "doctest.h"
#include "support.hpp"

using namespace vstr;
using namespace testing_support;

namespace {
IntPoly pq_oracle(int p, int q) { return IntPoly::monomial(q, p) - IntPoly::monomial(p, q); }

VirtualString eight_factor_product() {
  int f[8][2] = {{1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 5}, {4, 3}, {5, 1}, {5, 2}};
  VirtualString s;
  for (auto& pq : f) s = product(s, family_pq(pq[0], pq[1]));
  return s;
}
}  // namespace

TEST_SUITE("u_poly") {
  TEST_CASE("polynomial text") {
    CHECK(IntPoly::parse("2t^4-4t^2").to_string() == "2t^4-4t^2");
    CHECK(IntPoly::parse("t^2 - 2t").to_string() == "t^2-2t");
    CHECK(IntPoly::parse("0").is_zero());
    CHECK(IntPoly().to_string() == "0");
    CHECK_THROWS_AS(IntPoly::parse("2x"), ParseError);
  }

  TEST_CASE("u of the lattice family") {
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q) CHECK(u(family_pq(p, q)) == pq_oracle(p, q));
    CHECK(u(VirtualString()).is_zero());
    CHECK(u(family_pq(1, 1)).is_zero());
    CHECK(u_k(family_pq(1, 2), 2) == 1);
    CHECK(u_k(family_pq(1, 2), 1) == -2);
    CHECK_THROWS_AS(u_k(family_pq(1, 2), 0), PreconditionError);
  }

  TEST_CASE("u properties on random strings") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
      auto s = random_string(rnd(rng, 0, 8), rng);
      auto p = u(s);
      CHECK(p.value_at_zero() == 0);
      CHECK(p.derivative_at_one() == 0);
      CHECK(p.degree() <= std::max(0, s.rank() - 1));
      CHECK(u(inverse(s)) == p);
      CHECK(u(opposite(s)) == -p);
      auto t = random_string(rnd(rng, 0, 5), rng);
      CHECK(u(product(s, t)) == p + u(t));
      CHECK(higher_u(s, {1}) == p);
      CHECK(higher_u(s, {}) == p);
    }
  }

  TEST_CASE("cable scales u") {
    for (auto s : {family_pq(1, 2), family_pq(2, 1), family_pq(2, 3)})
      for (int r = 1; r <= 3; ++r) CHECK(u(cable(r, s)) == u(s).substitute_power(r).scaled(r));
  }

  TEST_CASE("covering example") {
    auto s = eight_factor_product();
    CHECK(u(s).is_zero());
    CHECK(u(covering(s, 2)) == IntPoly::parse("2t^4-4t^2"));
    CHECK(higher_u(s, {2}) == IntPoly::parse("2t^4-4t^2"));
  }

  TEST_CASE("higher u matches direct covering") {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q)
        for (int r = 1; r <= 3; ++r) {
          auto s = family_pq(p, q);
          // oracle: filter tokens by the walked n values, then sum signs of the walked n again
          auto n = oracle_n(s);
          std::vector<Token> kept;
          std::map<int, int> relabel;
          for (const Token& t : s.code())
            if (n[t.arrow] % r == 0) {
              relabel.emplace(t.arrow, static_cast<int>(relabel.size()));
              kept.push_back({relabel[t.arrow], t.role});
            }
          IntPoly expect;
          for (int x : oracle_n(VirtualString(kept)))
            if (x) expect.add_term(std::abs(x), x > 0 ? 1 : -1);
          CHECK(higher_u(s, {r}) == expect);
        }
  }

  TEST_CASE("open u") {
    auto [up, um] = u_open(parse_open("a b a' b'"));
    CHECK(up == IntPoly::parse("t"));
    CHECK(um == IntPoly::parse("-t"));
    auto [z1, z2] = u_open(OpenString());
    CHECK(z1.is_zero());
    CHECK(z2.is_zero());
    std::mt19937_64 rng(12);
    for (int it = 0; it < 100; ++it) {
      auto mu = random_open(rnd(rng, 0, 6), rng), nu = random_open(rnd(rng, 0, 6), rng);
      auto [a, b] = u_open(mu);
      CHECK(a + b == u(closure(mu)));
      auto [c, d] = u_open(nu);
      auto [e, f] = u_open(open_product(mu, nu));
      CHECK(e == a + c);
      CHECK(f == b + d);
      auto [g, h] = u_open(open_reverse(mu));
      CHECK(g == -b);
      CHECK(h == -a);
      CHECK(g + h == -(a + b));
    }
  }

  TEST_CASE("realization") {
    CHECK(realize_u(IntPoly()).rank() == 0);
    CHECK(u(realize_u(IntPoly::parse("t^2-2t"))) == IntPoly::parse("t^2-2t"));
    CHECK(u(realize_u(IntPoly::parse("2t^3-3t^2"))) == IntPoly::parse("2t^3-3t^2"));
    CHECK_THROWS_WITH_AS(realize_u(IntPoly::parse("t^2")), doctest::Contains("u'(1)"), PreconditionError);
    CHECK_THROWS_WITH_AS(realize_u(IntPoly::parse("1")), doctest::Contains("u(0)"), PreconditionError);
  }
}
