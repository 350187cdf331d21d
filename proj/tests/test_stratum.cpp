#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvol/stratum.hpp"

using namespace mvol;

TEST_CASE("parsing and printing") {
  auto h = StratumSignature::parse("H(3,1)");
  CHECK(h.abelian());
  CHECK(h.orders() == std::vector<int>{3, 1});
  CHECK(h.to_string() == "H(3,1)");

  auto hp = StratumSignature::parse("H(1^4)");
  CHECK(hp.orders() == std::vector<int>{1, 1, 1, 1});
  CHECK(hp.to_string() == "H(1^4)");

  auto q = StratumSignature::parse("Q(1^3, -1^3)");
  CHECK_FALSE(q.abelian());
  CHECK(q.orders() == std::vector<int>{1, 1, 1, -1, -1, -1});
  CHECK(q.to_string() == "Q(1^3,-1^3)");

  CHECK(StratumSignature::parse(" Q ( 2 , -1 ^ 6 ) ").to_string() == "Q(2,-1^6)");
  CHECK(StratumSignature::parse("H(0)").to_string() == "H(0)");

  CHECK_THROWS(StratumSignature::parse("X(1)"));
  CHECK_THROWS(StratumSignature::parse("H(1)"));      // odd total order
  CHECK_THROWS(StratumSignature::parse("Q(1)"));      // total not 4g-4
  CHECK_THROWS(StratumSignature::parse("Q(4,0)"));    // zero order
  CHECK_THROWS(StratumSignature::parse("H(-2,4)"));   // negative Abelian order
}

TEST_CASE("derived quantities") {
  auto h2 = StratumSignature::parse("H(2)");
  CHECK(h2.genus() == 2);
  CHECK(h2.dimension() == 4);
  CHECK(h2.frobenius_n() == 3);
  CHECK(h2.frobenius_type() == CycleType({3}));

  auto h31 = StratumSignature::parse("H(3,1)");
  CHECK(h31.genus() == 3);
  CHECK(h31.dimension() == 7);
  CHECK(h31.frobenius_n() == 6);
  CHECK(h31.frobenius_type() == CycleType({4, 2}));

  auto q = StratumSignature::parse("Q(1^3,-1^3)");
  CHECK(q.genus() == 1);
  CHECK(q.dimension() == 6);

  auto q2 = StratumSignature::parse("Q(2,-1^2)");
  CHECK(q2.genus() == 1);
  CHECK(q2.dimension() == 3);

  auto h0 = StratumSignature::parse("H(0)");
  CHECK(h0.genus() == 1);
  CHECK(h0.dimension() == 2);
  CHECK(h0.frobenius_n() == 1);

  auto marked = StratumSignature(DiffKind::Abelian, {2, 0, 0});
  CHECK(marked.without_marked_points() == h2);
  CHECK(marked.dimension() == 6);
}
