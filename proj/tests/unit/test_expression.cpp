#include "doctest.h"

#include "gwpairs/algebra/series.hpp"
#include "gwpairs/io/expression.hpp"

using namespace gwpairs;

TEST_SUITE("expression") {
  TEST_CASE("parsing") {
    const SymRatFunc s1 = SymRatFunc::s1();
    const SymRatFunc s2 = SymRatFunc::s2();
    const SymRatFunc s3 = SymRatFunc::s3();
    CHECK(parse_sym_expression("s1 + s2") == s1 + s2);
    CHECK(parse_sym_expression("-s3") == -s3);
    CHECK(parse_sym_expression("1/2*s1^2") == SymRatFunc(GaussianRational::fraction(1, 2)) * s1 * s1);
    CHECK(parse_sym_expression("(s1+s2)/(s1*s2)") == (s1 + s2) / (s1 * s2));
    CHECK(parse_sym_expression("s1^(-2)") == (s1 * s1).inverse());
    CHECK(parse_sym_expression("c1") == s1 + s2 + s3);
    CHECK(parse_sym_expression("c3 - s1*s2*s3") == SymRatFunc(0));
    CHECK(parse_sym_expression("2*i") == SymRatFunc(GaussianRational(mpq_class(0), mpq_class(2))));
    CHECK(parse_sym_expression("  3 ") == SymRatFunc(3));

    const QRatFunc q = QRatFunc::q();
    const PTSeries f = parse_expression("(1-q)/(1+q)");
    CHECK(f == PTSeries(CapSeriesP((QRatFunc(1) - q) / (QRatFunc(1) + q))));
    CHECK(parse_expression("s1*q/(1+q)^2") == PTSeries(CapSeriesP(s1, q / ((QRatFunc(1) + q) * (QRatFunc(1) + q)))));
    CHECK(parse_expression("q^-1") == PTSeries::q_power(-1));
    CHECK(parse_expression("q/q") == PTSeries(1L));

    CHECK_THROWS_AS(parse_sym_expression("q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("(1+q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("2 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("q^s1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_expression("1/(s1+q)"), std::domain_error);
  }

  TEST_CASE("printed values parse back") {
    const SymRatFunc s1 = SymRatFunc::s1();
    const SymRatFunc s2 = SymRatFunc::s2();
    const SymRatFunc s3 = SymRatFunc::s3();
    const GaussianRational i = GaussianRational::i();
    const std::vector<SymRatFunc> values{
        SymRatFunc(0),
        SymRatFunc(GaussianRational::fraction(-3, 7)),
        SymRatFunc(-i),
        SymRatFunc(GaussianRational(mpq_class(1, 2), mpq_class(-2, 3))),
        s1 * s2 * s3 * SymRatFunc(-i),
        (s1 + s2 + s3) * SymRatFunc(GaussianRational::fraction(5, 2)),
        (s1 * s1 - s2 * s3) / (s1 + SymRatFunc(GaussianRational(2) * i) * s3),
        (s1 + s2).pow(3) / (s3 * s3),
    };
    for (const auto& v : values) {
      CAPTURE(v.to_string());
      CHECK(parse_sym_expression(v.to_string()) == v);
    }
    const PTSeries p = PTSeries(CapSeriesP(s1 + s2, (QRatFunc(1) - QRatFunc::q()) / (QRatFunc(1) + QRatFunc::q())));
    CAPTURE(p.to_string());
    CHECK(parse_expression(p.to_string()) == p);
  }

  TEST_CASE("expansion of a parsed expression") {
    // 2i/u - (i/6) u - (i/360) u^3 through u^3.
    const ULaurent e = parse_expression("(1-q)/(1+q)").expand_u(3);
    const GaussianRational i = GaussianRational::i();
    CHECK(e.coeff(-1) == SymRatFunc(GaussianRational(2) * i));
    CHECK(e.coeff(0).is_zero());
    CHECK(e.coeff(1) == SymRatFunc(-i / GaussianRational(6)));
    CHECK(e.coeff(2).is_zero());
    CHECK(e.coeff(3) == SymRatFunc(-i / GaussianRational(360)));
    CHECK(e.truncation() == 3);
  }
}
