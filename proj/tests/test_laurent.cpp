#include <catch2/catch_amalgamated.hpp>

#include "bracketforge/laurent.hpp"

using namespace bracketforge;

TEST_CASE("construction and basic queries") {
  Laurent z = Laurent::zero(Var::A);
  CHECK(z.is_zero());
  CHECK(z.term_count() == 0);
  CHECK(z.coeff(0) == 0);
  CHECK_THROWS_AS(z.min_deg(), std::domain_error);
  CHECK_THROWS_AS(z.span(), std::domain_error);

  Laurent c = Laurent::constant(Var::A, 7);
  CHECK(c.coeff(0) == 7);
  CHECK(c.span() == 0);

  Laurent m = Laurent::mono(Var::A, -2, 5);
  CHECK(m.min_deg() == 5);
  CHECK(m.max_deg() == 5);
  CHECK(m.coeff(5) == -2);
}

TEST_CASE("add_term erases cancelled coefficients") {
  Laurent p(Var::A);
  p.add_term(3, 4);
  p.add_term(3, -4);
  CHECK(p.is_zero());
  p.add_term(0, 0);
  CHECK(p.term_count() == 0);
}

TEST_CASE("arithmetic") {
  Laurent p = Laurent::mono(Var::A, 1, 1);  // A
  p += Laurent::mono(Var::A, 1, -1);        // A + A^-1
  Laurent sq = p * p;
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(-2) == 1);
  CHECK(sq.span() == 4);

  Laurent diff = sq - sq;
  CHECK(diff.is_zero());

  Laurent neg = -p;
  CHECK(neg.coeff(1) == -1);
  CHECK((p + neg).is_zero());

  Laurent scaled = sq;
  scaled.mono_mul(-3, 2);
  CHECK(scaled.coeff(4) == -3);
  CHECK(scaled.coeff(2) == -6);
  CHECK(scaled.coeff(0) == -3);
}

TEST_CASE("variable mismatch is rejected") {
  Laurent a(Var::A);
  a.add_term(0, 1);
  Laurent t(Var::TQuarter);
  t.add_term(0, 1);
  CHECK_THROWS_AS(a + t, std::invalid_argument);
  CHECK_THROWS_AS(a * t, std::invalid_argument);
}

TEST_CASE("evaluation at units") {
  Laurent p(Var::A);  // -A^4 + 2 - A^-4
  p.add_term(4, -1);
  p.add_term(0, 2);
  p.add_term(-4, -1);
  CHECK(p.eval_pm1(1) == 0);
  CHECK(p.eval_pm1(-1) == 0);

  Laurent q = Laurent::mono(Var::A, 1, 3);  // A^3
  CHECK(q.eval_pm1(-1) == -1);
  CHECK_THROWS_AS(q.eval_pm1(2), std::invalid_argument);
}

TEST_CASE("rendering") {
  Laurent p(Var::A);
  p.add_term(-4, -1);
  p.add_term(0, 2);
  p.add_term(4, 1);
  CHECK(p.to_string() == "-A^-4 + 2 + A^4");

  CHECK(Laurent::zero(Var::A).to_string() == "0");
  CHECK(Laurent::mono(Var::A, -1, 3).to_string() == "-A^3");
  CHECK(Laurent::mono(Var::A, 1, 1).to_string() == "A");
  CHECK(Laurent::constant(Var::A, -5).to_string() == "-5");

  Laurent v(Var::TQuarter);
  v.add_term(-4, 1);
  v.add_term(8, 3);
  CHECK(v.to_string() == "t^-1 + 3t^2");
  Laurent frac = Laurent::mono(Var::TQuarter, 1, 2);
  CHECK_THROWS_AS(frac.to_string(), std::domain_error);
}

TEST_CASE("bracket-to-jones normalization") {
  // A positive-kink unknot diagram has bracket -A^3 and writhe 1.
  Laurent kink = Laurent::mono(Var::A, -1, 3);
  Laurent v = normalize_to_jones(kink, 1);
  CHECK(v == Laurent::constant(Var::TQuarter, 1));

  // Writhe-0 round trip keeps coefficients and negates exponents.
  Laurent p(Var::A);
  p.add_term(4, 2);
  p.add_term(-8, -3);
  Laurent v0 = normalize_to_jones(p, 0);
  CHECK(v0.coeff(-4) == 2);
  CHECK(v0.coeff(8) == -3);

  Laurent t(Var::TQuarter);
  CHECK_THROWS_AS(normalize_to_jones(t, 0), std::invalid_argument);
}

TEST_CASE("jones helpers") {
  Laurent v(Var::TQuarter);  // left trefoil: -t^-4 + t^-3 + t^-1
  v.add_term(-16, -1);
  v.add_term(-12, 1);
  v.add_term(-4, 1);
  CHECK(jones_span_t(v) == 3);
  CHECK(jones_eval_minus1(v) == -3);

  Laurent bad = Laurent::mono(Var::TQuarter, 1, 2);
  CHECK_THROWS_AS(require_integral_t(bad), std::domain_error);
  CHECK_THROWS_AS(jones_span_t(Laurent::mono(Var::A, 1, 0)),
                  std::invalid_argument);
}
