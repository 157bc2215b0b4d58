#include "doctest.h"
#include "ordcomb/parse.hpp"

using namespace ordcomb;

namespace {
template <class F>
std::size_t error_position(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK_FALSE(e.expected().empty());
    return e.position();
  }
  FAIL("expected a parse error");
  return 0;
}
}  // namespace

TEST_CASE("base orders") {
  for (const char* s : {"fin:3", "omega", "omega*", "lex(omega,fin:2)", "lex(lex(fin:1,omega*),omega)"})
    CHECK(parse_base_order(s).str() == s);
  CHECK(parse_base_order(" lex( omega , fin:2 ) ").str() == "lex(omega,fin:2)");
  CHECK(error_position([] { parse_base_order("fin:"); }) == 4);
  CHECK(error_position([] { parse_base_order("lex(omega fin:2)"); }) == 10);
  CHECK(error_position([] { parse_base_order("omegax"); }) == 5);
  CHECK(error_position([] { parse_base_order("nat"); }) == 0);
}

TEST_CASE("elements") {
  CHECK(parse_element("7") == Element(7));
  CHECK(parse_element("(1,(2,3))").str() == "(1,(2,3))");
  CHECK(error_position([] { parse_element("(1 2)"); }) == 3);
  CHECK(error_position([] { parse_element("99999999999999999999"); }) == 0);
}

TEST_CASE("omega terms") {
  CHECK(parse_omega_term("w()").exponents.empty());
  CHECK(parse_omega_term("w(2 1 1)").str() == "w(2 1 1)");
  CHECK(parse_omega_term("w((0,1) (0,0))").str() == "w((0,1) (0,0))");
  CHECK(error_position([] { parse_omega_term("w(1 2"); }) == 5);
  CHECK(error_position([] { parse_omega_term("(1)"); }) == 0);
}

TEST_CASE("theta terms") {
  for (const char* s : {"0", "W", "e(0)", "p(s(W p(0)))", "th(th(0))", "s(e(1) W th(0))"})
    CHECK(parse_theta_term(s).str() == s);
  CHECK(error_position([] { parse_theta_term("th(0"); }) == 4);
  CHECK(error_position([] { parse_theta_term("x"); }) == 0);
  CHECK(error_position([] { parse_theta_term("0 0"); }) == 2);
}

TEST_CASE("order terms") {
  for (const char* s : {"1", "n:4", "w", "w*", "q", "w*+n:3+w", "q+1+w"})
    CHECK(parse_order_term(s).str() == s);
  CHECK(parse_order_term("1+1").str() == "n:2");
  CHECK(error_position([] { parse_order_term("w+"); }) == 2);
  CHECK(error_position([] { parse_order_term("w w"); }) == 2);
  CHECK(error_position([] { parse_order_term("n:0"); }) == 0);
}
