#include "curvess/error.hpp"
#include "curvess/parse.hpp"
#include "curvess/poly.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvess;
using namespace curvess::testing;

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-7")), "-7");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("1.5"), Error);
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_EQ(to_int64(Rational(12)), 12);
    EXPECT_THROW(to_int64(Rational(1, 2)), Error);
}

TEST(Parse, Literals)
{
    const Poly a = P("u^2 + v^3");
    EXPECT_EQ(a.size(), 2u);
    EXPECT_EQ(a.coefficient(mono(2, 0)), 1);
    EXPECT_EQ(a.coefficient(mono(0, 3)), 1);

    const Poly b = P("u*v");
    EXPECT_EQ(b.size(), 1u);
    EXPECT_EQ(b.coefficient(mono(1, 1)), 1);

    const Poly c = P("u^2*v + v^9 - 1/2*u^4");
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.coefficient(mono(4, 0)), Rational(-1, 2));
    EXPECT_EQ(c.total_degree(), 9u);
    EXPECT_EQ(c.order(), 3u);
}

TEST(Parse, GroupingAndPowers)
{
    EXPECT_EQ(P("(u+v)^2"), P("u^2 + 2*u*v + v^2"));
    EXPECT_EQ(P("-(u - v)*(u + v)"), P("v^2 - u^2"));
    EXPECT_EQ(P("  u ^ 3  "), P("u^3"));
    EXPECT_EQ(P("2/4*u"), P("1/2*u"));
    EXPECT_TRUE(P("u - u").is_zero());
}

TEST(Parse, Errors)
{
    try {
        P("u^2 +");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Syntax);
        EXPECT_EQ(e.position(), 5u);
    }
    try {
        P("u + w");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndeclaredVariable);
        EXPECT_EQ(e.position(), 4u);
    }
    try {
        P("u^1/2");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadExponent);
    }
    EXPECT_THROW(P("u^-1"), SyntaxError);
    EXPECT_THROW(P("2u"), SyntaxError);
    EXPECT_THROW(P("u v"), SyntaxError);
    EXPECT_THROW(P("(u"), SyntaxError);
    EXPECT_THROW(P("1/0"), SyntaxError);
    EXPECT_THROW(P(""), SyntaxError);
}

TEST(Parse, VarList)
{
    EXPECT_EQ(parse_var_list("u,v"), (VarList{"u", "v"}));
    EXPECT_EQ(parse_var_list(" x , y ,z"), (VarList{"x", "y", "z"}));
    EXPECT_THROW(parse_var_list("u,,v"), Error);
    EXPECT_THROW(parse_var_list("u,u"), Error);
    EXPECT_THROW(parse_var_list("1u"), Error);
}

TEST(Poly, Printing)
{
    EXPECT_EQ(to_string(P("v^3 + u^2")), "v^3 + u^2");
    EXPECT_EQ(to_string(P("u^3 + u*v^3")), "u*v^3 + u^3");
    EXPECT_EQ(to_string(P("-1/2*u^4 + 3")), "-1/2*u^4 + 3");
    EXPECT_EQ(to_string(Poly(uv())), "0");
}

TEST(Poly, Diff)
{
    EXPECT_EQ(diff(P("u^2+v^3"), "u"), P("2*u"));
    EXPECT_EQ(diff(P("u*v"), "v"), P("u"));
    EXPECT_EQ(diff(P("u^3+u*v^3"), "u"), P("3*u^2+v^3"));
    EXPECT_THROW(diff(P("u"), "w"), Error);
}

TEST(Poly, Substitute)
{
    EXPECT_TRUE(substitute(P("u^2-v^3"), branch({"t^3", "t^2"})).is_zero());
    EXPECT_TRUE(substitute(P("u*v"), branch({"t", "0"})).is_zero());
    EXPECT_EQ(substitute(P("v"), branch({"t^2", "t^3"})), T("t^3"));
    EXPECT_EQ(substitute(P("u + v^2"), branch({"t", "t + t^2"}), 2), T("t + t^2"));
    EXPECT_THROW(substitute(P("u"), branch({"t"})), Error);
}

TEST(Poly, BranchValidation)
{
    EXPECT_THROW(branch({"1 + t", "t"}), Error);
    try {
        branch({"0", "0"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateBranch);
    }
}

TEST(Poly, Truncation)
{
    const Poly p = P("1 + u + u*v + v^3 + u^4");
    EXPECT_EQ(p.truncated(2), P("1 + u + u*v"));
    EXPECT_EQ(p.homogeneous_part(3), P("v^3"));
    EXPECT_EQ(Poly::mul_truncated(p, p, 2), (p * p).truncated(2));
    EXPECT_THROW(P("u") + P("x", {"x", "y"}), Error);
}

namespace {

Poly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 4), den(1, 3), count(0, 5);
    Poly p(uv());
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const auto a = static_cast<std::uint32_t>(exp(rng));
        const auto b = static_cast<std::uint32_t>(exp(rng));
        p.add_term(mono(a, b), q(coeff(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST(PolyProperty, RingAxioms)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(PolyProperty, Derivation)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng), b = random_poly(rng);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_EQ(diff(a * b, i), diff(a, i) * b + a * diff(b, i));
            EXPECT_EQ(diff(a + b, i), diff(a, i) + diff(b, i));
        }
    }
}

TEST(PolyProperty, ParsePrintRoundTrip)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly a = random_poly(rng);
        EXPECT_EQ(P(to_string(a)), a) << to_string(a);
    }
}

TEST(PolyProperty, SubstitutionIsAHomomorphism)
{
    std::mt19937_64 rng(17);
    const BranchParam b = branch({"t^2 - t^3", "1/2*t + t^4"});
    for (int trial = 0; trial < 50; ++trial) {
        const Poly a = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(substitute(a * c, b), substitute(a, b) * substitute(c, b));
        EXPECT_EQ(substitute(a * c, b, 9), (substitute(a, b) * substitute(c, b)).truncated(9));
    }
}
