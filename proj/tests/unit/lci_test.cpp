#include "curvess/error.hpp"
#include "curvess/lci.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace curvess;
using namespace curvess::testing;

namespace {

const VarList xyz{"x", "y", "z"};
const VarList wxyz{"w", "x", "y", "z"};

LciPresentation make(const VarList& vars, const std::vector<std::string>& eqs,
                     std::optional<std::vector<std::string>> param = std::nullopt)
{
    std::vector<Poly> ps;
    for (const auto& e : eqs)
        ps.push_back(P(e, vars));
    std::optional<BranchParam> b;
    if (param)
        b = branch(*param);
    return LciPresentation(vars, ps, b);
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST(EmbeddingDimension, Cases)
{
    EXPECT_EQ(embedding_dimension(make(xyz, {"y^2 - x^3", "z^2 - y^3"})), 3u);
    EXPECT_EQ(embedding_dimension(make(uv(), {"u^2 + v^3"})), 2u);
    EXPECT_EQ(kind_of([] { embedding_dimension(make(xyz, {"y - x^2", "z^2 - y^3"})); }),
              ErrorKind::NonMinimalPresentation);
    EXPECT_EQ(kind_of([] { embedding_dimension(make(xyz, {"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"})); }),
              ErrorKind::NotCompleteIntersection);
}

TEST(Parametrization, Verify)
{
    EXPECT_TRUE(verify_parametrization(make(xyz, {"y^2 - x^3", "z^2 - y^3"}, {{"t^4", "t^6", "t^9"}})));
    EXPECT_FALSE(verify_parametrization(make(xyz, {"y^2 - x^3", "z^2 - y^3"}, {{"t^3", "t^4", "t^5"}})));
    EXPECT_TRUE(verify_parametrization(make(xyz, {"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, {{"t^3", "t^4", "t^5"}})));
    EXPECT_EQ(kind_of([] { verify_parametrization(make(xyz, {}, {{"t^4", "t^6", "t^9"}})); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { verify_parametrization(make(xyz, {"y^2 - x^3"})); }), ErrorKind::InvalidArgument);
}

TEST(TermRanks, Oracle)
{
    // Binomial values from tests/oracles/local_algebra_oracle.py.
    auto ranks = [](std::size_t e, std::size_t p) {
        std::vector<std::pair<int, long>> out;
        for (const TermRank& t : complex_term_ranks(e, p))
            out.emplace_back(t.degree, t.rank.get_si());
        return out;
    };
    EXPECT_EQ(ranks(3, 4), (std::vector<std::pair<int, long>>{{-4, 5}, {-3, 12}, {-2, 9}, {-1, 2}}));
    EXPECT_EQ(ranks(2, 3), (std::vector<std::pair<int, long>>{{-3, 1}, {-2, 2}, {-1, 1}}));
    EXPECT_EQ(ranks(4, 5), (std::vector<std::pair<int, long>>{{-5, 21}, {-4, 60}, {-3, 60}, {-2, 24}, {-1, 3}}));
}

TEST(TermRanks, EulerCharacteristicVanishes)
{
    // For p >= e the alternating sum is the coefficient of s^p in (1-s)^e/(1-s)^(e-1) = 1 - s.
    for (std::size_t e = 2; e <= 6; ++e)
        for (std::size_t p = e; p <= e + 4; ++p) {
            Integer chi = 0;
            for (const TermRank& t : complex_term_ranks(e, p))
                chi += ((t.degree + static_cast<int>(p)) % 2 == 0 ? 1 : -1) * t.rank;
            EXPECT_EQ(chi, 0) << e << " " << p;
        }
}

TEST(Obstruction, T469)
{
    const ObstructionReport r = obstruction(make(xyz, {"y^2 - x^3", "z^2 - y^3"}, {{"t^4", "t^6", "t^9"}}));
    EXPECT_EQ(r.e, 3u);
    EXPECT_TRUE(r.jacobian_in_m);
    EXPECT_TRUE(r.phi_at_origin.is_zero());
    EXPECT_EQ(r.coker_mod_m_dim, 2u);
    EXPECT_TRUE(r.nonzero_H_minus1);
    EXPECT_EQ(r.obstruction_position, (std::pair<int, int>{4, -1}));
    EXPECT_EQ(r.total_degree, 3u);
    EXPECT_EQ(r.term_ranks.size(), 4u);
}

TEST(Obstruction, FourSpace)
{
    const ObstructionReport r =
        obstruction(make(wxyz, {"x^2 - w^3", "y^2 - x^3", "z^2 - y^3"}, {{"t^8", "t^12", "t^18", "t^27"}}));
    EXPECT_EQ(r.e, 4u);
    EXPECT_EQ(r.coker_mod_m_dim, 3u);
    EXPECT_EQ(r.obstruction_position, (std::pair<int, int>{5, -1}));
    EXPECT_EQ(r.total_degree, 4u);
}

TEST(Obstruction, PlanarHasNone)
{
    EXPECT_EQ(kind_of([] { obstruction(make(uv(), {"u^2 - v^3"})); }), ErrorKind::PlanarNoObstruction);
}
