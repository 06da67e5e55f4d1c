#include <gtest/gtest.h>

#include "fgl/errors.hpp"
#include "fgl/json_io.hpp"
#include "test_support.hpp"

using namespace fgl;
using fgl::testing::A;
using fgl::testing::b;
using fgl::testing::m;

namespace {

const std::vector<std::string> UV{"u", "v"};
const std::vector<std::string> U{"u"};

TruncatedSeries var(const std::vector<std::string>& vars, int order, std::size_t i)
{
    return TruncatedSeries::variable(vars, order, i);
}

TruncatedSeries zero(const std::vector<std::string>& vars, int order)
{
    return TruncatedSeries(vars, order);
}

FormalGroupLaw law(BackendKind kind, int order)
{
    return FormalGroupLaw(backend_for_order(kind, order), order);
}

// F(u, v) evaluated on u -> s, v -> t, written out from the coefficient table
// rather than through the library's fgl_sum.
TruncatedSeries law_by_hand(const FormalGroupLaw& f, const TruncatedSeries& s, const TruncatedSeries& t)
{
    TruncatedSeries out = s + t;
    for (int i = 1; i < f.order(); ++i)
        for (int j = 1; i + j <= f.order(); ++j)
            if (!f.coefficient(i, j).is_zero())
                out += s.pow(i) * t.pow(j) * f.coefficient(i, j);
    return out;
}

void expect_support_condition(const std::map<Face, TruncatedSeries>& parts)
{
    for (const auto& [face, part] : parts) {
        EXPECT_FALSE(part.is_zero());
        for (const auto& [e, c] : part.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0)
                    EXPECT_TRUE(face.contains(static_cast<int>(i))) << face.to_string();
    }
}

} // namespace

TEST(Series, ArithmeticRequiresSameShape)
{
    EXPECT_THROW(var(U, 3, 0) + var(U, 4, 0), DomainError);
    EXPECT_THROW(var(UV, 3, 0) * var(U, 3, 0), DomainError);
    EXPECT_THROW(var(U, 3, 0).truncated(4), DomainError);
    EXPECT_THROW(TruncatedSeries(U, -1), DomainError);
}

TEST(Series, TruncationDropsHighTerms)
{
    const TruncatedSeries u = var(U, 3, 0);
    EXPECT_TRUE(u.pow(4).is_zero());
    EXPECT_EQ(((u + u.pow(2)) * (u + u.pow(2))).to_string(), "u^2 + 2*u^3");
}

TEST(Substitute, Examples)
{
    const std::vector<std::string> ST{"s", "t"};
    const int N = 4;
    const TruncatedSeries s = var(ST, N, 0);
    const TruncatedSeries t = var(ST, N, 1);
    const TruncatedSeries u = var(UV, N, 0);
    const TruncatedSeries v = var(UV, N, 1);

    EXPECT_EQ(substitute(u + v, {{"u", s}, {"v", zero(ST, N)}}), s);
    EXPECT_EQ(substitute(u * v, {{"u", s + t}, {"v", s}}), s * s + t * s);

    const FormalGroupLaw f = law(BackendKind::Free, N);
    EXPECT_TRUE(substitute(f.series(), {{"u", var(U, N, 0)}, {"v", formal_inverse(f)}}).is_zero());
}

TEST(Substitute, Errors)
{
    const TruncatedSeries u = var(U, 3, 0);
    const TruncatedSeries one = TruncatedSeries::constant(U, 3, 1);
    EXPECT_THROW(substitute(u, {{"u", u + one}}), DomainError);
    EXPECT_THROW(substitute(var(UV, 3, 0), {{"u", u}}), DomainError);
    EXPECT_THROW(substitute(u, {{"u", var(U, 2, 0)}}), TruncationError);
}

TEST(FglSum, Examples)
{
    const int N = 5;
    std::mt19937 rng(3);
    const TruncatedSeries s = fgl::testing::random_series(rng, 2, N);
    const TruncatedSeries t = fgl::testing::random_series(rng, 2, N);
    EXPECT_EQ(fgl_sum(law(BackendKind::Additive, N), s, t), s + t);

    const TruncatedSeries u = var(U, N, 0);
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Multiplicative})
        EXPECT_EQ(fgl_sum(law(kind, N), u, zero(U, N)), u);

    const TruncatedSeries uu = var(UV, N, 0);
    const TruncatedSeries vv = var(UV, N, 1);
    EXPECT_EQ(fgl_sum(law(BackendKind::Multiplicative, N), uu, vv), uu + vv + uu * vv * b());
}

TEST(FglSum, OrderMustMatchLaw)
{
    const FormalGroupLaw f = law(BackendKind::Free, 4);
    EXPECT_THROW(fgl_sum(f, var(U, 3, 0), var(U, 3, 0)), TruncationError);
}

TEST(FglSum, UnitAndCommutativityOnEveryBackend)
{
    const int N = 8;
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Additive, BackendKind::Multiplicative}) {
        const FormalGroupLaw f = law(kind, N);
        const TruncatedSeries u = var(UV, N, 0);
        const TruncatedSeries v = var(UV, N, 1);
        EXPECT_EQ(fgl_sum(f, u, zero(UV, N)), u);
        EXPECT_EQ(fgl_sum(f, zero(UV, N), u), u);
        EXPECT_EQ(fgl_sum(f, u, v), fgl_sum(f, v, u));
        EXPECT_EQ(fgl_sum(f, u, v), f.series());
        EXPECT_EQ(fgl_sum(f, u, v), law_by_hand(f, u, v));
    }
}

TEST(FglSum, AssociativityOnLog)
{
    const std::vector<std::string> UVW{"u", "v", "w"};
    for (int N = 1; N <= 8; ++N) {
        const FormalGroupLaw f = law(BackendKind::Log, N);
        const TruncatedSeries u = var(UVW, N, 0);
        const TruncatedSeries v = var(UVW, N, 1);
        const TruncatedSeries w = var(UVW, N, 2);
        EXPECT_EQ(fgl_sum(f, fgl_sum(f, u, v), w), fgl_sum(f, u, fgl_sum(f, v, w))) << N;
    }
}

// Free symmetric coefficients satisfy associativity through cubic terms; the
// first relation among them sits in degree 3.
TEST(FglSum, FreeIsNotAssociative)
{
    const std::vector<std::string> UVW{"u", "v", "w"};
    for (int N : {3, 4}) {
        const FormalGroupLaw f = law(BackendKind::Free, N);
        const TruncatedSeries u = var(UVW, N, 0);
        const TruncatedSeries v = var(UVW, N, 1);
        const TruncatedSeries w = var(UVW, N, 2);
        const bool associative = fgl_sum(f, fgl_sum(f, u, v), w) == fgl_sum(f, u, fgl_sum(f, v, w));
        EXPECT_EQ(associative, N == 3) << N;
    }
}

TEST(FormalInverse, Examples)
{
    EXPECT_EQ(formal_inverse(law(BackendKind::Additive, 8)), -var(U, 8, 0));

    const FormalGroupLaw free3 = law(BackendKind::Free, 3);
    const TruncatedSeries u = var(U, 3, 0);
    EXPECT_EQ(formal_inverse(free3), -u + u.pow(2) * A(1, 1) - u.pow(3) * A(1, 1).pow(2));
    EXPECT_EQ(formal_inverse(free3).to_string(), "-u + A(1,1)*u^2 - A(1,1)^2*u^3");

    // -u / (1 + bu)
    const int N = 8;
    TruncatedSeries expected(U, N);
    for (int k = 1; k <= N; ++k)
        expected.add_term({k}, (k % 2 == 0 ? 1 : -1) * b().pow(k - 1));
    EXPECT_EQ(formal_inverse(law(BackendKind::Multiplicative, N)), expected);
}

TEST(FormalInverse, SubstitutesBackToZero)
{
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Additive, BackendKind::Multiplicative}) {
        for (int N : {1, 4, 8}) {
            const FormalGroupLaw f = law(kind, N);
            const TruncatedSeries chi = formal_inverse(f);
            EXPECT_TRUE(fgl_sum(f, var(U, N, 0), chi).is_zero());
            EXPECT_TRUE(law_by_hand(f, var(U, N, 0), chi).is_zero());
        }
    }
}

TEST(FormalInverse, InvolutionOnLog)
{
    const FormalGroupLaw f = law(BackendKind::Log, 8);
    const TruncatedSeries chi = formal_inverse(f);
    EXPECT_EQ(substitute(chi, {{"u", chi}}), var(U, 8, 0));
}

TEST(NSeries, Examples)
{
    const TruncatedSeries u3 = var(U, 3, 0);
    EXPECT_EQ(n_series(law(BackendKind::Free, 3), 1), u3);
    EXPECT_EQ(n_series(law(BackendKind::Free, 3), 2), u3 * Polynomial(2L) + u3.pow(2) * A(1, 1) + u3.pow(3) * (2 * A(1, 2)));
    EXPECT_EQ(n_series(law(BackendKind::Additive, 8), -5), var(U, 8, 0) * Polynomial(-5L));
    EXPECT_TRUE(n_series(law(BackendKind::Free, 3), 0).is_zero());
    EXPECT_EQ(n_series(law(BackendKind::Free, 3), -1), formal_inverse(law(BackendKind::Free, 3)));
}

// Direct substitution of u into both slots of F.
TEST(NSeries, TwoIsDiagonalOfF)
{
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Multiplicative}) {
        const FormalGroupLaw f = law(kind, 6);
        const TruncatedSeries u = var(U, 6, 0);
        EXPECT_EQ(n_series(f, 2), substitute(f.series(), {{"u", u}, {"v", u}}));
    }
}

TEST(NSeries, AdditivityOnLog)
{
    const int N = 8;
    const FormalGroupLaw f = law(BackendKind::Log, N);
    std::map<int, TruncatedSeries> cache;
    for (int n = -10; n <= 10; ++n)
        cache.emplace(n, n_series(f, n));
    for (int n = -5; n <= 5; ++n)
        for (int k = -5; k <= 5; ++k)
            EXPECT_EQ(cache.at(n + k), fgl_sum(f, cache.at(n), cache.at(k))) << n << "," << k;
}

TEST(MultiLinear, Examples)
{
    const FormalGroupLaw f = law(BackendKind::Free, 5);
    const std::vector<std::string> U1{"u1"};
    const std::vector<std::string> U12{"u1", "u2"};
    EXPECT_EQ(multi_linear(f, std::vector<int>{1}), var(U1, 5, 0));
    EXPECT_EQ(multi_linear(f, std::vector<int>{1, 1}),
              substitute(f.series(), {{"u", var(U12, 5, 0)}, {"v", var(U12, 5, 1)}}));
    EXPECT_EQ(multi_linear(f, std::vector<int>{1, 0}), var(U12, 5, 0));
    EXPECT_THROW(multi_linear(f, std::vector<int>{}), DomainError);
}

TEST(MultiLinear, LinearPart)
{
    const FormalGroupLaw f = law(BackendKind::Free, 4);
    const std::vector<int> n{2, -1, 3};
    const TruncatedSeries s = multi_linear(f, n);
    for (std::size_t i = 0; i < n.size(); ++i) {
        Exponents e(n.size(), 0);
        e[i] = 1;
        EXPECT_EQ(s.coefficient(e), Polynomial(static_cast<long>(n[i])));
    }
}

TEST(MultiLinear, FoldOrderIrrelevantOnLog)
{
    const FormalGroupLaw f = law(BackendKind::Log, 6);
    for (const auto& n : std::vector<std::vector<int>>{{1, 1, 1}, {2, -1, 1}, {1, 2, -2, 1}})
        EXPECT_EQ(multi_linear(f, n, FoldOrder::Left), multi_linear(f, n, FoldOrder::Right));
}

TEST(SupportDecompose, Examples)
{
    const int N = 5;
    const FormalGroupLaw f = law(BackendKind::Free, N);
    const auto parts = support_decompose(multi_linear(f, std::vector<int>{1, 1}));
    ASSERT_EQ(parts.size(), 3u);
    const std::vector<std::string> U12{"u1", "u2"};
    EXPECT_EQ(parts.at(Face{0}), TruncatedSeries::constant(U12, N - 1, 1));
    EXPECT_EQ(parts.at(Face{1}), TruncatedSeries::constant(U12, N - 1, 1));
    TruncatedSeries f12(U12, N - 2);
    for (int i = 1; i < N; ++i)
        for (int j = 1; i + j <= N; ++j)
            f12.add_term({i - 1, j - 1}, A(i, j));
    EXPECT_EQ(parts.at(Face({0, 1})), f12);

    const TruncatedSeries u1 = var(U12, N, 0);
    const TruncatedSeries u2 = var(U12, N, 1);
    const auto single = support_decompose(u1);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.at(Face{0}), TruncatedSeries::constant(U12, N - 1, 1));

    const auto mixed = support_decompose(u1.pow(2) * u2);
    ASSERT_EQ(mixed.size(), 1u);
    EXPECT_EQ(mixed.at(Face({0, 1})), var(U12, N - 2, 0));
}

TEST(SupportDecompose, RejectsConstantTerm)
{
    EXPECT_THROW(support_decompose(var(U, 3, 0) + TruncatedSeries::constant(U, 3, 1)), DomainError);
}

TEST(SupportDecompose, RoundTripRandom)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const int order = 1 + trial % 6;
        const TruncatedSeries s = fgl::testing::random_series(rng, r, order);
        const auto parts = support_decompose(s);
        expect_support_condition(parts);
        EXPECT_EQ(recompose(parts, s.variables(), s.order()), s);
    }
}

TEST(Homogeneity, LawInverseNSeriesMultiLinear)
{
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Multiplicative, BackendKind::Additive}) {
        const FormalGroupLaw f = law(kind, 6);
        EXPECT_EQ(series_degree(f.series()), GradedDegree::of(-1));
        EXPECT_EQ(series_degree(formal_inverse(f)), GradedDegree::of(-1));
        for (int n : {-3, -1, 2, 4})
            EXPECT_EQ(series_degree(n_series(f, n)), GradedDegree::of(-1));
        const auto ml = multi_linear(f, std::vector<int>{2, -1, 1});
        EXPECT_EQ(series_degree(ml), GradedDegree::of(-1));
        for (const auto& [face, part] : support_decompose(ml))
            EXPECT_EQ(series_degree(part), GradedDegree::of(face.size() - 1)) << face.to_string();
    }
}

TEST(Json, SeriesRoundTrip)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const TruncatedSeries s = fgl::testing::random_series(rng, 1 + trial % 3, 5);
        const auto j = json_io::to_json(s);
        EXPECT_EQ(json_io::series_from_json(j), s);
        EXPECT_EQ(json_io::to_json(json_io::series_from_json(j)).dump(), j.dump());
    }
}
