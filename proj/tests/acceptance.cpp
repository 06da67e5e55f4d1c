// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fgl/cycles.hpp"
#include "golden_support.hpp"
#include "test_support.hpp"

using namespace fgl;

namespace {

struct Verdict
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

TruncatedSeries var(const std::vector<std::string>& vars, int order, std::size_t i)
{
    return TruncatedSeries::variable(vars, order, i);
}

FormalGroupLaw law(BackendKind kind, int order)
{
    return FormalGroupLaw(backend_for_order(kind, order), order);
}

bool is_zero_vector(const MultiplicityVector& v)
{
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::vector<MultiplicityVector> vectors(int r, const std::vector<int>& values)
{
    std::vector<MultiplicityVector> out{{}};
    for (int k = 0; k < r; ++k) {
        std::vector<MultiplicityVector> next;
        for (const auto& v : out)
            for (int x : values) {
                auto w = v;
                w.push_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    std::erase_if(out, is_zero_vector);
    return out;
}

// Every valid configuration with r components on an ambient space of the
// given dimension.
std::vector<SncConfiguration> all_configs(int r, int ambient_dim)
{
    std::vector<Face> candidates;
    for (std::uint32_t bits = 1; bits < (1u << r); ++bits) {
        const Face f = Face::from_bits(bits);
        if (f.size() >= 2 && f.size() <= ambient_dim)
            candidates.push_back(f);
    }
    std::vector<Component> comps;
    for (int i = 1; i <= r; ++i)
        comps.push_back(Component{"D" + std::to_string(i), true});
    std::vector<SncConfiguration> out;
    for (std::uint32_t pick = 0; pick < (1u << candidates.size()); ++pick) {
        std::set<Face> faces;
        for (int i = 0; i < r; ++i)
            faces.insert(Face::singleton(i));
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if ((pick >> k) & 1u)
                faces.insert(candidates[k]);
        SncConfiguration config(ambient_dim, comps, std::move(faces));
        if (validate_config(config).ok())
            out.push_back(std::move(config));
    }
    return out;
}

//////////////////
// Criterion 1  //
//////////////////

Verdict fgl_axioms()
{
    Verdict v;
    const int N = 8;
    const std::vector<std::string> UVW{"u", "v", "w"};
    const TruncatedSeries u = var(UVW, N, 0);
    const TruncatedSeries w = var(UVW, N, 2);
    const TruncatedSeries vv = var(UVW, N, 1);
    const TruncatedSeries zero(UVW, N);
    for (auto kind : {BackendKind::Log, BackendKind::Free}) {
        const FormalGroupLaw f = law(kind, N);
        const std::string tag = kind == BackendKind::Log ? "log" : "free";
        v.require(fgl_sum(f, u, zero) == u, tag + ": F(u,0) != u");
        v.require(fgl_sum(f, zero, u) == u, tag + ": F(0,u) != u");
        v.require(fgl_sum(f, u, vv) == fgl_sum(f, vv, u), tag + ": F(u,v) != F(v,u)");
        if (kind == BackendKind::Log)
            v.require(fgl_sum(f, fgl_sum(f, u, vv), w) == fgl_sum(f, u, fgl_sum(f, vv, w)),
                      "log: associativity fails");
    }
    return v;
}

//////////////////
// Criterion 2  //
//////////////////

Verdict inverse()
{
    Verdict v;
    const int N = 8;
    const TruncatedSeries u = var({"u"}, N, 0);
    for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Additive, BackendKind::Multiplicative}) {
        const FormalGroupLaw f = law(kind, N);
        v.require(fgl_sum(f, u, formal_inverse(f)).is_zero(), f.backend().name() + ": F(u, chi(u)) != 0");
    }
    const TruncatedSeries chi = formal_inverse(law(BackendKind::Multiplicative, N));
    const Polynomial b = fgl::testing::b();
    for (int k = 1; k <= N; ++k) {
        const Polynomial expected = (k % 2 == 0 ? Polynomial(1L) : Polynomial(-1L)) * b.pow(k - 1);
        v.require(chi.coefficient({k}) == expected, "mult: chi coefficient of u^" + std::to_string(k));
    }
    v.require(chi.terms().size() == static_cast<std::size_t>(N), "mult: chi has unexpected extra terms");
    return v;
}

//////////////////
// Criterion 3  //
//////////////////

void check_decomposition(Verdict& v, const TruncatedSeries& s, const std::string& label)
{
    const auto parts = support_decompose(s);
    for (const auto& [face, part] : parts)
        for (const auto& [e, c] : part.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                v.require(e[i] == 0 || face.contains(static_cast<int>(i)),
                          label + ": F_" + face.to_string() + " leaves its support");
    v.require(recompose(parts, s.variables(), s.order()) == s, label + ": round trip differs");
}

Verdict support_round_trip()
{
    Verdict v;
    std::mt19937 rng(20260101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(trial % 4);
        const int order = 1 + (trial / 4) % 6;
        check_decomposition(v, fgl::testing::random_series(rng, r, order), "random series " + std::to_string(trial));
    }
    const FormalGroupLaw f = law(BackendKind::Free, 6);
    for (const auto& n : vectors(4, {-2, -1, 0, 1, 2})) {
        std::ostringstream label;
        label << "F^(" << n[0] << "," << n[1] << "," << n[2] << "," << n[3] << ")";
        check_decomposition(v, multi_linear(f, n), label.str());
    }
    return v;
}

//////////////////
// Criterion 4  //
//////////////////

Verdict n_series_checks()
{
    Verdict v;
    const FormalGroupLaw f = law(BackendKind::Log, 8);
    std::map<int, TruncatedSeries> series;
    for (int n = -10; n <= 10; ++n)
        series.emplace(n, n_series(f, n));
    for (int n = -5; n <= 5; ++n)
        for (int m = -5; m <= 5; ++m)
            v.require(series.at(n + m) == fgl_sum(f, series.at(n), series.at(m)),
                      "[" + std::to_string(n + m) + "]u != F([" + std::to_string(n) + "]u, [" +
                          std::to_string(m) + "]u)");

    // F(u, u) = 2u + sum a_ij u^{i+j}, collected by hand through order 4.
    using fgl::testing::A;
    const TruncatedSeries u = var({"u"}, 4, 0);
    const TruncatedSeries oracle = u * Polynomial(2L) + u.pow(2) * A(1, 1) + u.pow(3) * (2 * A(1, 2)) +
                                   u.pow(4) * (2 * A(1, 3) + A(2, 2));
    v.require(n_series(law(BackendKind::Free, 4), 2) == oracle, "free: [2]u differs from the hand expansion");
    return v;
}

//////////////////
// Criterion 5  //
//////////////////

Verdict divisor_fixtures()
{
    Verdict v;
    using fgl::testing::A;
    using fgl::testing::make_config;
    const FormalGroupLaw f = law(BackendKind::Free, 4);

    const SncConfiguration one = make_config(2, 1, {{1}});
    FaceClassVector reduced(one);
    reduced.add(Face{0}, ChernPolynomial::constant(1, 1, 1));
    v.require(divisor_class(one, {1}, f) == reduced, "single reduced component");

    const SncConfiguration surface = fgl::testing::two_curves();
    FaceClassVector dp(surface);
    dp.add(Face{0}, ChernPolynomial::constant(2, 1, 1));
    dp.add(Face{1}, ChernPolynomial::constant(2, 1, 1));
    dp.add(Face({0, 1}), ChernPolynomial::constant(2, 0, A(1, 1)));
    v.require(divisor_class(surface, {1, 1}, f) == dp, "double point a11");

    FaceClassVector doubled(one);
    doubled.add(Face{0}, ChernPolynomial::constant(1, 1, 2) + ChernPolynomial::symbol(1, 1, 0) * A(1, 1));
    v.require(divisor_class(one, {2}, f) == doubled, "multiplicity 2");

    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + trial % 3;
        const int dim = 1 + (trial / 3) % 4;
        const SncConfiguration config = fgl::testing::random_config(rng, r, dim);
        MultiplicityVector n(static_cast<std::size_t>(r));
        do {
            for (auto& x : n)
                x = mult(rng);
        } while (is_zero_vector(n));
        for (auto kind : {BackendKind::Free, BackendKind::Log})
            v.require(class_dimension(divisor_class(config, n, law(kind, 4))) == GradedDegree::of(dim - 1),
                      "class_dimension != ambient_dim - 1 on random configuration " + std::to_string(trial));
    }
    return v;
}

//////////////////
// Criterion 6  //
//////////////////

Verdict product_properties()
{
    Verdict v;
    const auto kinds = {BackendKind::Log, BackendKind::Additive, BackendKind::Multiplicative};
    std::size_t configs = 0;
    for (int r = 1; r <= 3; ++r) {
        const auto mults = vectors(r, {0, 1, 2});
        for (int dim = 1; dim <= 3; ++dim) {
            for (const SncConfiguration& config : all_configs(r, dim)) {
                ++configs;
                const std::string where = "r=" + std::to_string(r) + " dim=" + std::to_string(dim);
                for (auto kind : kinds) {
                    const FormalGroupLaw f = law(kind, 3);
                    std::map<MultiplicityVector, FaceClassVector> divisor;
                    for (const auto& p : mults)
                        divisor.emplace(p, divisor_class(config, p, f));
                    for (const auto& n : mults)
                        for (const auto& p : mults) {
                            const FaceClassVector np = product_class(config, n, p, f);
                            v.require(np == product_class(config, p, n, f), "symmetry, " + where);
                            v.require(class_dimension(np).matches(dim - 2), "product dimension, " + where);
                            v.require(normal_form(np) ==
                                          normal_form(apply_divisor_operator(divisor.at(p), n, f)),
                                      "operator normal form, " + where);
                        }
                }
                // Reduction to a component, on every backend including Free.
                for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Additive,
                                  BackendKind::Multiplicative}) {
                    const FormalGroupLaw f = law(kind, 3);
                    for (int i = 0; i < r; ++i) {
                        MultiplicityVector n(static_cast<std::size_t>(r), 0);
                        n[static_cast<std::size_t>(i)] = 1;
                        for (const auto& p : mults) {
                            if (p[static_cast<std::size_t>(i)] != 0)
                                continue;
                            const Restriction res = restrict_to_component(config, i, p);
                            FaceClassVector expected(config);
                            if (!is_zero_vector(res.multiplicities))
                                expected = transport_from_restriction(
                                    res, divisor_class(res.config, res.multiplicities, f), config);
                            v.require(product_class(config, n, p, f) == expected, "reduction to component, " + where);
                        }
                    }
                }
            }
        }
    }
    // Symmetry and dimension on randomized configurations with larger data.
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> mult(-2, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 2 + trial % 3;
        const int dim = 2 + trial % 3;
        const SncConfiguration config = fgl::testing::random_config(rng, r, dim);
        MultiplicityVector n(static_cast<std::size_t>(r));
        MultiplicityVector p(static_cast<std::size_t>(r));
        do {
            for (auto& x : n)
                x = mult(rng);
            for (auto& x : p)
                x = mult(rng);
        } while (is_zero_vector(n) || is_zero_vector(p));
        for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Multiplicative}) {
            const FormalGroupLaw f = law(kind, 4);
            const FaceClassVector np = product_class(config, n, p, f);
            v.require(np == product_class(config, p, n, f), "symmetry on random configuration");
            v.require(class_dimension(np).matches(dim - 2), "product dimension on random configuration");
        }
    }
    v.require(configs > 20, "configuration enumeration is too small");
    return v;
}

//////////////////
// Criterion 7  //
//////////////////

SpaceLabel space(const std::string& name, int dim)
{
    SpaceLabel s;
    s.name = name;
    s.dim = dim;
    return s;
}

Verdict cycle_algebra()
{
    Verdict v;
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(0, 5);
    const SpaceLabel X = space("X", 6);

    for (int trial = 0; trial < 200; ++trial) {
        const int length = trial % 6;
        const int d = dim(rng);
        std::vector<BlowupStep> steps;
        for (int i = 0; i < length; ++i)
            steps.push_back(BlowupStep{space("Y" + std::to_string(i), d), space("Y" + std::to_string(i + 1), d),
                                       space("E" + std::to_string(i), d), space("P" + std::to_string(i), d)});
        CycleSum summed;
        for (const auto& s : steps) {
            const CycleSum rel = blowup_relation(s, X);
            v.require(cycle_degree(rel) == GradedDegree::of(d), "blowup relation degree");
            summed += rel;
        }
        const CycleSum tel = blowup_tower_telescope(steps, X);
        v.require(tel == summed, "telescope identity, length " + std::to_string(length));
        if (length > 0)
            v.require(cycle_degree(tel) == GradedDegree::of(d), "telescope degree");
    }

    for (int n = 1; n <= 5; ++n) {
        DoublePointDatum datum{X, space("Yinf", n), space("A", n), space("B", n), space("D", n - 1), space("PD", n), n};
        v.require(cycle_degree(double_point_relation(datum)) == GradedDegree::of(n), "double point degree");
    }
    for (int dy = 0; dy <= 5; ++dy)
        for (int r = 0; r <= 3; ++r) {
            std::vector<std::string> bundles;
            for (int k = 0; k < r; ++k)
                bundles.push_back("L" + std::to_string(k));
            for (auto kind : {BackendKind::Free, BackendKind::Log, BackendKind::Multiplicative}) {
                const auto rel = omega_relation_generator(
                    FglWitness{space("Y", dy), X, bundles, "L", "M", backend_for_order(kind, std::max(dy, 1))});
                v.require(cycle_degree(rel) == GradedDegree::of(dy - r - 1), "FGL generator degree");
            }
            if (r >= 1 && dy >= 1) {
                const auto sect = omega_relation_generator(SectWitness{space("Y", dy), space("Z", dy - 1), X, bundles});
                v.require(cycle_degree(sect) == GradedDegree::of(dy - r), "Sect generator degree");
            }
            for (int dz = 0; dz < r && dz <= dy; ++dz) {
                const auto dimrel =
                    omega_relation_generator(DimWitness{space("Y", dy), X, space("Z", dz), bundles, {"M"}});
                v.require(cycle_degree(dimrel) == GradedDegree::of(dy - r - 1), "Dim generator degree");
            }
        }

    const SpaceLabel Z = space("Z", 7);
    const SpaceLabel T = space("T", 8);
    const LabelMorphism g{X, Z, true};
    const LabelMorphism h{Z, T, true};
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        CycleSum z;
        for (int k = 0; k < 3; ++k)
            z.add(DecoratedCycle(space("Y" + std::to_string(k), dim(rng)), X), coeff(rng));
        v.require(pushforward(pushforward(z, g), h) == pushforward(z, compose(g, h)), "pushforward functoriality");
        v.require(pushforward(z, identity_morphism(X)) == z, "pushforward along the identity");
        for (int d = 0; d <= 5; ++d)
            v.require(pushforward(z.graded_part(d), g) == pushforward(z, g).graded_part(d), "pushforward degree");

        const int d1 = dim(rng);
        const int d2 = dim(rng);
        const SpaceLabel W = space("W", 2);
        const CycleSum z1(DecoratedCycle(space("A", d1), X), coeff(rng));
        const CycleSum z2(DecoratedCycle(space("B", d1), X), coeff(rng));
        const CycleSum w(DecoratedCycle(space("C", d2), W), 1 + trial % 3);
        v.require(exterior_product(z1 + z2, w) == exterior_product(z1, w) + exterior_product(z2, w),
                  "exterior product bilinearity");
        v.require(exterior_product(w, z1 + z2) == exterior_product(w, z1) + exterior_product(w, z2),
                  "exterior product bilinearity");
        v.require(cycle_degree(exterior_product(z1 + z2, w)).matches(d1 + d2), "exterior product degree");

        DecoratedCycle c(space("Y", d1), X);
        const int r = trial % 4;
        for (int k = 0; k < r; ++k)
            c = chern_decorate(c, "L" + std::to_string(k));
        v.require(c.degree() == d1 - r, "decoration degree rule");
    }
    return v;
}

//////////////////
// Criterion 8  //
//////////////////

Verdict determinism()
{
    using namespace fgl::testing;
    Verdict v;
    const auto cases = golden_cases();
    v.require(!cases.empty(), "no golden cases");
    for (const auto& c : cases) {
        const CliResult first = run_cli(c.args);
        const CliResult second = run_cli(c.args);
        v.require(first.status == c.exit_status, c.name + ": exit status " + std::to_string(first.status));
        v.require(first.out == second.out, c.name + ": two runs differ");
        v.require(first.out == expected_output(c), c.name + ": differs from the golden file");
        const std::string mismatch = reserialization_mismatch(c, first.out);
        v.require(mismatch.empty(), c.name + ": " + mismatch);
    }
    return v;
}

struct Criterion
{
    int number;
    const char* title;
    double limit_seconds;
    std::function<Verdict()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "formal group law axioms", 10, fgl_axioms},
        {2, "formal inverse", 5, inverse},
        {3, "support decomposition round trip", 30, support_round_trip},
        {4, "n-series", 10, n_series_checks},
        {5, "divisor class fixtures and dimension", 20, divisor_fixtures},
        {6, "product class properties", 60, product_properties},
        {7, "cycle algebra", 5, cycle_algebra},
        {8, "CLI determinism", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.pass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            v.pass = false;
            v.detail = "runtime limit exceeded";
        }
        std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", c.number, v.pass ? "PASS" : "FAIL", c.title, seconds,
                    v.detail.empty() ? "" : ": ", v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
