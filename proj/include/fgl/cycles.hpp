#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgl/coeff_ring.hpp"
#include "fgl/errors.hpp"
#include "fgl/grading.hpp"

namespace fgl {

// Opaque stand-in for a scheme: only its dimension and a few flags are
// tracked. nu is the minimal dimension of a target of a projective morphism
// from the space (0 iff projective), kept as metadata.
struct SpaceLabel
{
    std::string name;
    int dim = 0;
    bool smooth = true;
    bool quasiprojective = true;
    bool complete = false;
    std::optional<int> nu;

    friend auto operator<=>(const SpaceLabel&, const SpaceLabel&) = default;
    friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;
};

void validate_label(const SpaceLabel& label);

// Y x Z: dimensions add, flags are conjunctions, nu is dropped.
SpaceLabel product_label(const SpaceLabel& a, const SpaceLabel& b);

// [f: Y -> X, L_1, .., L_r]. Bundles are kept sorted: cycles that differ by a
// permutation of their bundles are the same cycle.
class DecoratedCycle
{
public:
    DecoratedCycle(SpaceLabel source, SpaceLabel target, std::vector<std::string> bundles = {});

    const SpaceLabel& source() const { return source_; }
    const SpaceLabel& target() const { return target_; }
    const std::vector<std::string>& bundles() const { return bundles_; }
    bool is_plain() const { return bundles_.empty(); }
    // dim Y - r; may be negative.
    int degree() const { return source_.dim - static_cast<int>(bundles_.size()); }

    DecoratedCycle with_target(SpaceLabel target) const;

    friend auto operator<=>(const DecoratedCycle& a, const DecoratedCycle& b)
    {
        if (auto c = a.target_ <=> b.target_; c != 0)
            return c;
        if (auto c = a.source_ <=> b.source_; c != 0)
            return c;
        return a.bundles_ <=> b.bundles_;
    }
    friend bool operator==(const DecoratedCycle&, const DecoratedCycle&) = default;

private:
    SpaceLabel source_;
    SpaceLabel target_;
    std::vector<std::string> bundles_;
};

namespace detail {
inline bool coefficient_is_zero(std::int64_t c) { return c == 0; }
inline bool coefficient_is_zero(const Polynomial& c) { return c.is_zero(); }
inline GradedDegree coefficient_degree(std::int64_t) { return GradedDegree::of(0); }
inline GradedDegree coefficient_degree(const Polynomial& c) { return graded_degree(c); }
} // namespace detail

// Element of the free abelian group (or free L-module) on decorated cycles.
template <typename Coeff>
class BasicCycleSum
{
public:
    using TermMap = std::map<DecoratedCycle, Coeff>;

    BasicCycleSum() = default;
    BasicCycleSum(const DecoratedCycle& cycle, const Coeff& coeff) { add(cycle, coeff); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coefficient(const DecoratedCycle& cycle) const
    {
        auto it = terms_.find(cycle);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add(const DecoratedCycle& cycle, const Coeff& coeff)
    {
        if (detail::coefficient_is_zero(coeff))
            return;
        auto [it, inserted] = terms_.try_emplace(cycle, coeff);
        if (!inserted) {
            it->second += coeff;
            if (detail::coefficient_is_zero(it->second))
                terms_.erase(it);
        }
    }

    BasicCycleSum& operator+=(const BasicCycleSum& other)
    {
        for (const auto& [c, k] : other.terms_)
            add(c, k);
        return *this;
    }
    BasicCycleSum& operator-=(const BasicCycleSum& other)
    {
        for (const auto& [c, k] : other.terms_)
            add(c, -k);
        return *this;
    }
    BasicCycleSum operator-() const
    {
        BasicCycleSum out;
        out -= *this;
        return out;
    }
    friend BasicCycleSum operator+(BasicCycleSum a, const BasicCycleSum& b) { return a += b; }
    friend BasicCycleSum operator-(BasicCycleSum a, const BasicCycleSum& b) { return a -= b; }
    friend bool operator==(const BasicCycleSum&, const BasicCycleSum&) = default;

    // Terms of the given degree (cycle degree plus coefficient degree).
    BasicCycleSum graded_part(int degree) const
    {
        BasicCycleSum out;
        for (const auto& [c, k] : terms_)
            if (detail::coefficient_degree(k).matches(degree - c.degree()))
                out.add(c, k);
        return out;
    }

private:
    TermMap terms_;
};

using CycleSum = BasicCycleSum<std::int64_t>;
// Relations of the FGL kind live in L (x) (cycle group).
using LazardCycleSum = BasicCycleSum<Polynomial>;

// Common degree of the terms; for Lazard coefficients the coefficient degree
// is added to the cycle degree.
template <typename Coeff>
GradedDegree cycle_degree(const BasicCycleSum<Coeff>& z)
{
    GradedDegree d = GradedDegree::any();
    for (const auto& [c, k] : z.terms()) {
        const GradedDegree g = detail::coefficient_degree(k);
        if (g.is_inhomogeneous())
            return GradedDegree::inhomogeneous();
        d = d.combine(c.degree() + (g.is_any() ? 0 : g.value()));
    }
    return d;
}

// [Y -> X] for a possibly reducible Y: the sum over its listed components.
CycleSum cycle_of_components(const std::vector<SpaceLabel>& components, const SpaceLabel& target);

struct DoublePointDatum
{
    SpaceLabel target;        // X
    SpaceLabel y_infinity;    // Y_inf
    SpaceLabel a;             // A
    SpaceLabel b;             // B
    SpaceLabel intersection;  // D = A cap B
    SpaceLabel projective;    // P_D = P(O_Y(A)|_D + O_D)
    int fiber_dim = 0;        // n
};

// [Y_inf -> X] - [A -> X] - [B -> X] + [P_D -> X].
CycleSum double_point_relation(const DoublePointDatum& datum);

struct BlowupStep
{
    SpaceLabel source;       // Y_i
    SpaceLabel blown_up;     // Y_{i+1}
    SpaceLabel exceptional;  // E_i
    SpaceLabel projective;   // P_{D_i}
};

// [Y_i -> X] - [Y_{i+1} -> X] - [E_i -> X] + [P_{D_i} -> X].
CycleSum blowup_relation(const BlowupStep& step, const SpaceLabel& target);

// Sums the relations of a chain of blowups Y_0 <- Y_1 <- .. <- Y_n and returns
// the closed form [Y_0] - [Y_n] - sum_i ([E_i] - [P_{D_i}]), after checking it
// agrees with the term-by-term sum.
CycleSum blowup_tower_telescope(const std::vector<BlowupStep>& steps, const SpaceLabel& target);

// [Y -> X] x [Z -> W] = [Y x Z -> X x W], extended bilinearly.
CycleSum exterior_product(const CycleSum& z, const CycleSum& w);

// A morphism g: X -> Z between labels.
struct LabelMorphism
{
    SpaceLabel source;
    SpaceLabel target;
    bool proper = true;
};

LabelMorphism identity_morphism(const SpaceLabel& space);
// h o g
LabelMorphism compose(const LabelMorphism& g, const LabelMorphism& h);

template <typename Coeff>
BasicCycleSum<Coeff> pushforward(const BasicCycleSum<Coeff>& z, const LabelMorphism& g)
{
    if (!g.proper)
        throw DomainError("push-forward along a morphism not marked proper");
    BasicCycleSum<Coeff> out;
    for (const auto& [c, k] : z.terms()) {
        if (c.target() != g.source)
            throw DomainError("cycle over '" + c.target().name + "' cannot be pushed along a map from '" +
                              g.source.name + "'");
        out.add(c.with_target(g.target), k);
    }
    return out;
}

// ch(L)[f: Y -> X, L_1..L_r] = [f: Y -> X, L_1..L_r, f^*L]. The appended
// bundle keeps the label of L; labels on a cycle always denote pullbacks to
// its source.
DecoratedCycle chern_decorate(const DecoratedCycle& z, const std::string& bundle);

struct DimWitness
{
    SpaceLabel source;                    // Y
    SpaceLabel target;                    // X
    SpaceLabel base;                      // Z, with smooth pi: Y -> Z
    std::vector<std::string> pulled_back; // L_1..L_r on Z, r > dim Z
    std::vector<std::string> extra;       // M_1..M_s on Y
};

struct SectWitness
{
    SpaceLabel source;                // Y
    SpaceLabel zero_locus;            // Z, zero scheme of a transverse section of L_r
    SpaceLabel target;                // X
    std::vector<std::string> bundles; // L_1..L_r
};

struct FglWitness
{
    SpaceLabel source;                // Y
    SpaceLabel target;                // X
    std::vector<std::string> bundles; // L_1..L_r
    std::string first;                // L
    std::string second;               // M
    CoefficientBackend backend = CoefficientBackend::free_backend();
};

std::string tensor_label(const std::string& l, const std::string& m);

// [Y -> X, pi^*L_1, .., pi^*L_r, M_1, .., M_s].
CycleSum omega_relation_generator(const DimWitness& w);
// [Y -> X, L_1..L_r] - [Z -> X, L_1..L_{r-1}].
CycleSum omega_relation_generator(const SectWitness& w);
// [Y -> X, L, L(x)M] - sum_{i,j>=0} a_{i,j} [Y -> X, L, L^i, M^j], where
// a_{1,0} = a_{0,1} = 1 and terms carrying more than dim Y bundles (which vanish
// by the dimension axiom) are omitted.
LazardCycleSum omega_relation_generator(const FglWitness& w);

} // namespace fgl
