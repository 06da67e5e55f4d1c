#include "fgl/cycles.hpp"

#include <algorithm>

namespace fgl {

void validate_label(const SpaceLabel& label)
{
    if (label.dim < 0)
        throw DomainError("space '" + label.name + "' has negative dimension");
    if (label.nu && (*label.nu < 0 || *label.nu > label.dim))
        throw DomainError("space '" + label.name + "' has nu outside [0, dim]");
}

SpaceLabel product_label(const SpaceLabel& a, const SpaceLabel& b)
{
    SpaceLabel out;
    out.name = a.name + "*" + b.name;
    out.dim = a.dim + b.dim;
    out.smooth = a.smooth && b.smooth;
    out.quasiprojective = a.quasiprojective && b.quasiprojective;
    out.complete = a.complete && b.complete;
    return out;
}

DecoratedCycle::DecoratedCycle(SpaceLabel source, SpaceLabel target, std::vector<std::string> bundles)
    : source_(std::move(source)), target_(std::move(target)), bundles_(std::move(bundles))
{
    validate_label(source_);
    validate_label(target_);
    std::sort(bundles_.begin(), bundles_.end());
}

DecoratedCycle DecoratedCycle::with_target(SpaceLabel target) const
{
    return DecoratedCycle(source_, std::move(target), bundles_);
}

CycleSum cycle_of_components(const std::vector<SpaceLabel>& components, const SpaceLabel& target)
{
    CycleSum out;
    for (const auto& c : components)
        out.add(DecoratedCycle(c, target), 1);
    return out;
}

namespace {

void require_dim(const SpaceLabel& label, int dim, const std::string& role)
{
    if (label.dim != dim)
        throw DomainError(role + " '" + label.name + "' has dimension " + std::to_string(label.dim) +
                          ", expected " + std::to_string(dim));
}

void require_smooth(const SpaceLabel& label, const std::string& role)
{
    if (!label.smooth)
        throw DomainError(role + " '" + label.name + "' must be smooth");
}

} // namespace

CycleSum double_point_relation(const DoublePointDatum& datum)
{
    const int n = datum.fiber_dim;
    require_dim(datum.y_infinity, n, "Y_inf");
    require_dim(datum.a, n, "A");
    require_dim(datum.b, n, "B");
    require_dim(datum.projective, n, "P_D");
    require_dim(datum.intersection, n - 1, "D");
    for (const auto* label : {&datum.y_infinity, &datum.a, &datum.b, &datum.intersection, &datum.projective})
        require_smooth(*label, "double point fiber");
    validate_label(datum.target);

    CycleSum out;
    out.add(DecoratedCycle(datum.y_infinity, datum.target), 1);
    out.add(DecoratedCycle(datum.a, datum.target), -1);
    out.add(DecoratedCycle(datum.b, datum.target), -1);
    out.add(DecoratedCycle(datum.projective, datum.target), 1);
    return out;
}

CycleSum blowup_relation(const BlowupStep& step, const SpaceLabel& target)
{
    const int n = step.source.dim;
    require_dim(step.blown_up, n, "blowup");
    require_dim(step.exceptional, n, "exceptional divisor");
    require_dim(step.projective, n, "P_D");
    CycleSum out;
    out.add(DecoratedCycle(step.source, target), 1);
    out.add(DecoratedCycle(step.blown_up, target), -1);
    out.add(DecoratedCycle(step.exceptional, target), -1);
    out.add(DecoratedCycle(step.projective, target), 1);
    return out;
}

CycleSum blowup_tower_telescope(const std::vector<BlowupStep>& steps, const SpaceLabel& target)
{
    if (steps.empty())
        return {};
    for (std::size_t k = 1; k < steps.size(); ++k)
        if (steps[k].source != steps[k - 1].blown_up)
            throw DomainError("blowup tower is not chained at step " + std::to_string(k + 1) + ": '" +
                              steps[k].source.name + "' is not '" + steps[k - 1].blown_up.name + "'");

    CycleSum summed;
    for (const auto& step : steps)
        summed += blowup_relation(step, target);

    CycleSum closed;
    closed.add(DecoratedCycle(steps.front().source, target), 1);
    closed.add(DecoratedCycle(steps.back().blown_up, target), -1);
    for (const auto& step : steps) {
        closed.add(DecoratedCycle(step.exceptional, target), -1);
        closed.add(DecoratedCycle(step.projective, target), 1);
    }
    if (!(closed == summed))
        throw std::logic_error("blowup telescope does not match the summed relations");
    return closed;
}

CycleSum exterior_product(const CycleSum& z, const CycleSum& w)
{
    CycleSum out;
    for (const auto& [cz, kz] : z.terms()) {
        if (!cz.is_plain())
            throw DomainError("exterior product is defined on plain cycles only");
        for (const auto& [cw, kw] : w.terms()) {
            if (!cw.is_plain())
                throw DomainError("exterior product is defined on plain cycles only");
            out.add(DecoratedCycle(product_label(cz.source(), cw.source()),
                                   product_label(cz.target(), cw.target())),
                    kz * kw);
        }
    }
    return out;
}

LabelMorphism identity_morphism(const SpaceLabel& space)
{
    return LabelMorphism{space, space, true};
}

LabelMorphism compose(const LabelMorphism& g, const LabelMorphism& h)
{
    if (g.target != h.source)
        throw DomainError("cannot compose: '" + g.target.name + "' is not '" + h.source.name + "'");
    return LabelMorphism{g.source, h.target, g.proper && h.proper};
}

DecoratedCycle chern_decorate(const DecoratedCycle& z, const std::string& bundle)
{
    std::vector<std::string> bundles = z.bundles();
    bundles.push_back(bundle);
    return DecoratedCycle(z.source(), z.target(), std::move(bundles));
}

std::string tensor_label(const std::string& l, const std::string& m)
{
    return l + "(x)" + m;
}

CycleSum omega_relation_generator(const DimWitness& w)
{
    if (static_cast<int>(w.pulled_back.size()) <= w.base.dim)
        throw DomainError("dimension relation needs more than dim Z = " + std::to_string(w.base.dim) +
                          " pulled-back bundles, got " + std::to_string(w.pulled_back.size()));
    if (w.base.dim > w.source.dim)
        throw DomainError("a smooth morphism Y -> Z needs dim Z <= dim Y");
    require_smooth(w.source, "Y");
    require_smooth(w.base, "Z");
    std::vector<std::string> bundles = w.pulled_back;
    bundles.insert(bundles.end(), w.extra.begin(), w.extra.end());
    return CycleSum(DecoratedCycle(w.source, w.target, std::move(bundles)), 1);
}

CycleSum omega_relation_generator(const SectWitness& w)
{
    if (w.bundles.empty())
        throw DomainError("section relation needs at least one bundle");
    require_dim(w.zero_locus, w.source.dim - 1, "zero locus");
    require_smooth(w.source, "Y");
    require_smooth(w.zero_locus, "zero locus");
    std::vector<std::string> restricted(w.bundles.begin(), w.bundles.end() - 1);
    CycleSum out;
    out.add(DecoratedCycle(w.source, w.target, w.bundles), 1);
    out.add(DecoratedCycle(w.zero_locus, w.target, std::move(restricted)), -1);
    return out;
}

LazardCycleSum omega_relation_generator(const FglWitness& w)
{
    require_smooth(w.source, "Y");
    const int room = w.source.dim - static_cast<int>(w.bundles.size());
    LazardCycleSum out;
    std::vector<std::string> with_tensor = w.bundles;
    with_tensor.push_back(tensor_label(w.first, w.second));
    out.add(DecoratedCycle(w.source, w.target, std::move(with_tensor)), Polynomial(1L));
    if (room < 1)
        return out;

    const auto table = lazard_coefficients(w.backend, room);
    for (int i = 0; i <= room; ++i) {
        for (int j = 0; i + j <= room; ++j) {
            Polynomial a;
            if (i + j == 1)
                a = 1L;
            else if (i >= 1 && j >= 1)
                a = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a.is_zero())
                continue;
            std::vector<std::string> bundles = w.bundles;
            bundles.insert(bundles.end(), static_cast<std::size_t>(i), w.first);
            bundles.insert(bundles.end(), static_cast<std::size_t>(j), w.second);
            out.add(DecoratedCycle(w.source, w.target, std::move(bundles)), -a);
        }
    }
    return out;
}

} // namespace fgl
