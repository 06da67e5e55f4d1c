#include "fgl/snc.hpp"

#include <algorithm>

namespace fgl {

namespace {

std::string first_message(const ValidationReport& report)
{
    if (report.violations.empty())
        return "invalid configuration";
    const auto& v = report.violations.front();
    return "invalid configuration: " + v.message;
}

} // namespace

InvalidConfiguration::InvalidConfiguration(ValidationReport report)
    : DomainError(first_message(report)), report_(std::move(report))
{
}

ValidationReport validate_config(const SncConfiguration& config)
{
    ValidationReport report;
    const int r = static_cast<int>(config.size());
    if (r > Face::max_index) {
        report.violations.push_back({"more than " + std::to_string(Face::max_index) + " components", {}});
        return report;
    }
    if (config.ambient_dim() < 0)
        report.violations.push_back({"negative ambient dimension", {}});

    const Face all = Face::from_bits(r == Face::max_index ? ~std::uint32_t{0}
                                                          : (std::uint32_t{1} << r) - 1);
    std::set<Face> reported_missing;
    for (int i = 0; i < r; ++i) {
        const Face single = Face::singleton(i);
        if (!config.has_face(single)) {
            report.violations.push_back({"component face " + single.to_string() + " is missing", single});
            reported_missing.insert(single);
        }
    }
    for (const Face& f : config.faces()) {
        if (f.empty()) {
            report.violations.push_back({"empty face", f});
            continue;
        }
        if (!f.is_subset_of(all)) {
            report.violations.push_back({"face " + f.to_string() + " names an unknown component", f});
            continue;
        }
        if (config.face_dimension(f) < 0)
            report.violations.push_back({"face " + f.to_string() + " would have negative dimension " +
                                             std::to_string(config.face_dimension(f)),
                                         f});
        if (f.size() < 2)
            continue;
        for (int i : f.indices()) {
            const Face sub = f.without(i);
            if (!config.has_face(sub) && !reported_missing.contains(sub)) {
                report.violations.push_back(
                    {"face " + f.to_string() + " requires its subface " + sub.to_string(), sub});
                reported_missing.insert(sub);
            }
        }
    }
    return report;
}

void require_valid(const SncConfiguration& config)
{
    auto report = validate_config(config);
    if (!report.ok())
        throw InvalidConfiguration(std::move(report));
}

/////////////////////
// FaceClassVector //
/////////////////////

FaceClassVector::FaceClassVector(SncConfiguration config) : config_(std::move(config)) {}

ChernPolynomial FaceClassVector::entry(Face f) const
{
    auto it = entries_.find(f);
    if (it != entries_.end())
        return it->second;
    return ChernPolynomial(config_.size(), std::max(config_.face_dimension(f), 0));
}

void FaceClassVector::add(Face f, const ChernPolynomial& p)
{
    if (!config_.has_face(f))
        throw DomainError("class placed on " + f.to_string() + ", which is not a face");
    if (p.symbols() != config_.size() || p.dim_bound() != config_.face_dimension(f))
        throw DomainError("class on face " + f.to_string() + " has the wrong shape");
    if (p.is_zero())
        return;
    auto [it, inserted] = entries_.try_emplace(f, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

FaceClassVector& FaceClassVector::operator+=(const FaceClassVector& other)
{
    if (!(config_ == other.config_))
        throw DomainError("face classes over different configurations");
    for (const auto& [f, p] : other.entries_)
        add(f, p);
    return *this;
}

////////////////
// Evaluators //
////////////////

namespace {

void check_multiplicities(const SncConfiguration& config, const MultiplicityVector& n, bool require_nonzero)
{
    if (n.size() != config.size())
        throw DomainError("multiplicity vector has length " + std::to_string(n.size()) + " but there are " +
                          std::to_string(config.size()) + " components");
    if (require_nonzero && std::all_of(n.begin(), n.end(), [](int x) { return x == 0; }))
        throw DomainError("the divisor must be nonzero");
}

void check_order(const SncConfiguration& config, const FormalGroupLaw& law)
{
    if (law.order() < config.ambient_dim())
        throw TruncationError("series order " + std::to_string(law.order()) +
                              " is below the ambient dimension " + std::to_string(config.ambient_dim()));
}

bool nonzero_on(const MultiplicityVector& n, Face f)
{
    for (int i : f.indices())
        if (n[static_cast<std::size_t>(i)] == 0)
            return false;
    return true;
}

} // namespace

FaceClassVector divisor_class(const SncConfiguration& config, const MultiplicityVector& n,
                              const FormalGroupLaw& law)
{
    require_valid(config);
    check_multiplicities(config, n, true);
    check_order(config, law);

    FaceClassVector out(config);
    const auto parts = support_decompose(multi_linear(law, n));
    for (const auto& [face, part] : parts) {
        if (!config.has_face(face))
            continue;
        out.add(face, evaluate_at_chern(part, config.face_dimension(face)));
    }
    return out;
}

FaceClassVector product_class(const SncConfiguration& config, const MultiplicityVector& n,
                              const MultiplicityVector& p, const FormalGroupLaw& law)
{
    require_valid(config);
    check_multiplicities(config, n, true);
    check_multiplicities(config, p, true);
    check_order(config, law);

    FaceClassVector out(config);
    const auto parts_n = support_decompose(multi_linear(law, n));
    const auto parts_p = support_decompose(multi_linear(law, p));
    for (const auto& [J, fj] : parts_n) {
        if (!nonzero_on(n, J))
            continue;
        for (const auto& [I, fi] : parts_p) {
            if (!nonzero_on(p, I))
                continue;
            const Face K = I | J;
            if (!config.has_face(K))
                continue;
            const int bound = config.face_dimension(K);
            ChernPolynomial term = evaluate_at_chern(fj, bound) * evaluate_at_chern(fi, bound);
            for (int i : (I & J).indices())
                term = term.multiply_by_symbol(static_cast<std::size_t>(i));
            out.add(K, term);
        }
    }
    return out;
}

Restriction restrict_to_component(const SncConfiguration& config, int component, const MultiplicityVector& m)
{
    const int r = static_cast<int>(config.size());
    if (component < 0 || component >= r)
        throw DomainError("component index out of range");
    check_multiplicities(config, m, false);

    std::vector<int> new_index(static_cast<std::size_t>(r), -1);
    Restriction out;
    out.restricted_to = component;
    std::vector<Component> components;
    for (int j = 0; j < r; ++j) {
        if (j == component || !config.has_face(Face{component, j}))
            continue;
        new_index[static_cast<std::size_t>(j)] = static_cast<int>(out.original_index.size());
        out.original_index.push_back(j);
        components.push_back(config.components()[static_cast<std::size_t>(j)]);
        out.multiplicities.push_back(m[static_cast<std::size_t>(j)]);
    }
    std::set<Face> faces;
    for (const Face& f : config.faces()) {
        if (!f.contains(component) || f.size() < 2)
            continue;
        Face restricted;
        bool representable = true;
        for (int j : f.without(component).indices()) {
            const int k = new_index[static_cast<std::size_t>(j)];
            if (k < 0) {
                representable = false;
                break;
            }
            restricted = restricted.with(k);
        }
        if (representable)
            faces.insert(restricted);
    }
    out.config = SncConfiguration(config.ambient_dim() - 1, std::move(components), std::move(faces));
    return out;
}

FaceClassVector transport_from_restriction(const Restriction& restriction, const FaceClassVector& v,
                                           const SncConfiguration& parent)
{
    FaceClassVector out(parent);
    const std::size_t r = parent.size();
    for (const auto& [face, poly] : v.entries()) {
        Face lifted = Face::singleton(restriction.restricted_to);
        for (int k : face.indices())
            lifted = lifted.with(restriction.original_index.at(static_cast<std::size_t>(k)));
        ChernPolynomial moved(r, parent.face_dimension(lifted));
        Exponents e(r);
        for (const auto& [small, c] : poly.terms()) {
            std::fill(e.begin(), e.end(), 0);
            for (std::size_t k = 0; k < small.size(); ++k)
                e[static_cast<std::size_t>(restriction.original_index[k])] = small[k];
            moved.add_term(e, c);
        }
        out.add(lifted, moved);
    }
    return out;
}

FaceClassVector apply_divisor_operator(const FaceClassVector& v, const MultiplicityVector& n,
                                       const FormalGroupLaw& law)
{
    const SncConfiguration& config = v.config();
    check_multiplicities(config, n, false);
    FaceClassVector out(config);
    if (v.is_zero())
        return out;
    const TruncatedSeries op = multi_linear(law, n);
    for (const auto& [face, poly] : v.entries())
        out.add(face, poly * evaluate_at_chern(op, config.face_dimension(face)));
    return out;
}

FaceClassVector normal_form(const FaceClassVector& v)
{
    const SncConfiguration& config = v.config();
    FaceClassVector out(config);
    const std::size_t r = config.size();
    Exponents reduced(r);
    for (const auto& [face, poly] : v.entries()) {
        for (const auto& [e, c] : poly.terms()) {
            // Every symbol outside the face is consumed once by a section of its
            // bundle, moving the class to the larger face.
            Face target = face;
            for (std::size_t k = 0; k < r; ++k) {
                reduced[k] = e[k];
                const int idx = static_cast<int>(k);
                if (e[k] > 0 && !face.contains(idx)) {
                    target = target.with(idx);
                    --reduced[k];
                }
            }
            if (!config.has_face(target))
                continue;
            ChernPolynomial moved(r, config.face_dimension(target));
            moved.add_term(reduced, c);
            out.add(target, moved);
        }
    }
    return out;
}

GradedDegree class_dimension(const FaceClassVector& v)
{
    GradedDegree d = GradedDegree::any();
    for (const auto& [face, poly] : v.entries()) {
        const int base = v.config().face_dimension(face);
        for (const auto& [e, c] : poly.terms())
            for (const auto& [m, q] : c.terms())
                d = d.combine(base - total_degree(e) + m.degree());
    }
    return d;
}

////////////////////////
// Property checking  //
////////////////////////

namespace {

// Index i when n is the reduced single component D_i.
std::optional<int> reduced_single_component(const MultiplicityVector& n)
{
    std::optional<int> found;
    for (std::size_t k = 0; k < n.size(); ++k) {
        if (n[k] == 0)
            continue;
        if (n[k] != 1 || found)
            return std::nullopt;
        found = static_cast<int>(k);
    }
    return found;
}

PropertyOutcome outcome(std::string name, bool pass, std::string detail = {})
{
    return {std::move(name), pass ? PropertyOutcome::Status::Pass : PropertyOutcome::Status::Fail,
            std::move(detail)};
}

} // namespace

std::vector<PropertyOutcome> check_properties(const SncConfiguration& config, const MultiplicityVector& d,
                                              const MultiplicityVector& e, const FormalGroupLaw& law)
{
    std::vector<PropertyOutcome> out;
    const FaceClassVector de = product_class(config, d, e, law);
    const FaceClassVector ed = product_class(config, e, d, law);
    out.push_back(outcome("symmetry", de == ed));

    const auto single = reduced_single_component(d);
    if (single && e[static_cast<std::size_t>(*single)] == 0) {
        const Restriction res = restrict_to_component(config, *single, e);
        FaceClassVector expected(config);
        const bool restricted_nonzero = std::any_of(res.multiplicities.begin(), res.multiplicities.end(),
                                                    [](int x) { return x != 0; });
        if (restricted_nonzero)
            expected = transport_from_restriction(res, divisor_class(res.config, res.multiplicities, law), config);
        out.push_back(outcome("reduction_to_component", de == expected,
                              "D is the reduced component " + std::to_string(*single + 1)));
    } else {
        out.push_back({"reduction_to_component", PropertyOutcome::Status::Skipped,
                       "D is not a reduced single component disjoint from E's support"});
    }

    const FaceClassVector lhs = normal_form(de);
    const FaceClassVector rhs = normal_form(apply_divisor_operator(divisor_class(config, e, law), d, law));
    out.push_back(outcome("operator_normal_form", lhs == rhs));

    const GradedDegree dim = class_dimension(de);
    out.push_back(outcome("product_dimension", dim.matches(config.ambient_dim() - 2), dim.to_string()));
    const GradedDegree dim_d = class_dimension(divisor_class(config, d, law));
    const GradedDegree dim_e = class_dimension(divisor_class(config, e, law));
    out.push_back(outcome("divisor_dimension",
                          dim_d.matches(config.ambient_dim() - 1) && dim_e.matches(config.ambient_dim() - 1),
                          dim_d.to_string() + "," + dim_e.to_string()));
    return out;
}

} // namespace fgl
