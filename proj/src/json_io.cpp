#include "fgl/json_io.hpp"

#include <set>

#include "fgl/errors.hpp"

namespace fgl::json_io {

namespace {

Generator generator_from_name(const std::string& name)
{
    const Polynomial p = Polynomial::parse(name);
    if (p.size() != 1)
        throw DomainError("'" + name + "' is not a generator");
    const auto& [m, c] = *p.terms().begin();
    if (c != 1 || m.factors().size() != 1 || m.factors().front().second != 1)
        throw DomainError("'" + name + "' is not a generator");
    return m.factors().front().first;
}

Exponents exponents_from_json(const Json& j)
{
    Exponents e;
    for (const auto& x : j)
        e.push_back(x.get<int>());
    return e;
}

} // namespace

Json to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [g, e] : m.factors())
            mono[g.name()] = e;
        out.push_back(Json{{"coeff", rational_to_string(c)}, {"monomial", std::move(mono)}});
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw DomainError("polynomial JSON must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        std::vector<Monomial::Factor> factors;
        for (const auto& [name, e] : term.at("monomial").items()) {
            const int exponent = e.get<int>();
            if (exponent < 0)
                throw DomainError("negative exponent in polynomial JSON");
            factors.emplace_back(generator_from_name(name), static_cast<unsigned>(exponent));
        }
        p.add_term(Monomial::from_factors(std::move(factors)), parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const TruncatedSeries& s)
{
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
    return Json{{"variables", s.variables()}, {"order", s.order()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const Json& j)
{
    TruncatedSeries s(j.at("variables").get<std::vector<std::string>>(), j.at("order").get<int>());
    for (const auto& term : j.at("terms")) {
        const Exponents e = exponents_from_json(term.at("exponents"));
        if (total_degree(e) > s.order())
            throw DomainError("series term above the truncation order");
        s.add_term(e, polynomial_from_json(term.at("coeff")));
    }
    return s;
}

Json to_json(const ChernPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"c_exponents", e}, {"coeff", to_json(c)}});
    return Json{{"dim_bound", p.dim_bound()}, {"terms", std::move(terms)}};
}

ChernPolynomial chern_from_json(const Json& j, std::size_t symbols)
{
    ChernPolynomial p(symbols, j.at("dim_bound").get<int>());
    for (const auto& term : j.at("terms")) {
        const Exponents e = exponents_from_json(term.at("c_exponents"));
        if (total_degree(e) > p.dim_bound())
            throw DomainError("Chern term above the dimension bound");
        p.add_term(e, polynomial_from_json(term.at("coeff")));
    }
    return p;
}

Json to_json(Face f)
{
    Json out = Json::array();
    for (int i : f.indices())
        out.push_back(i + 1);
    return out;
}

Face face_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw DomainError("a face must be a nonempty index array");
    Face f;
    for (const auto& x : j) {
        const int i = x.get<int>();
        if (i < 1 || i > Face::max_index)
            throw DomainError("face index " + std::to_string(i) + " out of range");
        if (f.contains(i - 1))
            throw DomainError("repeated index in face " + j.dump());
        f = f.with(i - 1);
    }
    return f;
}

Json to_json(const SncConfiguration& c)
{
    Json components = Json::array();
    for (const auto& comp : c.components())
        components.push_back(Json{{"name", comp.name}, {"quasiprojective", comp.quasiprojective}});
    Json faces = Json::array();
    for (const Face& f : c.faces())
        faces.push_back(to_json(f));
    return Json{{"ambient_dim", c.ambient_dim()}, {"components", std::move(components)}, {"faces", std::move(faces)}};
}

SncConfiguration config_from_json(const Json& j)
{
    std::vector<Component> components;
    for (const auto& comp : j.at("components")) {
        Component c;
        c.name = comp.at("name").get<std::string>();
        c.quasiprojective = comp.value("quasiprojective", true);
        components.push_back(std::move(c));
    }
    std::set<Face> faces;
    for (const auto& f : j.at("faces"))
        faces.insert(face_from_json(f));
    return SncConfiguration(j.at("ambient_dim").get<int>(), std::move(components), std::move(faces));
}

MultiplicityVector multiplicities_from_json(const Json& j)
{
    return j.get<MultiplicityVector>();
}

Json to_json(const FaceClassVector& v)
{
    Json classes = Json::array();
    for (const auto& [f, p] : v.entries())
        classes.push_back(Json{{"face", to_json(f)}, {"class", to_json(p)}});
    return Json{{"ambient_dim", v.config().ambient_dim()}, {"classes", std::move(classes)}};
}

FaceClassVector face_classes_from_json(const Json& j, const SncConfiguration& config)
{
    if (j.contains("ambient_dim") && j.at("ambient_dim").get<int>() != config.ambient_dim())
        throw DomainError("class vector and configuration disagree on the ambient dimension");
    FaceClassVector v(config);
    for (const auto& entry : j.at("classes")) {
        const Face f = face_from_json(entry.at("face"));
        v.add(f, chern_from_json(entry.at("class"), config.size()));
    }
    return v;
}

Json to_json(const ValidationReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json item{{"message", v.message}};
        item["subset"] = v.subset ? to_json(*v.subset) : Json(nullptr);
        violations.push_back(std::move(item));
    }
    return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const SpaceLabel& label)
{
    Json out{{"name", label.name},
             {"dim", label.dim},
             {"smooth", label.smooth},
             {"quasiprojective", label.quasiprojective},
             {"complete", label.complete}};
    if (label.nu)
        out["nu"] = *label.nu;
    return out;
}

SpaceLabel label_from_json(const Json& j)
{
    SpaceLabel label;
    label.name = j.at("name").get<std::string>();
    label.dim = j.at("dim").get<int>();
    label.smooth = j.value("smooth", true);
    label.quasiprojective = j.value("quasiprojective", true);
    label.complete = j.value("complete", false);
    if (j.contains("nu") && !j.at("nu").is_null())
        label.nu = j.at("nu").get<int>();
    validate_label(label);
    return label;
}

Json to_json(const DecoratedCycle& c)
{
    return Json{{"source", to_json(c.source())}, {"target", to_json(c.target())}, {"bundles", c.bundles()}};
}

DecoratedCycle cycle_from_json(const Json& j)
{
    return DecoratedCycle(label_from_json(j.at("source")), label_from_json(j.at("target")),
                          j.value("bundles", std::vector<std::string>{}));
}

namespace {

template <typename Coeff, typename Emit>
Json cycle_sum_json(const BasicCycleSum<Coeff>& z, Emit emit)
{
    Json out = Json::array();
    for (const auto& [c, k] : z.terms()) {
        Json item{{"coeff", emit(k)}};
        const Json cycle = to_json(c);
        for (const auto& [key, value] : cycle.items())
            item[key] = value;
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace

Json to_json(const CycleSum& z)
{
    return cycle_sum_json(z, [](std::int64_t k) { return Json(k); });
}

Json to_json(const LazardCycleSum& z)
{
    return cycle_sum_json(z, [](const Polynomial& k) { return to_json(k); });
}

CycleSum cycle_sum_from_json(const Json& j)
{
    CycleSum z;
    for (const auto& item : j)
        z.add(cycle_from_json(item), item.at("coeff").get<std::int64_t>());
    return z;
}

LazardCycleSum lazard_cycle_sum_from_json(const Json& j)
{
    LazardCycleSum z;
    for (const auto& item : j)
        z.add(cycle_from_json(item), polynomial_from_json(item.at("coeff")));
    return z;
}

Json to_json(const GradedDegree& d)
{
    if (d.is_homogeneous())
        return Json(d.value());
    return Json(d.to_string());
}

} // namespace fgl::json_io
