#include "fgl/series.hpp"

#include <algorithm>

#include "fgl/errors.hpp"

namespace fgl {

/////////////////////
// TruncatedSeries //
/////////////////////

TruncatedSeries::TruncatedSeries(std::vector<std::string> variables, int order)
    : variables_(std::move(variables)), order_(order)
{
    if (order_ < 0)
        throw DomainError("series order must be nonnegative");
    if (variables_.size() > static_cast<std::size_t>(Face::max_index))
        throw DomainError("too many series variables");
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> variables, int order, std::size_t index)
{
    if (index >= variables.size())
        throw DomainError("variable index out of range");
    TruncatedSeries s(std::move(variables), order);
    Exponents e(s.arity(), 0);
    e[index] = 1;
    s.add_term(e, 1L);
    return s;
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> variables, int order, const Polynomial& c)
{
    TruncatedSeries s(std::move(variables), order);
    s.add_term(Exponents(s.arity(), 0), c);
    return s;
}

std::vector<std::string> TruncatedSeries::numbered_variables(const std::string& prefix, std::size_t count)
{
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t k = 1; k <= count; ++k)
        names.push_back(prefix + std::to_string(k));
    return names;
}

Polynomial TruncatedSeries::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Polynomial() : it->second;
}

Polynomial TruncatedSeries::constant_term() const
{
    return coefficient(Exponents(arity(), 0));
}

void TruncatedSeries::add_term(const Exponents& e, const Polynomial& c)
{
    if (e.size() != arity())
        throw DomainError("exponent vector length does not match the series variables");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw DomainError("negative exponent");
    if (total_degree(e) > order_)
        return;
    detail::accumulate(terms_, e, c);
}

void TruncatedSeries::check_same_shape(const TruncatedSeries& other) const
{
    if (variables_ != other.variables_)
        throw DomainError("series over different variables");
    if (order_ != other.order_)
        throw TruncationError("series truncated at different orders (" + std::to_string(order_) +
                              " vs " + std::to_string(other.order_) + ")");
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    check_same_shape(other);
    for (const auto& [e, c] : other.terms_)
        detail::accumulate(terms_, e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    check_same_shape(other);
    for (const auto& [e, c] : other.terms_)
        detail::subtract(terms_, e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other)
{
    check_same_shape(other);
    terms_ = detail::multiply_truncated(terms_, other.terms_, order_);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Polynomial& scalar)
{
    TermMap out;
    for (const auto& [e, c] : terms_)
        detail::accumulate(out, e, c * scalar);
    terms_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const
{
    TruncatedSeries result = constant(variables_, order_, 1L);
    for (unsigned k = 0; k < e; ++k)
        result *= *this;
    return result;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const
{
    if (new_order > order_)
        throw TruncationError("cannot raise the truncation order of a series");
    TruncatedSeries out(variables_, new_order);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > new_order)
            break;
        out.terms_.emplace(e, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(const Exponents& shift, int new_order) const
{
    if (shift.size() != arity())
        throw DomainError("exponent vector length does not match the series variables");
    TruncatedSeries out(variables_, new_order);
    Exponents e(arity());
    for (const auto& [base, c] : terms_) {
        for (std::size_t k = 0; k < arity(); ++k)
            e[k] = base[k] + shift[k];
        out.add_term(e, c);
    }
    return out;
}

namespace {

std::string variable_part(const std::vector<std::string>& names, const Exponents& e)
{
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += names[k];
        if (e[k] > 1)
            s += "^" + std::to_string(e[k]);
    }
    return s;
}

} // namespace

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const std::string vars = variable_part(variables_, e);
        bool negative = false;
        std::string body;
        if (c.size() == 1) {
            const auto& [mono, q] = *c.terms().begin();
            negative = q < 0;
            const Rational mag = abs(q);
            std::string coeff;
            if (mono.is_one())
                coeff = rational_to_string(mag);
            else if (mag == 1)
                coeff = mono.to_string();
            else
                coeff = rational_to_string(mag) + "*" + mono.to_string();
            if (vars.empty())
                body = coeff;
            else if (coeff == "1")
                body = vars;
            else
                body = coeff + "*" + vars;
        } else {
            body = "(" + c.to_string() + ")";
            if (!vars.empty())
                body += "*" + vars;
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

GradedDegree series_degree(const TruncatedSeries& s)
{
    GradedDegree d = GradedDegree::any();
    for (const auto& [e, c] : s.terms())
        for (const auto& [m, q] : c.terms())
            d = d.combine(m.degree() - total_degree(e));
    return d;
}

//////////////////
// Substitution //
//////////////////

TruncatedSeries substitute(const TruncatedSeries& target,
                           const std::map<std::string, TruncatedSeries>& assignment)
{
    if (assignment.empty())
        throw DomainError("substitution needs at least one assigned series");
    const auto& [first_name, first] = *assignment.begin();
    const int order = target.order();
    std::vector<TruncatedSeries> images;
    images.reserve(target.arity());
    for (const auto& name : target.variables()) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw DomainError("variable '" + name + "' is not assigned");
        const TruncatedSeries& image = it->second;
        if (image.variables() != first.variables())
            throw DomainError("assigned series live in different variables");
        if (image.order() < order)
            throw TruncationError("assigned series for '" + name + "' has order " +
                                  std::to_string(image.order()) + " below the target order " +
                                  std::to_string(order));
        if (!image.constant_term().is_zero())
            throw DomainError("assigned series for '" + name + "' has a nonzero constant term");
        images.push_back(image.truncated(order));
    }

    const std::size_t r = target.arity();
    // powers[k][p] = images[k]^p, built on demand.
    std::vector<std::vector<TruncatedSeries>> powers(r);
    auto power = [&](std::size_t k, int p) -> const TruncatedSeries& {
        auto& cache = powers[k];
        if (cache.empty())
            cache.push_back(TruncatedSeries::constant(first.variables(), order, 1L));
        while (static_cast<int>(cache.size()) <= p)
            cache.push_back(cache.back() * images[k]);
        return cache[p];
    };

    TruncatedSeries result(first.variables(), order);
    for (const auto& [e, c] : target.terms()) {
        if (total_degree(e) > order)
            break;
        TruncatedSeries product = TruncatedSeries::constant(first.variables(), order, c);
        for (std::size_t k = 0; k < r && !product.is_zero(); ++k)
            if (e[k] > 0)
                product *= power(k, e[k]);
        result += product;
    }
    return result;
}

////////////////////
// FormalGroupLaw //
////////////////////

namespace {

const std::vector<std::string>& law_variables()
{
    static const std::vector<std::string> names{"u", "v"};
    return names;
}

const std::vector<std::string>& single_variable()
{
    static const std::vector<std::string> names{"u"};
    return names;
}

} // namespace

FormalGroupLaw::FormalGroupLaw(CoefficientBackend backend, int order)
    : backend_(backend),
      order_(order),
      coefficients_(order >= 1 ? lazard_coefficients(backend, order)
                               : std::vector<std::vector<Polynomial>>{}),
      series_(law_variables(), order)
{
    if (order_ < 1)
        throw DomainError("formal group law order must be at least 1");
    series_.add_term({1, 0}, 1L);
    series_.add_term({0, 1}, 1L);
    for (int i = 1; i <= order_; ++i)
        for (int j = 1; i + j <= order_; ++j)
            series_.add_term({i, j}, coefficients_[i][j]);
}

const Polynomial& FormalGroupLaw::coefficient(int i, int j) const
{
    static const Polynomial zero;
    if (i < 0 || j < 0 || i + j > order_ || i >= static_cast<int>(coefficients_.size()) ||
        j >= static_cast<int>(coefficients_.size()))
        return zero;
    return coefficients_[i][j];
}

CoefficientBackend backend_for_order(BackendKind kind, int order)
{
    switch (kind) {
    case BackendKind::Free: return CoefficientBackend::free_backend();
    case BackendKind::Log: return CoefficientBackend::log_backend(std::max(order - 1, 0));
    case BackendKind::Additive: return CoefficientBackend::additive();
    default: return CoefficientBackend::multiplicative();
    }
}

TruncatedSeries fgl_sum(const FormalGroupLaw& law, const TruncatedSeries& s, const TruncatedSeries& t)
{
    if (s.variables() != t.variables())
        throw DomainError("fgl_sum of series over different variables");
    if (s.order() != law.order() || t.order() != law.order())
        throw TruncationError("fgl_sum requires series truncated at the law's order " +
                              std::to_string(law.order()));
    // F(x,0) = F(0,x) = x holds exactly by construction.
    if (t.is_zero() && s.constant_term().is_zero())
        return s;
    if (s.is_zero() && t.constant_term().is_zero())
        return t;
    return substitute(law.series(), {{"u", s}, {"v", t}});
}

TruncatedSeries formal_inverse(const FormalGroupLaw& law)
{
    const int order = law.order();
    TruncatedSeries chi(single_variable(), order);
    chi.add_term({1}, -1L);
    // Adding c*u^k to chi changes [u^k] F(u, chi) by exactly c, through the
    // linear term of F; higher terms of F only see it in degree > k.
    for (int k = 2; k <= order; ++k) {
        const TruncatedSeries law_k = law.series().truncated(k);
        const TruncatedSeries u_k = TruncatedSeries::variable(single_variable(), k, 0);
        const TruncatedSeries residue = substitute(law_k, {{"u", u_k}, {"v", chi.truncated(k)}});
        chi.add_term({k}, -residue.coefficient({k}));
    }
    return chi;
}

TruncatedSeries n_series(const FormalGroupLaw& law, int n)
{
    const int order = law.order();
    TruncatedSeries result(single_variable(), order);
    if (n == 0)
        return result;
    const TruncatedSeries step = n > 0 ? TruncatedSeries::variable(single_variable(), order, 0)
                                       : formal_inverse(law);
    result = step;
    const int count = n > 0 ? n : -n;
    for (int k = 1; k < count; ++k)
        result = fgl_sum(law, result, step);
    return result;
}

TruncatedSeries multi_linear(const FormalGroupLaw& law, std::span<const int> multiplicities, FoldOrder fold)
{
    const std::size_t r = multiplicities.size();
    if (r == 0)
        throw DomainError("multi_linear needs at least one multiplicity");
    const int order = law.order();
    const auto names = TruncatedSeries::numbered_variables("u", r);

    std::map<int, TruncatedSeries> univariate;
    std::vector<TruncatedSeries> summands;
    summands.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
        const int n = multiplicities[k];
        if (n == 0) {
            summands.emplace_back(names, order);
            continue;
        }
        auto it = univariate.find(n);
        if (it == univariate.end())
            it = univariate.emplace(n, n_series(law, n)).first;
        summands.push_back(substitute(it->second, {{"u", TruncatedSeries::variable(names, order, k)}}));
    }

    if (fold == FoldOrder::Left) {
        TruncatedSeries acc = summands.front();
        for (std::size_t k = 1; k < r; ++k)
            acc = fgl_sum(law, acc, summands[k]);
        return acc;
    }
    TruncatedSeries acc = summands.back();
    for (std::size_t k = r - 1; k-- > 0;)
        acc = fgl_sum(law, summands[k], acc);
    return acc;
}

std::map<Face, TruncatedSeries> support_decompose(const TruncatedSeries& s)
{
    std::map<Face, TruncatedSeries> parts;
    const std::size_t r = s.arity();
    Exponents reduced(r);
    for (const auto& [e, c] : s.terms()) {
        Face support;
        for (std::size_t k = 0; k < r; ++k) {
            reduced[k] = e[k];
            if (e[k] > 0) {
                support = support.with(static_cast<int>(k));
                --reduced[k];
            }
        }
        if (support.empty())
            throw DomainError("support_decompose requires a zero constant term");
        auto it = parts.find(support);
        if (it == parts.end())
            it = parts.emplace(support, TruncatedSeries(s.variables(), s.order() - support.size())).first;
        it->second.add_term(reduced, c);
    }
    return parts;
}

TruncatedSeries recompose(const std::map<Face, TruncatedSeries>& parts,
                          const std::vector<std::string>& variables, int order)
{
    TruncatedSeries out(variables, order);
    Exponents shift(variables.size());
    for (const auto& [face, part] : parts) {
        std::fill(shift.begin(), shift.end(), 0);
        for (int k : face.indices())
            shift.at(static_cast<std::size_t>(k)) = 1;
        out += part.shifted(shift, order);
    }
    return out;
}

} // namespace fgl
