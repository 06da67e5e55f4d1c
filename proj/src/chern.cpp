#include "fgl/chern.hpp"

#include <algorithm>

#include "fgl/errors.hpp"

namespace fgl {

ChernPolynomial::ChernPolynomial(std::size_t symbols, int dim_bound) : symbols_(symbols), dim_bound_(dim_bound)
{
    if (dim_bound_ < 0)
        throw DomainError("negative dimension bound");
}

ChernPolynomial ChernPolynomial::symbol(std::size_t symbols, int dim_bound, std::size_t index)
{
    if (index >= symbols)
        throw DomainError("Chern symbol index out of range");
    ChernPolynomial p(symbols, dim_bound);
    Exponents e(symbols, 0);
    e[index] = 1;
    p.add_term(e, 1L);
    return p;
}

ChernPolynomial ChernPolynomial::constant(std::size_t symbols, int dim_bound, const Polynomial& c)
{
    ChernPolynomial p(symbols, dim_bound);
    p.add_term(Exponents(symbols, 0), c);
    return p;
}

Polynomial ChernPolynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Polynomial() : it->second;
}

void ChernPolynomial::add_term(const Exponents& e, const Polynomial& c)
{
    if (e.size() != symbols_)
        throw DomainError("exponent vector length does not match the Chern symbols");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw DomainError("negative exponent");
    if (total_degree(e) > dim_bound_)
        return;
    detail::accumulate(terms_, e, c);
}

void ChernPolynomial::check_same_shape(const ChernPolynomial& other) const
{
    if (symbols_ != other.symbols_ || dim_bound_ != other.dim_bound_)
        throw DomainError("Chern polynomials over different symbols or bases");
}

ChernPolynomial ChernPolynomial::operator-() const
{
    ChernPolynomial out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& other)
{
    check_same_shape(other);
    for (const auto& [e, c] : other.terms_)
        detail::accumulate(terms_, e, c);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& other)
{
    check_same_shape(other);
    for (const auto& [e, c] : other.terms_)
        detail::subtract(terms_, e, c);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const ChernPolynomial& other)
{
    check_same_shape(other);
    terms_ = detail::multiply_truncated(terms_, other.terms_, dim_bound_);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Polynomial& scalar)
{
    TermMap out;
    for (const auto& [e, c] : terms_)
        detail::accumulate(out, e, c * scalar);
    terms_ = std::move(out);
    return *this;
}

ChernPolynomial ChernPolynomial::pow(unsigned e) const
{
    ChernPolynomial result = constant(symbols_, dim_bound_, 1L);
    for (unsigned k = 0; k < e && !result.is_zero(); ++k)
        result *= *this;
    return result;
}

ChernPolynomial ChernPolynomial::multiply_by_symbol(std::size_t index) const
{
    if (index >= symbols_)
        throw DomainError("Chern symbol index out of range");
    ChernPolynomial out(symbols_, dim_bound_);
    for (const auto& [e, c] : terms_) {
        Exponents shifted = e;
        ++shifted[index];
        out.add_term(shifted, c);
    }
    return out;
}

ChernPolynomial ChernPolynomial::with_bound(int new_bound) const
{
    ChernPolynomial out(symbols_, new_bound);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c);
    return out;
}

std::string ChernPolynomial::to_string() const
{
    TruncatedSeries view(TruncatedSeries::numbered_variables("c", symbols_), dim_bound_);
    for (const auto& [e, c] : terms_)
        view.add_term(e, c);
    return view.to_string();
}

GradedDegree operator_degree(const ChernPolynomial& p)
{
    GradedDegree d = GradedDegree::any();
    for (const auto& [e, c] : p.terms())
        for (const auto& [m, q] : c.terms())
            d = d.combine(m.degree() - total_degree(e));
    return d;
}

ChernPolynomial evaluate_at_chern(const TruncatedSeries& s, int dim_bound)
{
    if (s.order() < dim_bound)
        throw TruncationError("series of order " + std::to_string(s.order()) +
                              " cannot be evaluated on a base of dimension " + std::to_string(dim_bound));
    ChernPolynomial out(s.arity(), dim_bound);
    for (const auto& [e, c] : s.terms()) {
        if (total_degree(e) > dim_bound)
            break;
        out.add_term(e, c);
    }
    return out;
}

TensorIdentity fgl_tensor_identity(int dim_bound, const CoefficientBackend& backend)
{
    const int order = std::max(dim_bound, 1);
    const FormalGroupLaw law(backend, order);
    ChernPolynomial truncated = evaluate_at_chern(law.series(), dim_bound);

    const ChernPolynomial c1 = ChernPolynomial::symbol(2, dim_bound, 0);
    const ChernPolynomial c2 = ChernPolynomial::symbol(2, dim_bound, 1);
    ChernPolynomial sum = c1 + c2;
    for (int i = 1; i <= order; ++i)
        for (int j = 1; i + j <= order; ++j)
            sum += c1.pow(static_cast<unsigned>(i)) * c2.pow(static_cast<unsigned>(j)) *
                   law.coefficient(i, j);
    const bool holds = truncated == sum;
    return TensorIdentity{holds, std::move(truncated), std::move(sum)};
}

bool fgl_tensor_identity_check(int dim_bound, const CoefficientBackend& backend)
{
    return fgl_tensor_identity(dim_bound, backend).holds;
}

} // namespace fgl
