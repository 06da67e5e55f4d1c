#pragma once

#include "fgl/coeff_ring.hpp"
#include "fgl/detail/term_map.hpp"
#include "fgl/grading.hpp"
#include "fgl/series.hpp"

namespace fgl {

// Polynomial in commuting first Chern class operators c_1..c_r over the
// coefficient ring, acting on the fundamental class of a base of dimension
// d = dim_bound. Any product of more than d operators kills that class, so
// monomials of total c-degree > d are never stored.
class ChernPolynomial
{
public:
    using TermMap = detail::TermMap;

    ChernPolynomial(std::size_t symbols, int dim_bound);

    static ChernPolynomial symbol(std::size_t symbols, int dim_bound, std::size_t index);
    static ChernPolynomial constant(std::size_t symbols, int dim_bound, const Polynomial& c);

    std::size_t symbols() const { return symbols_; }
    int dim_bound() const { return dim_bound_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial coefficient(const Exponents& e) const;

    // Accumulates c * c^e; dropped when |e| > dim_bound.
    void add_term(const Exponents& e, const Polynomial& c);

    ChernPolynomial operator-() const;
    ChernPolynomial& operator+=(const ChernPolynomial& other);
    ChernPolynomial& operator-=(const ChernPolynomial& other);
    ChernPolynomial& operator*=(const ChernPolynomial& other);
    ChernPolynomial& operator*=(const Polynomial& scalar);

    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const ChernPolynomial& b) { return a *= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const Polynomial& s) { return a *= s; }
    friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

    ChernPolynomial pow(unsigned e) const;
    ChernPolynomial multiply_by_symbol(std::size_t index) const;
    // Restriction to a smaller base: same symbols, lower bound.
    ChernPolynomial with_bound(int new_bound) const;

    std::string to_string() const;

private:
    void check_same_shape(const ChernPolynomial& other) const;

    std::size_t symbols_;
    int dim_bound_;
    TermMap terms_;
};

// Operator grading: c_i has degree -1, coefficients keep their degree.
GradedDegree operator_degree(const ChernPolynomial& p);

// u_i -> c_i, dropping monomials of c-degree > dim_bound. The series must be
// known through dim_bound, i.e. s.order() >= dim_bound.
ChernPolynomial evaluate_at_chern(const TruncatedSeries& s, int dim_bound);

struct TensorIdentity
{
    bool holds;
    ChernPolynomial truncated_law;  // evaluate_at_chern(F(u,v), d)
    ChernPolynomial operator_sum;   // F(c_1, c_2) computed in the Chern algebra
};

// Compares ch(L (x) M) = F(ch L, ch M) computed two ways: truncating the
// series F and evaluating, versus forming c_1 + c_2 + sum a_{i,j} c_1^i c_2^j
// with nilpotent products.
TensorIdentity fgl_tensor_identity(int dim_bound, const CoefficientBackend& backend);
bool fgl_tensor_identity_check(int dim_bound, const CoefficientBackend& backend);

} // namespace fgl
