#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fgl/coeff_ring.hpp"
#include "fgl/detail/term_map.hpp"
#include "fgl/face.hpp"
#include "fgl/grading.hpp"

namespace fgl {

// Multivariate power series over graded polynomials, truncated at a total
// order N: terms of total degree > N are dropped. Arithmetic between two
// series requires the same variable list and the same order.
class TruncatedSeries
{
public:
    using TermMap = detail::TermMap;

    TruncatedSeries(std::vector<std::string> variables, int order);

    static TruncatedSeries variable(std::vector<std::string> variables, int order, std::size_t index);
    static TruncatedSeries constant(std::vector<std::string> variables, int order, const Polynomial& c);
    // prefix1, .., prefixN.
    static std::vector<std::string> numbered_variables(const std::string& prefix, std::size_t count);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t arity() const { return variables_.size(); }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial coefficient(const Exponents& e) const;
    Polynomial constant_term() const;

    // Accumulates c*u^e; silently dropped when |e| exceeds the order.
    void add_term(const Exponents& e, const Polynomial& c);

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Polynomial& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Polynomial& s) { return a *= s; }
    friend TruncatedSeries operator*(const Polynomial& s, TruncatedSeries a) { return a *= s; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries pow(unsigned e) const;
    // Drops all terms above new_order; new_order must not exceed order().
    TruncatedSeries truncated(int new_order) const;
    // Multiplies by the monomial u^e and re-truncates at new_order.
    TruncatedSeries shifted(const Exponents& e, int new_order) const;

    // "-u + b*u^2 - b^2*u^3"; compound coefficients are parenthesised.
    std::string to_string() const;

private:
    void check_same_shape(const TruncatedSeries& other) const;

    std::vector<std::string> variables_;
    int order_;
    TermMap terms_;
};

// Assigning each series variable degree -1: the common value of
// (coefficient degree - |exponent|) over all terms.
GradedDegree series_degree(const TruncatedSeries& s);

// Composes target with the assignment variable -> series. Every target
// variable must be assigned; all assigned series share one variable list,
// have zero constant term and order >= target.order(). The result lives in the
// assigned variables at the target's order.
TruncatedSeries substitute(const TruncatedSeries& target,
                           const std::map<std::string, TruncatedSeries>& assignment);

// F(u,v) = u + v + sum_{i,j>0} a_{i,j} u^i v^j to total order N.
class FormalGroupLaw
{
public:
    static constexpr int default_order = 8;

    explicit FormalGroupLaw(CoefficientBackend backend, int order = default_order);

    const CoefficientBackend& backend() const { return backend_; }
    int order() const { return order_; }
    // The law as a series in variables ("u", "v").
    const TruncatedSeries& series() const { return series_; }
    // a_{i,j} for i + j <= order; zero beyond.
    const Polynomial& coefficient(int i, int j) const;

private:
    CoefficientBackend backend_;
    int order_;
    std::vector<std::vector<Polynomial>> coefficients_;
    TruncatedSeries series_;
};

// The log backend carrying enough m-generators for a law of the given order.
CoefficientBackend backend_for_order(BackendKind kind, int order);

// F(s, t). Both inputs share shape, have zero constant term and order equal
// to the law's order.
TruncatedSeries fgl_sum(const FormalGroupLaw& law, const TruncatedSeries& s, const TruncatedSeries& t);

// chi(u) with F(u, chi(u)) = 0, in the single variable "u".
TruncatedSeries formal_inverse(const FormalGroupLaw& law);

// [n]_F u in the single variable "u".
TruncatedSeries n_series(const FormalGroupLaw& law, int n);

enum class FoldOrder { Left, Right };

// [n_1]u_1 +_F [n_2]u_2 +_F ... +_F [n_r]u_r in variables u1..ur. The Free
// backend is not associative, so the fold order is part of the definition;
// Left is the canonical choice.
TruncatedSeries multi_linear(const FormalGroupLaw& law, std::span<const int> multiplicities,
                             FoldOrder fold = FoldOrder::Left);

// The family {F_J} with s = sum_J F_J * prod_{i in J} u_i where every term of
// F_J only involves variables of J. F_J has order s.order() - |J|. The input
// must have zero constant term.
std::map<Face, TruncatedSeries> support_decompose(const TruncatedSeries& s);

// sum_J F_J * prod_{i in J} u_i at the given order; inverse of
// support_decompose.
TruncatedSeries recompose(const std::map<Face, TruncatedSeries>& parts,
                          const std::vector<std::string>& variables, int order);

} // namespace fgl
