#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fgl/grading.hpp"

namespace fgl {

using Rational = mpq_class;

// Canonical text of a rational: "p" or "p/q" in lowest terms.
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/////////////////////////////
// Generators and monomials //
/////////////////////////////

// Declaration order is the canonical family order: A before m before b.
enum class GeneratorFamily : std::uint8_t { A = 0, M = 1, B = 2 };

// A named graded generator of a coefficient ring:
//   A(i,j)  i <= j, degree i+j-1   (free Lazard generators)
//   m(i)    degree i                (logarithm coefficients)
//   b       degree 1                (multiplicative law)
class Generator
{
public:
    static Generator lazard(int i, int j);
    static Generator log_coefficient(int i);
    static Generator multiplicative();

    GeneratorFamily family() const { return family_; }
    int first() const { return i_; }
    int second() const { return j_; }
    int degree() const;
    std::string name() const;

    // Canonical order: family, then (i+j, i).
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b)
    {
        if (auto c = a.family_ <=> b.family_; c != 0)
            return c;
        if (auto c = (a.i_ + a.j_) <=> (b.i_ + b.j_); c != 0)
            return c;
        return a.i_ <=> b.i_;
    }
    friend bool operator==(const Generator&, const Generator&) = default;

private:
    Generator(GeneratorFamily f, int i, int j) : family_(f), i_(i), j_(j) {}

    GeneratorFamily family_;
    int i_;
    int j_;
};

// Commutative monomial: generators in canonical order with positive exponents.
class Monomial
{
public:
    using Factor = std::pair<Generator, unsigned>;

    Monomial() = default;
    explicit Monomial(Generator g, unsigned exponent = 1);
    // Merges repeated generators and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }
    std::optional<GeneratorFamily> family() const;

    Monomial operator*(const Monomial& other) const;

    // "A(1,1)^2*m(1)"; the empty monomial prints as "1".
    std::string to_string() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

// Graded-lex: lower degree first; within a degree, the monomial with the
// larger exponent on the earliest differing generator comes first.
struct MonomialOrder
{
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/////////////////////////
// Graded polynomials  //
/////////////////////////

// Polynomial with exact rational coefficients in graded generators. Every
// nonconstant monomial of one polynomial belongs to a single generator
// family; that family identifies the coefficient backend the value lives in,
// and arithmetic between polynomials of different families is rejected.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(long constant);
    Polynomial(const Rational& constant);

    static Polynomial generator(Generator g);
    static Polynomial term(const Rational& coeff, Monomial m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    bool is_constant() const;
    // Family of the nonconstant monomials, if any.
    std::optional<GeneratorFamily> family() const;

    // Adds coeff*m in place.
    void add_term(const Monomial& m, const Rational& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(Polynomial a, long s) { return a *= Rational(s); }
    friend Polynomial operator*(long s, Polynomial a) { return a *= Rational(s); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned e) const;

    // Canonical text form, e.g. "2*A(1,1)^2 - 1/3*m(1)*m(2)". Unit
    // coefficients are omitted on nonconstant terms.
    std::string to_string() const;
    // Inverse of to_string; also accepts explicit unit coefficients and
    // arbitrary term order. Throws DomainError on malformed text.
    static Polynomial parse(const std::string& text);

private:
    static void check_compatible(const Polynomial& a, const Polynomial& b);

    TermMap terms_;
};

GradedDegree graded_degree(const Polynomial& p);

enum class ArithmeticOp { Add, Mul, Negate, Scale };

// Dispatching form of the ring operations; q is ignored for Negate and Scale.
Polynomial ring_arithmetic(const Polynomial& p, const Polynomial& q, ArithmeticOp op,
                           const Rational& scalar = 1);

///////////////////////////
// Coefficient backends  //
///////////////////////////

enum class BackendKind { Free, Log, Additive, Multiplicative };

// Model of the coefficient ring of a formal group law.
//   Free:           a_{i,j} = A(min,max), no associativity relations.
//   Log:            a_{i,j} in Q[m_1, m_2, ...] from l(u) = u + sum m_k u^{k+1}.
//   Additive:       all a_{i,j} = 0.
//   Multiplicative: a_{1,1} = b, all others 0.
class CoefficientBackend
{
public:
    static CoefficientBackend free_backend() { return CoefficientBackend(BackendKind::Free, 0); }
    // Makes m_1..m_{order} available, i.e. all a_{i,j} with i+j-1 <= order.
    static CoefficientBackend log_backend(int order);
    static CoefficientBackend additive() { return CoefficientBackend(BackendKind::Additive, 0); }
    static CoefficientBackend multiplicative() { return CoefficientBackend(BackendKind::Multiplicative, 0); }

    // Parses "free", "log", "additive", "mult"; order applies to log only.
    static CoefficientBackend from_name(const std::string& name, int order);

    BackendKind kind() const { return kind_; }
    int log_order() const { return log_order_; }
    std::string name() const;

    friend bool operator==(const CoefficientBackend&, const CoefficientBackend&) = default;

private:
    CoefficientBackend(BackendKind kind, int order) : kind_(kind), log_order_(order) {}

    BackendKind kind_;
    int log_order_;
};

// a_{i,j} for i, j >= 1.
Polynomial lazard_coefficient(int i, int j, const CoefficientBackend& backend);

// All a_{i,j} with i, j >= 1 and i + j <= max_total, indexed [i][j]; entries
// with i = 0 or j = 0 are left zero.
std::vector<std::vector<Polynomial>> lazard_coefficients(const CoefficientBackend& backend,
                                                         int max_total);

} // namespace fgl
