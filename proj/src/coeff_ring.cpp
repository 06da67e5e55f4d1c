#include "fgl/coeff_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fgl/errors.hpp"

namespace fgl {

namespace {

Rational canonical(Rational q)
{
    q.canonicalize();
    return q;
}

} // namespace

std::string rational_to_string(const Rational& q)
{
    return canonical(q).get_str();
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw DomainError("empty rational");
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+')
        pos = 1;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        char ch = text[k];
        if (std::isdigit(static_cast<unsigned char>(ch)))
            (seen_slash ? digit_after : digit_before) = true;
        else if (ch == '/' && !seen_slash)
            seen_slash = true;
        else
            throw DomainError("malformed rational '" + text + "'");
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw DomainError("malformed rational '" + text + "'");
    Rational q;
    const std::string body = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(body, 10) != 0)
        throw DomainError("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

///////////////
// Generator //
///////////////

Generator Generator::lazard(int i, int j)
{
    if (i < 1 || j < 1)
        throw DomainError("A(i,j) requires i, j >= 1");
    return Generator(GeneratorFamily::A, std::min(i, j), std::max(i, j));
}

Generator Generator::log_coefficient(int i)
{
    if (i < 1)
        throw DomainError("m(i) requires i >= 1");
    return Generator(GeneratorFamily::M, i, 0);
}

Generator Generator::multiplicative()
{
    return Generator(GeneratorFamily::B, 1, 0);
}

int Generator::degree() const
{
    switch (family_) {
    case GeneratorFamily::A: return i_ + j_ - 1;
    case GeneratorFamily::M: return i_;
    default: return 1;
    }
}

std::string Generator::name() const
{
    switch (family_) {
    case GeneratorFamily::A: return "A(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case GeneratorFamily::M: return "m(" + std::to_string(i_) + ")";
    default: return "b";
    }
}

//////////////
// Monomial //
//////////////

Monomial::Monomial(Generator g, unsigned exponent)
{
    if (exponent > 0) {
        factors_.emplace_back(g, exponent);
        degree_ = g.degree() * static_cast<int>(exponent);
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [g, e] : factors) {
        if (e == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.front().first.family() != g.family())
            throw BackendMismatch("monomial mixes generators of different coefficient backends");
        if (!m.factors_.empty() && m.factors_.back().first == g)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(g, e);
        m.degree_ += g.degree() * static_cast<int>(e);
    }
    return m;
}

std::optional<GeneratorFamily> Monomial::family() const
{
    if (factors_.empty())
        return std::nullopt;
    return factors_.front().first.family();
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first)
            out.factors_.push_back(*a++);
        else if (b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& [g, e] : factors_) {
        if (!s.empty())
            s += "*";
        s += g.name();
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].first != fb[k].first)
            // The monomial carrying the earlier generator has the larger
            // exponent there (the other has exponent 0).
            return fa[k].first < fb[k].first;
        if (fa[k].second != fb[k].second)
            return fa[k].second > fb[k].second;
    }
    // Same degree and one factor list is a prefix of the other: only possible
    // when both are equal.
    return false;
}

////////////////
// Polynomial //
////////////////

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial(), canonical(constant));
}

Polynomial Polynomial::generator(Generator g)
{
    return term(1, Monomial(g));
}

Polynomial Polynomial::term(const Rational& coeff, Monomial m)
{
    Polynomial p;
    if (coeff != 0)
        p.terms_.emplace(std::move(m), canonical(coeff));
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial());
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<GeneratorFamily> Polynomial::family() const
{
    // The constant monomial sorts first, so the second entry suffices.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (auto f = it->first.family())
            return f;
    }
    return std::nullopt;
}

void Polynomial::check_compatible(const Polynomial& a, const Polynomial& b)
{
    auto fa = a.family();
    auto fb = b.family();
    if (fa && fb && *fa != *fb)
        throw BackendMismatch("polynomials from different coefficient backends");
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff)
{
    if (coeff == 0)
        return;
    if (auto f = m.family(); f) {
        auto mine = family();
        if (mine && *mine != *f)
            throw BackendMismatch("monomial " + m.to_string() + " from a different coefficient backend");
    }
    const Rational q = canonical(coeff);
    auto [it, inserted] = terms_.try_emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_compatible(*this, other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_compatible(*this, other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial::check_compatible(a, b);
    Polynomial out;
    if (a.is_zero() || b.is_zero())
        return out;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(ma * mb, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0)
                    out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    const Rational q = canonical(scalar);
    for (auto& [m, c] : terms_)
        c *= q;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(1L);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        if (m.is_one())
            s += rational_to_string(mag);
        else if (mag == 1)
            s += m.to_string();
        else
            s += rational_to_string(mag) + "*" + m.to_string();
    }
    return s;
}

namespace {

class PolynomialParser
{
public:
    explicit PolynomialParser(const std::string& text)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                src_ += ch;
    }

    Polynomial parse()
    {
        if (src_.empty())
            fail("empty polynomial");
        Polynomial p;
        bool negative = false;
        if (peek() == '-' || peek() == '+')
            negative = get() == '-';
        while (true) {
            auto [coeff, mono] = parse_term();
            p.add_term(mono, negative ? Rational(-coeff) : coeff);
            if (pos_ == src_.size())
                break;
            char sign = get();
            if (sign != '+' && sign != '-')
                fail("expected '+' or '-'");
            negative = sign == '-';
        }
        return p;
    }

private:
    std::pair<Rational, Monomial> parse_term()
    {
        Rational coeff = 1;
        std::vector<Monomial::Factor> factors;
        while (true) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_fraction();
            } else {
                Generator g = parse_generator();
                unsigned e = 1;
                if (peek() == '^') {
                    get();
                    e = static_cast<unsigned>(parse_number().get_num().get_ui());
                }
                factors.emplace_back(g, e);
            }
            if (peek() != '*')
                break;
            get();
        }
        return {coeff, Monomial::from_factors(std::move(factors))};
    }

    Rational parse_fraction()
    {
        Rational q = parse_number();
        if (peek() == '/') {
            get();
            Rational den = parse_number();
            if (den == 0)
                fail("zero denominator");
            q /= den;
        }
        return q;
    }

    Generator parse_generator()
    {
        char ch = get();
        if (ch == 'b')
            return Generator::multiplicative();
        if (ch == 'A') {
            expect('(');
            int i = parse_int();
            expect(',');
            int j = parse_int();
            expect(')');
            return Generator::lazard(i, j);
        }
        if (ch == 'm') {
            expect('(');
            int i = parse_int();
            expect(')');
            return Generator::log_coefficient(i);
        }
        fail("unknown generator");
    }

    Rational parse_number()
    {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return Rational(mpz_class(src_.substr(start, pos_ - start)));
    }

    int parse_int() { return static_cast<int>(parse_number().get_num().get_si()); }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get()
    {
        if (pos_ >= src_.size())
            fail("unexpected end of input");
        return src_[pos_++];
    }
    void expect(char ch)
    {
        if (get() != ch)
            fail(std::string("expected '") + ch + "'");
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                          " in '" + src_ + "'");
    }

    std::string src_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(const std::string& text)
{
    return PolynomialParser(text).parse();
}

GradedDegree graded_degree(const Polynomial& p)
{
    GradedDegree d = GradedDegree::any();
    for (const auto& [m, c] : p.terms())
        d = d.combine(m.degree());
    return d;
}

Polynomial ring_arithmetic(const Polynomial& p, const Polynomial& q, ArithmeticOp op,
                           const Rational& scalar)
{
    switch (op) {
    case ArithmeticOp::Add: return p + q;
    case ArithmeticOp::Mul: return p * q;
    case ArithmeticOp::Negate: return -p;
    default: return p * scalar;
    }
}

////////////////////////
// CoefficientBackend //
////////////////////////

CoefficientBackend CoefficientBackend::log_backend(int order)
{
    if (order < 0)
        throw DomainError("log backend order must be nonnegative");
    return CoefficientBackend(BackendKind::Log, order);
}

CoefficientBackend CoefficientBackend::from_name(const std::string& name, int order)
{
    if (name == "free")
        return free_backend();
    if (name == "log")
        return log_backend(order);
    if (name == "additive")
        return additive();
    if (name == "mult")
        return multiplicative();
    throw DomainError("unknown backend '" + name + "'");
}

std::string CoefficientBackend::name() const
{
    switch (kind_) {
    case BackendKind::Free: return "free";
    case BackendKind::Log: return "log";
    case BackendKind::Additive: return "additive";
    default: return "mult";
    }
}

namespace {

using Dense1 = std::vector<Polynomial>;
using Dense2 = std::vector<std::vector<Polynomial>>;

Dense1 mul_truncated(const Dense1& a, const Dense1& b, int bound)
{
    Dense1 out(bound + 1);
    for (int i = 0; i <= bound; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= bound; ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return out;
}

Dense2 mul_truncated(const Dense2& a, const Dense2& b, int bound)
{
    Dense2 out(bound + 1, Dense1(bound + 1));
    for (int i1 = 0; i1 <= bound; ++i1)
        for (int j1 = 0; i1 + j1 <= bound; ++j1) {
            if (a[i1][j1].is_zero())
                continue;
            for (int i2 = 0; i1 + j1 + i2 <= bound; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= bound; ++j2)
                    if (!b[i2][j2].is_zero())
                        out[i1 + i2][j1 + j2] += a[i1][j1] * b[i2][j2];
        }
    return out;
}

// F(u,v) = l^{-1}(l(u) + l(v)) with l(u) = u + sum_k m_k u^{k+1}, to total
// degree `bound`.
Dense2 log_law(int bound)
{
    Dense1 log(bound + 1);
    if (bound >= 1)
        log[1] = 1L;
    for (int k = 2; k <= bound; ++k)
        log[k] = Polynomial::generator(Generator::log_coefficient(k - 1));

    // Reversion e = l^{-1}, solved degree by degree from l(e(w)) = w:
    // e_k = -[w^k] sum_{i>=1} m_i e_{<k}(w)^{i+1}.
    Dense1 exp(bound + 1);
    if (bound >= 1)
        exp[1] = 1L;
    for (int k = 2; k <= bound; ++k) {
        Dense1 power = exp;
        Polynomial acc;
        for (int i = 1; i + 1 <= k; ++i) {
            power = mul_truncated(power, exp, k);
            acc += log[i + 1] * power[k];
        }
        exp[k] = -acc;
    }

    Dense2 sum(bound + 1, Dense1(bound + 1));
    for (int k = 1; k <= bound; ++k) {
        sum[k][0] = log[k];
        sum[0][k] = log[k];
    }
    Dense2 law(bound + 1, Dense1(bound + 1));
    Dense2 power = sum;
    for (int k = 1; k <= bound; ++k) {
        if (k > 1)
            power = mul_truncated(power, sum, bound);
        for (int i = 0; i <= bound; ++i)
            for (int j = 0; i + j <= bound; ++j)
                if (!power[i][j].is_zero())
                    law[i][j] += exp[k] * power[i][j];
    }
    return law;
}

} // namespace

std::vector<std::vector<Polynomial>> lazard_coefficients(const CoefficientBackend& backend,
                                                         int max_total)
{
    const int size = std::max(max_total, 1) + 1;
    std::vector<std::vector<Polynomial>> table(size, std::vector<Polynomial>(size));
    switch (backend.kind()) {
    case BackendKind::Free:
        for (int i = 1; i <= max_total; ++i)
            for (int j = 1; i + j <= max_total; ++j)
                table[i][j] = Polynomial::generator(Generator::lazard(i, j));
        break;
    case BackendKind::Log: {
        if (max_total - 1 > backend.log_order())
            throw TruncationError("log backend of order " + std::to_string(backend.log_order()) +
                                  " cannot supply coefficients of degree " +
                                  std::to_string(max_total - 1));
        if (max_total < 2)
            break;
        Dense2 law = log_law(max_total);
        for (int i = 1; i <= max_total; ++i)
            for (int j = 1; i + j <= max_total; ++j)
                table[i][j] = std::move(law[i][j]);
        break;
    }
    case BackendKind::Additive: break;
    case BackendKind::Multiplicative:
        if (max_total >= 2)
            table[1][1] = Polynomial::generator(Generator::multiplicative());
        break;
    }
    return table;
}

Polynomial lazard_coefficient(int i, int j, const CoefficientBackend& backend)
{
    if (i < 1 || j < 1)
        throw DomainError("lazard_coefficient requires i, j >= 1");
    return lazard_coefficients(backend, i + j)[i][j];
}

} // namespace fgl
