#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "fgl/coeff_ring.hpp"

namespace fgl {

// Exponent vector of a monomial in ordered variables (u_1..u_r or c_1..c_r).
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

// Lower total degree first; within a degree, lexicographically larger first
// (u^2, u*v, v^2).
struct ExponentOrder
{
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db)
            return da < db;
        return b < a;
    }
};

namespace detail {

using TermMap = std::map<Exponents, Polynomial, ExponentOrder>;

inline void accumulate(TermMap& terms, const Exponents& e, const Polynomial& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

inline void subtract(TermMap& terms, const Exponents& e, const Polynomial& c)
{
    accumulate(terms, e, -c);
}

// Product of two term maps, dropping monomials of total degree > bound.
inline TermMap multiply_truncated(const TermMap& a, const TermMap& b, int bound)
{
    TermMap out;
    Exponents e;
    for (const auto& [ea, ca] : a) {
        const int da = total_degree(ea);
        if (da > bound)
            break;
        for (const auto& [eb, cb] : b) {
            if (da + total_degree(eb) > bound)
                break;
            e.resize(ea.size());
            for (std::size_t k = 0; k < ea.size(); ++k)
                e[k] = ea[k] + eb[k];
            accumulate(out, e, ca * cb);
        }
    }
    return out;
}

} // namespace detail
} // namespace fgl
