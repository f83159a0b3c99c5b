#pragma once

// Shared random generators for the test suites. Deterministic seeds only.

#include <random>

#include "dselim/ddpoly.hpp"

namespace testgen {

using dselim::DSPolynomial;
using dselim::Monomial;
using dselim::Rational;
using dselim::RationalFunction;
using dselim::VarRef;

inline Rational random_coeff(std::mt19937_64& rng, Rational) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline RationalFunction random_coeff(std::mt19937_64& rng, RationalFunction) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, 2);
    dselim::ZPoly t = dselim::ZPoly::t();
    dselim::ZPoly num, den;
    int dn = deg(rng);
    for (int i = 0; i <= dn; ++i) num = num * t + dselim::ZPoly(c(rng));
    den = dselim::ZPoly(1);
    if (deg(rng) == 2) den = t + dselim::ZPoly(1 + std::abs(c(rng)));
    return RationalFunction(num, den);
}

// Random polynomial over `vars` with the given term count / degree limits.
template <class K>
DSPolynomial<K> random_poly(std::mt19937_64& rng, const std::vector<VarRef>& vars,
                            int max_terms = 4, uint32_t max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
    std::uniform_int_distribution<uint32_t> expd(0, max_exp);
    DSPolynomial<K> p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            uint32_t e = expd(rng);
            if (e > 0 && !vars.empty()) m = m * Monomial(vars[pick(rng)], e);
        }
        p.add_term(m, random_coeff(rng, K{}));
    }
    return p;
}

}  // namespace testgen
