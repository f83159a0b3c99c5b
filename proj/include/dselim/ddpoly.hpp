#pragma once

// The delta-sigma polynomial ring: variables delta^i sigma^j v_k over a
// ground field K, sparse exact polynomials, the sigma and delta actions,
// order/degree measurement, and prolongation.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dselim/ground.hpp"

namespace dselim {

// Families of unknowns. `aux` is reserved for internal constructions
// (Rabinowitsch / saturation / intersection tag variables); it is never
// produced by the parser and never printed.
enum class VarFamily : uint8_t { x = 0, y = 1, aux = 2 };

inline char family_char(VarFamily f) {
    switch (f) {
        case VarFamily::x: return 'x';
        case VarFamily::y: return 'y';
        default: return 'z';
    }
}

// delta^i sigma^j v_k with v in {x, y, aux}, k 1-based.
struct VarRef {
    VarFamily family = VarFamily::y;
    uint32_t k = 1;
    uint32_t i = 0;  // delta-order
    uint32_t j = 0;  // sigma-order

    friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

inline VarRef xvar(uint32_t k, uint32_t i = 0, uint32_t j = 0) { return {VarFamily::x, k, i, j}; }
inline VarRef yvar(uint32_t k, uint32_t i = 0, uint32_t j = 0) { return {VarFamily::y, k, i, j}; }
inline VarRef auxvar(uint32_t k = 1) { return {VarFamily::aux, k, 0, 0}; }

// Sparse monomial: sorted (VarRef, exponent) pairs with positive exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarRef v, uint32_t e = 1) {
        if (e > 0) e_.push_back({v, e});
    }

    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<VarRef, uint32_t>>& factors() const { return e_; }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [v, e] : e_) d += e;
        return d;
    }
    uint32_t degree_in(VarFamily f) const {
        uint32_t d = 0;
        for (const auto& [v, e] : e_)
            if (v.family == f) d += e;
        return d;
    }
    uint32_t exponent_of(const VarRef& v) const {
        for (const auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        std::size_t a = 0, b = 0;
        while (a < e_.size() || b < o.e_.size()) {
            if (b == o.e_.size() || (a < e_.size() && e_[a].first < o.e_[b].first)) {
                r.e_.push_back(e_[a++]);
            } else if (a == e_.size() || o.e_[b].first < e_[a].first) {
                r.e_.push_back(o.e_[b++]);
            } else {
                r.e_.push_back({e_[a].first, e_[a].second + o.e_[b].second});
                ++a;
                ++b;
            }
        }
        return r;
    }

    // Derivative structure: divide by one power of v (v must occur).
    Monomial divided_by_one(const VarRef& v) const {
        Monomial r;
        for (const auto& [w, e] : e_) {
            if (w == v) {
                if (e > 1) r.e_.push_back({w, e - 1});
            } else {
                r.e_.push_back({w, e});
            }
        }
        return r;
    }

    // Rename every variable through fn (must be strictly monotone on VarRef,
    // as the sigma action is).
    template <class Fn>
    Monomial mapped(Fn&& fn) const {
        Monomial r;
        r.e_.reserve(e_.size());
        for (const auto& [v, e] : e_) r.e_.push_back({fn(v), e});
        return r;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<std::pair<VarRef, uint32_t>> e_;
};

// Order/degree measurements of a polynomial; orders are absent ("none")
// for polynomials with no variables.
struct Measure {
    std::optional<uint32_t> ord;
    std::optional<uint32_t> ord_delta;
    std::optional<uint32_t> ord_sigma;
    uint32_t deg_y = 0;
    uint32_t deg_x = 0;
};

template <class K>
class DSPolynomial {
public:
    using Field = K;

    DSPolynomial() = default;
    explicit DSPolynomial(const K& c) {
        if (!c.is_zero()) terms_[Monomial()] = c;
    }
    explicit DSPolynomial(long c) : DSPolynomial(K(c)) {}
    DSPolynomial(const Monomial& m, const K& c) {
        if (!c.is_zero()) terms_[m] = c;
    }
    static DSPolynomial variable(const VarRef& v) { return DSPolynomial(Monomial(v), K(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    const std::map<Monomial, K>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const K& coeff(const Monomial& m) const {
        static const K zero{};
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DSPolynomial operator-() const {
        DSPolynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    DSPolynomial operator+(const DSPolynomial& o) const {
        DSPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    DSPolynomial operator-(const DSPolynomial& o) const {
        DSPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    DSPolynomial operator*(const DSPolynomial& o) const {
        DSPolynomial r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    DSPolynomial operator*(const K& c) const {
        DSPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    DSPolynomial& operator+=(const DSPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DSPolynomial& operator-=(const DSPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    DSPolynomial pow(uint32_t e) const {
        DSPolynomial r(K(1));
        DSPolynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const DSPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const DSPolynomial& o) const { return !(*this == o); }

    // Canonical total order for deterministic sorting and deduplication.
    int cmp(const DSPolynomial& o) const {
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first ? -1 : 1;
            int s = a->second.cmp(b->second);
            if (s != 0) return s;
        }
        if (a != terms_.end()) return 1;
        if (b != o.terms_.end()) return -1;
        return 0;
    }
    bool operator<(const DSPolynomial& o) const { return cmp(o) < 0; }

    std::vector<VarRef> variables() const {
        std::set<VarRef> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vs.insert(v);
        return {vs.begin(), vs.end()};
    }

private:
    std::map<Monomial, K> terms_;
};

// ---------------------------------------------------------------------------
// The sigma and delta actions.
// ---------------------------------------------------------------------------

// sigma(delta^i sigma^j v_k) = delta^i sigma^{j+1} v_k; coefficients through
// the ground-field endomorphism. Ring homomorphism.
template <class K>
DSPolynomial<K> sigma_shift(const DSPolynomial<K>& p) {
    DSPolynomial<K> r;
    for (const auto& [m, c] : p.terms()) {
        Monomial sm = m.mapped([](VarRef v) {
            ++v.j;
            return v;
        });
        r.add_term(sm, c.sigma());
    }
    return r;
}

template <class K>
DSPolynomial<K> sigma_shift(const DSPolynomial<K>& p, uint32_t times) {
    DSPolynomial<K> r = p;
    for (uint32_t s = 0; s < times; ++s) r = sigma_shift(r);
    return r;
}

// delta(delta^i sigma^j v_k) = delta^{i+1} sigma^j v_k, extended by the
// Leibniz rule; coefficients through the ground-field derivation.
template <class K>
DSPolynomial<K> delta_derive(const DSPolynomial<K>& p) {
    DSPolynomial<K> r;
    for (const auto& [m, c] : p.terms()) {
        K dc = c.delta();
        if (!dc.is_zero()) r.add_term(m, dc);
        for (const auto& [v, e] : m.factors()) {
            VarRef dv = v;
            ++dv.i;
            Monomial dm = m.divided_by_one(v) * Monomial(dv);
            r.add_term(dm, c * K(static_cast<long>(e)));
        }
    }
    return r;
}

template <class K>
DSPolynomial<K> delta_derive(const DSPolynomial<K>& p, uint32_t times) {
    DSPolynomial<K> r = p;
    for (uint32_t s = 0; s < times; ++s) r = delta_derive(r);
    return r;
}

template <class K>
Measure measure(const DSPolynomial<K>& p) {
    Measure m;
    for (const auto& [mono, c] : p.terms()) {
        m.deg_y = std::max(m.deg_y, mono.degree_in(VarFamily::y));
        m.deg_x = std::max(m.deg_x, mono.degree_in(VarFamily::x));
        for (const auto& [v, e] : mono.factors()) {
            m.ord = std::max(m.ord.value_or(0), v.i + v.j);
            m.ord_delta = std::max(m.ord_delta.value_or(0), v.i);
            m.ord_sigma = std::max(m.ord_sigma.value_or(0), v.j);
        }
    }
    return m;
}

// { delta^a sigma^b f : f in F, a <= delta_levels, b <= sigma_levels },
// deduplicated in canonical form.
template <class K>
std::vector<DSPolynomial<K>> prolong(const std::vector<DSPolynomial<K>>& F,
                                     uint32_t delta_levels, uint32_t sigma_levels) {
    std::vector<DSPolynomial<K>> out;
    for (const auto& f : F) {
        DSPolynomial<K> sf = f;
        for (uint32_t b = 0; b <= sigma_levels; ++b) {
            DSPolynomial<K> df = sf;
            for (uint32_t a = 0; a <= delta_levels; ++a) {
                out.push_back(df);
                if (a < delta_levels) df = delta_derive(df);
            }
            if (b < sigma_levels) sf = sigma_shift(sf);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Canonical printer. Output re-parses to the same polynomial.
// ---------------------------------------------------------------------------

inline std::string var_to_string(const VarRef& v) {
    std::string core = std::string(1, family_char(v.family)) + std::to_string(v.k);
    for (uint32_t j = 0; j < v.j; ++j) core = "S(" + core + ")";
    for (uint32_t i = 0; i < v.i; ++i) core = "D(" + core + ")";
    return core;
}

inline std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += var_to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace detail {
inline bool coeff_is_negated_simple(const Rational& c, std::string& body) {
    // For "- 3/2*mono" style printing: true when c < 0, body holds |c|.
    if (c.cmp(Rational(0)) < 0) {
        body = (-c).str();
        return true;
    }
    body = c.str();
    return false;
}
inline bool coeff_is_negated_simple(const RationalFunction& c, std::string& body) {
    // Only pull the sign out of coefficients that are plain rationals;
    // genuine t-dependent coefficients print parenthesized as-is.
    if (c.den() == ZPoly(1) && c.num().degree() <= 0) {
        if (!c.is_zero() && c.num().leading() < 0) {
            body = (-c).str();
            return true;
        }
        body = c.str();
        return false;
    }
    body = "(" + c.num().str() + ")";
    if (c.den() != ZPoly(1)) body += "/(" + c.den().str() + ")";
    return false;
}
}  // namespace detail

template <class K>
std::string to_string(const DSPolynomial<K>& p) {
    if (p.is_zero()) return "0";
    // Highest total degree first, then reverse canonical monomial order.
    std::vector<const std::pair<const Monomial, K>*> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        uint32_t da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return b->first < a->first;
    });
    std::string out;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        std::string body;
        bool neg = detail::coeff_is_negated_simple(c, body);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            out += body;
        } else if (body == "1") {
            out += monomial_to_string(m);
        } else {
            out += body + "*" + monomial_to_string(m);
        }
    }
    return out;
}

}  // namespace dselim
