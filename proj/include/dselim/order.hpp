#pragma once

// Monomial orders on a finite active variable set: degrevlex, lex, and the
// block (elimination) order. A term order here is a ranking of VarRefs plus
// a comparison rule on exponent vectors indexed by that ranking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dselim/ddpoly.hpp"
#include "dselim/errors.hpp"

namespace dselim {

using ExpVec = std::vector<uint32_t>;

inline uint32_t exp_total(const ExpVec& a) {
    return std::accumulate(a.begin(), a.end(), 0u);
}
inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

class MonomialOrder {
public:
    enum class Kind { degrevlex, lex, block };

    static MonomialOrder make_degrevlex(std::vector<VarRef> active) {
        return MonomialOrder(Kind::degrevlex, rank(std::move(active)), 0);
    }
    static MonomialOrder make_lex(std::vector<VarRef> active) {
        return MonomialOrder(Kind::lex, rank(std::move(active)), 0);
    }
    // Eliminate-block variables are ranked above every keep-block variable;
    // each block is compared degrevlex.
    static MonomialOrder make_block(std::vector<VarRef> eliminate, std::vector<VarRef> keep) {
        std::vector<VarRef> all = rank(std::move(eliminate));
        std::size_t nelim = all.size();
        std::vector<VarRef> k = rank(std::move(keep));
        all.insert(all.end(), k.begin(), k.end());
        return MonomialOrder(Kind::block, std::move(all), nelim);
    }

    Kind kind() const { return kind_; }
    std::size_t size() const { return vars_.size(); }
    std::size_t elim_count() const { return elim_count_; }
    const std::vector<VarRef>& variables() const { return vars_; }

    bool contains(const VarRef& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const VarRef& v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw unknown_variable_error("variable " + var_to_string(v) +
                                         " is not ranked by this order");
        return it->second;
    }

    // -1: a < b, 0: equal, 1: a > b.
    int compare(const ExpVec& a, const ExpVec& b) const {
        switch (kind_) {
            case Kind::degrevlex:
                return degrevlex_range(a, b, 0, vars_.size());
            case Kind::lex:
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case Kind::block: {
                int s = degrevlex_range(a, b, 0, elim_count_);
                if (s != 0) return s;
                return degrevlex_range(a, b, elim_count_, vars_.size());
            }
        }
        return 0;
    }

    bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }

    bool in_keep_block(const ExpVec& a) const {
        for (std::size_t i = 0; i < elim_count_; ++i)
            if (a[i] != 0) return false;
        return true;
    }

    ExpVec exponents_of(const Monomial& m) const {
        ExpVec e(vars_.size(), 0);
        for (const auto& [v, x] : m.factors()) e[index_of(v)] = x;
        return e;
    }
    Monomial monomial_of(const ExpVec& e) const {
        Monomial m;
        // build sorted by canonical VarRef order
        std::vector<std::pair<VarRef, uint32_t>> fs;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) fs.push_back({vars_[i], e[i]});
        std::sort(fs.begin(), fs.end());
        for (const auto& [v, x] : fs) m = m * Monomial(v, x);
        return m;
    }

private:
    Kind kind_;
    std::vector<VarRef> vars_;  // vars_[0] is the highest-ranked variable
    std::size_t elim_count_;
    std::map<VarRef, std::size_t> index_;

    MonomialOrder(Kind k, std::vector<VarRef> vars, std::size_t nelim)
        : kind_(k), vars_(std::move(vars)), elim_count_(nelim) {
        for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = i;
        if (index_.size() != vars_.size())
            throw std::invalid_argument("MonomialOrder: duplicate variable in ranking");
    }

    // Canonical ranking: descending (family, k, i, j), so higher transforms
    // rank above the base variables.
    static std::vector<VarRef> rank(std::vector<VarRef> v) {
        std::sort(v.begin(), v.end(), [](const VarRef& a, const VarRef& b) { return b < a; });
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    static int degrevlex_range(const ExpVec& a, const ExpVec& b, std::size_t lo, std::size_t hi) {
        uint32_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
};

// Union of variables appearing in a family of polynomials, canonical order.
template <class K>
std::vector<VarRef> active_variables(const std::vector<DSPolynomial<K>>& F) {
    std::set<VarRef> vs;
    for (const auto& f : F)
        for (const auto& v : f.variables()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

}  // namespace dselim
