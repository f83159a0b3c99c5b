#pragma once

// Sequence rings over the ground field: evaluation of delta-sigma
// polynomials at finite sequence windows, partial-solution checks,
// explicit-recurrence unrolling, and the window <-> overlapping-tuple
// reindexing correspondence.
//
// A window entry at offset o stands for sigma^o v_k at the base index;
// delta acts on entries exactly (d/dt over Qt, 0 over Q), so a window
// determines the full delta-prolongation of the segment it covers.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dselim/ddpoly.hpp"

namespace dselim {

template <class K>
struct SequencePoint {
    enum class Side { N, Z };

    Side side = Side::N;
    // (family, k) -> entries; all windows share one width.
    std::map<std::pair<VarFamily, uint32_t>, std::vector<K>> windows;

    std::size_t width() const {
        return windows.empty() ? 0 : windows.begin()->second.size();
    }
    bool consistent_widths() const {
        for (const auto& [k, w] : windows)
            if (w.size() != width()) return false;
        return true;
    }

    static SequencePoint single(VarFamily fam, uint32_t k, std::vector<K> entries,
                                Side side = Side::N) {
        SequencePoint p;
        p.side = side;
        p.windows[{fam, k}] = std::move(entries);
        return p;
    }
};

namespace detail {
template <class K>
K delta_iterated(K v, uint32_t times) {
    for (uint32_t i = 0; i < times; ++i) v = v.delta();
    return v;
}
}  // namespace detail

// Evaluation with the base index shifted by `offset`: the variable
// delta^i sigma^j v_k maps to delta^i(w_k[j + offset]) and coefficients
// pass through sigma^offset, matching the component at index `offset` of
// the sequence image of p.
template <class K>
K evaluate_at_offset(const DSPolynomial<K>& p, const SequencePoint<K>& w, uint32_t offset) {
    const std::size_t W = w.width();
    K total(0);
    for (const auto& [m, c] : p.terms()) {
        K prod = c;
        for (uint32_t s = 0; s < offset; ++s) prod = prod.sigma();
        for (const auto& [v, e] : m.factors()) {
            auto it = w.windows.find({v.family, v.k});
            if (it == w.windows.end())
                throw window_error("no window for unknown " +
                                   std::string(1, family_char(v.family)) + std::to_string(v.k));
            std::size_t idx = static_cast<std::size_t>(v.j) + offset;
            if (idx >= it->second.size())
                throw window_error("window too small: need offset " + std::to_string(idx) +
                                   " of " + std::string(1, family_char(v.family)) +
                                   std::to_string(v.k) + " but width is " + std::to_string(W));
            K val = detail::delta_iterated(it->second[idx], v.i);
            for (uint32_t q = 0; q < e; ++q) prod = prod * val;
        }
        total += prod;
    }
    return total;
}

template <class K>
K evaluate(const DSPolynomial<K>& p, const SequencePoint<K>& w) {
    return evaluate_at_offset(p, w, 0);
}

// Partial solution of length ell: sigma^i(F) vanishes at w for 0 <= i < ell.
// Requires width >= ell + h where h is the maximal sigma-order in F.
template <class K>
bool is_partial_solution(const std::vector<DSPolynomial<K>>& F, const SequencePoint<K>& w,
                         uint32_t ell) {
    if (ell == 0) return true;
    uint32_t h = 0;
    for (const auto& f : F) h = std::max(h, measure(f).ord_sigma.value_or(0));
    if (w.width() < static_cast<std::size_t>(ell) + h)
        throw window_error("window too small for a length-" + std::to_string(ell) +
                           " check: need width " + std::to_string(ell + h) + ", have " +
                           std::to_string(w.width()));
    for (const auto& f : F)
        for (uint32_t i = 0; i < ell; ++i)
            if (!evaluate_at_offset(f, w, i).is_zero()) return false;
    return true;
}

namespace detail {

// Solvable form of f for unrolling: f = A * (sigma^h v) + B where sigma^h v
// is the unique variable of maximal sigma-order, occurs with delta-order 0
// and degree 1, and B only mentions strictly lower sigma-orders.
template <class K>
struct SolvedForm {
    VarRef target;             // the pure sigma^h variable being solved for
    DSPolynomial<K> coeff;     // A
    DSPolynomial<K> rest;      // B
    uint32_t h = 0;
};

template <class K>
SolvedForm<K> solve_for_highest(const DSPolynomial<K>& f) {
    Measure m = measure(f);
    if (!m.ord_sigma)
        throw std::invalid_argument("unroll_recurrence: equation has no sigma-shifted variable");
    uint32_t h = *m.ord_sigma;
    std::optional<VarRef> target;
    for (const auto& v : f.variables()) {
        if (v.j != h) continue;
        if (v.i != 0)
            throw std::invalid_argument(
                "unroll_recurrence: highest shift appears under delta; not solvable");
        if (target && !(v == *target))
            throw std::invalid_argument(
                "unroll_recurrence: several unknowns at the highest shift; not solvable");
        target = v;
    }
    SolvedForm<K> out;
    out.target = *target;
    out.h = h;
    for (const auto& [mono, c] : f.terms()) {
        uint32_t e = mono.exponent_of(*target);
        if (e == 0) {
            out.rest.add_term(mono, c);
        } else if (e == 1) {
            out.coeff.add_term(mono.divided_by_one(*target), c);
        } else {
            throw std::invalid_argument(
                "unroll_recurrence: equation is nonlinear in its highest shift");
        }
    }
    for (const auto& v : out.coeff.variables())
        if (v.j >= h)
            throw std::invalid_argument(
                "unroll_recurrence: leading coefficient depends on the highest shift");
    return out;
}

}  // namespace detail

// Extend the seed window by `steps` entries using each equation's solved
// form; the result satisfies is_partial_solution at the extended length.
template <class K>
SequencePoint<K> unroll_recurrence(const std::vector<DSPolynomial<K>>& F,
                                   const SequencePoint<K>& seed, uint32_t steps) {
    if (steps == 0) return seed;
    std::vector<detail::SolvedForm<K>> solved;
    std::map<std::pair<VarFamily, uint32_t>, std::size_t> eq_for;
    for (const auto& f : F) {
        auto sf = detail::solve_for_highest(f);
        auto key = std::make_pair(sf.target.family, sf.target.k);
        if (eq_for.count(key))
            throw std::invalid_argument("unroll_recurrence: unknown " +
                                        var_to_string(sf.target) +
                                        " is defined by more than one equation");
        eq_for[key] = solved.size();
        solved.push_back(std::move(sf));
    }
    for (const auto& [key, win] : seed.windows)
        if (!eq_for.count(key))
            throw std::invalid_argument("unroll_recurrence: no equation solves for " +
                                        std::string(1, family_char(key.first)) +
                                        std::to_string(key.second));

    SequencePoint<K> w = seed;
    for (uint32_t step = 0; step < steps; ++step) {
        const std::size_t W = w.width();
        std::map<std::pair<VarFamily, uint32_t>, K> next;
        for (const auto& [key, win] : w.windows) {
            const auto& sf = solved[eq_for.at(key)];
            if (W < sf.h)
                throw window_error("unroll_recurrence: seed narrower than the recurrence depth");
            uint32_t shift = static_cast<uint32_t>(W) - sf.h;
            K a = evaluate_at_offset(sf.coeff, w, shift);
            if (a.is_zero())
                throw std::invalid_argument(
                    "unroll_recurrence: leading coefficient vanishes at step " +
                    std::to_string(step));
            K b = evaluate_at_offset(sf.rest, w, shift);
            next[key] = -(b / a);
        }
        for (auto& [key, val] : next) w.windows[key].push_back(val);
    }
    return w;
}

// Lemma-style reindexing: a width ell+h window maps to tuples
// p_i = (a_{i-1}, ..., a_{i-1+h}), i = 1..ell, and back.
template <class K>
std::vector<SequencePoint<K>> reindex_to_triple(const SequencePoint<K>& w, uint32_t h,
                                                uint32_t ell) {
    if (w.width() != static_cast<std::size_t>(ell) + h)
        throw window_error("reindex_to_triple: width must equal ell + h");
    std::vector<SequencePoint<K>> out;
    for (uint32_t i = 1; i <= ell; ++i) {
        SequencePoint<K> p;
        p.side = w.side;
        for (const auto& [key, win] : w.windows)
            p.windows[key] = std::vector<K>(win.begin() + (i - 1), win.begin() + (i - 1) + h + 1);
        out.push_back(std::move(p));
    }
    return out;
}

template <class K>
SequencePoint<K> reindex_from_triple(const std::vector<SequencePoint<K>>& pts) {
    if (pts.empty()) throw window_error("reindex_from_triple: empty tuple list");
    const std::size_t hp1 = pts.front().width();
    if (hp1 == 0) throw window_error("reindex_from_triple: empty windows");
    SequencePoint<K> w;
    w.side = pts.front().side;
    for (const auto& [key, win] : pts.front().windows) w.windows[key] = win;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].width() != hp1 || pts[i].windows.size() != w.windows.size())
            throw window_error("reindex_from_triple: ragged tuples");
        for (const auto& [key, win] : pts[i].windows) {
            auto it = w.windows.find(key);
            if (it == w.windows.end())
                throw window_error("reindex_from_triple: unknown mismatch between tuples");
            // overlap: first h entries of p_{i+1} equal last h entries of p_i
            for (std::size_t o = 0; o + 1 < hp1; ++o)
                if (!(win[o] == it->second[it->second.size() - hp1 + 1 + o]))
                    throw window_error("reindex_from_triple: overlap mismatch at tuple " +
                                       std::to_string(i + 1));
            it->second.push_back(win.back());
        }
    }
    return w;
}

}  // namespace dselim
