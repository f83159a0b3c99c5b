#pragma once

// Exact ideal computations over the ground field: Buchberger's algorithm
// with Gebauer-Moeller pair pruning, normal forms with cofactor tracking,
// elimination ideals, radical membership, saturation, ideal intersection,
// and a dense Macaulay-matrix membership oracle used as an independent
// cross-check in the tests.
//
// All iteration orders are canonical, so identical inputs produce
// byte-identical bases and certificates.

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dselim/order.hpp"

namespace dselim {

// Step/time guard shared by every ideal computation. The step counter
// advances once per cancelled leading term.
struct Budget {
    uint64_t max_steps = 1'000'000;
    double max_seconds = 60.0;
    uint32_t max_total_degree = 0;  // 0 = unlimited

    uint64_t steps = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void tick() {
        if (++steps > max_steps)
            throw resource_error("reduction step budget exceeded (" +
                                 std::to_string(max_steps) + " steps)");
        if ((steps & 0x3f) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
            if (el > max_seconds)
                throw resource_error("time budget exceeded (" + std::to_string(max_seconds) +
                                     " s)");
        }
    }
    void check_degree(uint32_t deg) {
        if (max_total_degree != 0 && deg > max_total_degree)
            throw resource_error("degree budget exceeded (degree " + std::to_string(deg) + " > " +
                                 std::to_string(max_total_degree) + ")");
    }
};

namespace gb {

// Kernel polynomial: terms sorted strictly descending under the active order.
template <class K>
struct GPoly {
    std::vector<std::pair<ExpVec, K>> t;

    bool is_zero() const { return t.empty(); }
    const ExpVec& lm() const { return t.front().first; }
    const K& lc() const { return t.front().second; }
};

template <class K>
GPoly<K> gp_from_ds(const DSPolynomial<K>& p, const MonomialOrder& ord) {
    GPoly<K> g;
    g.t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) g.t.push_back({ord.exponents_of(m), c});
    std::sort(g.t.begin(), g.t.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    return g;
}

template <class K>
DSPolynomial<K> gp_to_ds(const GPoly<K>& g, const MonomialOrder& ord) {
    DSPolynomial<K> p;
    for (const auto& [e, c] : g.t) p.add_term(ord.monomial_of(e), c);
    return p;
}

// dst + scale * X^shift * src, merging two descending term lists.
template <class K>
GPoly<K> gp_add_scaled(const GPoly<K>& dst, const GPoly<K>& src, const ExpVec& shift,
                       const K& scale, const MonomialOrder& ord) {
    GPoly<K> r;
    r.t.reserve(dst.t.size() + src.t.size());
    std::size_t a = 0, b = 0;
    while (a < dst.t.size() || b < src.t.size()) {
        if (b == src.t.size()) {
            r.t.push_back(dst.t[a++]);
            continue;
        }
        ExpVec se = exp_add(src.t[b].first, shift);
        if (a == dst.t.size()) {
            K c = src.t[b].second * scale;
            if (!c.is_zero()) r.t.push_back({std::move(se), std::move(c)});
            ++b;
            continue;
        }
        int cmp = ord.compare(dst.t[a].first, se);
        if (cmp > 0) {
            r.t.push_back(dst.t[a++]);
        } else if (cmp < 0) {
            K c = src.t[b].second * scale;
            if (!c.is_zero()) r.t.push_back({std::move(se), std::move(c)});
            ++b;
        } else {
            K c = dst.t[a].second + src.t[b].second * scale;
            if (!c.is_zero()) r.t.push_back({std::move(se), std::move(c)});
            ++a;
            ++b;
        }
    }
    return r;
}

template <class K>
GPoly<K> gp_scale(const GPoly<K>& p, const K& s) {
    GPoly<K> r = p;
    for (auto& [e, c] : r.t) c = c * s;
    return r;
}

// Polynomial plus its representation over the input generators.
template <class K>
struct Tracked {
    GPoly<K> p;
    std::vector<GPoly<K>> rep;  // rep[g]: cofactor of generator g

    void scale(const K& s, const MonomialOrder& ord) {
        p = gp_scale(p, s);
        for (auto& r : rep) r = gp_scale(r, s);
    }
    // *this += scale * X^shift * other
    void add_scaled(const Tracked& o, const ExpVec& shift, const K& scale,
                    const MonomialOrder& ord) {
        p = gp_add_scaled(p, o.p, shift, scale, ord);
        if (!rep.empty())
            for (std::size_t g = 0; g < rep.size(); ++g)
                rep[g] = gp_add_scaled(rep[g], o.rep[g], shift, scale, ord);
    }
};

// Full normal form of f against `basis` (not necessarily a GB): the result
// has no term divisible by any basis leading monomial. Quotients, when
// requested, satisfy f = sum_i quot[i]*basis[i] + r exactly.
template <class K>
Tracked<K> reduce_full(Tracked<K> h, const std::vector<Tracked<K>>& basis,
                       const MonomialOrder& ord, Budget& budget,
                       std::vector<GPoly<K>>* quot = nullptr) {
    if (quot) quot->assign(basis.size(), GPoly<K>{});
    GPoly<K> remainder;
    while (!h.p.is_zero()) {
        const ExpVec& lead = h.p.lm();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].p.is_zero()) continue;
            if (!exp_divides(basis[i].p.lm(), lead)) continue;
            budget.tick();
            ExpVec shift = exp_sub(lead, basis[i].p.lm());
            K factor = -(h.p.lc() / basis[i].p.lc());
            h.add_scaled(basis[i], shift, factor, ord);
            if (quot)
                (*quot)[i] = gp_add_scaled((*quot)[i], GPoly<K>{{{shift, -factor}}}, ExpVec(ord.size(), 0),
                                           K(1), ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.t.push_back(h.p.t.front());
            h.p.t.erase(h.p.t.begin());
        }
    }
    h.p = std::move(remainder);
    return h;
}

}  // namespace gb

// A (reduced) Groebner basis together with its order, plus optional
// cofactor representations over the original generators.
template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<DSPolynomial<K>> polys;  // monic, auto-reduced, LM-ascending
    bool reduced = true;
    bool tracked = false;
    std::vector<DSPolynomial<K>> gens;                // original nonzero generators
    std::vector<std::vector<DSPolynomial<K>>> reps;   // polys[i] = sum_g reps[i][g]*gens[g]
};

// Buchberger's algorithm with the normal pair-selection strategy (minimal
// lcm degree) and Gebauer-Moeller chain/product pruning. Deterministic for
// a fixed input order.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<DSPolynomial<K>>& input, MonomialOrder order,
                            Budget& budget, bool track = false) {
    using gb::GPoly;
    using gb::Tracked;

    std::vector<DSPolynomial<K>> gens;
    for (const auto& f : input)
        if (!f.is_zero()) gens.push_back(f);

    std::vector<Tracked<K>> basis;
    auto lcm_of = [&](std::size_t i, std::size_t j) {
        return exp_lcm(basis[i].p.lm(), basis[j].p.lm());
    };
    auto coprime = [&](std::size_t i, std::size_t j) {
        return lcm_of(i, j) == exp_add(basis[i].p.lm(), basis[j].p.lm());
    };

    // Pair queue keyed by (lcm degree, lcm, i, j): normal selection strategy.
    struct PairKey {
        uint32_t deg;
        ExpVec lcm;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> pairs;

    auto add_with_update = [&](Tracked<K> h) {
        // Gebauer-Moeller UPDATE for the new element at index t.
        std::size_t t = basis.size();
        basis.push_back(std::move(h));
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < t; ++i)
            if (!basis[i].p.is_zero()) cand.push_back(i);

        std::vector<ExpVec> lcms(t);
        for (std::size_t i : cand) lcms[i] = lcm_of(i, t);

        // criterion M: drop (i,t) when some lcm(j,t) strictly divides lcm(i,t)
        std::vector<bool> keep(t, false);
        for (std::size_t i : cand) keep[i] = true;
        for (std::size_t i : cand) {
            if (!keep[i]) continue;
            for (std::size_t j : cand) {
                if (i == j || !keep[i]) continue;
                if (lcms[j] != lcms[i] && exp_divides(lcms[j], lcms[i])) {
                    keep[i] = false;
                }
            }
        }
        // criterion F: among equal lcms keep the smallest index
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                std::size_t i = cand[a], j = cand[b];
                if (keep[i] && keep[j] && lcms[i] == lcms[j]) keep[j] = false;
            }
        // criterion B: coprime leading monomials never contribute
        for (std::size_t i : cand)
            if (keep[i] && coprime(i, t)) keep[i] = false;

        for (std::size_t i : cand)
            if (keep[i]) pairs.insert({exp_total(lcms[i]), lcms[i], i, t});

        // chain criterion on the old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const PairKey& pk = *it;
            if (pk.j != t && exp_divides(basis[t].p.lm(), pk.lcm) &&
                lcm_of(pk.i, t) != pk.lcm && lcm_of(pk.j, t) != pk.lcm) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
    };

    bool trivial = false;
    for (std::size_t g = 0; g < gens.size() && !trivial; ++g) {
        Tracked<K> h;
        h.p = gb::gp_from_ds(gens[g], order);
        if (track) {
            h.rep.assign(gens.size(), GPoly<K>{});
            h.rep[g].t.push_back({ExpVec(order.size(), 0), K(1)});
        }
        h = gb::reduce_full(std::move(h), basis, order, budget);
        if (h.p.is_zero()) continue;
        budget.check_degree(exp_total(h.p.lm()));
        if (exp_total(h.p.lm()) == 0) trivial = true;
        add_with_update(std::move(h));
    }

    while (!pairs.empty() && !trivial) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& fi = basis[pk.i];
        const auto& fj = basis[pk.j];
        // S-polynomial: lcm/lm_i * f_i - lcm/lm_j * f_j, scaled monic-free.
        Tracked<K> s;
        s.p = GPoly<K>{};
        if (track) s.rep.assign(gens.size(), GPoly<K>{});
        ExpVec ui = exp_sub(pk.lcm, fi.p.lm());
        ExpVec uj = exp_sub(pk.lcm, fj.p.lm());
        s.add_scaled(fi, ui, K(1) / fi.p.lc(), order);
        s.add_scaled(fj, uj, -(K(1) / fj.p.lc()), order);
        s = gb::reduce_full(std::move(s), basis, order, budget);
        if (s.p.is_zero()) continue;
        budget.check_degree(exp_total(s.p.lm()));
        if (exp_total(s.p.lm()) == 0) trivial = true;
        add_with_update(std::move(s));
    }

    // Minimalize: drop elements whose LM is divisible by another kept LM.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].p.is_zero()) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(basis[a].p.lm(), basis[b].p.lm());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<gb::Tracked<K>> minimal;
    for (std::size_t i : idx) {
        bool dominated = false;
        for (const auto& m : minimal)
            if (exp_divides(m.p.lm(), basis[i].p.lm())) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(std::move(basis[i]));
    }
    if (trivial && !minimal.empty()) minimal.resize(1);

    // Tail-reduce each element against the rest, then normalize monic.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<gb::Tracked<K>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = gb::reduce_full(std::move(minimal[i]), others, order, budget);
        minimal[i].scale(K(1) / minimal[i].p.lc(), order);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        return order.compare(a.p.lm(), b.p.lm()) < 0;
    });

    GroebnerBasis<K> out{std::move(order), {}, true, track, {}, {}};
    for (auto& m : minimal) {
        out.polys.push_back(gb::gp_to_ds(m.p, out.order));
        if (track) {
            std::vector<DSPolynomial<K>> row;
            row.reserve(gens.size());
            for (const auto& r : m.rep) row.push_back(gb::gp_to_ds(r, out.order));
            out.reps.push_back(std::move(row));
        }
    }
    if (track) out.gens = gens;
    return out;
}

// Unique remainder of f modulo G under G's order. With `cofactors` given
// (requires a tracked basis), fills cofactors over G's original generators
// so that f = sum_g cofactors[g]*gens[g] + r.
template <class K>
DSPolynomial<K> normal_form(const DSPolynomial<K>& f, const GroebnerBasis<K>& G,
                            Budget& budget, std::vector<DSPolynomial<K>>* cofactors = nullptr) {
    std::vector<gb::Tracked<K>> basis(G.polys.size());
    for (std::size_t i = 0; i < G.polys.size(); ++i)
        basis[i].p = gb::gp_from_ds(G.polys[i], G.order);
    gb::Tracked<K> h;
    h.p = gb::gp_from_ds(f, G.order);
    std::vector<gb::GPoly<K>> quot;
    h = gb::reduce_full(std::move(h), basis, G.order, budget, cofactors ? &quot : nullptr);
    if (cofactors) {
        if (!G.tracked)
            throw std::invalid_argument("normal_form: cofactors need a tracked basis");
        cofactors->assign(G.gens.size(), DSPolynomial<K>());
        for (std::size_t i = 0; i < G.polys.size(); ++i) {
            if (quot[i].is_zero()) continue;
            DSPolynomial<K> qi = gb::gp_to_ds(quot[i], G.order);
            for (std::size_t g = 0; g < G.gens.size(); ++g)
                (*cofactors)[g] += qi * G.reps[i][g];
        }
    }
    return gb::gp_to_ds(h.p, G.order);
}

template <class K>
DSPolynomial<K> normal_form(const DSPolynomial<K>& f, const GroebnerBasis<K>& G) {
    Budget b;
    return normal_form(f, G, b);
}

// True iff the reduced basis of <F> is {1}; decides solvability of the
// finite polynomial system over the algebraic closure.
template <class K>
bool is_trivial_ideal(const std::vector<DSPolynomial<K>>& F, Budget& budget) {
    for (const auto& f : F)
        if (!f.is_zero() && f.is_constant()) return true;
    auto vars = active_variables(F);
    auto G = buchberger(F, MonomialOrder::make_degrevlex(vars), budget);
    return G.polys.size() == 1 && G.polys[0].is_constant() && !G.polys[0].is_zero();
}

template <class K>
bool is_trivial_ideal(const std::vector<DSPolynomial<K>>& F) {
    Budget b;
    return is_trivial_ideal(F, b);
}

// Generators of <F> ∩ k[keep]: block-order basis, filtered to keep-support.
// The returned GroebnerBasis holds the full block basis (tracked when asked);
// `positions` indexes the keep-supported elements inside it.
template <class K>
struct EliminationOutcome {
    std::vector<DSPolynomial<K>> generators;
    std::vector<std::size_t> positions;
    GroebnerBasis<K> basis;
};

template <class K>
EliminationOutcome<K> elimination_intersection(const std::vector<DSPolynomial<K>>& F,
                                               const std::vector<VarRef>& keep, Budget& budget,
                                               bool track = false) {
    // Keep variables that are not active in F are harmless: they cannot
    // occur in any basis element, so the intersection is unaffected.
    auto vars = active_variables(F);
    std::set<VarRef> keepset(keep.begin(), keep.end());
    std::vector<VarRef> elim, kept_active;
    for (const auto& v : vars) {
        if (keepset.count(v))
            kept_active.push_back(v);
        else
            elim.push_back(v);
    }

    auto order = MonomialOrder::make_block(elim, kept_active);
    auto G = buchberger(F, order, budget, track);

    EliminationOutcome<K> out{{}, {}, std::move(G)};
    for (std::size_t i = 0; i < out.basis.polys.size(); ++i) {
        bool keep_only = true;
        for (const auto& v : out.basis.polys[i].variables())
            if (!keepset.count(v)) {
                keep_only = false;
                break;
            }
        if (keep_only) {
            out.generators.push_back(out.basis.polys[i]);
            out.positions.push_back(i);
        }
    }
    return out;
}

// f ∈ sqrt(<F>), by the Rabinowitsch trick in one extra variable.
template <class K>
bool radical_membership(const DSPolynomial<K>& f, const std::vector<DSPolynomial<K>>& F,
                        Budget& budget) {
    if (f.is_zero()) return true;
    DSPolynomial<K> z = DSPolynomial<K>::variable(auxvar());
    std::vector<DSPolynomial<K>> ext = F;
    ext.push_back(DSPolynomial<K>(K(1)) - z * f);
    return is_trivial_ideal(ext, budget);
}

template <class K>
bool radical_membership(const DSPolynomial<K>& f, const std::vector<DSPolynomial<K>>& F) {
    Budget b;
    return radical_membership(f, F, b);
}

// Saturation <F> : f^inf, via elimination of the Rabinowitsch variable.
template <class K>
std::vector<DSPolynomial<K>> saturate(const std::vector<DSPolynomial<K>>& F,
                                      const DSPolynomial<K>& f, Budget& budget) {
    if (f.is_zero()) throw std::invalid_argument("saturate: f must be nonzero");
    DSPolynomial<K> z = DSPolynomial<K>::variable(auxvar());
    std::vector<DSPolynomial<K>> ext = F;
    ext.push_back(DSPolynomial<K>(K(1)) - z * f);
    std::set<VarRef> keep;
    for (const auto& g : F)
        for (const auto& v : g.variables()) keep.insert(v);
    for (const auto& v : f.variables()) keep.insert(v);
    auto out = elimination_intersection(ext, {keep.begin(), keep.end()}, budget);
    return out.generators;
}

// <A> ∩ <B> via the tag-variable trick: eliminate u from u*A + (1-u)*B.
template <class K>
std::vector<DSPolynomial<K>> intersect_ideals(const std::vector<DSPolynomial<K>>& A,
                                              const std::vector<DSPolynomial<K>>& B,
                                              Budget& budget) {
    DSPolynomial<K> u = DSPolynomial<K>::variable(auxvar());
    DSPolynomial<K> one_minus_u = DSPolynomial<K>(K(1)) - u;
    std::vector<DSPolynomial<K>> ext;
    for (const auto& a : A) ext.push_back(u * a);
    for (const auto& b : B) ext.push_back(one_minus_u * b);
    std::set<VarRef> keep;
    for (const auto& g : A)
        for (const auto& v : g.variables()) keep.insert(v);
    for (const auto& g : B)
        for (const auto& v : g.variables()) keep.insert(v);
    auto out = elimination_intersection(ext, {keep.begin(), keep.end()}, budget);
    return out.generators;
}

// ---------------------------------------------------------------------------
// Macaulay-matrix membership oracle (independent of the Buchberger path).
// Decides whether f = sum_i c_i*g_i with deg(c_i*g_i) <= degree_cap by exact
// dense linear algebra. "member" answers are definitive; "not member" is
// only conclusive up to the cap.
// ---------------------------------------------------------------------------

template <class K>
struct MacaulayResult {
    bool member = false;
    // On membership: (cofactor, generator) pairs replaying to f.
    std::vector<std::pair<DSPolynomial<K>, DSPolynomial<K>>> certificate;
};

namespace gb {
inline void enumerate_monomials(std::size_t nvars, uint32_t cap, ExpVec& cur, std::size_t pos,
                                std::vector<ExpVec>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    uint32_t used = exp_total(cur);
    for (uint32_t e = 0; e + used <= cap; ++e) {
        cur[pos] = e;
        enumerate_monomials(nvars, cap, cur, pos + 1, out);
    }
    cur[pos] = 0;
}
}  // namespace gb

template <class K>
MacaulayResult<K> macaulay_membership_oracle(const DSPolynomial<K>& f,
                                             const std::vector<DSPolynomial<K>>& F,
                                             uint32_t degree_cap) {
    std::vector<DSPolynomial<K>> all = F;
    all.push_back(f);
    auto vars = active_variables(all);
    uint32_t degf = 0;
    for (const auto& [m, c] : f.terms()) degf = std::max(degf, m.total_degree());
    if (degree_cap < degf)
        throw std::invalid_argument("macaulay_membership_oracle: degree cap below deg f");

    auto order = MonomialOrder::make_degrevlex(vars);
    const std::size_t nv = vars.size();

    // Row space: all monomials of total degree <= cap.
    std::vector<ExpVec> rows;
    ExpVec cur(nv, 0);
    gb::enumerate_monomials(nv, degree_cap, cur, 0, rows);
    std::map<ExpVec, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

    // Columns: (generator, multiplier monomial) with deg(m * g) <= cap.
    struct Col {
        std::size_t gen;
        ExpVec mult;
    };
    std::vector<Col> cols;
    std::vector<gb::GPoly<K>> kgens;
    for (std::size_t g = 0; g < F.size(); ++g) {
        kgens.push_back(gb::gp_from_ds(F[g], order));
        if (kgens.back().is_zero()) continue;
        uint32_t dg = 0;
        for (const auto& [e, c] : kgens.back().t) dg = std::max(dg, exp_total(e));
        if (dg > degree_cap) continue;
        std::vector<ExpVec> mults;
        ExpVec c2(nv, 0);
        gb::enumerate_monomials(nv, degree_cap - dg, c2, 0, mults);
        for (auto& m : mults) cols.push_back({g, std::move(m)});
    }

    const std::size_t R = rows.size(), C = cols.size();
    std::vector<std::vector<K>> mat(R, std::vector<K>(C + 1, K(0)));
    for (std::size_t c = 0; c < C; ++c)
        for (const auto& [e, coef] : kgens[cols[c].gen].t)
            mat[row_of.at(exp_add(e, cols[c].mult))][c] = coef;
    {
        auto kf = gb::gp_from_ds(f, order);
        for (const auto& [e, coef] : kf.t) mat[row_of.at(e)][C] = coef;
    }

    // Exact Gaussian elimination.
    std::vector<std::size_t> pivot_col;
    std::size_t rank_row = 0;
    for (std::size_t c = 0; c < C && rank_row < R; ++c) {
        std::size_t p = rank_row;
        while (p < R && mat[p][c].is_zero()) ++p;
        if (p == R) continue;
        std::swap(mat[p], mat[rank_row]);
        K inv = K(1) / mat[rank_row][c];
        for (std::size_t cc = c; cc <= C; ++cc) mat[rank_row][cc] = mat[rank_row][cc] * inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank_row || mat[r][c].is_zero()) continue;
            K factor = mat[r][c];
            for (std::size_t cc = c; cc <= C; ++cc)
                mat[r][cc] = mat[r][cc] - factor * mat[rank_row][cc];
        }
        pivot_col.push_back(c);
        ++rank_row;
    }
    // Rows below the rank are zero in every column; inconsistency shows up
    // as a nonzero right-hand side there.
    for (std::size_t r = rank_row; r < R; ++r)
        if (!mat[r][C].is_zero()) return {};

    // Particular solution: free columns 0, pivot columns from rhs.
    std::vector<K> x(C, K(0));
    for (std::size_t r = 0; r < rank_row; ++r) x[pivot_col[r]] = mat[r][C];

    MacaulayResult<K> res;
    res.member = true;
    std::map<std::size_t, DSPolynomial<K>> cof;
    for (std::size_t c = 0; c < C; ++c) {
        if (x[c].is_zero()) continue;
        cof[cols[c].gen].add_term(order.monomial_of(cols[c].mult), x[c]);
    }
    for (const auto& [g, p] : cof) res.certificate.push_back({p, F[g]});
    return res;
}

}  // namespace dselim
