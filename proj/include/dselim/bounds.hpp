#pragma once

// The effective bound tower: G, F, the component-count recursion C, L, the
// train recursions A_i / tau_i, and the final elimination bound
// B = B_delta + s with a pluggable differential-elimination bound.
//
// Values are exact arbitrary-precision naturals while they fit the digit
// budget. Past the budget a value is reported as a tower magnitude
//     tower(depth, top)  :=  value <= 2^2^...^2^top   (depth exponentials),
// maintained with upward rounding, so a magnitude is always an upper bound
// of the true value. The depth itself is a BoundValue: the train recursions
// produce towers whose height is astronomically large. When even the nesting
// of tower heights outgrows the representation, the value degrades to
// `beyond` (no numeric claim; every operation absorbs it).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dselim/errors.hpp"

namespace dselim {

struct BoundContext;

class BoundValue {
public:
    enum class Kind { exact, magnitude, beyond };

    BoundValue() : kind_(Kind::exact), exact_(0) {}

    static BoundValue exact(mpz_class z) {
        BoundValue b;
        b.kind_ = Kind::exact;
        b.exact_ = std::move(z);
        return b;
    }
    static BoundValue exact(uint64_t z) { return exact(mpz_class(static_cast<unsigned long>(z))); }
    static BoundValue tower(BoundValue depth, double top) {
        BoundValue b;
        b.kind_ = Kind::magnitude;
        b.depth_ = std::make_shared<BoundValue>(std::move(depth));
        b.top_ = top;
        return b;
    }
    static BoundValue beyond() {
        BoundValue b;
        b.kind_ = Kind::beyond;
        return b;
    }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::exact; }
    bool is_magnitude() const { return kind_ == Kind::magnitude; }
    bool is_beyond() const { return kind_ == Kind::beyond; }

    const mpz_class& exact_value() const { return exact_; }
    const BoundValue& depth() const { return *depth_; }
    double top() const { return top_; }

    bool exact_equals(uint64_t v) const {
        return is_exact() && exact_ == static_cast<unsigned long>(v);
    }
    std::optional<uint64_t> as_u64() const {
        if (!is_exact() || !exact_.fits_ulong_p()) return std::nullopt;
        return static_cast<uint64_t>(exact_.get_ui());
    }

    // Nesting level of tower-heights: exact values are 0, a magnitude is one
    // more than its depth's nesting.
    int nesting() const {
        int n = 0;
        const BoundValue* cur = this;
        while (cur->is_magnitude()) {
            ++n;
            cur = cur->depth_.get();
        }
        return n;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::exact:
                return exact_.get_str();
            case Kind::magnitude: {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6g", top_);
                return "tower(" + depth_->str() + ", " + buf + ")";
            }
            default:
                return "beyond-tower";
        }
    }

private:
    Kind kind_;
    mpz_class exact_;
    std::shared_ptr<BoundValue> depth_;  // magnitude only
    double top_ = 0.0;                   // magnitude only; >= 1
};

// Shared evaluation settings plus the memo table of the C recursion.
struct BoundContext {
    unsigned digit_budget = 4096;   // exact values up to ~budget decimal digits
    bool force_magnitude = false;   // route everything through magnitude mode
    uint64_t split_cap = 4096;      // exact C split DP only up to this degree
    uint64_t loop_cap = 100000;     // iterable recursion depth (C in m, A in i)
    int nesting_cap = 12;           // tower-height nesting before `beyond`

    // Instrumentation: (m, D) -> (m', D') recursion events of exact-mode C,
    // recorded when non-null; the well-foundedness test asserts lex descent.
    std::vector<std::pair<std::pair<uint64_t, mpz_class>, std::pair<uint64_t, mpz_class>>>*
        recursion_log = nullptr;

    double bits_budget() const { return digit_budget * 3.3219280948873623 + 8; }
};

namespace bvops {

constexpr double kTopLimit = 1e15;

inline double log2_up(double x) { return x <= 1.0 ? 1.0 : std::log2(x) * (1 + 1e-12) + 1e-12; }

inline double log2_up(const mpz_class& z) {
    if (z <= 1) return 1.0;
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    (void)mant;  // mant in [0.5, 1): log2(z) <= exp2
    return static_cast<double>(exp2);
}

inline double log2_down(const mpz_class& z) {
    if (z <= 1) return 0.0;
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return (static_cast<double>(exp2) + std::log2(mant)) * (1 - 1e-12) - 1e-12;
}

// Raise the depth until the top is in range; degrade to `beyond` when the
// nesting of depths exceeds the cap.
inline BoundValue normalize_tower(BoundContext& ctx, BoundValue depth, double top);

// depth + 1 for the structural tower-height slot. Depths are bookkeeping
// integers: never force-magnitude them and never budget-check them.
inline BoundValue depth_succ(BoundContext& ctx, const BoundValue& d) {
    if (d.is_beyond()) return BoundValue::beyond();
    if (d.is_exact()) return BoundValue::exact(mpz_class(d.exact_value() + 1));
    return normalize_tower(ctx, d.depth(), d.top() + 1);
}

inline BoundValue bv_add(BoundContext& ctx, const BoundValue& a, const BoundValue& b);

// Upper-bound view of any value as a tower. Exact z becomes (0, z) when z is
// small, else (1, log2 z); depth 0 means "value <= top" literally.
inline std::pair<BoundValue, double> as_tower(const BoundValue& v) {
    if (v.is_magnitude()) return {v.depth(), v.top()};
    const mpz_class& z = v.exact_value();
    if (z <= 1) return {BoundValue::exact(uint64_t{0}), 1.0};
    if (mpz_sizeinbase(z.get_mpz_t(), 2) <= 40)
        return {BoundValue::exact(uint64_t{0}), z.get_d() * (1 + 1e-12)};
    return {BoundValue::exact(uint64_t{1}), log2_up(z)};
}

// max of two depths, rounding up when they are incomparable.
inline BoundValue depth_max(BoundContext& ctx, const BoundValue& a, const BoundValue& b) {
    if (a.is_beyond() || b.is_beyond()) return BoundValue::beyond();
    if (a.is_exact() && b.is_exact())
        return BoundValue::exact(mpz_class(a.exact_value() >= b.exact_value() ? a.exact_value()
                                                                              : b.exact_value()));
    // At least one is a tower: a tower depth with top >= 1 dominates any
    // exact depth we ever lift from, and two towers combine by the +1 rule.
    const BoundValue& ta = a.is_magnitude() ? a : b;
    if (a.is_magnitude() && b.is_magnitude())
        return BoundValue::tower(depth_max(ctx, a.depth(), b.depth()),
                                 std::max(a.top(), b.top()) + 1);
    return ta;
}

// Gap between exact depths when small enough to lift across.
inline std::optional<int> depth_gap(const BoundValue& lo, const BoundValue& hi) {
    if (!lo.is_exact() || !hi.is_exact()) return std::nullopt;
    mpz_class g = hi.exact_value() - lo.exact_value();
    if (g < 0 || g > 64) return std::nullopt;
    return static_cast<int>(g.get_ui());
}

inline double lift_top(double top, int levels) {
    for (int i = 0; i < levels && top > 1.0; ++i) top = log2_up(top);
    return std::max(top, 1.0);
}

enum class Combine { add, mul, max };

// Combine two tower views at a common depth with upward rounding.
inline BoundValue combine_towers(BoundContext& ctx, std::pair<BoundValue, double> a,
                                 std::pair<BoundValue, double> b, Combine mode) {
    if (a.first.is_beyond() || b.first.is_beyond()) return BoundValue::beyond();
    // Align the shallower side up to the deeper one (never downward: moving
    // a value to a shallower depth would understate it).
    auto align = [&](std::pair<BoundValue, double>& lo, const std::pair<BoundValue, double>& hi) {
        auto gap = depth_gap(lo.first, hi.first);
        lo.second = gap ? lift_top(lo.second, *gap) : std::max(lo.second, 1.0);
        lo.first = hi.first;
    };
    bool a_deeper;
    if (auto g = depth_gap(a.first, b.first); g)
        a_deeper = false;  // b at least as deep
    else if (auto g2 = depth_gap(b.first, a.first); g2)
        a_deeper = true;
    else
        a_deeper = !a.first.is_exact();  // a tower-valued depth dominates any exact one
    if (a_deeper)
        align(b, a);
    else
        align(a, b);
    BoundValue depth = depth_max(ctx, a.first, b.first);

    bool depth_zero = depth.exact_equals(0);
    bool depth_one = depth.exact_equals(1);
    double top;
    switch (mode) {
        case Combine::add:
            top = depth_zero ? a.second + b.second : std::max(a.second, b.second) + 1;
            break;
        case Combine::mul:
            top = depth_zero ? a.second * b.second
                             : (depth_one ? a.second + b.second
                                          : std::max(a.second, b.second) + 1);
            break;
        default:
            top = std::max(a.second, b.second);
    }
    return normalize_tower(ctx, std::move(depth), top);
}

inline BoundValue normalize_tower(BoundContext& ctx, BoundValue depth, double top) {
    if (depth.is_beyond() || !std::isfinite(top)) return BoundValue::beyond();
    top = std::max(top, 1.0);
    while (top >= kTopLimit) {
        top = log2_up(top);
        depth = bv_add(ctx, depth, BoundValue::exact(uint64_t{1}));
        if (depth.is_beyond()) return BoundValue::beyond();
    }
    BoundValue out = BoundValue::tower(std::move(depth), top);
    if (out.nesting() > ctx.nesting_cap) return BoundValue::beyond();
    return out;
}

inline BoundValue bv_add(BoundContext& ctx, const BoundValue& a, const BoundValue& b) {
    if (a.is_beyond() || b.is_beyond()) return BoundValue::beyond();
    if (a.is_exact() && b.is_exact() && !ctx.force_magnitude) {
        mpz_class s = a.exact_value() + b.exact_value();
        if (log2_up(s) <= ctx.bits_budget()) return BoundValue::exact(std::move(s));
    }
    return combine_towers(ctx, as_tower(a), as_tower(b), Combine::add);
}

inline BoundValue bv_mul(BoundContext& ctx, const BoundValue& a, const BoundValue& b) {
    if (a.is_exact() && a.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (b.is_exact() && b.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (a.is_beyond() || b.is_beyond()) return BoundValue::beyond();
    if (a.is_exact() && a.exact_value() == 1) return b;
    if (b.is_exact() && b.exact_value() == 1) return a;
    if (a.is_exact() && b.is_exact() && !ctx.force_magnitude) {
        if (log2_up(a.exact_value()) + log2_up(b.exact_value()) <= ctx.bits_budget())
            return BoundValue::exact(mpz_class(a.exact_value() * b.exact_value()));
    }
    return combine_towers(ctx, as_tower(a), as_tower(b), Combine::mul);
}

inline BoundValue bv_max(BoundContext& ctx, const BoundValue& a, const BoundValue& b) {
    if (a.is_beyond() || b.is_beyond()) return BoundValue::beyond();
    if (a.is_exact() && b.is_exact())
        return a.exact_value() >= b.exact_value() ? a : b;
    return combine_towers(ctx, as_tower(a), as_tower(b), Combine::max);
}

// Upper bound of log2(a); the inverse of exp2 up to rounding.
inline BoundValue bv_log2(BoundContext& ctx, const BoundValue& a) {
    if (a.is_beyond()) return BoundValue::beyond();
    if (a.is_exact()) {
        auto [d, t] = as_tower(a);
        if (d.exact_equals(0)) return normalize_tower(ctx, d, log2_up(t));
        return normalize_tower(ctx, BoundValue::exact(uint64_t{0}), a.is_exact() ? log2_up(a.exact_value()) : t);
    }
    const BoundValue& d = a.depth();
    if (d.is_exact() && d.exact_value() >= 1)
        return normalize_tower(ctx, BoundValue::exact(mpz_class(d.exact_value() - 1)), a.top());
    if (d.exact_equals(0)) return normalize_tower(ctx, d, log2_up(a.top()));
    return a;  // depth is itself a tower: dropping one level is absorbed by rounding
}

inline BoundValue bv_exp2(BoundContext& ctx, const BoundValue& e) {
    if (e.is_beyond()) return BoundValue::beyond();
    if (e.is_exact() && !ctx.force_magnitude) {
        if (e.exact_value().fits_ulong_p() && e.exact_value().get_d() <= ctx.bits_budget()) {
            mpz_class r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, e.exact_value().get_ui());
            return BoundValue::exact(std::move(r));
        }
    }
    auto [d, t] = as_tower(e);
    return normalize_tower(ctx, bv_add(ctx, d, BoundValue::exact(uint64_t{1})), t);
}

// a^b with the conventions 0^0 = 1, 0^b = 0 (b > 0), 1^b = 1.
inline BoundValue bv_pow(BoundContext& ctx, const BoundValue& a, const BoundValue& b) {
    if (b.is_exact() && b.exact_value() == 0) return BoundValue::exact(uint64_t{1});
    if (a.is_exact() && a.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (a.is_exact() && a.exact_value() == 1) return BoundValue::exact(uint64_t{1});
    if (a.is_beyond() || b.is_beyond()) return BoundValue::beyond();
    if (b.is_exact() && b.exact_value() == 1) return a;
    if (a.is_exact() && b.is_exact() && !ctx.force_magnitude && b.exact_value().fits_ulong_p()) {
        double est_bits = static_cast<double>(b.exact_value().get_ui()) *
                          log2_up(a.exact_value());
        if (est_bits <= ctx.bits_budget()) {
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), a.exact_value().get_mpz_t(), b.exact_value().get_ui());
            return BoundValue::exact(std::move(r));
        }
    }
    return bv_exp2(ctx, bv_mul(ctx, b, bv_log2(ctx, a)));
}

// Magnitude-or-exact result wrapper for public operations.
inline BoundValue finish(BoundContext& ctx, BoundValue v) {
    if (!ctx.force_magnitude || !v.is_exact()) return v;
    auto [d, t] = as_tower(v);
    if (d.exact_equals(0)) return normalize_tower(ctx, BoundValue::exact(uint64_t{1}), log2_up(t));
    return normalize_tower(ctx, std::move(d), t);
}

// True when the magnitude (or exact) upper bound dominates the exact value.
inline bool dominates(const BoundValue& bound, const mpz_class& value) {
    if (bound.is_beyond()) return false;  // no numeric claim
    if (bound.is_exact()) return bound.exact_value() >= value;
    // Walk the exact part of the depth; a nested-tower depth dominates any
    // value whose log-chain we can follow.
    double chain = log2_down(value);
    if (!bound.depth().is_exact()) return true;
    mpz_class d = bound.depth().exact_value();
    mpz_class steps = d - 1;
    for (mpz_class i = 0; i < steps && chain > 1.0; ++i)
        chain = std::log2(std::max(chain, 1.0)) * (1 - 1e-12);
    if (steps < 0) return bound.top() >= value.get_d() - 1e-6;
    return bound.top() + 1e-6 >= chain;
}

}  // namespace bvops

// ---------------------------------------------------------------------------
// The tower formulas.
// ---------------------------------------------------------------------------

namespace detail_bounds {
using bvops::bv_add;
using bvops::bv_max;
using bvops::bv_mul;
using bvops::bv_pow;

inline BoundValue KK(BoundContext& ctx, const BoundValue& n, const BoundValue& r) {
    return bv_mul(ctx, n, bv_add(ctx, r, BoundValue::exact(uint64_t{1})));
}
}  // namespace detail_bounds

// G(n, r, D) = 2K(2K^2 + 2)^K D^(2K+1) + 2K D, K = n(r+1).
inline BoundValue G_bound(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                          const BoundValue& D) {
    using namespace detail_bounds;
    const BoundValue one = BoundValue::exact(uint64_t{1});
    const BoundValue two = BoundValue::exact(uint64_t{2});
    BoundValue K = KK(ctx, n, r);
    BoundValue twoK = bv_mul(ctx, two, K);
    BoundValue base = bv_add(ctx, bv_mul(ctx, two, bv_mul(ctx, K, K)), two);
    BoundValue t1 = bv_mul(ctx, twoK,
                           bv_mul(ctx, bv_pow(ctx, base, K),
                                  bv_pow(ctx, D, bv_add(ctx, twoK, one))));
    BoundValue t2 = bv_mul(ctx, twoK, D);
    return bvops::finish(ctx, bv_add(ctx, t1, t2));
}

// F(n, r, m, D) = D^(K*B) with B = D^(K*2^(m+1)); F(n,r,m,0) = 0 by the
// degree-0 convention.
inline BoundValue F_bound(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                          const BoundValue& m, const BoundValue& D) {
    using namespace detail_bounds;
    if (D.is_exact() && D.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (D.is_exact() && D.exact_value() == 1) return bvops::finish(ctx, BoundValue::exact(uint64_t{1}));
    BoundValue K = KK(ctx, n, r);
    BoundValue exp_inner =
        bv_mul(ctx, K,
               bv_pow(ctx, BoundValue::exact(uint64_t{2}),
                      bv_add(ctx, m, BoundValue::exact(uint64_t{1}))));
    BoundValue B = bv_pow(ctx, D, exp_inner);
    return bvops::finish(ctx, bv_pow(ctx, D, bv_mul(ctx, K, B)));
}

namespace detail_bounds {

// Magnitude-mode upper bound of the C recursion:
//   C(m, D) <= D * (1 + C(m-1, F(m-1, G(D)))),
// valid because any partition sum of D parts is at most D*g(D).
inline BoundValue C_mag(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                        const BoundValue& m, const BoundValue& D);

// One prime-branch step in magnitude mode.
inline BoundValue C_mag_step(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                             const BoundValue& mk, const BoundValue& Dk) {
    return F_bound(ctx, n, r, mk, G_bound(ctx, n, r, Dk));
}

inline BoundValue C_mag(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                        const BoundValue& m, const BoundValue& D) {
    if (D.is_exact() && D.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (m.is_exact() && m.exact_value() == 0) return bvops::finish(ctx, D);
    const BoundValue one = BoundValue::exact(uint64_t{1});
    auto mu = m.as_u64();
    if (mu && *mu <= ctx.loop_cap) {
        // Chain D_m = D, D_{k-1} = F(k-1, G(D_k)); fold C_k = D_k*(1 + C_{k-1}).
        std::vector<BoundValue> chain;
        chain.reserve(*mu + 1);
        chain.push_back(D);
        for (uint64_t k = *mu; k >= 1; --k) {
            const BoundValue& Dk = chain.back();
            if (Dk.is_beyond()) break;
            chain.push_back(C_mag_step(ctx, n, r, BoundValue::exact(k - 1), Dk));
        }
        if (chain.size() == *mu + 1) {
            BoundValue C = bvops::finish(ctx, chain.back());  // C_0 = D_0
            for (uint64_t k = 1; k <= *mu; ++k) {
                const BoundValue& Dk = chain[*mu - k];
                C = bv_mul(ctx, Dk, bv_add(ctx, one, C));
            }
            return C;
        }
        // fell through: a chain element degraded to beyond
    }
    // m is astronomically large. Each prime-branch step raises the tower
    // depth by at most 3 (G is polynomial; F adds two exponentials on top of
    // a product carrying m in a low tower level), so
    //   C(m, D) <= tower(3m + depth(D) + depth(K) + 10, max(tops, 64) + 1)
    // with all the per-step additive slop absorbed by the generous margins.
    BoundValue K = KK(ctx, n, r);
    auto [dD, tD] = bvops::as_tower(D);
    auto [dK, tK] = bvops::as_tower(K);
    auto [dm, tm] = bvops::as_tower(m);
    BoundValue depth = bv_add(ctx, bv_mul(ctx, BoundValue::exact(uint64_t{3}), m),
                              bv_add(ctx, bv_add(ctx, dD, dK),
                                     bv_add(ctx, dm, BoundValue::exact(uint64_t{10}))));
    double top = std::max({64.0, tD, tK, tm}) + 1;
    return bvops::normalize_tower(ctx, std::move(depth), top);
}

}  // namespace detail_bounds

// C(n, r, m, D): number-of-prime-components recursion, memoized over (m, D)
// lexicographically. Exact for small m and D within the split cap; otherwise
// an upper-bound magnitude.
inline BoundValue C_bound(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                          const BoundValue& m, const BoundValue& D) {
    using namespace detail_bounds;
    if (D.is_beyond() || m.is_beyond()) return BoundValue::beyond();
    if (D.is_exact() && D.exact_value() == 0) return BoundValue::exact(uint64_t{0});
    if (m.is_exact() && m.exact_value() == 0) return bvops::finish(ctx, D);

    auto mu = m.as_u64();
    auto Du = D.as_u64();
    if (ctx.force_magnitude || !mu || !Du || *mu > 64 || *Du > ctx.split_cap)
        return C_mag(ctx, n, r, m, D);

    // Exact split DP at each level m' <= m, degrees up to the level's D.
    // memo[(m', d)] holds C(n, r, m', d).
    std::map<std::pair<uint64_t, uint64_t>, BoundValue> memo;
    std::function<BoundValue(uint64_t, uint64_t)> rec = [&](uint64_t mm,
                                                            uint64_t DD) -> BoundValue {
        if (DD == 0) return BoundValue::exact(uint64_t{0});
        if (mm == 0) return BoundValue::exact(DD);
        auto it = memo.find({mm, DD});
        if (it != memo.end()) return it->second;
        const BoundValue one = BoundValue::exact(uint64_t{1});
        // prime branch: 1 + C(m-1, F(m-1, G(d)))
        auto prime_of = [&](uint64_t d) -> BoundValue {
            BoundValue g = G_bound(ctx, n, r, BoundValue::exact(d));
            BoundValue f = F_bound(ctx, n, r, BoundValue::exact(mm - 1), g);
            BoundValue sub;
            if (auto fu = f.as_u64(); fu && *fu <= ctx.split_cap) {
                if (ctx.recursion_log)
                    ctx.recursion_log->push_back(
                        {{mm, mpz_class(static_cast<unsigned long>(DD))},
                         {mm - 1, mpz_class(static_cast<unsigned long>(*fu))}});
                sub = rec(mm - 1, *fu);
            } else {
                if (ctx.recursion_log && f.is_exact())
                    ctx.recursion_log->push_back(
                        {{mm, mpz_class(static_cast<unsigned long>(DD))},
                         {mm - 1, f.exact_value()}});
                sub = C_mag(ctx, n, r, BoundValue::exact(mm - 1), f);
            }
            return bv_add(ctx, one, sub);
        };
        // split DP over degrees 1..DD at level mm
        std::vector<BoundValue> best(DD + 1);
        for (uint64_t d = 1; d <= DD; ++d) {
            if (ctx.recursion_log && d < DD)
                ctx.recursion_log->push_back({{mm, mpz_class(static_cast<unsigned long>(DD))},
                                              {mm, mpz_class(static_cast<unsigned long>(d))}});
            BoundValue cur = prime_of(d);
            for (uint64_t j = 1; 2 * j <= d; ++j)
                cur = bv_max(ctx, cur, bv_add(ctx, best[j], best[d - j]));
            best[d] = cur;
        }
        memo[{mm, DD}] = best[DD];
        return best[DD];
    };
    return bvops::finish(ctx, rec(*mu, *Du));
}

// L(n, r, d) = C(n, r, n(r+1), F(n, r, n(r+1), d)).
inline BoundValue L_bound(BoundContext& ctx, const BoundValue& n, const BoundValue& r,
                          const BoundValue& d) {
    BoundValue m = detail_bounds::KK(ctx, n, r);
    return C_bound(ctx, n, r, m, F_bound(ctx, n, r, m, d));
}

// ord bound for components cut out in order <= s: n*s.
inline BoundValue ritt_order_bound(BoundContext& ctx, const BoundValue& n, const BoundValue& s) {
    return bvops::finish(ctx, bvops::bv_mul(ctx, n, s));
}

// The train recursions A_i, tau_i and the train-length bound A_{tau_{n(h+1)}}.
struct TrainResult {
    BoundValue value;
    std::vector<BoundValue> A;    // computed prefix A_0, A_1, ...
    std::vector<BoundValue> tau;  // tau_0 .. tau_{n(h+1)}
};

inline TrainResult train_bound(BoundContext& ctx, uint64_t n, uint64_t s, uint64_t h,
                               uint64_t d) {
    using namespace detail_bounds;
    using bvops::bv_add;
    using bvops::bv_mul;
    TrainResult out;
    const BoundValue one = BoundValue::exact(uint64_t{1});
    BoundValue H = BoundValue::exact(mpz_class(static_cast<unsigned long>(n)) *
                                     static_cast<unsigned long>(h + 1));
    BoundValue sB = BoundValue::exact(s);
    BoundValue dB = BoundValue::exact(d);

    // A_0 = L(n(h+1), s, d) + 1; A_{i+1} = A_i + L(n(h+1)*A_i, s, d).
    out.A.push_back(bv_add(ctx, L_bound(ctx, H, sB, dB), one));
    bool a_fixed = false;  // increment hit zero: constant from here on
    auto extend_A = [&]() -> bool {
        if (a_fixed) {
            out.A.push_back(out.A.back());
            return true;
        }
        const BoundValue& prev = out.A.back();
        if (prev.is_beyond()) return false;
        BoundValue inc = L_bound(ctx, bv_mul(ctx, H, prev), sB, dB);
        if (inc.is_exact() && inc.exact_value() == 0) {
            a_fixed = true;
            out.A.push_back(prev);
            return true;
        }
        BoundValue next = bv_add(ctx, prev, inc);
        if (next.is_beyond()) return false;
        out.A.push_back(std::move(next));
        return true;
    };
    auto A_at = [&](const BoundValue& idx) -> BoundValue {
        auto iu = idx.as_u64();
        if (iu && *iu <= ctx.loop_cap) {
            while (out.A.size() <= *iu)
                if (!extend_A()) return BoundValue::beyond();
            return out.A[*iu];
        }
        // Astronomically large index: constant tails are still exact.
        for (uint64_t i = 0; i < 4 && !a_fixed; ++i)
            if (!extend_A()) return BoundValue::beyond();
        if (a_fixed) return out.A.back();
        return BoundValue::beyond();
    };

    // tau_0 = n*s*(h+1); tau_{i+1} = tau_i + n*s*(h+1)*A_{tau_i} + 1.
    BoundValue nsh = BoundValue::exact(mpz_class(static_cast<unsigned long>(n)) *
                                       static_cast<unsigned long>(s) *
                                       static_cast<unsigned long>(h + 1));
    out.tau.push_back(bvops::finish(ctx, nsh));
    uint64_t steps = n * (h + 1);
    for (uint64_t i = 0; i < steps; ++i) {
        const BoundValue& t = out.tau.back();
        if (t.is_beyond()) {
            out.tau.push_back(t);
            continue;
        }
        BoundValue a = A_at(t);
        out.tau.push_back(bv_add(ctx, bv_add(ctx, t, bv_mul(ctx, nsh, a)), one));
    }
    out.value = A_at(out.tau.back());
    return out;
}

// Pluggable differential-elimination bound: B_delta(alpha, m, d).
using BDeltaFn =
    std::function<BoundValue(BoundContext&, const BoundValue&, const BoundValue&,
                             const BoundValue&)>;

// B = B_delta + s, with |alpha| = m = r(s+1)(A + h + 1) and A the train bound.
inline BoundValue final_B(BoundContext& ctx, uint64_t r, uint64_t s, uint64_t h, uint64_t d,
                          const BDeltaFn& b_delta) {
    using bvops::bv_add;
    using bvops::bv_mul;
    BoundValue A = train_bound(ctx, r, s, h, d).value;
    BoundValue arg = bv_mul(
        ctx,
        BoundValue::exact(mpz_class(static_cast<unsigned long>(r)) *
                          static_cast<unsigned long>(s + 1)),
        bv_add(ctx, A, BoundValue::exact(h + 1)));
    BoundValue bd = b_delta(ctx, arg, arg, BoundValue::exact(d));
    return bv_add(ctx, bd, BoundValue::exact(s));
}

// Synthetic plugs for testing and experimentation; the production formula
// from the external differential-elimination bound can be registered the
// same way.
inline BDeltaFn bdelta_zero() {
    return [](BoundContext&, const BoundValue&, const BoundValue&, const BoundValue&) {
        return BoundValue::exact(uint64_t{0});
    };
}
inline BDeltaFn bdelta_sum() {
    return [](BoundContext& ctx, const BoundValue& a, const BoundValue& m, const BoundValue& d) {
        return bvops::bv_add(ctx, bvops::bv_add(ctx, a, m), d);
    };
}
inline BDeltaFn bdelta_product() {
    return [](BoundContext& ctx, const BoundValue& a, const BoundValue& m, const BoundValue& d) {
        const BoundValue one = BoundValue::exact(uint64_t{1});
        return bvops::bv_mul(ctx, bvops::bv_add(ctx, a, one),
                             bvops::bv_mul(ctx, bvops::bv_add(ctx, m, one),
                                           bvops::bv_add(ctx, d, one)));
    };
}

}  // namespace dselim
