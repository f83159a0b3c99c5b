#include <catch2/catch_amalgamated.hpp>

#include "dselim/seq.hpp"
#include "helpers.hpp"

using namespace dselim;

namespace {
using PQ = DSPolynomial<Rational>;
using PT = DSPolynomial<RationalFunction>;
template <class K>
DSPolynomial<K> V(const VarRef& v) {
    return DSPolynomial<K>::variable(v);
}
const VarRef y = yvar(1);
const VarRef sy = yvar(1, 0, 1);
const VarRef s2y = yvar(1, 0, 2);
const VarRef dy = yvar(1, 1, 0);

RationalFunction t() { return RationalFunction::t(); }

SequencePoint<Rational> qwin(std::vector<long> vals) {
    std::vector<Rational> e;
    for (long v : vals) e.push_back(Rational(v));
    return SequencePoint<Rational>::single(VarFamily::y, 1, e);
}
}  // namespace

TEST_CASE("evaluate at the 5.1 witness") {
    auto w = qwin({-1, 1, 1});
    PQ p = V<Rational>(y) * V<Rational>(y) - V<Rational>(sy);
    CHECK(evaluate(p, w).is_zero());
    PQ f = V<Rational>(y) * V<Rational>(y) - V<Rational>(y);
    CHECK(evaluate(f, w) == Rational(2));
}

TEST_CASE("evaluate over Qt with exact derivatives") {
    // t*D(y) + S(y) at (t^2, -2t^2): t*2t + (-2t^2) = 0
    PT p = PT(t()) * V<RationalFunction>(dy) + V<RationalFunction>(sy);
    auto w = SequencePoint<RationalFunction>::single(
        VarFamily::y, 1, {RationalFunction(t() * t()), RationalFunction(-2) * t() * t()});
    CHECK(evaluate(p, w).is_zero());
}

TEST_CASE("evaluate reports window underruns") {
    auto w = qwin({-1});
    PQ p = V<Rational>(y) - V<Rational>(sy);
    CHECK_THROWS_AS(evaluate(p, w), window_error);
}

TEST_CASE("is_partial_solution of the delay equation") {
    PT f = PT(t()) * V<RationalFunction>(dy) + V<RationalFunction>(sy);
    RationalFunction a0 = t() * t();
    RationalFunction a1 = RationalFunction(-2) * t() * t();
    RationalFunction a2 = RationalFunction(4) * t() * (t() + RationalFunction(1));
    auto w = SequencePoint<RationalFunction>::single(VarFamily::y, 1, {a0, a1, a2});
    CHECK(is_partial_solution(std::vector{f}, w, 2));
}

TEST_CASE("is_partial_solution trivial and failing cases") {
    PQ g = V<Rational>(y) * V<Rational>(y) - V<Rational>(sy);
    CHECK(is_partial_solution(std::vector{g}, qwin({}), 0));
    CHECK_FALSE(is_partial_solution(std::vector{g}, qwin({2, 3}), 1));
    CHECK_THROWS_AS(is_partial_solution(std::vector{g}, qwin({2, 3}), 2), window_error);
}

TEST_CASE("unroll_recurrence reproduces the worked delay solution") {
    PT f = PT(t()) * V<RationalFunction>(dy) + V<RationalFunction>(sy);
    auto seed =
        SequencePoint<RationalFunction>::single(VarFamily::y, 1, {RationalFunction(t() * t())});
    auto w = unroll_recurrence(std::vector{f}, seed, 2);
    REQUIRE(w.width() == 3);
    const auto& win = w.windows.at({VarFamily::y, 1});
    CHECK(win[1] == RationalFunction(-2) * t() * t());
    CHECK(win[2] == RationalFunction(4) * t() * (t() + RationalFunction(1)));
    CHECK(is_partial_solution(std::vector{f}, w, 2));
}

TEST_CASE("unroll_recurrence edge cases") {
    PT f = PT(t()) * V<RationalFunction>(dy) + V<RationalFunction>(sy);
    auto seed =
        SequencePoint<RationalFunction>::single(VarFamily::y, 1, {RationalFunction(t() * t())});
    SECTION("zero steps returns the seed") {
        auto w = unroll_recurrence(std::vector{f}, seed, 0);
        CHECK(w.windows == seed.windows);
    }
    SECTION("constant recurrence") {
        PQ g = V<Rational>(sy) - V<Rational>(y);
        auto w = unroll_recurrence(std::vector{g}, qwin({7}), 3);
        REQUIRE(w.width() == 4);
        for (const auto& e : w.windows.at({VarFamily::y, 1})) CHECK(e == Rational(7));
    }
    SECTION("nonlinear highest shift is rejected") {
        PQ bad = V<Rational>(sy) * V<Rational>(sy) - V<Rational>(y);
        CHECK_THROWS_AS(unroll_recurrence(std::vector{bad}, qwin({1}), 1),
                        std::invalid_argument);
    }
    SECTION("vanishing leading coefficient is reported") {
        // y * S(y) + 1, seed 0: coefficient y evaluates to zero
        PQ bad = V<Rational>(y) * V<Rational>(sy) + PQ(Rational(1));
        CHECK_THROWS_AS(unroll_recurrence(std::vector{bad}, qwin({0}), 1),
                        std::invalid_argument);
    }
}

TEST_CASE("reindex to and from overlapping tuples") {
    auto w = qwin({10, 20, 30});
    auto pts = reindex_to_triple(w, 1, 2);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].windows.at({VarFamily::y, 1}) ==
          std::vector<Rational>{Rational(10), Rational(20)});
    CHECK(pts[1].windows.at({VarFamily::y, 1}) ==
          std::vector<Rational>{Rational(20), Rational(30)});
    auto back = reindex_from_triple(pts);
    CHECK(back.windows == w.windows);

    auto bad = std::vector{
        SequencePoint<Rational>::single(VarFamily::y, 1, {Rational(0), Rational(1)}),
        SequencePoint<Rational>::single(VarFamily::y, 1, {Rational(2), Rational(3)})};
    CHECK_THROWS_AS(reindex_from_triple(bad), window_error);
}

TEST_CASE("reindex roundtrip holds for all small shapes") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> val(-9, 9);
    for (uint32_t h = 0; h <= 3; ++h)
        for (uint32_t ell = 1; ell <= 4; ++ell) {
            SequencePoint<Rational> w;
            for (uint32_t k = 1; k <= 2; ++k) {
                std::vector<Rational> entries;
                for (uint32_t o = 0; o < ell + h; ++o) entries.push_back(Rational(val(rng)));
                w.windows[{VarFamily::y, k}] = entries;
            }
            auto pts = reindex_to_triple(w, h, ell);
            REQUIRE(pts.size() == ell);
            auto back = reindex_from_triple(pts);
            CHECK(back.windows == w.windows);
        }
}

TEMPLATE_TEST_CASE("evaluation is a homomorphism commuting with sigma and delta", "", Rational,
                   RationalFunction) {
    using K = TestType;
    std::mt19937_64 rng(77);
    std::vector<VarRef> vars = {yvar(1), yvar(1, 0, 1), yvar(1, 1, 0), yvar(2, 0, 1)};
    for (int iter = 0; iter < 100; ++iter) {
        auto p = testgen::random_poly<K>(rng, vars, 3, 2);
        auto q = testgen::random_poly<K>(rng, vars, 3, 2);
        SequencePoint<K> w;
        for (uint32_t k = 1; k <= 2; ++k) {
            std::vector<K> entries;
            for (int o = 0; o < 3; ++o) entries.push_back(testgen::random_coeff(rng, K{}));
            w.windows[{VarFamily::y, k}] = entries;
        }
        // ring homomorphism
        CHECK(evaluate(p * q + p, w) == evaluate(p, w) * evaluate(q, w) + evaluate(p, w));
        // delta commutes: evaluate(delta p, w) == delta(evaluate(p, w))
        CHECK(evaluate(delta_derive(p), w) == evaluate(p, w).delta());
        // sigma commutes with the window shift:
        // evaluate(sigma p, w) == sigma(evaluate(p, u)), u[o] = sigma^{-1}(w[o+1])
        SequencePoint<K> u;
        for (const auto& [key, win] : w.windows) {
            std::vector<K> entries;
            for (std::size_t o = 1; o < win.size(); ++o) entries.push_back(win[o].sigma_inv());
            u.windows[key] = entries;
        }
        CHECK(evaluate(sigma_shift(p), w) == evaluate(p, u).sigma());
    }
}

TEST_CASE("unrolled windows always verify") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int iter = 0; iter < 50; ++iter) {
        // S(y) = c1*y + c0 with random small coefficients
        PQ f = V<Rational>(sy) - PQ(Rational(val(rng))) * V<Rational>(y) - PQ(Rational(val(rng)));
        auto w = unroll_recurrence(std::vector{f}, qwin({val(rng)}), 4);
        CHECK(is_partial_solution(std::vector{f}, w, 4));
    }
}
