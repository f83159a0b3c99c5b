#pragma once

// Ground fields for delta-sigma polynomial arithmetic.
//
// Two concrete fields are provided:
//   Rational          -- QQ, where sigma = id and delta = 0;
//   RationalFunction  -- QQ(t), where sigma substitutes t -> t+1 and
//                        delta is d/dt.
//
// Both keep unique canonical forms (fractions in lowest terms, fixed sign
// normalization), so equality is plain structural comparison and all
// arithmetic is exact.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "dselim/errors.hpp"

namespace dselim {

enum class GroundField { Q, Qt };

inline std::string to_string(GroundField f) { return f == GroundField::Q ? "QQ" : "QQ_t"; }

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision rational numbers in lowest terms.
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors mpq_class
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static constexpr GroundField field_kind() { return GroundField::Q; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const { return Rational(1) / *this; }

    // Ground-field action of the difference and derivation operators.
    Rational sigma() const { return *this; }
    Rational sigma_inv() const { return *this; }
    Rational delta() const { return Rational(); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    // Canonical total order (used for deterministic sorting, not semantics).
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    const mpq_class& value() const { return v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// ZPoly: univariate integer-coefficient polynomials in t.
// ---------------------------------------------------------------------------

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c) { if (c != 0) c_.push_back(mpz_class(c)); }  // NOLINT
    explicit ZPoly(const mpz_class& c) { if (c != 0) c_.push_back(c); }
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly t() {
        ZPoly p;
        p.c_ = {mpz_class(0), mpz_class(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const mpz_class& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    ZPoly operator+(const ZPoly& o) const {
        ZPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }
    ZPoly operator-(const ZPoly& o) const { return *this + (-o); }
    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return ZPoly();
        ZPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }

    ZPoly derivative() const {
        ZPoly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
        r.trim();
        return r;
    }

    // Substitution t -> t + s, exact via binomial expansion.
    ZPoly shifted(long s) const {
        ZPoly r;
        if (is_zero()) return r;
        r.c_.assign(c_.size(), mpz_class(0));
        mpz_class sh(s);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            // c_[i] * (t + s)^i
            mpz_class binom(1);  // C(i, j) built incrementally
            mpz_class spow(1);
            for (std::size_t j = 0; j <= i; ++j) {
                // coefficient of t^(i-j): C(i,j) * s^j
                r.c_[i - j] += c_[i] * binom * spow;
                binom = binom * static_cast<long>(i - j) / static_cast<long>(j + 1);
                spow *= sh;
            }
        }
        r.trim();
        return r;
    }

    mpz_class content() const {
        mpz_class g(0);
        for (const auto& c : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    static ZPoly divexact(const ZPoly& a, const ZPoly& b) {
        assert(!b.is_zero());
        if (a.is_zero()) return ZPoly();
        assert(a.degree() >= b.degree());
        ZPoly rem = a;
        ZPoly q;
        q.c_.assign(a.degree() - b.degree() + 1, mpz_class(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            mpz_class qc;
            mpz_divexact(qc.get_mpz_t(), rem.leading().get_mpz_t(), b.leading().get_mpz_t());
            int shift = rem.degree() - b.degree();
            q.c_[shift] = qc;
            ZPoly sub;
            sub.c_.assign(shift + b.c_.size(), mpz_class(0));
            for (std::size_t i = 0; i < b.c_.size(); ++i) sub.c_[shift + i] = qc * b.c_[i];
            rem = rem - sub;
        }
        assert(rem.is_zero());
        q.trim();
        return q;
    }

    // gcd over Z[t]: content gcd times primitive-PRS gcd, leading coeff > 0.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return b.normalized_sign();
        if (b.is_zero()) return a.normalized_sign();
        mpz_class cg;
        mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        ZPoly u = a.primitive_part();
        ZPoly v = b.primitive_part();
        if (u.degree() < v.degree()) std::swap(u, v);
        while (!v.is_zero()) {
            ZPoly r = pseudo_rem(u, v);
            u = v;
            v = r.primitive_part();
        }
        return (u.primitive_part() * ZPoly(cg)).normalized_sign();
    }

    int cmp(const ZPoly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
        for (std::size_t i = c_.size(); i-- > 0;) {
            int s = ::cmp(c_[i], o.c_[i]);
            if (s != 0) return s;
        }
        return 0;
    }

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZPoly& o) const { return c_ != o.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            mpz_class a = c_[i];
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            if (i == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<mpz_class> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    ZPoly primitive_part() const {
        if (is_zero()) return ZPoly();
        mpz_class c = content();
        ZPoly r = *this;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return r;
    }

    ZPoly normalized_sign() const {
        if (!is_zero() && leading() < 0) return -*this;
        return *this;
    }

    static ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
        assert(!b.is_zero());
        ZPoly r = a;
        const mpz_class& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            mpz_class lr = r.leading();
            ZPoly scaled;
            scaled.c_.resize(r.c_.size());
            for (std::size_t i = 0; i < r.c_.size(); ++i) scaled.c_[i] = r.c_[i] * lb;
            ZPoly sub;
            sub.c_.assign(shift + b.c_.size(), mpz_class(0));
            for (std::size_t i = 0; i < b.c_.size(); ++i) sub.c_[shift + i] = lr * b.c_[i];
            r = scaled - sub;
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// RationalFunction: QQ(t) as reduced fractions of ZPoly.
// Canonical form: gcd(num, den) = 1 over Z[t], den nonzero with positive
// leading coefficient.
// ---------------------------------------------------------------------------

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long n) : num_(n), den_(1) {}  // NOLINT
    RationalFunction(long n, long d) : num_(n), den_(d) { canonicalize(); }
    explicit RationalFunction(const mpq_class& q)
        : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {}
    explicit RationalFunction(ZPoly p) : num_(std::move(p)), den_(1) {}
    RationalFunction(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
        canonicalize();
    }

    static constexpr GroundField field_kind() { return GroundField::Qt; }

    static RationalFunction t() { return RationalFunction(ZPoly::t()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == ZPoly(1) && den_ == ZPoly(1); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, no_canon{}); }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction inv() const { return RationalFunction(1) / *this; }

    // sigma: t -> t+1 (a field automorphism; shifting preserves canonical form).
    RationalFunction sigma() const {
        return RationalFunction(num_.shifted(1), den_.shifted(1), no_canon{});
    }
    RationalFunction sigma_inv() const {
        return RationalFunction(num_.shifted(-1), den_.shifted(-1), no_canon{});
    }
    // delta: d/dt by the quotient rule.
    RationalFunction delta() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                                den_ * den_);
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    int cmp(const RationalFunction& o) const {
        int s = num_.cmp(o.num_);
        if (s != 0) return s;
        return den_.cmp(o.den_);
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    std::string str() const {
        if (den_ == ZPoly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    ZPoly num_, den_;

    struct no_canon {};
    RationalFunction(ZPoly num, ZPoly den, no_canon) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        ZPoly g = ZPoly::gcd(num_, den_);
        if (g.degree() > 0 || g.coeff(0) != 1) {
            num_ = ZPoly::divexact(num_, g);
            den_ = ZPoly::divexact(den_, g);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

}  // namespace dselim
