#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "prym/errors.hpp"

namespace prym {

/// An odd prime below 2^31, so that products of canonical residues fit in
/// 64-bit intermediates.  Construction runs a deterministic primality check.
class Prime {
  public:
    explicit Prime(std::uint32_t p);
    std::uint32_t value() const { return p_; }

  private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

/// Element of F_p, stored as the canonical residue in [0, p).
class Fp {
  public:
    Fp(std::int64_t value, std::uint32_t p);
    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ != 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(s, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    /// Extended Euclid; throws DivisionByZero on zero input.
    Fp inv() const;
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

  private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    Fp() : v_(0), p_(0) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw PrymError("mixed moduli: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Element of F_p[eps]/(eps^2), the coefficient ring for exact first-order
/// deformation.  A value a + b*eps is a unit iff a != 0.
class Dual {
  public:
    Dual(Fp a, Fp b) : a_(a), b_(b) {
        if (a.modulus() != b.modulus()) throw PrymError("dual parts over different moduli");
    }
    explicit Dual(Fp a) : a_(a), b_(Fp::zero(a.modulus())) {}
    static Dual zero(std::uint32_t p) { return Dual(Fp::zero(p), Fp::zero(p)); }
    static Dual one(std::uint32_t p) { return Dual(Fp::one(p), Fp::zero(p)); }

    const Fp& constant_part() const { return a_; }
    const Fp& eps_part() const { return b_; }
    std::uint32_t modulus() const { return a_.modulus(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_unit() const { return a_.is_unit(); }

    Dual operator+(const Dual& o) const { return Dual(a_ + o.a_, b_ + o.b_); }
    Dual operator-(const Dual& o) const { return Dual(a_ - o.a_, b_ - o.b_); }
    Dual operator*(const Dual& o) const { return Dual(a_ * o.a_, a_ * o.b_ + b_ * o.a_); }
    Dual operator-() const { return Dual(-a_, -b_); }

    /// (a + b eps)^{-1} = a^{-1} - a^{-2} b eps; throws NotAUnit when a = 0.
    Dual inv() const {
        if (!a_.is_unit()) throw NotAUnit();
        Fp ia = a_.inv();
        return Dual(ia, -(ia * ia * b_));
    }
    Dual operator/(const Dual& o) const { return *this * o.inv(); }

    bool operator==(const Dual& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Dual& o) const { return !(*this == o); }

  private:
    Fp a_, b_;
};

std::ostream& operator<<(std::ostream& os, const Dual& x);

// Exemplar-based constructors so generic code can make constants in the
// right coefficient domain without carrying a context object around.
inline Fp zero_like(const Fp& x) { return Fp::zero(x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp::one(x.modulus()); }
inline Fp from_int_like(std::int64_t v, const Fp& x) { return Fp(v, x.modulus()); }
inline Dual zero_like(const Dual& x) { return Dual::zero(x.modulus()); }
inline Dual one_like(const Dual& x) { return Dual::one(x.modulus()); }
inline Dual from_int_like(std::int64_t v, const Dual& x) { return Dual(Fp(v, x.modulus())); }

}  // namespace prym
