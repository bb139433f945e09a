#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "qlab/errors.hpp"

namespace qlab {

// Arbitrary-precision signed integer. Partition-type coefficients exceed
// 2^64 well before order 500, so machine integers are never used for them.
using BigInt = mpz_class;

inline bool is_zero(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline bool is_unit(const BigInt& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }

inline BigInt unit_inverse(const BigInt& x) {
    if (!is_unit(x)) throw NotInvertibleError("integer coefficient is not a unit: " + x.get_str());
    return x;  // +1 and -1 are self-inverse
}

inline void add_mul(BigInt& acc, const BigInt& x, const BigInt& y) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline void sub_mul(BigInt& acc, const BigInt& x, const BigInt& y) {
    mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

inline BigInt conj(const BigInt& x) { return x; }

inline std::string coeff_to_string(const BigInt& x) { return x.get_str(); }

// Element a + b*w of Z[w], w a primitive third root of unity, w^2 = -1 - w.
// Conjugation is the ring map w -> w^2.
class Eisenstein {
  public:
    Eisenstein() : a_(0), b_(0) {}
    Eisenstein(long v) : a_(v), b_(0) {}  // NOLINT: implicit promotion of small ints
    Eisenstein(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eisenstein omega() { return {BigInt(0), BigInt(1)}; }
    static Eisenstein omega2() { return {BigInt(-1), BigInt(-1)}; }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    Eisenstein operator-() const { return {-a_, -b_}; }

    Eisenstein& operator+=(const Eisenstein& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }

    // (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        BigInt t1 = x.a_ * y.a_;
        BigInt t2 = x.b_ * y.b_;
        BigInt t3 = (x.a_ + x.b_) * (y.a_ + y.b_);
        // real part t1 - t2, omega part t3 - t1 - 2 t2
        t3 -= t1;
        t3 -= t2;
        t3 -= t2;
        t1 -= t2;
        return {std::move(t1), std::move(t3)};
    }

    Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

    friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

  private:
    BigInt a_, b_;
};

inline bool is_zero(const Eisenstein& x) { return is_zero(x.a()) && is_zero(x.b()); }

// N(a+bw) = a^2 - ab + b^2; the units are exactly the norm-one elements.
inline BigInt norm(const Eisenstein& x) { return x.a() * x.a() - x.a() * x.b() + x.b() * x.b(); }

inline Eisenstein conj(const Eisenstein& x) { return {x.a() - x.b(), -x.b()}; }

inline bool is_unit(const Eisenstein& x) { return norm(x) == 1; }

inline Eisenstein unit_inverse(const Eisenstein& x) {
    if (!is_unit(x)) throw NotInvertibleError("Eisenstein coefficient is not a unit");
    return conj(x);  // x * conj(x) = norm(x) = 1
}

inline void add_mul(Eisenstein& acc, const Eisenstein& x, const Eisenstein& y) { acc += x * y; }
inline void sub_mul(Eisenstein& acc, const Eisenstein& x, const Eisenstein& y) { acc -= x * y; }

// "a", "b*w", or "a+b*w" with w the third root of unity.
inline std::string coeff_to_string(const Eisenstein& x) {
    if (is_zero(x.b())) return x.a().get_str();
    std::string om = (x.b() == 1 ? "w" : (x.b() == -1 ? "-w" : x.b().get_str() + "*w"));
    if (is_zero(x.a())) return om;
    return x.a().get_str() + (x.b() > 0 ? "+" : "") + om;
}

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
    return os << coeff_to_string(x);
}

}  // namespace qlab
