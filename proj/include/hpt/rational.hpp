// Exact rational arithmetic on 128-bit integers.
//
// Large enough for the double-factorial moments ((2k-1)!! up to k = 20 is
// about 3.2e23) and the ring coefficient algebra; multiplication overflow
// throws rather than wrapping.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hpt {

using int128 = __int128;

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    static Rational from_int128(int128 n, int128 d = 1) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return from_int128(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), g = gcd(b, d)
        int128 g = gcd_i128(den_, o.den_);
        int128 db = den_ / g;
        int128 dd = o.den_ / g;
        num_ = checked_add(checked_mul(num_, dd), checked_mul(o.num_, db));
        den_ = checked_mul(den_, dd);
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        int128 g1 = gcd_i128(num_, o.den_);
        int128 g2 = gcd_i128(o.num_, den_);
        num_ = checked_mul(num_ / g1, o.num_ / g2);
        den_ = checked_mul(den_ / g2, o.den_ / g1);
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return *this *= from_int128(o.den_, o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    std::string to_string() const {
        std::string s = i128_to_string(num_);
        if (den_ != 1) s += "/" + i128_to_string(den_);
        return s;
    }

    static std::string i128_to_string(int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                                  : static_cast<unsigned __int128>(v);
        std::string digits;
        while (u > 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        if (neg) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

  private:
    static int128 gcd_i128(int128 a, int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    static int128 checked_mul(int128 a, int128 b) {
        int128 r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("Rational: 128-bit multiply overflow");
        return r;
    }
    static int128 checked_add(int128 a, int128 b) {
        int128 r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Rational: 128-bit add overflow");
        return r;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int128 g = gcd_i128(num_, den_);
        num_ /= g;
        den_ /= g;
        if (num_ == 0) den_ = 1;
    }

    int128 num_;
    int128 den_;
};

}  // namespace hpt
