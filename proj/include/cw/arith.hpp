#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// q0 + qb*b + qc*c
struct AffinePoly {
    Rational q0, qb, qc;

    AffinePoly() = default;
    AffinePoly(Rational k) : q0(std::move(k)) {}
    AffinePoly(Rational k, Rational b, Rational c) : q0(std::move(k)), qb(std::move(b)), qc(std::move(c)) {}

    static AffinePoly B() { return {0, 1, 0}; }
    static AffinePoly C() { return {0, 0, 1}; }

    bool is_zero() const { return q0 == 0 && qb == 0 && qc == 0; }
    bool is_const() const { return qb == 0 && qc == 0; }
    Rational eval(const Rational& b, const Rational& c) const { return q0 + qb * b + qc * c; }

    AffinePoly operator-() const { return {-q0, -qb, -qc}; }
    AffinePoly& operator+=(const AffinePoly& o);
    AffinePoly& operator-=(const AffinePoly& o);
    AffinePoly& operator*=(const Rational& k);
    friend AffinePoly operator+(AffinePoly a, const AffinePoly& o) { return a += o; }
    friend AffinePoly operator-(AffinePoly a, const AffinePoly& o) { return a -= o; }
    friend AffinePoly operator*(AffinePoly a, const Rational& k) { return a *= k; }
    friend AffinePoly operator*(const Rational& k, AffinePoly a) { return a *= k; }
    bool operator==(const AffinePoly&) const = default;

    std::string str() const;
};

AffinePoly parse_affine(std::string_view s);

// k1 + kb b + kc c + kbb b^2 + kbc bc + kcc c^2
struct QuadPoly {
    Rational k1, kb, kc, kbb, kbc, kcc;

    QuadPoly() = default;
    QuadPoly(const AffinePoly& a) : k1(a.q0), kb(a.qb), kc(a.qc) {}
    QuadPoly(Rational k1_, Rational kb_, Rational kc_, Rational kbb_, Rational kbc_, Rational kcc_)
        : k1(std::move(k1_)), kb(std::move(kb_)), kc(std::move(kc_)),
          kbb(std::move(kbb_)), kbc(std::move(kbc_)), kcc(std::move(kcc_)) {}

    bool is_zero() const { return k1 == 0 && kb == 0 && kc == 0 && kbb == 0 && kbc == 0 && kcc == 0; }
    bool is_affine() const { return kbb == 0 && kbc == 0 && kcc == 0; }
    AffinePoly linear_part() const { return {k1, kb, kc}; }
    Rational eval(const Rational& b, const Rational& c) const;

    QuadPoly operator-() const { return {-k1, -kb, -kc, -kbb, -kbc, -kcc}; }
    QuadPoly& operator+=(const QuadPoly& o);
    QuadPoly& operator-=(const QuadPoly& o);
    QuadPoly& operator*=(const Rational& k);
    friend QuadPoly operator+(QuadPoly a, const QuadPoly& o) { return a += o; }
    friend QuadPoly operator-(QuadPoly a, const QuadPoly& o) { return a -= o; }
    friend QuadPoly operator*(QuadPoly a, const Rational& k) { return a *= k; }
    friend QuadPoly operator*(const Rational& k, QuadPoly a) { return a *= k; }
    bool operator==(const QuadPoly&) const = default;

    std::string str() const;
};

QuadPoly operator*(const AffinePoly& x, const AffinePoly& y);
QuadPoly parse_quad(std::string_view s);

// If q == k * lin^2 for a rational k != 0 and an affine lin, return lin normalized
// to primitive integer coefficients. Returns false otherwise (including q == 0).
bool as_scaled_square(const QuadPoly& q, Rational& k, AffinePoly& lin);

}  // namespace cw
