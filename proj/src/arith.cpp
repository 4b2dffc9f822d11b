#include "cw/arith.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace cw {

Rational parse_rational(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    auto check = [](const std::string& part) {
        size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) throw std::invalid_argument("bad rational");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw std::invalid_argument("bad rational: " + part);
    };
    auto to_int = [](std::string part) {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        return BigInt(part);
    };
    if (slash == std::string::npos) {
        check(t);
        return Rational(to_int(t));
    }
    std::string p = t.substr(0, slash), q = t.substr(slash + 1);
    check(p);
    check(q);
    BigInt den = to_int(q);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(to_int(p), den);
}

std::string to_string(const Rational& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

AffinePoly& AffinePoly::operator+=(const AffinePoly& o) {
    q0 += o.q0;
    qb += o.qb;
    qc += o.qc;
    return *this;
}

AffinePoly& AffinePoly::operator-=(const AffinePoly& o) {
    q0 -= o.q0;
    qb -= o.qb;
    qc -= o.qc;
    return *this;
}

AffinePoly& AffinePoly::operator*=(const Rational& k) {
    q0 *= k;
    qb *= k;
    qc *= k;
    return *this;
}

namespace {

void append_term(std::string& out, const Rational& k, const std::string& mono) {
    if (k == 0) return;
    Rational a = k < 0 ? Rational(-k) : k;
    if (out.empty()) {
        if (k < 0) out += "-";
    } else {
        out += k < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += to_string(a);
    } else {
        if (a != 1) out += to_string(a);
        out += mono;
    }
}

}  // namespace

std::string AffinePoly::str() const {
    std::string s;
    append_term(s, qb, "b");
    append_term(s, qc, "c");
    append_term(s, q0, "");
    return s.empty() ? "0" : s;
}

Rational QuadPoly::eval(const Rational& b, const Rational& c) const {
    return k1 + kb * b + kc * c + kbb * b * b + kbc * b * c + kcc * c * c;
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
    k1 += o.k1;
    kb += o.kb;
    kc += o.kc;
    kbb += o.kbb;
    kbc += o.kbc;
    kcc += o.kcc;
    return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) { return *this += -o; }

QuadPoly& QuadPoly::operator*=(const Rational& k) {
    k1 *= k;
    kb *= k;
    kc *= k;
    kbb *= k;
    kbc *= k;
    kcc *= k;
    return *this;
}

std::string QuadPoly::str() const {
    std::string s;
    append_term(s, kbb, "b^2");
    append_term(s, kbc, "bc");
    append_term(s, kb, "b");
    append_term(s, kcc, "c^2");
    append_term(s, kc, "c");
    append_term(s, k1, "");
    return s.empty() ? "0" : s;
}

QuadPoly operator*(const AffinePoly& x, const AffinePoly& y) {
    return {x.q0 * y.q0,
            x.q0 * y.qb + x.qb * y.q0,
            x.q0 * y.qc + x.qc * y.q0,
            x.qb * y.qb,
            x.qb * y.qc + x.qc * y.qb,
            x.qc * y.qc};
}

QuadPoly parse_quad(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty polynomial");
    QuadPoly out;
    size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            if (t[i] == '-') sign = -1;
            ++i;
        }
        size_t j = i;
        while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
        Rational k = j > i ? parse_rational(t.substr(i, j - i)) : Rational(1);
        i = j;
        std::string mono;
        while (i < t.size() && t[i] != '+' && t[i] != '-' && t[i] != '/') mono.push_back(t[i++]);
        // trailing divisor, as in "b/3" or "3c/4"
        if (i < t.size() && t[i] == '/') {
            size_t d = ++i;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
            if (d == i || mono.empty()) throw std::invalid_argument("bad term in " + t);
            k /= parse_rational(t.substr(d, i - d));
        }
        k *= sign;
        if (mono.empty()) out.k1 += k;
        else if (mono == "b") out.kb += k;
        else if (mono == "c") out.kc += k;
        else if (mono == "b^2" || mono == "bb") out.kbb += k;
        else if (mono == "c^2" || mono == "cc") out.kcc += k;
        else if (mono == "bc" || mono == "cb") out.kbc += k;
        else throw std::invalid_argument("bad monomial: " + mono);
    }
    return out;
}

AffinePoly parse_affine(std::string_view s) {
    QuadPoly q = parse_quad(s);
    if (!q.is_affine()) throw std::invalid_argument("not affine: " + std::string(s));
    return q.linear_part();
}

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

bool as_scaled_square(const QuadPoly& q, Rational& k, AffinePoly& lin) {
    if (q.is_zero()) return false;
    // Symmetric matrix of the homogenized form in (1, b, c) must have rank 1.
    Rational m[3][3] = {{q.k1, q.kb / 2, q.kc / 2},
                        {q.kb / 2, q.kbb, q.kbc / 2},
                        {q.kc / 2, q.kbc / 2, q.kcc}};
    int piv = -1;
    for (int i = 0; i < 3; ++i)
        if (m[i][i] != 0) {
            piv = i;
            break;
        }
    if (piv < 0) return false;
    Rational v[3] = {m[piv][0], m[piv][1], m[piv][2]};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] * m[piv][piv] != v[i] * v[j]) return false;
    // q = (1/m_pp) (v . x)^2; rescale v to primitive integers.
    BigInt den = 1;
    for (auto& x : v) {
        BigInt d = boost::multiprecision::denominator(x);
        den = den / gcd_big(den, d) * d;
    }
    BigInt g = 0;
    BigInt iv[3];
    for (int i = 0; i < 3; ++i) {
        Rational scaled = v[i] * Rational(den);
        iv[i] = boost::multiprecision::numerator(scaled);
        g = gcd_big(g, iv[i]);
    }
    Rational scale = Rational(g) / Rational(den);
    lin = AffinePoly(Rational(iv[0] / g), Rational(iv[1] / g), Rational(iv[2] / g));
    k = (scale * scale) / m[piv][piv];
    return true;
}

}  // namespace cw
