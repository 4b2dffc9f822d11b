#include "cw/chambers.hpp"

#include <sstream>

namespace cw {

namespace {

// Pixel map: x = 50 + 720 (b - 1/9), y = 50 + 720 (1 - c). Exact for denominators dividing 720.
const Rational kScale = 720;
const Rational kMargin = 50;

std::string px(const Rational& q) {
    // Rounded to three decimals; exact whenever the denominator divides 1000.
    Rational r = q * 1000;
    BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    BigInt t = (2 * n + d) / (2 * d);
    std::string s = t.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    while (s.size() < 4) s = "0" + s;
    std::string out = s.substr(0, s.size() - 3) + "." + s.substr(s.size() - 3);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return (neg ? "-" : "") + out;
}

std::string X(const Point& p) { return px(kMargin + kScale * (p.b - Rational(1, 9))); }
std::string Y(const Point& p) { return px(kMargin + kScale * (1 - p.c)); }

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else if (ch == '&') out += "&amp;";
        else out += ch;
    }
    return out;
}

}  // namespace

std::string render_svg(const Decomposition& d) {
    if (d.chambers.empty()) throw std::invalid_argument("cannot render an empty decomposition");
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"840\" height=\"780\" viewBox=\"0 0 840 780\">\n"
      << "<!-- x = 50 + 720(b - 1/9), y = 50 + 720(1 - c) -->\n"
      << "<title>" << escape(d.name) << "</title>\n";

    Region dom = Region::full(d.ambient);
    auto v = dom.vertices();
    o << "<polygon fill=\"#f8f8f8\" stroke=\"none\" points=\"";
    for (const auto& p : v) o << X(p) << "," << Y(p) << " ";
    o << "\"/>\n";
    for (const auto& f : dom.facets()) {
        bool amp = f.constraint.poly.qc != 0 && f.constraint.rel == Rel::GT;
        o << "<line class=\"" << (amp ? "amp" : "domain") << "\" x1=\"" << X(f.p) << "\" y1=\"" << Y(f.p) << "\" x2=\"" << X(f.q)
          << "\" y2=\"" << Y(f.q) << "\" stroke=\"black\" stroke-width=\"1.5\"" << (amp ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
        if (amp) o << "<text x=\"" << X(f.q) << "\" y=\"" << Y(f.q) << "\" font-size=\"11\" dx=\"4\">" << escape(f.constraint.str()) << "</text>\n";
    }

    for (size_t i = 0; i < d.walls.size(); ++i) {
        const auto& w = d.walls[i];
        bool bold = false;
        for (const auto& ch : d.chambers)
            if (ch.region.dimension() == 1 && ch.region.implies(eq(w.constraint.poly))) bold = true;
        o << "<line class=\"wall\" data-wall=\"" << escape(w.constraint.str()) << "\" x1=\"" << X(w.p) << "\" y1=\"" << Y(w.p) << "\" x2=\""
          << X(w.q) << "\" y2=\"" << Y(w.q) << "\" stroke=\"" << (w.moduliChange ? "#b00000" : "#202060") << "\" stroke-width=\""
          << (bold ? 3.5 : 1.2) << "\"/>\n";
    }

    for (const auto& ch : d.chambers) {
        auto w = ch.region.witness();
        if (!w) continue;
        std::string label = ch.label.empty() ? ch.region.str() : ch.label;
        o << "<text class=\"chamber\" x=\"" << X(*w) << "\" y=\"" << Y(*w) << "\" font-size=\"9\" text-anchor=\"middle\">" << escape(label)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace cw
