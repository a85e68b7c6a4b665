#include "agtrace/divisor.hpp"

#include <sstream>

namespace agtrace {

Place Place::at_point(RationalPoint p) {
    Place pl;
    pl.kind = p.at_infinity ? Kind::Infinity : Kind::Point;
    if (!p.at_infinity) pl.point = p;
    return pl;
}

Place Place::finite_poly(Poly f) {
    Place pl;
    pl.kind = Kind::FinitePoly;
    pl.poly = std::move(f);
    return pl;
}

bool Place::operator<(const Place& o) const {
    auto order = [](Kind k) { return k == Kind::Point ? 0 : k == Kind::FinitePoly ? 1 : 2; };
    if (order(kind) != order(o.kind)) return order(kind) < order(o.kind);
    switch (kind) {
        case Kind::Point:
            return point < o.point;
        case Kind::FinitePoly:
            if (poly.size() != o.poly.size()) return poly.size() < o.poly.size();
            return poly < o.poly;
        case Kind::Infinity:
            return false;
    }
    return false;
}

std::string Place::to_string() const {
    switch (kind) {
        case Kind::Infinity:
            return "inf";
        case Kind::Point: {
            std::ostringstream os;
            os << "x=" << point.x;
            return os.str();
        }
        case Kind::FinitePoly:
            return "poly=" + poly_to_string(poly);
    }
    return "";
}

void Divisor::add_term(const Place& place, int k) {
    if (k == 0) return;
    const auto& t = *curve_.tower();
    Place pl = place;
    if (pl.kind == Place::Kind::FinitePoly) {
        if (curve_.kind() != CurveModel::Kind::ProjectiveLine)
            throw UnsupportedDivisor("polynomial places are only supported on P^1");
        if (!poly_is_monic(pl.poly))
            throw UnsupportedDivisor("polynomial place must be monic");
        if (poly_deg(pl.poly) == 1) {
            // z - a is the place of the rational point a
            pl = Place::at_point(RationalPoint::affine(t.neg(pl.poly[0])));
        } else if (!poly_is_irreducible(t, pl.poly)) {
            throw UnsupportedDivisor("polynomial place must be irreducible");
        }
    }
    if (pl.kind == Place::Kind::Point && curve_.kind() == CurveModel::Kind::Weierstrass) {
        if (!curve_.on_curve(pl.point.x, pl.point.y))
            throw UnsupportedDivisor("point place does not lie on the curve");
    }
    const auto it = coeffs_.find(pl);
    const int next = (it == coeffs_.end() ? 0 : it->second) + k;
    if (next == 0) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
        coeffs_[pl] = next;
    }
}

int Divisor::coefficient(const Place& place) const {
    const auto it = coeffs_.find(place);
    return it == coeffs_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [pl, k] : coeffs_) d += static_cast<long long>(k) * pl.degree();
    return d;
}

Divisor Divisor::plus(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [pl, k] : o.coeffs_) r.add_term(pl, k);
    return r;
}

std::string Divisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pl, k] : coeffs_) {
        if (k < 0)
            os << '-';
        else if (!first)
            os << '+';
        os << (k < 0 ? -k : k) << '*' << pl.to_string();
        first = false;
    }
    return os.str();
}

SplitDivisor split(const Divisor& g) {
    SplitDivisor s{Divisor(g.curve()), Divisor(g.curve()), 0};
    for (const auto& [pl, k] : g.coeffs()) {
        if (k > 0)
            s.plus.add_term(pl, k);
        else
            s.minus.add_term(pl, k);
    }
    s.delta = s.minus.empty() ? 1 : 0;
    return s;
}

Divisor floor_div_q(const Divisor& g, int q) {
    if (q < 2) throw InvalidParameter("floor_div_q requires q >= 2");
    Divisor r(g.curve());
    for (const auto& [pl, k] : g.coeffs()) {
        if (k > 0)
            r.add_term(pl, k / q);  // zero coefficients are dropped by add_term
        else
            r.add_term(pl, k);
    }
    return r;
}

Divisor one_point_divisor(const CurveModel& c, int k) {
    Divisor g(c);
    g.add_term(Place::at_infinity(), k);
    return g;
}

namespace {

struct Term {
    int sign;
    std::string body;
};

std::vector<Term> split_terms(const std::string& spec) {
    std::vector<Term> terms;
    int sign = 1;
    std::string cur;
    for (char ch : spec) {
        if (ch == '+' || ch == '-') {
            if (!cur.empty()) {
                terms.push_back({sign, cur});
                cur.clear();
            } else if (!terms.empty()) {
                throw ParseError("empty divisor term");
            }
            sign = (ch == '-') ? -1 : 1;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) terms.push_back({sign, cur});
    return terms;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("bad " + what + ": " + s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + ": " + s);
    }
}

}  // namespace

Divisor parse_divisor(const CurveModel& c, const std::string& spec) {
    Divisor g(c);
    if (spec == "0" || spec.empty()) return g;
    const auto& t = *c.tower();
    for (const auto& [sign, body] : split_terms(spec)) {
        const auto star = body.find('*');
        if (star == std::string::npos) throw ParseError("divisor term needs k*place: " + body);
        const long long kk = parse_int(body.substr(0, star), "divisor coefficient");
        if (kk == 0) continue;
        const int k = static_cast<int>(kk) * sign;
        const std::string place = body.substr(star + 1);
        if (place == "inf") {
            g.add_term(Place::at_infinity(), k);
        } else if (place.rfind("x=", 0) == 0) {
            const std::string coords = place.substr(2);
            const auto colon = coords.find(':');
            Elem x, y = 0;
            if (colon == std::string::npos) {
                if (c.kind() == CurveModel::Kind::Weierstrass)
                    throw ParseError("Weierstrass point place needs x=<x>:<y>");
                x = static_cast<Elem>(parse_int(coords, "point coordinate"));
            } else {
                x = static_cast<Elem>(parse_int(coords.substr(0, colon), "point coordinate"));
                y = static_cast<Elem>(parse_int(coords.substr(colon + 1), "point coordinate"));
            }
            if (x >= t.size() || y >= t.size()) throw ParseError("point coordinate out of range");
            g.add_term(Place::at_point(RationalPoint::affine(x, y)), k);
        } else if (place.rfind("poly=", 0) == 0) {
            std::istringstream is(place.substr(5));
            Poly f;
            std::string tok;
            while (std::getline(is, tok, ',')) {
                const long long v = parse_int(tok, "polynomial coefficient");
                if (v < 0 || v >= t.size()) throw ParseError("polynomial coefficient out of range");
                f.push_back(static_cast<Elem>(v));
            }
            poly_trim(f);
            if (poly_deg(f) < 1) throw ParseError("polynomial place must have degree >= 1");
            g.add_term(Place::finite_poly(f), k);
        } else {
            throw ParseError("unknown divisor place: " + place);
        }
    }
    return g;
}

}  // namespace agtrace
