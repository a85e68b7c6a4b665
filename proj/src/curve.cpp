#include "agtrace/curve.hpp"

#include <sstream>

namespace agtrace {

namespace {
constexpr std::uint32_t kWeierstrassScanCap = 1u << 12;
}

CurveModel CurveModel::projective_line(TowerPtr tower) {
    return CurveModel(std::move(tower), Kind::ProjectiveLine);
}

CurveModel CurveModel::weierstrass(TowerPtr tower, Elem a1, Elem a3, Elem a2, Elem a4,
                                   Elem a6) {
    if (tower->size() > kWeierstrassScanCap)
        throw TooLarge("Weierstrass models are capped at q^m <= 2^12");
    if (!is_nonsingular(*tower, a1, a3, a2, a4, a6))
        throw SingularCurve("Weierstrass equation is singular");
    CurveModel c(std::move(tower), Kind::Weierstrass);
    c.a1_ = a1;
    c.a3_ = a3;
    c.a2_ = a2;
    c.a4_ = a4;
    c.a6_ = a6;
    return c;
}

bool CurveModel::on_curve(Elem x, Elem y) const {
    const auto& t = *tower_;
    if (kind_ == Kind::ProjectiveLine) return true;
    const Elem x2 = t.mul(x, x);
    const Elem lhs = t.add(t.add(t.mul(y, y), t.mul(a1_, t.mul(x, y))), t.mul(a3_, y));
    const Elem rhs =
        t.add(t.add(t.add(t.mul(x2, x), t.mul(a2_, x2)), t.mul(a4_, x)), a6_);
    return lhs == rhs;
}

std::string CurveModel::to_string() const {
    if (kind_ == Kind::ProjectiveLine) return "p1";
    std::ostringstream os;
    os << "weierstrass:" << a1_ << ',' << a3_ << ',' << a2_ << ',' << a4_ << ',' << a6_;
    return os.str();
}

bool CurveModel::operator==(const CurveModel& o) const {
    return tower_ == o.tower_ && kind_ == o.kind_ && a1_ == o.a1_ && a3_ == o.a3_ &&
           a2_ == o.a2_ && a4_ == o.a4_ && a6_ == o.a6_;
}

std::vector<RationalPoint> rational_points(const CurveModel& c) {
    const auto& t = *c.tower();
    std::vector<RationalPoint> pts;
    if (c.kind() == CurveModel::Kind::ProjectiveLine) {
        pts.reserve(t.size() + 1);
        for (Elem x = 0; x < t.size(); ++x) pts.push_back(RationalPoint::affine(x));
    } else {
        for (Elem x = 0; x < t.size(); ++x)
            for (Elem y = 0; y < t.size(); ++y)
                if (c.on_curve(x, y)) pts.push_back(RationalPoint::affine(x, y));
    }
    pts.push_back(RationalPoint::infinity());
    return pts;  // scan order is already the canonical order
}

bool is_nonsingular(const FieldTower& t, Elem a1, Elem a3, Elem a2, Elem a4, Elem a6) {
    // Affine singular point: on the curve with
    //   dF/dx: a1 y = 3 x^2 + 2 a2 x + a4
    //   dF/dy: 2 y + a1 x + a3 = 0
    const Elem two = t.from_prime(2), three = t.from_prime(3);
    for (Elem x = 0; x < t.size(); ++x) {
        const Elem x2 = t.mul(x, x);
        const Elem fx = t.add(t.add(t.mul(three, x2), t.mul(two, t.mul(a2, x))), a4);
        for (Elem y = 0; y < t.size(); ++y) {
            const Elem lhs =
                t.add(t.add(t.mul(y, y), t.mul(a1, t.mul(x, y))), t.mul(a3, y));
            const Elem rhs = t.add(t.add(t.add(t.mul(x2, x), t.mul(a2, x2)), t.mul(a4, x)), a6);
            if (lhs != rhs) continue;
            const bool dx_zero = t.mul(a1, y) == fx;
            const bool dy_zero = t.add(t.add(t.mul(two, y), t.mul(a1, x)), a3) == 0;
            if (dx_zero && dy_zero) return false;
        }
    }
    return true;  // [0:1:0] is smooth for every Weierstrass equation
}

bool is_nonsingular(const CurveModel& c) {
    if (c.kind() == CurveModel::Kind::ProjectiveLine) return true;
    return is_nonsingular(*c.tower(), c.a1(), c.a3(), c.a2(), c.a4(), c.a6());
}

bool hasse_weil_check(long long n_points, int genus, const FieldTower& t) {
    if (n_points < 0) throw InvalidParameter("negative point count");
    const long long qm = t.size();
    const __int128 d = static_cast<__int128>(n_points) - qm - 1;
    const __int128 bound = static_cast<__int128>(4) * genus * genus * qm;
    return d * d <= bound;
}

CurveModel parse_curve(TowerPtr tower, const std::string& spec) {
    if (spec == "p1") return CurveModel::projective_line(std::move(tower));
    const std::string prefix = "weierstrass:";
    if (spec.rfind(prefix, 0) == 0) {
        std::istringstream is(spec.substr(prefix.size()));
        std::vector<Elem> coef;
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                const unsigned long v = std::stoul(tok);
                if (v >= tower->size()) throw ParseError("curve coefficient out of range: " + tok);
                coef.push_back(static_cast<Elem>(v));
            } catch (const std::logic_error&) {
                throw ParseError("bad curve coefficient: " + tok);
            }
        }
        if (coef.size() != 5)
            throw ParseError("weierstrass curve needs 5 coefficients a1,a3,a2,a4,a6");
        return CurveModel::weierstrass(std::move(tower), coef[0], coef[1], coef[2], coef[3],
                                       coef[4]);
    }
    throw ParseError("unknown curve spec: " + spec);
}

}  // namespace agtrace
