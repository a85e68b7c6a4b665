#include "agtrace/poly.hpp"

#include <algorithm>
#include <string>

namespace agtrace {

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

Poly poly_constant(Elem c) { return c == 0 ? Poly{} : Poly{c}; }

Poly poly_x() { return Poly{0, 1}; }

bool poly_eq(const Poly& a, const Poly& b) { return a == b; }

bool poly_is_monic(const Poly& a) { return !a.empty() && a.back() == 1; }

Poly poly_add(const FieldTower& t, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = t.add(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_sub(const FieldTower& t, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = t.sub(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_scale(const FieldTower& t, Elem c, const Poly& a) {
    if (c == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = t.mul(c, a[i]);
    poly_trim(r);
    return r;
}

Poly poly_mul(const FieldTower& t, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = t.add(r[i + j], t.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const FieldTower& t, const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    poly_trim(rem);
    const int db = poly_deg(b);
    if (poly_deg(rem) < db) return {Poly{}, rem};
    Poly quot(rem.size() - b.size() + 1, 0);
    const Elem lead_inv = t.inv(b.back());
    while (poly_deg(rem) >= db) {
        const int shift = poly_deg(rem) - db;
        const Elem c = t.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem[shift + i] = t.sub(rem[shift + i], t.mul(c, b[i]));
        poly_trim(rem);
    }
    poly_trim(quot);
    return {quot, rem};
}

Poly poly_mod(const FieldTower& t, const Poly& a, const Poly& b) {
    return poly_divmod(t, a, b).second;
}

Poly poly_div_exact(const FieldTower& t, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(t, a, b);
    if (!r.empty()) throw InternalError("polynomial division expected to be exact");
    return q;
}

bool poly_divides(const FieldTower& t, const Poly& d, const Poly& a) {
    if (d.empty()) return a.empty();
    return poly_mod(t, a, d).empty();
}

Poly poly_gcd(const FieldTower& t, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        a = poly_mod(t, a, b);
        std::swap(a, b);
    }
    return poly_monic(t, a);
}

Poly poly_monic(const FieldTower& t, const Poly& a) {
    if (a.empty() || a.back() == 1) return a;
    return poly_scale(t, t.inv(a.back()), a);
}

Poly poly_derivative(const FieldTower& t, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) {
        // i * a_i, with i reduced mod p
        Elem c = t.from_prime(static_cast<long long>(i));
        r[i - 1] = t.mul(c, a[i]);
    }
    poly_trim(r);
    return r;
}

Elem poly_eval(const FieldTower& t, const Poly& a, Elem x) {
    Elem acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = t.add(t.mul(acc, x), a[i]);
    return acc;
}

Poly poly_pow(const FieldTower& t, const Poly& a, int e) {
    if (e < 0) throw InvalidParameter("negative polynomial power");
    Poly r{1};
    Poly b = a;
    while (e) {
        if (e & 1) r = poly_mul(t, r, b);
        b = poly_mul(t, b, b);
        e >>= 1;
    }
    return r;
}

Poly poly_powmod(const FieldTower& t, Poly base, long long e, const Poly& mod) {
    Poly r{1};
    base = poly_mod(t, base, mod);
    while (e) {
        if (e & 1) r = poly_mod(t, poly_mul(t, r, base), mod);
        base = poly_mod(t, poly_mul(t, base, base), mod);
        e >>= 1;
    }
    return r;
}

namespace {

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// x^{Q^k} mod f via iterated Q-th powers.
Poly frobenius_power_mod(const FieldTower& t, int k, const Poly& f) {
    Poly r = poly_mod(t, poly_x(), f);
    for (int i = 0; i < k; ++i) r = poly_powmod(t, r, t.size(), f);
    return r;
}

}  // namespace

bool poly_is_irreducible(const FieldTower& t, const Poly& f) {
    const int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    const Poly fm = poly_monic(t, f);
    Poly xq = frobenius_power_mod(t, d, fm);
    if (!poly_eq(xq, poly_mod(t, poly_x(), fm))) return false;
    for (long long ell : prime_divisors(d)) {
        Poly xd = frobenius_power_mod(t, d / static_cast<int>(ell), fm);
        Poly diff = poly_sub(t, xd, poly_x());
        if (poly_deg(poly_gcd(t, fm, diff)) != 0) return false;
    }
    return true;
}

Poly poly_pth_root(const FieldTower& t, const Poly& f) {
    const int p = t.p();
    Poly h;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i % p == 0) {
            // coefficient a satisfies a = b^p with b = a^{|F|/p}
            h.push_back(t.pow(f[i], static_cast<long long>(t.size()) / p));
        } else if (f[i] != 0) {
            throw InternalError("polynomial is not a p-th power");
        }
    }
    poly_trim(h);
    return h;
}

std::vector<std::pair<int, Poly>> poly_squarefree_decomposition(const FieldTower& t,
                                                                const Poly& f) {
    if (f.empty()) throw InvalidParameter("squarefree decomposition of zero");
    std::vector<std::pair<int, Poly>> out;
    Poly g = poly_monic(t, f);
    if (poly_deg(g) == 0) return out;

    Poly gp = poly_derivative(t, g);
    if (gp.empty()) {
        // g lies in F[x^p]; take the p-th root and scale exponents
        Poly root = poly_pth_root(t, g);
        for (auto& [e, u] : poly_squarefree_decomposition(t, root))
            out.emplace_back(e * t.p(), u);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    Poly c = poly_gcd(t, g, gp);
    Poly w = poly_div_exact(t, g, c);
    int i = 1;
    while (poly_deg(w) > 0) {
        Poly y = poly_gcd(t, w, c);
        Poly z = poly_div_exact(t, w, y);
        if (poly_deg(z) > 0) out.emplace_back(i, z);
        w = y;
        c = poly_div_exact(t, c, y);
        ++i;
    }
    if (poly_deg(c) > 0) {
        Poly root = poly_pth_root(t, c);
        for (auto& [e, u] : poly_squarefree_decomposition(t, root))
            out.emplace_back(e * t.p(), u);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Poly poly_random_monic_irreducible(const FieldTower& t, int degree, std::mt19937_64& rng) {
    if (degree < 1) throw InvalidParameter("irreducible degree must be >= 1");
    std::uniform_int_distribution<std::uint32_t> dist(0, t.size() - 1);
    while (true) {
        Poly f(degree + 1);
        for (int i = 0; i < degree; ++i) f[i] = dist(rng);
        f[degree] = 1;
        if (poly_is_irreducible(t, f)) return f;
    }
}

std::string poly_to_string(const Poly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s;
}

}  // namespace agtrace
