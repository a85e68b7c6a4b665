#include "agtrace/field_tower.hpp"

#include <algorithm>
#include <numeric>

namespace agtrace {

namespace {

// --- small helpers over F_p, coefficients low-degree-first ---

using FpPoly = std::vector<int>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_powmod_int(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
    fp_trim(r);
    return r;
}

void fp_mod_inplace(FpPoly& a, const FpPoly& mod, int p) {
    const int dm = static_cast<int>(mod.size()) - 1;
    const int lead_inv = fp_powmod_int(mod.back(), p - 2, p);
    fp_trim(a);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const long long c = static_cast<long long>(a.back()) * lead_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<int>(((a[shift + i] - c * mod[i]) % p + p) % p);
        fp_trim(a);
    }
}

FpPoly fp_powmod(FpPoly base, long long e, const FpPoly& mod, int p) {
    FpPoly r{1};
    fp_mod_inplace(base, mod, p);
    while (e) {
        if (e & 1) {
            r = fp_mul(r, base, p);
            fp_mod_inplace(r, mod, p);
        }
        base = fp_mul(base, base, p);
        fp_mod_inplace(base, mod, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_mod_inplace(a, b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<long long> prime_factors(long long n) {
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

// Rabin test: f monic of degree n is irreducible over F_p iff
// x^{p^n} == x (mod f) and gcd(x^{p^{n/l}} - x, f) = 1 for primes l | n.
bool fp_is_irreducible(const FpPoly& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    const FpPoly x{0, 1};
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    FpPoly xq = fp_powmod(x, pn, f, p);
    FpPoly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;
    for (long long ell : prime_factors(n)) {
        long long pd = 1;
        for (int i = 0; i < n / ell; ++i) pd *= p;
        FpPoly xd = fp_powmod(x, pd, f, p);
        FpPoly d2 = xd;
        d2.resize(std::max<size_t>(d2.size(), 2), 0);
        d2[1] = ((d2[1] - 1) % p + p) % p;
        fp_trim(d2);
        FpPoly g = fp_gcd(f, d2, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree n over F_p,
// coefficients compared low-degree-first.
FpPoly lex_least_irreducible(int p, int n) {
    FpPoly f(n + 1, 0);
    f[n] = 1;
    std::vector<int> digits(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) f[i] = digits[i];
        if (fp_is_irreducible(f, p)) return f;
        // advance (c_0,...,c_{n-1}) in lex order: bump the last coordinate
        int i = n - 1;
        while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
        if (i < 0) throw InternalError("no irreducible polynomial found");
        ++digits[i];
    }
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldTower::FieldTower(int p, int r, int m, bool enable_tables) : p_(p), r_(r), m_(m) {
    if (!is_prime(p)) throw NotPrime("p must be prime, got " + std::to_string(p));
    if (r < 1) throw InvalidParameter("r must be >= 1, got " + std::to_string(r));
    if (m < 2) throw InvalidParameter("m must be >= 2, got " + std::to_string(m));
    n_ = r * m;
    std::uint64_t q = 1, size = 1;
    for (int i = 0; i < r; ++i) q *= static_cast<std::uint64_t>(p);
    for (int i = 0; i < n_; ++i) {
        size *= static_cast<std::uint64_t>(p);
        if (size > kMaxFieldSize)
            throw TooLarge("p^(r*m) exceeds the 2^20 cap");
    }
    q_ = static_cast<std::uint32_t>(q);
    size_ = static_cast<std::uint32_t>(size);

    modulus_ = lex_least_irreducible(p_, n_);

    // Multiplicative generator: smallest packed value of full order.
    const long long order = static_cast<long long>(size_) - 1;
    const auto factors = prime_factors(order);
    generator_ = 0;
    for (Elem g = 1; g < size_; ++g) {
        bool full = true;
        for (long long ell : factors) {
            Elem t = 1, b = g;
            long long e = order / ell;
            while (e) {  // nolut pow: tables not built yet
                if (e & 1) t = mul_nolut(t, b);
                b = mul_nolut(b, b);
                e >>= 1;
            }
            if (t == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0) throw InternalError("no multiplicative generator found");

    if (enable_tables && size_ <= (1u << 16)) build_tables();
    build_subfield_and_basis();
    build_moore_inverse();
}

std::vector<int> FieldTower::coeffs(Elem a) const {
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return c;
}

Elem FieldTower::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > n_)
        throw InvalidParameter("coefficient vector longer than extension degree");
    Elem e = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        int d = ((c[i] % p_) + p_) % p_;
        e = e * p_ + static_cast<Elem>(d);
    }
    return e;
}

Elem FieldTower::from_prime(long long c) const {
    return static_cast<Elem>(((c % p_) + p_) % p_);
}

Elem FieldTower::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
        a /= p_;
        b /= p_;
        out += static_cast<Elem>((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Elem FieldTower::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        int d = static_cast<int>(a % p_);
        a /= p_;
        out += static_cast<Elem>((p_ - d) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Elem FieldTower::sub(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add(a, neg(b));
}

Elem FieldTower::mul_nolut(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto ca = coeffs(a), cb = coeffs(b);
    std::vector<long long> conv(2 * n_ - 1, 0);
    for (int i = 0; i < n_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < n_; ++j) conv[i + j] += static_cast<long long>(ca[i]) * cb[j];
    }
    FpPoly prod(conv.size());
    for (size_t i = 0; i < conv.size(); ++i) prod[i] = static_cast<int>(conv[i] % p_);
    fp_mod_inplace(prod, modulus_, p_);
    prod.resize(n_, 0);
    return from_coeffs(prod);
}

Elem FieldTower::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) {
        const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        return exp_[s % (size_ - 1)];
    }
    return mul_nolut(a, b);
}

Elem FieldTower::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tables_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    return pow(a, static_cast<long long>(size_) - 2);
}

Elem FieldTower::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw DivisionByZero("0 raised to a negative power");
    }
    const long long order = static_cast<long long>(size_) - 1;
    e = ((e % order) + order) % order;
    if (tables_) {
        const std::uint64_t le =
            static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(e) % (size_ - 1);
        return exp_[le];
    }
    Elem r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem FieldTower::trace_to_subfield(Elem a) const {
    Elem s = a, x = a;
    for (int i = 1; i < m_; ++i) {
        x = frobenius_q(x);
        s = add(s, x);
    }
    return s;
}

Elem FieldTower::trace_to_prime(Elem a) const {
    Elem s = a, x = a;
    for (int i = 1; i < n_; ++i) {
        x = frobenius_p(x);
        s = add(s, x);
    }
    return s;
}

void FieldTower::build_tables() {
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < size_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_nolut(cur, generator_);
    }
    if (cur != 1) throw InternalError("generator order mismatch while building tables");
    tables_ = true;
}

void FieldTower::build_subfield_and_basis() {
    subfield_.clear();
    subfield_.push_back(0);
    const std::uint32_t step = (size_ - 1) / (q_ - 1);
    Elem root = pow(generator_, step);
    Elem cur = 1;
    for (std::uint32_t j = 0; j + 1 < q_; ++j) {
        subfield_.push_back(cur);
        cur = mul(cur, root);
    }
    std::sort(subfield_.begin(), subfield_.end());
    for (Elem a : subfield_)
        if (!in_subfield(a)) throw InternalError("subfield element not fixed by Frobenius");

    basis_.clear();
    Elem b = 1;
    for (int j = 0; j < m_; ++j) {
        basis_.push_back(b);
        b = mul(b, generator_);
    }
}

void FieldTower::build_moore_inverse() {
    // Moore matrix M[i][j] = basis[j]^{q^i}; invertible iff the basis is
    // F_q-linearly independent. Gauss-Jordan over the big field.
    const int m = m_;
    std::vector<Elem> a(m * m), id(m * m, 0);
    for (int j = 0; j < m; ++j) {
        Elem v = basis_[j];
        for (int i = 0; i < m; ++i) {
            a[i * m + j] = v;
            v = frobenius_q(v);
        }
    }
    for (int i = 0; i < m; ++i) id[i * m + i] = 1;
    for (int col = 0, row = 0; col < m && row < m; ++col, ++row) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (a[i * m + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw InternalError("subfield basis is not F_q-independent");
        for (int j = 0; j < m; ++j) {
            std::swap(a[row * m + j], a[piv * m + j]);
            std::swap(id[row * m + j], id[piv * m + j]);
        }
        const Elem pi = inv(a[row * m + col]);
        for (int j = 0; j < m; ++j) {
            a[row * m + j] = mul(a[row * m + j], pi);
            id[row * m + j] = mul(id[row * m + j], pi);
        }
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const Elem f = a[i * m + col];
            if (f == 0) continue;
            for (int j = 0; j < m; ++j) {
                a[i * m + j] = sub(a[i * m + j], mul(f, a[row * m + j]));
                id[i * m + j] = sub(id[i * m + j], mul(f, id[row * m + j]));
            }
        }
    }
    moore_inv_ = std::move(id);
}

std::vector<Elem> FieldTower::to_subfield_coords(Elem a) const {
    // Solve sum_j c_j basis[j] = a with c_j in F_q by applying Frobenius
    // powers: the system M c = (a, a^q, ..., a^{q^{m-1}}) has the unique
    // solution c, which automatically lies in F_q^m.
    std::vector<Elem> rhs(m_);
    Elem v = a;
    for (int i = 0; i < m_; ++i) {
        rhs[i] = v;
        v = frobenius_q(v);
    }
    std::vector<Elem> c(m_, 0);
    for (int i = 0; i < m_; ++i) {
        Elem s = 0;
        for (int j = 0; j < m_; ++j) s = add(s, mul(moore_inv_[i * m_ + j], rhs[j]));
        c[i] = s;
    }
    for (Elem x : c)
        if (!in_subfield(x)) throw InternalError("subfield coordinate outside F_q");
    return c;
}

Elem FieldTower::from_subfield_coords(const std::vector<Elem>& c) const {
    if (static_cast<int>(c.size()) != m_)
        throw InvalidParameter("coordinate vector must have length m");
    Elem s = 0;
    for (int j = 0; j < m_; ++j) s = add(s, mul(c[j], basis_[j]));
    return s;
}

TowerPtr build_tower(int p, int r, int m, bool enable_tables) {
    return std::make_shared<const FieldTower>(p, r, m, enable_tables);
}

}  // namespace agtrace
