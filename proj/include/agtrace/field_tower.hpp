#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agtrace/errors.hpp"

namespace agtrace {

/// Element of F_{q^m}, packed in base p: digit i is the coefficient of x^i
/// of the residue-class representative modulo the tower modulus. The packed
/// integer order is the canonical element order used everywhere (points,
/// generator search, subfield listings).
using Elem = std::uint32_t;

/// The tower F_p < F_q < F_{q^m} with q = p^r, realized as a single quotient
/// ring F_p[x]/(modulus) of degree r*m. Every element of every level lives in
/// the big field; F_q is the fixed set of a |-> a^q.
///
/// Immutable after construction; safe to share between threads.
class FieldTower {
  public:
    /// Desk-scale cap on |F_{q^m}|.
    static constexpr std::uint64_t kMaxFieldSize = 1ull << 20;

    /// Builds the tower. The modulus is the lexicographically smallest monic
    /// irreducible polynomial of degree r*m over F_p, coefficients compared
    /// low-degree-first, so independently built towers agree bit-for-bit.
    /// `enable_tables` controls the log/antilog acceleration (fields up to
    /// 2^16 elements); results are identical either way.
    FieldTower(int p, int r, int m, bool enable_tables = true);

    int p() const { return p_; }
    int r() const { return r_; }
    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t size() const { return size_; }
    int ext_degree() const { return n_; }

    /// Monic modulus, ext_degree()+1 coefficients over F_p, low degree first.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Multiplicative generator of F_{q^m}^* (smallest in packed order).
    Elem generator() const { return generator_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    /// Constant element c mod p.
    Elem from_prime(long long c) const;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZero on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    Elem frobenius_q(Elem a) const { return pow(a, q_); }
    Elem frobenius_p(Elem a) const { return pow(a, p_); }

    /// Tr_{q^m/q}(a) = a + a^q + ... + a^{q^{m-1}}; lands in F_q.
    Elem trace_to_subfield(Elem a) const;
    /// Tr_{q^m/p}(a), the absolute trace; lands in F_p.
    Elem trace_to_prime(Elem a) const;

    /// a lies in F_q, i.e. a^q == a.
    bool in_subfield(Elem a) const { return frobenius_q(a) == a; }
    /// a lies in F_p.
    bool in_prime_field(Elem a) const { return frobenius_p(a) == a; }

    /// All q elements of F_q, ascending packed order.
    const std::vector<Elem>& subfield_elements() const { return subfield_; }
    /// F_q-basis {1, t, ..., t^{m-1}} of F_{q^m}, t = generator().
    const std::vector<Elem>& subfield_basis() const { return basis_; }

    /// Coordinates of a relative to subfield_basis(): the unique c in F_q^m
    /// with a = sum c_j * t^j. Entries are F_q elements of the big field.
    std::vector<Elem> to_subfield_coords(Elem a) const;
    Elem from_subfield_coords(const std::vector<Elem>& c) const;

  private:
    int p_, r_, m_, n_;
    std::uint32_t q_, size_;
    std::vector<int> modulus_;
    Elem generator_;
    std::vector<Elem> subfield_;
    std::vector<Elem> basis_;
    std::vector<Elem> moore_inv_;  // m x m, row-major
    std::vector<Elem> exp_;        // log/antilog tables (optional)
    std::vector<std::uint32_t> log_;
    bool tables_ = false;

    Elem mul_nolut(Elem a, Elem b) const;
    void build_tables();
    void build_subfield_and_basis();
    void build_moore_inverse();
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Builds a shared tower after validating p prime, r >= 1, m >= 2 and the
/// size cap p^{rm} <= 2^20.
TowerPtr build_tower(int p, int r, int m, bool enable_tables = true);

}  // namespace agtrace
