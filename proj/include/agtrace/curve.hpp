#pragma once

#include <string>
#include <vector>

#include "agtrace/field_tower.hpp"

namespace agtrace {

/// F_{q^m}-rational point: affine (x) on the projective line, affine (x, y)
/// on a Weierstrass cubic, or the unique point at infinity.
struct RationalPoint {
    bool at_infinity = false;
    Elem x = 0, y = 0;

    static RationalPoint infinity() { return RationalPoint{true, 0, 0}; }
    static RationalPoint affine(Elem x, Elem y = 0) { return RationalPoint{false, x, y}; }

    bool operator==(const RationalPoint& o) const = default;
    /// Canonical point order: affine by (x, y) packed values, infinity last.
    bool operator<(const RationalPoint& o) const {
        if (at_infinity != o.at_infinity) return !at_infinity;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

/// Supported curve models: the projective line (genus 0) and nonsingular
/// Weierstrass cubics y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 (genus 1).
class CurveModel {
  public:
    enum class Kind { ProjectiveLine, Weierstrass };

    static CurveModel projective_line(TowerPtr tower);
    /// Validates nonsingularity by exhaustive scan; Weierstrass models are
    /// capped at q^m <= 2^12 because point enumeration scans q^m x q^m pairs.
    static CurveModel weierstrass(TowerPtr tower, Elem a1, Elem a3, Elem a2, Elem a4, Elem a6);

    Kind kind() const { return kind_; }
    const TowerPtr& tower() const { return tower_; }
    int genus() const { return kind_ == Kind::ProjectiveLine ? 0 : 1; }

    Elem a1() const { return a1_; }
    Elem a3() const { return a3_; }
    Elem a2() const { return a2_; }
    Elem a4() const { return a4_; }
    Elem a6() const { return a6_; }

    /// Does (x, y) satisfy the affine Weierstrass equation exactly?
    bool on_curve(Elem x, Elem y) const;

    std::string to_string() const;

    bool operator==(const CurveModel& o) const;

  private:
    CurveModel(TowerPtr tower, Kind kind) : tower_(std::move(tower)), kind_(kind) {}
    TowerPtr tower_;
    Kind kind_;
    Elem a1_ = 0, a3_ = 0, a2_ = 0, a4_ = 0, a6_ = 0;
};

/// All F_{q^m}-rational points in canonical order (affine ascending,
/// infinity last). P^1 has q^m + 1 points; Weierstrass curves are found by
/// exhaustive scan.
std::vector<RationalPoint> rational_points(const CurveModel& c);

/// Smoothness test for raw Weierstrass coefficients: no affine point of the
/// closure annihilates the equation and both partials. A singular point of a
/// Weierstrass cubic is unique and Galois-fixed, hence rational, so the
/// F_{q^m} scan is exhaustive; the point at infinity is always smooth.
bool is_nonsingular(const FieldTower& t, Elem a1, Elem a3, Elem a2, Elem a4, Elem a6);
bool is_nonsingular(const CurveModel& c);

/// Hasse-Weil test |N - (q^m + 1)| <= 2 g q^{m/2} in exact integer
/// arithmetic: (N - q^m - 1)^2 <= 4 g^2 q^m.
bool hasse_weil_check(long long n_points, int genus, const FieldTower& t);

/// Parses "p1" or "weierstrass:a1,a3,a2,a4,a6" (coefficients are packed
/// element indices).
CurveModel parse_curve(TowerPtr tower, const std::string& spec);

}  // namespace agtrace
