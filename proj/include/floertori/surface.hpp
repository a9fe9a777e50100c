#pragma once

#include <string>
#include <vector>

#include "floertori/intmatrix.hpp"

namespace floertori {

// H_1 of the closed fiber surface of genus g with the standard symplectic
// basis A_1,B_1,...,A_g,B_g and skew intersection form J, block diagonal
// with g blocks [[0,1],[-1,0]] (so <A_i,B_i> = +1, det J = 1).
//
// The value type admits g = 0 so degenerate configurations stay
// representable (they fail the genus hypothesis downstream); the
// standard_surface() factory is the gate that rejects g = 0 outright.
class SurfaceModel {
public:
    explicit SurfaceModel(long long genus);

    long long genus() const { return genus_; }
    std::size_t dim() const { return static_cast<std::size_t>(2 * genus_); }

    // "A1", "B1", "A2", ...
    std::string basis_label(std::size_t index) const;
    std::vector<std::string> basis() const;

    const IntMatrix& intersection_matrix() const { return form_; }

    bool operator==(const SurfaceModel& o) const { return genus_ == o.genus_; }
    bool operator!=(const SurfaceModel& o) const { return !(*this == o); }

private:
    long long genus_;
    IntMatrix form_;
};

// Integer homology class of a curve on the fiber, in the (A_i, B_i) basis.
// Classes that stand for embedded loops must be primitive or zero; that is
// checked where the hypothesis is used, not at construction.
class CurveClass {
public:
    CurveClass() = default;
    explicit CurveClass(std::vector<long long> coefficients);

    const std::vector<long long>& coefficients() const { return coeffs_; }
    std::size_t dim() const { return coeffs_.size(); }

    bool is_zero() const;
    // gcd of the coefficients is 1.
    bool is_primitive() const;

    CurveClass operator-() const;
    bool operator==(const CurveClass& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const CurveClass& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<long long> coeffs_;
};

// The checked factory: throws GenusTooSmall for g < 1 (the nontrivially
// fibered hypothesis needs fiber genus at least 1).
SurfaceModel standard_surface(long long genus);

// c0^T J c1. Antisymmetric; throws ModelMismatch when a class does not
// live on the given surface.
long long intersection_number(const SurfaceModel& surface, const CurveClass& c0,
                              const CurveClass& c1);

// True iff c0, c1 are linearly independent over the rationals.
bool independence_check(const SurfaceModel& surface, const CurveClass& c0, const CurveClass& c1);

}  // namespace floertori
