#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "floertori/surface.hpp"

namespace floertori {

// Homological monodromy of a fibered link: an integer matrix acting on
// H_1 of the fiber and preserving the intersection form. Construction
// verifies M^T J M = J and det M = +1 for every map.
class MonodromyMap {
public:
    MonodromyMap(SurfaceModel surface, IntMatrix matrix);

    static MonodromyMap identity(const SurfaceModel& surface);
    // The neutral element of connected_sum: the empty map on the genus-0
    // surface. Not constructible through standard_surface().
    static MonodromyMap trivial();

    const SurfaceModel& surface() const { return surface_; }
    const IntMatrix& matrix() const { return matrix_; }

    CurveClass apply(const CurveClass& c) const;
    MonodromyMap inverse() const;

    bool operator==(const MonodromyMap& o) const {
        return surface_ == o.surface_ && matrix_ == o.matrix_;
    }

private:
    SurfaceModel surface_;
    IntMatrix matrix_;
};

// Transvection x -> x + sign * <x,c> * c, the action of a Dehn twist
// about c on homology. Symplectic for either sign.
MonodromyMap dehn_twist(const SurfaceModel& surface, const CurveClass& c, int sign);

// Matrix product m1 * m2 (m2 applied first). ModelMismatch on different
// surfaces.
MonodromyMap compose(const MonodromyMap& m1, const MonodromyMap& m2);

// The right/left trefoil's monodromy on the standard genus-1 surface,
// in the A,B basis:  A -> A - B, B -> A  ([[1,1],[-1,0]] on columns).
MonodromyMap trefoil_monodromy();

// Monodromy of the (2,2n+1) torus knot: genus-n surface, product of
// positive twists along the chain c_1..c_2n with c_{2i-1} = A_i and
// c_{2i} = B_i - B_{i+1} (B_{n+1} = 0). Consecutive chain classes meet
// once, non-consecutive ones are disjoint. Throws GenusTooSmall for n < 1.
MonodromyMap torus_knot_monodromy(long long n);

// The chain classes used by torus_knot_monodromy, for callers that want
// to inspect or test the intersection pattern.
std::vector<CurveClass> torus_knot_chain(long long n);

// Monodromy of a connected sum: block direct sum on the combined surface.
MonodromyMap connected_sum(const MonodromyMap& m1, const MonodromyMap& m2);

// Smallest k in [1, bound] with M^k = identity, or nullopt when no such
// power exists within the bound.
std::optional<long long> order(const MonodromyMap& m, long long bound);

inline constexpr long long kDefaultOrderBound = 4096;

struct OrbitHit {
    long long power = 0;
    int sign = +1;

    bool operator==(const OrbitHit& o) const { return power == o.power && sign == o.sign; }
    bool operator<(const OrbitHit& o) const {
        return power != o.power ? power < o.power : sign < o.sign;
    }
};

// Exhaustive scan k = 0..bound for M^k c0 = sign * c1; both signs reported,
// sorted by (power, sign). For the zero class both signs match at every k.
std::vector<OrbitHit> orbit_relations(const MonodromyMap& m, const CurveClass& c0,
                                      const CurveClass& c1, long long bound);

// ---------------------------------------------------------------------------
// Fibered link specification: the combinatorial shadow of an m-component
// fibered link, as an ordered list of monodromy factors plus the count of
// meridian fiber-sum sites.

struct TrefoilFactor {};

struct TorusKnotFactor {
    long long n = 1;  // the (2, 2n+1) torus knot; genus n
};

// Hopf link factor: a single Dehn twist about a curve parallel to the
// components. The caller supplies the twist curve's class because a
// parallel curve may be null-homologous in the closed fiber, in which
// case the homological action is the identity; the zero class encodes
// exactly that.
struct HopfFactor {
    int sign = +1;  // +1 positive Hopf link, -1 negative
    SurfaceModel surface{0};
    CurveClass twist_curve;
};

struct ExplicitFactor {
    SurfaceModel surface{0};
    IntMatrix matrix;
};

struct TwistWordFactor {
    SurfaceModel surface{0};
    std::vector<std::pair<CurveClass, int>> word;  // twists applied right-to-left
};

using LinkFactor =
    std::variant<TrefoilFactor, TorusKnotFactor, HopfFactor, ExplicitFactor, TwistWordFactor>;

long long factor_genus(const LinkFactor& factor);

struct FiberedLinkSpec {
    std::vector<LinkFactor> factors;
    long long meridian_count = 0;  // one fiber-sum site per link component

    long long fiber_genus() const;
};

// Realizes the total homological monodromy: the connected sum of the
// factors' maps on the standard surface of the total genus.
MonodromyMap link_monodromy(const FiberedLinkSpec& spec);

}  // namespace floertori
