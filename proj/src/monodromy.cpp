#include "floertori/monodromy.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

namespace floertori {

MonodromyMap::MonodromyMap(SurfaceModel surface, IntMatrix matrix)
    : surface_(std::move(surface)), matrix_(std::move(matrix)) {
    if (matrix_.dim() != surface_.dim())
        throw ModelMismatch("monodromy matrix dimension " + std::to_string(matrix_.dim()) +
                            " does not match surface dimension " +
                            std::to_string(surface_.dim()));
    const IntMatrix& j = surface_.intersection_matrix();
    if (matrix_.transpose() * j * matrix_ != j)
        throw NotSymplectic("matrix does not preserve the intersection form");
    if (matrix_.det() != 1) throw NotSymplectic("monodromy matrix must have determinant +1");
}

MonodromyMap MonodromyMap::identity(const SurfaceModel& surface) {
    return MonodromyMap(surface, IntMatrix::identity(surface.dim()));
}

MonodromyMap MonodromyMap::trivial() { return MonodromyMap(SurfaceModel(0), IntMatrix(0)); }

CurveClass MonodromyMap::apply(const CurveClass& c) const {
    if (c.dim() != surface_.dim())
        throw ModelMismatch("curve class does not live on the monodromy's surface");
    return CurveClass(matrix_.apply(c.coefficients()));
}

MonodromyMap MonodromyMap::inverse() const {
    // For symplectic M: M^-1 = J^-1 M^T J, and J^-1 = -J for the block form.
    const IntMatrix& j = surface_.intersection_matrix();
    IntMatrix minus_j(j.dim());
    for (std::size_t i = 0; i < j.dim(); ++i)
        for (std::size_t k = 0; k < j.dim(); ++k) minus_j.at(i, k) = -j.at(i, k);
    return MonodromyMap(surface_, minus_j * matrix_.transpose() * j);
}

MonodromyMap dehn_twist(const SurfaceModel& surface, const CurveClass& c, int sign) {
    if (c.dim() != surface.dim())
        throw ModelMismatch("twist curve does not live on the given surface");
    if (sign != 1 && sign != -1) throw DomainError("twist sign must be +1 or -1");
    // x -> x + sign * <x,c> c  =  (I + sign * c (Jc)^T) x
    const std::vector<long long> jc = surface.intersection_matrix().apply(c.coefficients());
    IntMatrix m = IntMatrix::identity(surface.dim());
    for (std::size_t i = 0; i < surface.dim(); ++i) {
        for (std::size_t k = 0; k < surface.dim(); ++k) {
            __int128 v = __int128(m.at(i, k)) + __int128(sign) * c.coefficients()[i] * jc[k];
            if (v > std::numeric_limits<long long>::max() ||
                v < std::numeric_limits<long long>::min())
                throw OverflowError("transvection entry leaves the 64-bit range");
            m.at(i, k) = static_cast<long long>(v);
        }
    }
    return MonodromyMap(surface, m);
}

MonodromyMap compose(const MonodromyMap& m1, const MonodromyMap& m2) {
    if (m1.surface() != m2.surface())
        throw ModelMismatch("cannot compose monodromies on different surfaces");
    return MonodromyMap(m1.surface(), m1.matrix() * m2.matrix());
}

MonodromyMap trefoil_monodromy() {
    return MonodromyMap(standard_surface(1), IntMatrix{{1, 1}, {-1, 0}});
}

std::vector<CurveClass> torus_knot_chain(long long n) {
    if (n < 1) throw GenusTooSmall("torus knot parameter n must be at least 1");
    std::vector<CurveClass> chain;
    const std::size_t dim = static_cast<std::size_t>(2 * n);
    for (long long i = 1; i <= n; ++i) {
        std::vector<long long> a(dim, 0);
        a[static_cast<std::size_t>(2 * (i - 1))] = 1;
        chain.emplace_back(a);
        std::vector<long long> b(dim, 0);
        b[static_cast<std::size_t>(2 * (i - 1) + 1)] = 1;
        if (i < n) b[static_cast<std::size_t>(2 * i + 1)] = -1;
        chain.emplace_back(b);
    }
    return chain;
}

MonodromyMap torus_knot_monodromy(long long n) {
    const SurfaceModel surface = standard_surface(n);
    MonodromyMap m = MonodromyMap::identity(surface);
    for (const CurveClass& c : torus_knot_chain(n)) m = compose(m, dehn_twist(surface, c, +1));
    return m;
}

MonodromyMap connected_sum(const MonodromyMap& m1, const MonodromyMap& m2) {
    SurfaceModel combined(m1.surface().genus() + m2.surface().genus());
    return MonodromyMap(combined, IntMatrix::block_diag(m1.matrix(), m2.matrix()));
}

std::optional<long long> order(const MonodromyMap& m, long long bound) {
    if (bound < 1) throw DomainError("order bound must be at least 1");
    IntMatrix power = m.matrix();
    for (long long k = 1; k <= bound; ++k) {
        if (power.is_identity()) return k;
        power = power * m.matrix();
    }
    return std::nullopt;
}

std::vector<OrbitHit> orbit_relations(const MonodromyMap& m, const CurveClass& c0,
                                      const CurveClass& c1, long long bound) {
    if (c0.dim() != m.surface().dim() || c1.dim() != m.surface().dim())
        throw ModelMismatch("orbit classes do not live on the monodromy's surface");
    if (bound < 0) throw DomainError("orbit bound must be non-negative");
    std::vector<OrbitHit> hits;
    CurveClass image = c0;
    const CurveClass negated = -c1;
    for (long long k = 0; k <= bound; ++k) {
        if (image == c1) hits.push_back(OrbitHit{k, +1});
        if (image == negated) hits.push_back(OrbitHit{k, -1});
        if (k < bound) image = m.apply(image);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

long long factor_genus(const LinkFactor& factor) {
    return std::visit(
        [](const auto& f) -> long long {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TrefoilFactor>) return 1;
            else if constexpr (std::is_same_v<T, TorusKnotFactor>) return f.n;
            else return f.surface.genus();
        },
        factor);
}

long long FiberedLinkSpec::fiber_genus() const {
    long long total = 0;
    for (const LinkFactor& f : factors) total += factor_genus(f);
    return total;
}

namespace {

MonodromyMap realize_factor(const LinkFactor& factor) {
    return std::visit(
        [](const auto& f) -> MonodromyMap {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TrefoilFactor>) {
                return trefoil_monodromy();
            } else if constexpr (std::is_same_v<T, TorusKnotFactor>) {
                return torus_knot_monodromy(f.n);
            } else if constexpr (std::is_same_v<T, HopfFactor>) {
                return dehn_twist(f.surface, f.twist_curve, f.sign);
            } else if constexpr (std::is_same_v<T, ExplicitFactor>) {
                return MonodromyMap(f.surface, f.matrix);
            } else {
                MonodromyMap m = MonodromyMap::identity(f.surface);
                for (const auto& [curve, sign] : f.word)
                    m = compose(m, dehn_twist(f.surface, curve, sign));
                return m;
            }
        },
        factor);
}

}  // namespace

MonodromyMap link_monodromy(const FiberedLinkSpec& spec) {
    MonodromyMap total = MonodromyMap::trivial();
    for (const LinkFactor& f : spec.factors) total = connected_sum(total, realize_factor(f));
    return total;
}

}  // namespace floertori
