#include "floertori/surface.hpp"

#include <limits>
#include <numeric>

namespace floertori {

SurfaceModel::SurfaceModel(long long genus) : genus_(genus) {
    if (genus < 0) throw DomainError("surface genus must be non-negative");
    form_ = IntMatrix(dim());
    for (long long i = 0; i < genus_; ++i) {
        form_.at(2 * i, 2 * i + 1) = 1;
        form_.at(2 * i + 1, 2 * i) = -1;
    }
}

std::string SurfaceModel::basis_label(std::size_t index) const {
    const char letter = (index % 2 == 0) ? 'A' : 'B';
    return letter + std::to_string(index / 2 + 1);
}

std::vector<std::string> SurfaceModel::basis() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_label(i));
    return out;
}

CurveClass::CurveClass(std::vector<long long> coefficients) : coeffs_(std::move(coefficients)) {}

bool CurveClass::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CurveClass::is_primitive() const {
    long long g = 0;
    for (long long c : coeffs_) g = std::gcd(g, c);
    return g == 1;
}

CurveClass CurveClass::operator-() const {
    std::vector<long long> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return CurveClass(out);
}

std::string CurveClass::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out + ")";
}

SurfaceModel standard_surface(long long genus) {
    if (genus < 1)
        throw GenusTooSmall("fiber genus must be at least 1 (nontrivially fibered link)");
    return SurfaceModel(genus);
}

namespace {

void require_on(const SurfaceModel& surface, const CurveClass& c, const char* which) {
    if (c.dim() != surface.dim())
        throw ModelMismatch(std::string("curve class ") + which + " has dimension " +
                            std::to_string(c.dim()) + ", surface expects " +
                            std::to_string(surface.dim()));
}

}  // namespace

long long intersection_number(const SurfaceModel& surface, const CurveClass& c0,
                              const CurveClass& c1) {
    require_on(surface, c0, "c0");
    require_on(surface, c1, "c1");
    const std::vector<long long> jc1 = surface.intersection_matrix().apply(c1.coefficients());
    __int128 acc = 0;
    for (std::size_t i = 0; i < c0.dim(); ++i)
        acc += __int128(c0.coefficients()[i]) * jc1[i];
    if (acc > std::numeric_limits<long long>::max() || acc < std::numeric_limits<long long>::min())
        throw OverflowError("intersection number leaves the 64-bit range");
    return static_cast<long long>(acc);
}

bool independence_check(const SurfaceModel& surface, const CurveClass& c0, const CurveClass& c1) {
    require_on(surface, c0, "c0");
    require_on(surface, c1, "c1");
    if (c0.is_zero() || c1.is_zero()) return false;
    // Independent over Q iff some 2x2 minor is nonzero.
    for (std::size_t i = 0; i < c0.dim(); ++i)
        for (std::size_t j = i + 1; j < c0.dim(); ++j) {
            __int128 minor = __int128(c0.coefficients()[i]) * c1.coefficients()[j] -
                             __int128(c0.coefficients()[j]) * c1.coefficients()[i];
            if (minor != 0) return true;
        }
    return false;
}

}  // namespace floertori
