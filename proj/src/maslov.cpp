#include "floertori/maslov.hpp"

#include "floertori/errors.hpp"

namespace floertori {

std::string to_string(BoundaryLabel label) {
    return label == BoundaryLabel::FiberDirection ? "fiber" : "circle";
}

std::string to_string(ParityVerdict v) {
    return v == ParityVerdict::Even ? "even" : "unverified";
}

FramedDisc::FramedDisc(std::vector<long long> cap_framings, long long framing_defect,
                       BoundaryLabel boundary_label, bool boundary_degenerate)
    : cap_framings_(std::move(cap_framings)),
      framing_defect_(framing_defect),
      boundary_label_(boundary_label),
      boundary_degenerate_(boundary_degenerate) {
    if (cap_framings_.empty() && !boundary_degenerate_)
        throw EmptyInput("a framed disc needs at least one cap unless declared boundary-degenerate");
}

long long maslov_index(const FramedDisc& d) {
    long long sum = 0;
    for (long long f : d.cap_framings()) {
        if (__builtin_add_overflow(sum, f, &sum))
            throw OverflowError("cap framing sum overflow");
    }
    long long out = 0;
    if (__builtin_sub_overflow(sum, d.framing_defect(), &out))
        throw OverflowError("framing defect subtraction overflow");
    return out;
}

ParityCertificate parity_check(const FramedDisc& d_fiber, const FramedDisc& d_circle,
                               bool c1_even) {
    if (d_fiber.boundary_label() == d_circle.boundary_label())
        throw BasisNotSpanning("the two disc boundaries must cover both torus directions");
    // Accept the discs in either order; sort by label.
    const FramedDisc& fiber =
        d_fiber.boundary_label() == BoundaryLabel::FiberDirection ? d_fiber : d_circle;
    const FramedDisc& circle =
        d_fiber.boundary_label() == BoundaryLabel::CircleDirection ? d_fiber : d_circle;

    ParityCertificate cert;
    cert.index_fiber = maslov_index(fiber);
    cert.index_circle = maslov_index(circle);
    cert.c1_even = c1_even;
    const bool both_even = cert.index_fiber % 2 == 0 && cert.index_circle % 2 == 0;
    cert.verdict = (both_even && c1_even) ? ParityVerdict::Even : ParityVerdict::Unverified;
    return cert;
}

}  // namespace floertori
