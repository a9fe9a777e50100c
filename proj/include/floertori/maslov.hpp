#pragma once

#include <string>
#include <vector>

namespace floertori {

// Which H1 generator of the Lagrangian torus S^1 x gamma the disc
// boundary represents: the curve gamma on the fiber, or the circle
// factor S^1 x pt.
enum class BoundaryLabel { FiberDirection, CircleDirection };

std::string to_string(BoundaryLabel label);

// Framing of a section pushed off inside the fiber surface, relative
// to the disc trivialization coming from capping.
inline constexpr long long kFiberPushoffDefect = -2;
// Framing defect when the pushoff runs along the circle direction.
inline constexpr long long kCirclePushoffDefect = 0;
// Framing contributed by one vanishing disc of a nodal elliptic fibre.
inline constexpr long long kVanishingDiscFraming = -1;

// A relative disc class presented by capping its boundary: each cap
// contributes its framing, and the Lagrangian pushoff contributes a
// defect relative to the disc trivialization.
class FramedDisc {
public:
    FramedDisc(std::vector<long long> cap_framings, long long framing_defect,
               BoundaryLabel boundary_label, bool boundary_degenerate = false);

    const std::vector<long long>& cap_framings() const { return cap_framings_; }
    long long framing_defect() const { return framing_defect_; }
    BoundaryLabel boundary_label() const { return boundary_label_; }
    bool boundary_degenerate() const { return boundary_degenerate_; }

private:
    std::vector<long long> cap_framings_;
    long long framing_defect_ = 0;
    BoundaryLabel boundary_label_ = BoundaryLabel::FiberDirection;
    bool boundary_degenerate_ = false;
};

// Index of the relative disc class: sum of cap framings minus the
// Lagrangian framing defect.
long long maslov_index(const FramedDisc& d);

enum class ParityVerdict { Even, Unverified };

std::string to_string(ParityVerdict v);

// Evenness certificate for the index homomorphism on relative disc
// classes: two basis indices plus the attested statement that the
// first Chern class pairs evenly with everything the basis misses.
struct ParityCertificate {
    long long index_fiber = 0;
    long long index_circle = 0;
    bool c1_even = false;
    ParityVerdict verdict = ParityVerdict::Unverified;
};

// Certifies evenness from a basis of two relative discs, one bounding
// in each H1 direction of the torus (any argument order), plus the
// attested c1 parity. Two discs with the same label do not span and
// raise BasisNotSpanning.
ParityCertificate parity_check(const FramedDisc& d_fiber, const FramedDisc& d_circle,
                               bool c1_even);

}  // namespace floertori
