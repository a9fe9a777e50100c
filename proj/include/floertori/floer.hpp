#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floertori/errors.hpp"
#include "floertori/maslov.hpp"
#include "floertori/monodromy.hpp"
#include "floertori/novikov.hpp"
#include "floertori/surface.hpp"

namespace floertori {

// Geometric facts about one meridian gluing site that the homological
// data model cannot derive. They arrive attested in the input and are
// echoed into certificates, keeping explicit what was checked and what
// was assumed.
struct FiberSumSite {
    bool complement_simply_connected = false;
    bool fiber_square_zero_symplectic_torus = false;
    bool meridian_disjoint_from_curves = false;
    bool vanishing_cycle_identification = false;
};

// Where the tori live: the interior mapping-torus piece S^1 x M of the
// surgered link complement, or the closed manifold obtained by fiber
// summing along the meridian tori (one summand per meridian).
enum class AmbientMode { InteriorOnly, FiberSum };

std::string to_string(AmbientMode mode);

// A pair of Lagrangian tori S^1 x gamma_0 and S^1 x gamma_1 over one
// fibered link. Structural consistency (dimensions, site counts) is
// enforced here; the geometric hypotheses are evaluated into
// certificates, so degenerate configurations stay constructible.
class TorusPairConfig {
public:
    TorusPairConfig(SurfaceModel surface, CurveClass gamma0, CurveClass gamma1,
                    FiberedLinkSpec link, AmbientMode ambient,
                    std::vector<FiberSumSite> sites = {});

    const SurfaceModel& surface() const { return surface_; }
    const CurveClass& gamma0() const { return gamma0_; }
    const CurveClass& gamma1() const { return gamma1_; }
    const CurveClass& gamma(int which) const;
    const FiberedLinkSpec& link() const { return link_; }
    AmbientMode ambient() const { return ambient_; }
    const std::vector<FiberSumSite>& sites() const { return sites_; }

private:
    SurfaceModel surface_;
    CurveClass gamma0_;
    CurveClass gamma1_;
    FiberedLinkSpec link_;
    AmbientMode ambient_;
    std::vector<FiberSumSite> sites_;
};

enum class ObstructionScope { Interior, FiberSum };
enum class ObstructionConclusion { NoNonconstantDiscs, Undetermined };

std::string to_string(ObstructionScope scope);
std::string to_string(ObstructionConclusion conclusion);

// One named hypothesis with its verdict and a plain statement of what
// it requires.
struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string statement;
};

// Checkable record of the disc-obstruction argument: lists every
// hypothesis with its verdict. The conclusion is NoNonconstantDiscs
// exactly when every check passed; failures are recorded, not thrown.
struct ObstructionCertificate {
    ObstructionScope scope = ObstructionScope::Interior;
    std::vector<HypothesisCheck> checks;
    ObstructionConclusion conclusion = ObstructionConclusion::Undetermined;

    bool all_passed() const;
};

// Pair obstruction in the interior manifold: fiber genus at least 1,
// both classes primitive and independent, geometric intersection a
// single transverse point. Usable on either ambient mode (it is the
// interior core of the fiber-sum check).
ObstructionCertificate check_interior_obstruction(const TorusPairConfig& config);

// Obstruction for a single torus (which = 0 or 1): genus plus
// primitivity of that one class; under FiberSum ambient also the
// per-site attestations. Self-pairing needs no transversality hypothesis.
ObstructionCertificate check_single_torus_obstruction(const TorusPairConfig& config, int which);

// Pair obstruction in the fiber-summed manifold: all interior checks
// plus, for every site, the attested simply-connected complement,
// square-zero symplectic gluing torus, and meridian disjointness.
// Throws AmbientMismatch unless the config is FiberSum.
ObstructionCertificate check_fiber_sum_obstruction(const TorusPairConfig& config);

// Betti numbers of the clean intersection of the two tori: (1,1) for
// distinct curves meeting in one point (intersection a circle),
// (1,2,1) when gamma1 = +-gamma0 (intersection the whole torus).
// Throws NotCleanlyIntersecting otherwise.
std::vector<long long> clean_intersection_betti(const TorusPairConfig& config);

struct PageWindow {
    long long pmax = 8;
    long long qmax = 8;
};

// Finite window of the second page of the action spectral sequence.
// entries holds the nonzero ranks; source_betti the Betti vector it
// was built from; lambda_star the band width of the filtration.
struct SpectralSequencePage {
    std::map<std::pair<long long, long long>, long long> entries;
    std::vector<long long> source_betti;
    FiltrationParam lambda_star;

    long long rank(long long p, long long q) const;
};

// rank(p,q) = sum over k with p-k even of betti[k]: the coefficient
// ring contributes one generator per filtration band in each even
// internal degree. Throws EmptyInput for an empty Betti vector.
SpectralSequencePage e2_page(const std::vector<long long>& betti, const FiltrationParam& p,
                             PageWindow window = {});

// How a graded module was obtained: which obstruction scope licensed
// the degeneration of the page, at which filtration scale.
struct CollapseRecord {
    ObstructionScope scope = ObstructionScope::Interior;
    ObstructionConclusion gate = ObstructionConclusion::Undetermined;
    Rational lambda_star;
};

struct HFResult {
    GradedModule module;
    CollapseRecord provenance;
};

// Raised when a computation needs a clean obstruction certificate but
// got one with failed hypotheses; carries the certificate so callers
// can report exactly which hypothesis failed. No group is fabricated.
class ObstructionUndetermined : public Error {
public:
    explicit ObstructionUndetermined(ObstructionCertificate cert);

    const ObstructionCertificate& certificate() const { return cert_; }

private:
    ObstructionCertificate cert_;
};

// Raised by fiber-sum HF computations that lack an even-parity
// certificate for the index homomorphism.
class MaslovParityUnverified : public Error {
public:
    explicit MaslovParityUnverified(const std::string& what) : Error(what) {}
};

// Degenerates the page: with a NoNonconstantDiscs certificate there are
// no further differentials and the module keeps exactly the source
// Betti ranks. An Undetermined certificate raises
// ObstructionUndetermined instead of guessing.
HFResult collapse(const SpectralSequencePage& page, const ObstructionCertificate& cert);

struct HFOptions {
    FiltrationParam lambda_star{Rational(1)};
    PageWindow window{};
    // Required with verdict Even for any FiberSum computation.
    std::optional<ParityCertificate> parity;
};

// HF of one torus with itself: certificate, then Betti (1,2,1) of the
// torus, page, collapse. FiberSum ambient additionally requires
// opts.parity with verdict Even (else MaslovParityUnverified).
HFResult hf_self(const TorusPairConfig& config, int which = 0, const HFOptions& opts = {});

// HF of the pair: routes to hf_self when gamma1 = +-gamma0, otherwise
// certificate (interior or fiber-sum by ambient), Betti (1,1), page,
// collapse. Same parity gate under FiberSum.
HFResult hf_pair(const TorusPairConfig& config, const HFOptions& opts = {});

}  // namespace floertori
