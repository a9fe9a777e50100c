#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floertori/floer.hpp"
#include "floertori/maslov.hpp"
#include "floertori/monodromy.hpp"
#include "floertori/specfile.hpp"

namespace floertori {

// A graded module when the computation went through, or the reason it
// was withheld. Failures are recorded as text, never as invented ranks.
struct ModuleOrFailure {
    std::optional<GradedModule> module;
    std::string failure;

    bool computed() const { return module.has_value(); }
};

// Verdict on Hamiltonian isotopy of the pair: a distinguishing "no"
// with the two rank vectors of the entry as witness, or inconclusive
// with the reason.
struct HamiltonianVerdict {
    bool is_no = false;
    std::string note;  // set when inconclusive
};

// "Yes via monodromy" evidence: the powers of the monodromy carrying
// one curve to (a sign of) the other. Empty relations mean no evidence.
struct MonodromyVerdict {
    bool yes = false;
    std::vector<OrbitHit> relations;
};

// Non-isotopy in the fiber-summed manifold needs the whole chain:
// parity certificate with verdict even plus both fiber-sum HF groups,
// non-isomorphic. Anything less is inconclusive, with the reason.
struct FiberSumNoVerdict {
    bool is_no = false;
    std::optional<ParityCertificate> parity;
    std::optional<GradedModule> hf_self_fibersum;
    std::optional<GradedModule> hf_pair_fibersum;
    std::string note;  // set when inconclusive
};

// Orbit relations are evidence of smooth isotopy (the monodromy flow
// moves one torus to the other); the smallest hit is cited.
struct OrbitEvidenceVerdict {
    bool present = false;
    std::optional<OrbitHit> witness;
};

// Everything the tool can say about the ordered pair (from, to).
// HF fields are computed in the interior manifold; the fiber-sum HF
// appears only inside the fiber-sum non-isotopy witness.
struct PairEntry {
    std::string from;
    std::string to;
    ModuleOrFailure hf_self;
    ModuleOrFailure hf_pair;
    HamiltonianVerdict hamiltonian_isotopic;
    MonodromyVerdict symplectic_isotopy_interior;
    MonodromyVerdict lagrangian_isotopy_fibersum;
    FiberSumNoVerdict symplectic_isotopy_fibersum;
    OrbitEvidenceVerdict smooth_isotopy;
};

// Full classification: spec echo, monodromy data, the global parity
// certificate if the input supported one, and one entry per ordered
// pair of named curves (diagonal included).
struct IsotopyReport {
    long long schema_version = 1;
    std::vector<std::string> factors;
    long long meridian_count = 0;
    long long fiber_genus = 0;
    AmbientMode ambient = AmbientMode::InteriorOnly;
    std::vector<NamedCurve> curves;
    Rational lambda_star{1};
    IntMatrix monodromy_matrix;
    std::optional<long long> monodromy_order;
    long long order_bound = 0;
    long long orbit_bound_used = 0;
    std::optional<ParityCertificate> parity;
    std::vector<PairEntry> pairs;
};

// Runs the full pipeline on a validated spec: monodromy and orbit
// scans, interior HF, fiber-sum HF when parity allows, and populates
// every verdict for every ordered pair. Per-pair failures become
// inconclusive entries; the report itself always completes.
IsotopyReport classify(const SpecFile& spec);

enum class ReportFormat { Json, Text };

// Renders the report. JSON output is schema-versioned, key-sorted,
// newline-terminated, and byte-stable across runs; text output is a
// table for humans.
std::string emit_report(const IsotopyReport& report, ReportFormat format);

}  // namespace floertori
