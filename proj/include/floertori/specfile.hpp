#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "floertori/errors.hpp"
#include "floertori/floer.hpp"
#include "floertori/maslov.hpp"
#include "floertori/monodromy.hpp"
#include "floertori/rational.hpp"

namespace floertori {

// Input text is not syntactically valid JSON. Carries the position of
// the first offending byte.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long long line, long long column)
        : Error(what), line_(line), column_(column) {}

    long long line() const { return line_; }
    long long column() const { return column_; }

private:
    long long line_ = 0;
    long long column_ = 0;
};

// Well-formed JSON that violates the documented schema. The message
// always names the offending field path.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Raw Maslov disc data from an input file: cap framings and defects
// for one disc bounding in each torus direction, plus the attested
// parity of the first Chern class.
struct MaslovData {
    bool c1_even = false;
    std::vector<long long> fiber_caps;
    long long fiber_defect = 0;
    std::vector<long long> circle_caps;
    long long circle_defect = 0;

    FramedDisc fiber_disc() const;
    FramedDisc circle_disc() const;
};

struct SpecBounds {
    long long order_bound = kDefaultOrderBound;
    long long orbit_bound = 12;
    PageWindow page_window{};
};

struct NamedCurve {
    std::string name;
    CurveClass curve;
};

// Parsed and validated input file: the fibered link, the named fiber
// curves, the ambient choice with its attestations, optional Maslov
// disc data, the filtration scale, and search bounds.
struct SpecFile {
    long long schema_version = 1;
    FiberedLinkSpec link;
    std::vector<NamedCurve> curves;
    AmbientMode ambient = AmbientMode::InteriorOnly;
    std::vector<FiberSumSite> sites;
    std::optional<MaslovData> maslov;
    Rational lambda_star{1};
    SpecBounds bounds;

    SurfaceModel surface() const;
};

// Parses and validates one spec document. Malformed JSON raises
// ParseError with the line and column; any schema violation raises
// ValidationError naming the field path. Unknown fields are rejected.
SpecFile parse_spec(const std::string& text);

// parse_spec over the contents of a file.
SpecFile load_spec(const std::string& path);

// Short display form of a link factor ("trefoil", "torus_knot_2 n=3",
// ...), used when echoing a spec into reports.
std::string factor_description(const LinkFactor& factor);

// Config for the ordered pair (i, j) of named curves, in the requested
// ambient mode (sites are attached only under FiberSum).
TorusPairConfig pair_config(const SpecFile& spec, std::size_t i, std::size_t j, AmbientMode mode);

// The parity certificate the spec supports, if any. Requires Maslov
// disc data; under a fiber-sum ambient every site must additionally
// attest the vanishing-cycle identification that justifies the cap
// framings, otherwise no certificate is produced.
std::optional<ParityCertificate> parity_certificate(const SpecFile& spec);

}  // namespace floertori
