#include "floertori/floer.hpp"

#include <cstdlib>
#include <sstream>

namespace floertori {

std::string to_string(AmbientMode mode) {
    return mode == AmbientMode::InteriorOnly ? "interior_only" : "fiber_sum";
}

std::string to_string(ObstructionScope scope) {
    return scope == ObstructionScope::Interior ? "interior" : "fiber_sum";
}

std::string to_string(ObstructionConclusion conclusion) {
    return conclusion == ObstructionConclusion::NoNonconstantDiscs ? "no_nonconstant_discs"
                                                                   : "undetermined";
}

TorusPairConfig::TorusPairConfig(SurfaceModel surface, CurveClass gamma0, CurveClass gamma1,
                                 FiberedLinkSpec link, AmbientMode ambient,
                                 std::vector<FiberSumSite> sites)
    : surface_(surface),
      gamma0_(std::move(gamma0)),
      gamma1_(std::move(gamma1)),
      link_(std::move(link)),
      ambient_(ambient),
      sites_(std::move(sites)) {
    if (gamma0_.dim() != surface_.dim() || gamma1_.dim() != surface_.dim())
        throw ModelMismatch("curve class dimension does not match the surface");
    if (link_.fiber_genus() != surface_.genus())
        throw ModelMismatch("link fiber genus does not match the surface");
    if (ambient_ == AmbientMode::FiberSum) {
        if (static_cast<long long>(sites_.size()) != link_.meridian_count)
            throw ModelMismatch("fiber sum needs exactly one site record per meridian");
    } else if (!sites_.empty()) {
        throw DomainError("interior ambient takes no fiber-sum site data");
    }
}

const CurveClass& TorusPairConfig::gamma(int which) const {
    if (which == 0) return gamma0_;
    if (which == 1) return gamma1_;
    throw DomainError("torus selector must be 0 or 1");
}

bool ObstructionCertificate::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

void conclude(ObstructionCertificate& cert) {
    cert.conclusion = cert.all_passed() ? ObstructionConclusion::NoNonconstantDiscs
                                        : ObstructionConclusion::Undetermined;
}

void add_genus_check(ObstructionCertificate& cert, const TorusPairConfig& config) {
    cert.checks.push_back({"fiber_genus", config.surface().genus() >= 1,
                           "the fiber surface has genus at least 1"});
}

void add_curve_check(ObstructionCertificate& cert, const TorusPairConfig& config, int which) {
    const CurveClass& c = config.gamma(which);
    std::string name = which == 0 ? "gamma0_primitive" : "gamma1_primitive";
    std::string stmt = (which == 0 ? std::string("gamma0") : std::string("gamma1")) +
                       " is a primitive (nonzero, indivisible) class";
    cert.checks.push_back({std::move(name), !c.is_zero() && c.is_primitive(), std::move(stmt)});
}

void add_pair_checks(ObstructionCertificate& cert, const TorusPairConfig& config) {
    add_genus_check(cert, config);
    add_curve_check(cert, config, 0);
    add_curve_check(cert, config, 1);
    cert.checks.push_back({"independent",
                           independence_check(config.surface(), config.gamma0(), config.gamma1()),
                           "gamma0 and gamma1 are linearly independent"});
    const long long pairing =
        intersection_number(config.surface(), config.gamma0(), config.gamma1());
    cert.checks.push_back({"single_transverse_point", pairing == 1 || pairing == -1,
                           "the curves meet transversely in a single point"});
}

void add_site_checks(ObstructionCertificate& cert, const TorusPairConfig& config) {
    for (std::size_t i = 0; i < config.sites().size(); ++i) {
        const FiberSumSite& s = config.sites()[i];
        const std::string tag = "site" + std::to_string(i + 1);
        cert.checks.push_back(
            {tag + "_complement_simply_connected", s.complement_simply_connected,
             tag + ": the summand minus a neighborhood of the gluing torus is simply connected"});
        cert.checks.push_back(
            {tag + "_square_zero_symplectic_torus", s.fiber_square_zero_symplectic_torus,
             tag + ": the gluing fiber is a symplectic torus of square zero"});
        cert.checks.push_back(
            {tag + "_meridian_disjoint", s.meridian_disjoint_from_curves,
             tag + ": the meridian lies away from both curves"});
    }
}

}  // namespace

ObstructionCertificate check_interior_obstruction(const TorusPairConfig& config) {
    ObstructionCertificate cert;
    cert.scope = ObstructionScope::Interior;
    add_pair_checks(cert, config);
    conclude(cert);
    return cert;
}

ObstructionCertificate check_single_torus_obstruction(const TorusPairConfig& config, int which) {
    if (which != 0 && which != 1) throw DomainError("torus selector must be 0 or 1");
    ObstructionCertificate cert;
    cert.scope = config.ambient() == AmbientMode::FiberSum ? ObstructionScope::FiberSum
                                                           : ObstructionScope::Interior;
    add_genus_check(cert, config);
    add_curve_check(cert, config, which);
    if (config.ambient() == AmbientMode::FiberSum) add_site_checks(cert, config);
    conclude(cert);
    return cert;
}

ObstructionCertificate check_fiber_sum_obstruction(const TorusPairConfig& config) {
    if (config.ambient() != AmbientMode::FiberSum)
        throw AmbientMismatch("fiber-sum obstruction check needs a fiber-sum ambient");
    ObstructionCertificate cert;
    cert.scope = ObstructionScope::FiberSum;
    add_pair_checks(cert, config);
    add_site_checks(cert, config);
    conclude(cert);
    return cert;
}

std::vector<long long> clean_intersection_betti(const TorusPairConfig& config) {
    if (config.gamma1() == config.gamma0() || config.gamma1() == -config.gamma0())
        return {1, 2, 1};
    const long long pairing =
        intersection_number(config.surface(), config.gamma0(), config.gamma1());
    if (pairing == 1 || pairing == -1) return {1, 1};
    std::ostringstream os;
    os << "curves with pairing " << pairing
       << " do not intersect cleanly (need a single transverse point or equal classes)";
    throw NotCleanlyIntersecting(os.str());
}

long long SpectralSequencePage::rank(long long p, long long q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

SpectralSequencePage e2_page(const std::vector<long long>& betti, const FiltrationParam& p,
                             PageWindow window) {
    if (betti.empty()) throw EmptyInput("Betti vector must be non-empty");
    for (long long b : betti)
        if (b < 0) throw DomainError("Betti numbers are non-negative");
    if (window.pmax < 0 || window.qmax < 0)
        throw DomainError("page window bounds must be non-negative");

    std::map<std::pair<long long, long long>, long long> entries;
    for (long long pd = 0; pd <= window.pmax; ++pd) {
        // One ring generator per filtration band in each even internal
        // degree, so degree k contributes exactly when pd - k is even.
        long long rank = 0;
        for (std::size_t k = 0; k < betti.size(); ++k)
            if ((pd - static_cast<long long>(k)) % 2 == 0) rank += betti[k];
        if (rank == 0) continue;
        for (long long q = 0; q <= window.qmax; ++q) entries[{pd, q}] = rank;
    }
    return SpectralSequencePage{std::move(entries), betti, p};
}

namespace {

std::string undetermined_message(const ObstructionCertificate& cert) {
    std::string out = "disc obstruction undetermined; failed hypotheses:";
    bool any = false;
    for (const auto& c : cert.checks) {
        if (c.passed) continue;
        out += ' ';
        out += c.name;
        any = true;
    }
    if (!any) out += " (none recorded)";
    return out;
}

}  // namespace

ObstructionUndetermined::ObstructionUndetermined(ObstructionCertificate cert)
    : Error(undetermined_message(cert)), cert_(std::move(cert)) {}

HFResult collapse(const SpectralSequencePage& page, const ObstructionCertificate& cert) {
    if (cert.conclusion != ObstructionConclusion::NoNonconstantDiscs)
        throw ObstructionUndetermined(cert);
    return HFResult{GradedModule(page.source_betti),
                    CollapseRecord{cert.scope, cert.conclusion, page.lambda_star.lambda_star()}};
}

namespace {

void require_parity(const TorusPairConfig& config, const HFOptions& opts) {
    if (config.ambient() != AmbientMode::FiberSum) return;
    if (!opts.parity)
        throw MaslovParityUnverified(
            "fiber-sum HF needs an even-parity certificate; none was supplied");
    if (opts.parity->verdict != ParityVerdict::Even)
        throw MaslovParityUnverified("fiber-sum HF needs verdict even; certificate is unverified");
}

}  // namespace

HFResult hf_self(const TorusPairConfig& config, int which, const HFOptions& opts) {
    ObstructionCertificate cert = check_single_torus_obstruction(config, which);
    if (cert.conclusion != ObstructionConclusion::NoNonconstantDiscs)
        throw ObstructionUndetermined(cert);
    require_parity(config, opts);
    const std::vector<long long> betti = {1, 2, 1};
    return collapse(e2_page(betti, opts.lambda_star, opts.window), cert);
}

HFResult hf_pair(const TorusPairConfig& config, const HFOptions& opts) {
    if (config.gamma1() == config.gamma0() || config.gamma1() == -config.gamma0())
        return hf_self(config, 0, opts);
    ObstructionCertificate cert = config.ambient() == AmbientMode::FiberSum
                                      ? check_fiber_sum_obstruction(config)
                                      : check_interior_obstruction(config);
    if (cert.conclusion != ObstructionConclusion::NoNonconstantDiscs)
        throw ObstructionUndetermined(cert);
    require_parity(config, opts);
    const std::vector<long long> betti = clean_intersection_betti(config);
    return collapse(e2_page(betti, opts.lambda_star, opts.window), cert);
}

}  // namespace floertori
