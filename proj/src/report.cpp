#include "floertori/report.hpp"

#include <sstream>

#include "json.hpp"

namespace floertori {

using nlohmann::json;

namespace {

PairEntry classify_pair(const SpecFile& spec, const MonodromyMap& m, const IsotopyReport& r,
                        const HFOptions& opts, std::size_t i, std::size_t j) {
    PairEntry e;
    e.from = spec.curves[i].name;
    e.to = spec.curves[j].name;

    // Interior HF of the source torus and of the pair. Any failure is
    // recorded on the entry; the report never fabricates ranks.
    try {
        const TorusPairConfig cfg = pair_config(spec, i, j, AmbientMode::InteriorOnly);
        try {
            e.hf_self.module = hf_self(cfg, 0, opts).module;
        } catch (const Error& err) {
            e.hf_self.failure = err.what();
        }
        try {
            e.hf_pair.module = hf_pair(cfg, opts).module;
        } catch (const Error& err) {
            e.hf_pair.failure = err.what();
        }
    } catch (const Error& err) {
        e.hf_self.failure = err.what();
        e.hf_pair.failure = err.what();
    }

    if (i == j) {
        e.hamiltonian_isotopic.note = "identical torus; HF cannot distinguish it from itself";
    } else if (!e.hf_self.computed() || !e.hf_pair.computed()) {
        e.hamiltonian_isotopic.note = "HF not available for this pair";
    } else if (module_iso(*e.hf_pair.module, *e.hf_self.module)) {
        e.hamiltonian_isotopic.note = "HF groups are isomorphic; no distinction";
    } else {
        e.hamiltonian_isotopic.is_no = true;
    }

    const std::vector<OrbitHit> hits =
        orbit_relations(m, spec.curves[i].curve, spec.curves[j].curve, r.orbit_bound_used);
    e.symplectic_isotopy_interior.yes = !hits.empty();
    e.symplectic_isotopy_interior.relations = hits;

    // In the summed manifold the monodromy flow gives a Lagrangian
    // isotopy when the map has finite order and carries one curve to
    // (a sign of) the other.
    if (spec.ambient == AmbientMode::FiberSum && r.monodromy_order && !hits.empty()) {
        e.lagrangian_isotopy_fibersum.yes = true;
        e.lagrangian_isotopy_fibersum.relations = hits;
    }

    if (spec.ambient != AmbientMode::FiberSum) {
        e.symplectic_isotopy_fibersum.note = "spec declares no fiber-sum ambient";
    } else if (!r.parity || r.parity->verdict != ParityVerdict::Even) {
        e.symplectic_isotopy_fibersum.note =
            "even-parity certificate unavailable; fiber-sum HF withheld";
    } else {
        e.symplectic_isotopy_fibersum.parity = r.parity;
        try {
            const TorusPairConfig fcfg = pair_config(spec, i, j, AmbientMode::FiberSum);
            const GradedModule self_m = hf_self(fcfg, 0, opts).module;
            const GradedModule pair_m = hf_pair(fcfg, opts).module;
            e.symplectic_isotopy_fibersum.hf_self_fibersum = self_m;
            e.symplectic_isotopy_fibersum.hf_pair_fibersum = pair_m;
            if (!module_iso(pair_m, self_m)) {
                e.symplectic_isotopy_fibersum.is_no = true;
            } else if (i == j) {
                e.symplectic_isotopy_fibersum.note =
                    "identical torus; HF cannot distinguish it from itself";
            } else {
                e.symplectic_isotopy_fibersum.note = "HF groups are isomorphic; no distinction";
            }
        } catch (const Error& err) {
            e.symplectic_isotopy_fibersum.note = err.what();
        }
    }

    if (!hits.empty()) {
        e.smooth_isotopy.present = true;
        e.smooth_isotopy.witness = hits.front();
    }
    return e;
}

json parity_json(const ParityCertificate& c) {
    json o;
    o["index_fiber"] = c.index_fiber;
    o["index_circle"] = c.index_circle;
    o["c1_even"] = c.c1_even;
    o["verdict"] = to_string(c.verdict);
    return o;
}

json module_or_failure_json(const ModuleOrFailure& mf) {
    json o;
    if (mf.computed())
        o["ranks"] = mf.module->ranks();
    else
        o["failure"] = mf.failure;
    return o;
}

json hits_json(const std::vector<OrbitHit>& hits) {
    json a = json::array();
    for (const OrbitHit& h : hits) {
        json o;
        o["power"] = h.power;
        o["sign"] = h.sign;
        a.push_back(o);
    }
    return a;
}

json monodromy_verdict_json(const MonodromyVerdict& v) {
    json o;
    o["verdict"] = v.yes ? "yes_via_monodromy" : "no_evidence";
    o["relations"] = hits_json(v.relations);
    return o;
}

json pair_json(const PairEntry& e) {
    json o;
    o["from"] = e.from;
    o["to"] = e.to;
    o["hf_self"] = module_or_failure_json(e.hf_self);
    o["hf_pair"] = module_or_failure_json(e.hf_pair);

    json ham;
    if (e.hamiltonian_isotopic.is_no) {
        ham["verdict"] = "no";
        json w;
        w["hf_pair_ranks"] = e.hf_pair.module->ranks();
        w["hf_self_ranks"] = e.hf_self.module->ranks();
        ham["witness"] = w;
    } else {
        ham["verdict"] = "inconclusive";
        ham["note"] = e.hamiltonian_isotopic.note;
    }
    o["hamiltonian_isotopic"] = ham;

    o["symplectic_isotopy_interior"] = monodromy_verdict_json(e.symplectic_isotopy_interior);
    o["lagrangian_isotopy_fibersum"] = monodromy_verdict_json(e.lagrangian_isotopy_fibersum);

    json fs;
    if (e.symplectic_isotopy_fibersum.is_no) {
        fs["verdict"] = "no";
        fs["parity"] = parity_json(*e.symplectic_isotopy_fibersum.parity);
        json w;
        w["hf_pair_ranks"] = e.symplectic_isotopy_fibersum.hf_pair_fibersum->ranks();
        w["hf_self_ranks"] = e.symplectic_isotopy_fibersum.hf_self_fibersum->ranks();
        fs["witness"] = w;
    } else {
        fs["verdict"] = "inconclusive";
        fs["note"] = e.symplectic_isotopy_fibersum.note;
    }
    o["symplectic_isotopy_fibersum"] = fs;

    json sm;
    if (e.smooth_isotopy.present) {
        sm["verdict"] = "evidence_via_orbit";
        sm["power"] = e.smooth_isotopy.witness->power;
        sm["sign"] = e.smooth_isotopy.witness->sign;
    } else {
        sm["verdict"] = "no_evidence";
    }
    o["smooth_isotopy"] = sm;
    return o;
}

json report_json(const IsotopyReport& r) {
    json o;
    o["schema_version"] = r.schema_version;
    json link;
    link["factors"] = r.factors;
    link["meridian_count"] = r.meridian_count;
    link["fiber_genus"] = r.fiber_genus;
    o["link"] = link;
    o["ambient"] = to_string(r.ambient);
    json curves = json::array();
    for (const NamedCurve& c : r.curves) {
        json cj;
        cj["name"] = c.name;
        cj["coefficients"] = c.curve.coefficients();
        curves.push_back(cj);
    }
    o["curves"] = curves;
    o["lambda_star"] = r.lambda_star.to_string();
    json mono;
    mono["matrix"] = r.monodromy_matrix.rows();
    mono["order"] = r.monodromy_order ? json(*r.monodromy_order) : json(nullptr);
    mono["order_bound"] = r.order_bound;
    mono["orbit_bound"] = r.orbit_bound_used;
    o["monodromy"] = mono;
    o["parity"] = r.parity ? parity_json(*r.parity) : json(nullptr);
    json pairs = json::array();
    for (const PairEntry& e : r.pairs) pairs.push_back(pair_json(e));
    o["pairs"] = pairs;
    return o;
}

std::string module_annotation(const GradedModule& m) {
    if (m.ranks() == std::vector<long long>{1, 1}) return "H*(S^1) (x) Lambda";
    if (m.ranks() == std::vector<long long>{1, 2, 1}) return "H*(T^2) (x) Lambda";
    return "";
}

std::string module_text(const ModuleOrFailure& mf) {
    if (!mf.computed()) return "not computed (" + mf.failure + ")";
    std::string s = mf.module->to_string();
    const std::string a = module_annotation(*mf.module);
    if (!a.empty()) s += " = " + a;
    return s;
}

std::string hits_text(const std::vector<OrbitHit>& hits) {
    std::string s = "{";
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(hits[i].power) + "," +
             (hits[i].sign > 0 ? std::string("+1") : std::string("-1")) + ")";
    }
    return s + "}";
}

std::string matrix_text(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) s += ",";
            s += std::to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

std::string report_text(const IsotopyReport& r) {
    std::ostringstream os;
    os << "torus isotopy classification\n";
    os << "============================\n";
    os << "link factors:";
    for (const std::string& f : r.factors) os << " [" << f << "]";
    os << "\n";
    os << "meridian count: " << r.meridian_count << "\n";
    os << "fiber genus: " << r.fiber_genus << "\n";
    os << "ambient: " << to_string(r.ambient) << "\n";
    os << "monodromy matrix: " << matrix_text(r.monodromy_matrix) << "\n";
    if (r.monodromy_order)
        os << "monodromy order: " << *r.monodromy_order << " (searched up to " << r.order_bound
           << ")\n";
    else
        os << "monodromy order: none found up to " << r.order_bound << "\n";
    os << "orbit powers searched: 0.." << r.orbit_bound_used << "\n";
    os << "lambda*: " << r.lambda_star.to_string() << "\n";
    if (r.parity)
        os << "parity certificate: fiber index " << r.parity->index_fiber << ", circle index "
           << r.parity->index_circle << ", c1 even: " << (r.parity->c1_even ? "yes" : "no")
           << ", verdict: " << to_string(r.parity->verdict) << "\n";
    else
        os << "parity certificate: none\n";
    os << "curves:\n";
    for (const NamedCurve& c : r.curves) os << "  " << c.name << " = " << c.curve.to_string()
                                            << "\n";
    for (const PairEntry& e : r.pairs) {
        os << "\npair " << e.from << " -> " << e.to << "\n";
        os << "  HF(torus, itself)            : " << module_text(e.hf_self) << "\n";
        os << "  HF(pair)                     : " << module_text(e.hf_pair) << "\n";
        os << "  hamiltonian isotopic         : ";
        if (e.hamiltonian_isotopic.is_no)
            os << "no (ranks " << e.hf_pair.module->to_string() << " vs "
               << e.hf_self.module->to_string() << ")";
        else
            os << "inconclusive (" << e.hamiltonian_isotopic.note << ")";
        os << "\n";
        os << "  symplectic isotopy, interior : ";
        if (e.symplectic_isotopy_interior.yes)
            os << "yes via monodromy " << hits_text(e.symplectic_isotopy_interior.relations);
        else
            os << "no evidence";
        os << "\n";
        os << "  lagrangian isotopy, fiber sum: ";
        if (e.lagrangian_isotopy_fibersum.yes)
            os << "yes via monodromy " << hits_text(e.lagrangian_isotopy_fibersum.relations);
        else
            os << "no evidence";
        os << "\n";
        os << "  symplectic isotopy, fiber sum: ";
        if (e.symplectic_isotopy_fibersum.is_no)
            os << "no (parity " << to_string(e.symplectic_isotopy_fibersum.parity->verdict)
               << ", ranks " << e.symplectic_isotopy_fibersum.hf_pair_fibersum->to_string()
               << " vs " << e.symplectic_isotopy_fibersum.hf_self_fibersum->to_string() << ")";
        else
            os << "inconclusive (" << e.symplectic_isotopy_fibersum.note << ")";
        os << "\n";
        os << "  smooth isotopy               : ";
        if (e.smooth_isotopy.present)
            os << "evidence via orbit (power " << e.smooth_isotopy.witness->power << ", sign "
               << (e.smooth_isotopy.witness->sign > 0 ? "+1" : "-1") << ")";
        else
            os << "no evidence";
        os << "\n";
    }
    return os.str();
}

}  // namespace

IsotopyReport classify(const SpecFile& spec) {
    IsotopyReport r;
    for (const LinkFactor& f : spec.link.factors) r.factors.push_back(factor_description(f));
    r.meridian_count = spec.link.meridian_count;
    r.fiber_genus = spec.link.fiber_genus();
    r.ambient = spec.ambient;
    r.curves = spec.curves;
    r.lambda_star = spec.lambda_star;

    const MonodromyMap m = link_monodromy(spec.link);
    r.monodromy_matrix = m.matrix();
    r.order_bound = spec.bounds.order_bound;
    r.monodromy_order = order(m, spec.bounds.order_bound);
    // With a finite order the orbit is periodic; powers 0..order-1 see
    // every image, so the scan is canonical. Otherwise use the bound.
    r.orbit_bound_used = r.monodromy_order ? *r.monodromy_order - 1 : spec.bounds.orbit_bound;
    r.parity = parity_certificate(spec);

    const HFOptions opts{FiltrationParam(spec.lambda_star), spec.bounds.page_window, r.parity};

    for (std::size_t i = 0; i < spec.curves.size(); ++i)
        for (std::size_t j = 0; j < spec.curves.size(); ++j)
            r.pairs.push_back(classify_pair(spec, m, r, opts, i, j));
    return r;
}

std::string emit_report(const IsotopyReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) return report_json(report).dump(2) + "\n";
    return report_text(report);
}

}  // namespace floertori
