#include "floertori/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "floertori/errors.hpp"
#include "floertori/floer.hpp"
#include "floertori/maslov.hpp"
#include "floertori/monodromy.hpp"
#include "floertori/report.hpp"
#include "floertori/specfile.hpp"

namespace floertori {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string spec_path;
    std::string format = "text";
    std::string out_path;
    std::optional<long long> bound;
    std::optional<std::string> lambda_star;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_bound, bool with_lambda) {
    cmd->add_option("--spec", o.spec_path, "path to the input spec file")->required();
    cmd->add_option("--format", o.format, "output format (default text)")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", o.out_path, "write the output to this file instead of stdout");
    if (with_bound)
        cmd->add_option("--bound", o.bound, "override the order/orbit search bound");
    if (with_lambda)
        cmd->add_option("--lambda-star", o.lambda_star,
                        "override the filtration scale (positive rational, e.g. 1 or 1/2)");
}

SpecFile load_with_overrides(const CommonOpts& o) {
    SpecFile spec = load_spec(o.spec_path);
    if (o.bound) {
        if (*o.bound < 1) throw ValidationError("--bound: must be at least 1");
        spec.bounds.order_bound = *o.bound;
        spec.bounds.orbit_bound = *o.bound;
    }
    if (o.lambda_star) {
        Rational q;
        try {
            q = Rational::parse(*o.lambda_star);
        } catch (const DomainError&) {
            throw ValidationError("--lambda-star: not a valid rational");
        }
        if (!(Rational(0) < q)) throw ValidationError("--lambda-star: must be positive");
        spec.lambda_star = q;
    }
    return spec;
}

void deliver(const std::string& text, const CommonOpts& o, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error("cannot write output file: " + o.out_path);
    f << text;
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

std::string module_annotation(const GradedModule& m) {
    if (m.ranks() == std::vector<long long>{1, 1}) return "H*(S^1) (x) Lambda";
    if (m.ranks() == std::vector<long long>{1, 2, 1}) return "H*(T^2) (x) Lambda";
    return "";
}

std::string annotated(const GradedModule& m) {
    std::string s = m.to_string();
    const std::string a = module_annotation(m);
    if (!a.empty()) s += " = " + a;
    return s;
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

std::string cmd_monodromy(const SpecFile& spec, const std::string& format) {
    const MonodromyMap m = link_monodromy(spec.link);
    const auto ord = order(m, spec.bounds.order_bound);
    const long long scan = ord ? *ord - 1 : spec.bounds.orbit_bound;

    if (format == "json") {
        json o;
        o["matrix"] = m.matrix().rows();
        o["char_poly"] = m.matrix().char_poly();
        o["order"] = ord ? json(*ord) : json(nullptr);
        o["order_bound"] = spec.bounds.order_bound;
        o["orbit_bound"] = scan;
        json rels = json::array();
        for (const NamedCurve& a : spec.curves) {
            for (const NamedCurve& b : spec.curves) {
                json r;
                r["from"] = a.name;
                r["to"] = b.name;
                r["relations"] = hits_json(orbit_relations(m, a.curve, b.curve, scan));
                rels.push_back(r);
            }
        }
        o["orbit_relations"] = rels;
        return o.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "monodromy matrix: " << matrix_text(m.matrix()) << "\n";
    os << "characteristic polynomial (ascending coefficients): [";
    const auto cp = m.matrix().char_poly();
    for (std::size_t i = 0; i < cp.size(); ++i) {
        if (i) os << ",";
        os << cp[i];
    }
    os << "]\n";
    if (ord)
        os << "order: " << *ord << " (searched up to " << spec.bounds.order_bound << ")\n";
    else
        os << "order: none found up to " << spec.bounds.order_bound << "\n";
    os << "orbit powers searched: 0.." << scan << "\n";
    os << "orbit relations:\n";
    for (const NamedCurve& a : spec.curves)
        for (const NamedCurve& b : spec.curves)
            os << "  " << a.name << " -> " << b.name << ": "
               << hits_text(orbit_relations(m, a.curve, b.curve, scan)) << "\n";
    return os.str();
}

std::string cmd_hf(const SpecFile& spec, const std::string& format) {
    const auto parity = parity_certificate(spec);
    const HFOptions opts{FiltrationParam(spec.lambda_star), spec.bounds.page_window, parity};

    struct Row {
        std::string from, to;
        std::optional<GradedModule> self_m, pair_m;
        std::string self_err, pair_err;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < spec.curves.size(); ++i) {
        for (std::size_t j = 0; j < spec.curves.size(); ++j) {
            Row row{spec.curves[i].name, spec.curves[j].name, {}, {}, "", ""};
            const TorusPairConfig cfg = pair_config(spec, i, j, spec.ambient);
            try {
                row.self_m = hf_self(cfg, 0, opts).module;
            } catch (const Error& e) {
                row.self_err = e.what();
            }
            try {
                row.pair_m = hf_pair(cfg, opts).module;
            } catch (const Error& e) {
                row.pair_err = e.what();
            }
            rows.push_back(std::move(row));
        }
    }

    if (format == "json") {
        json o;
        o["ambient"] = to_string(spec.ambient);
        o["lambda_star"] = spec.lambda_star.to_string();
        json pairs = json::array();
        for (const Row& r : rows) {
            json p;
            p["from"] = r.from;
            p["to"] = r.to;
            json s;
            if (r.self_m)
                s["ranks"] = r.self_m->ranks();
            else
                s["failure"] = r.self_err;
            p["hf_self"] = s;
            json q;
            if (r.pair_m)
                q["ranks"] = r.pair_m->ranks();
            else
                q["failure"] = r.pair_err;
            p["hf_pair"] = q;
            pairs.push_back(p);
        }
        o["pairs"] = pairs;
        return o.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "ambient: " << to_string(spec.ambient) << "\n";
    os << "lambda*: " << spec.lambda_star.to_string() << "\n";
    for (const Row& r : rows) {
        os << "pair " << r.from << " -> " << r.to << "\n";
        os << "  HF(" << r.from << ", " << r.from << ") = ";
        if (r.self_m)
            os << annotated(*r.self_m);
        else
            os << "not computed (" << r.self_err << ")";
        os << "\n";
        os << "  HF(" << r.from << ", " << r.to << ") = ";
        if (r.pair_m)
            os << annotated(*r.pair_m);
        else
            os << "not computed (" << r.pair_err << ")";
        os << "\n";
    }
    return os.str();
}

std::string cmd_maslov(const SpecFile& spec, const std::string& format) {
    if (!spec.maslov)
        throw ValidationError("$.maslov: missing (the maslov command needs disc data)");
    const MaslovData& d = *spec.maslov;
    const long long fi = maslov_index(d.fiber_disc());
    const long long ci = maslov_index(d.circle_disc());
    const ParityCertificate cert = parity_check(d.fiber_disc(), d.circle_disc(), d.c1_even);
    const bool usable = parity_certificate(spec).has_value();

    if (format == "json") {
        json o;
        o["index_fiber"] = fi;
        o["index_circle"] = ci;
        o["c1_even"] = cert.c1_even;
        o["verdict"] = to_string(cert.verdict);
        o["usable_for_fiber_sum"] = usable;
        return o.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "fiber-direction disc index: " << fi << "\n";
    os << "circle-direction disc index: " << ci << "\n";
    os << "c1 even (attested): " << (cert.c1_even ? "yes" : "no") << "\n";
    os << "parity verdict: " << to_string(cert.verdict) << "\n";
    os << "usable for fiber-sum HF: " << (usable ? "yes" : "no") << "\n";
    return os.str();
}

std::string cmd_validate(const SpecFile& spec, const std::string& format) {
    if (format == "json") {
        json o;
        o["valid"] = true;
        o["curves"] = static_cast<long long>(spec.curves.size());
        o["fiber_genus"] = spec.link.fiber_genus();
        o["ambient"] = to_string(spec.ambient);
        json factors = json::array();
        for (const LinkFactor& f : spec.link.factors) factors.push_back(factor_description(f));
        o["factors"] = factors;
        return o.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "spec valid: " << spec.curves.size() << " curve(s), fiber genus "
       << spec.link.fiber_genus() << ", ambient " << to_string(spec.ambient) << "\n";
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification of S^1 x curve tori in surgered fibered-link manifolds"};
    app.require_subcommand(1);

    CommonOpts mono_o, hf_o, mas_o, cls_o, val_o;
    CLI::App* mono =
        app.add_subcommand("monodromy", "print the matrix, its order, and orbit relations");
    add_common(mono, mono_o, true, false);
    CLI::App* hf = app.add_subcommand("hf", "Floer cohomology of the configured torus pairs");
    add_common(hf, hf_o, false, true);
    CLI::App* mas = app.add_subcommand("maslov", "disc indices and the parity certificate");
    add_common(mas, mas_o, false, false);
    CLI::App* cls = app.add_subcommand("classify", "full isotopy classification report");
    add_common(cls, cls_o, true, true);
    CLI::App* val = app.add_subcommand("validate", "parse and validate a spec file");
    add_common(val, val_o, false, false);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("floertori");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mono->parsed()) {
            deliver(cmd_monodromy(load_with_overrides(mono_o), mono_o.format), mono_o, out);
        } else if (hf->parsed()) {
            deliver(cmd_hf(load_with_overrides(hf_o), hf_o.format), hf_o, out);
        } else if (mas->parsed()) {
            deliver(cmd_maslov(load_with_overrides(mas_o), mas_o.format), mas_o, out);
        } else if (cls->parsed()) {
            const SpecFile spec = load_with_overrides(cls_o);
            const IsotopyReport report = classify(spec);
            deliver(emit_report(report, cls_o.format == "json" ? ReportFormat::Json
                                                               : ReportFormat::Text),
                    cls_o, out);
        } else if (val->parsed()) {
            deliver(cmd_validate(load_with_overrides(val_o), val_o.format), val_o, out);
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace floertori
