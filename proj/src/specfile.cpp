#include "floertori/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace floertori {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) {
                known = true;
                break;
            }
        if (!known) fail(path + "." + it.key(), "unknown field");
    }
}

const json& field(const json& j, const std::string& path, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required field");
    return *it;
}

long long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<long long> get_int_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    std::vector<long long> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const DomainError& e) {
            fail(path, std::string("bad rational: ") + e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

long long get_genus(const json& j, const std::string& path) {
    const long long g = get_int(field(j, path, "genus"), path + ".genus");
    if (g < 1)
        fail(path + ".genus",
             "factor fiber genus must be at least 1 (the construction needs a nontrivially "
             "fibered link)");
    return g;
}

CurveClass get_curve(const json& j, const std::string& path, std::size_t dim) {
    std::vector<long long> coeffs = get_int_array(j, path);
    if (coeffs.size() != dim)
        fail(path, "expected " + std::to_string(dim) + " coefficients");
    return CurveClass(std::move(coeffs));
}

LinkFactor parse_factor(const json& j, const std::string& path) {
    require_object(j, path);
    const std::string type = get_string(field(j, path, "type"), path + ".type");
    if (type == "trefoil") {
        reject_unknown(j, path, {"type"});
        return TrefoilFactor{};
    }
    if (type == "torus_knot_2") {
        reject_unknown(j, path, {"type", "n"});
        const long long n = get_int(field(j, path, "n"), path + ".n");
        if (n < 1) fail(path + ".n", "torus knot parameter must be at least 1");
        return TorusKnotFactor{n};
    }
    if (type == "hopf_positive" || type == "hopf_negative") {
        reject_unknown(j, path, {"type", "genus", "twist_curve"});
        const long long g = get_genus(j, path);
        SurfaceModel surface(g);
        CurveClass curve(std::vector<long long>(surface.dim(), 0));
        if (j.contains("twist_curve"))
            curve = get_curve(j["twist_curve"], path + ".twist_curve", surface.dim());
        return HopfFactor{type == "hopf_positive" ? +1 : -1, surface, std::move(curve)};
    }
    if (type == "explicit") {
        reject_unknown(j, path, {"type", "genus", "matrix"});
        const long long g = get_genus(j, path);
        SurfaceModel surface(g);
        const json& mj = field(j, path, "matrix");
        if (!mj.is_array() || mj.size() != surface.dim())
            fail(path + ".matrix",
                 "expected a " + std::to_string(surface.dim()) + " x " +
                     std::to_string(surface.dim()) + " integer matrix");
        std::vector<std::vector<long long>> rows;
        for (std::size_t r = 0; r < mj.size(); ++r) {
            std::vector<long long> row =
                get_int_array(mj[r], path + ".matrix[" + std::to_string(r) + "]");
            if (row.size() != surface.dim())
                fail(path + ".matrix[" + std::to_string(r) + "]",
                     "expected " + std::to_string(surface.dim()) + " entries");
            rows.push_back(std::move(row));
        }
        IntMatrix matrix(rows);
        try {
            MonodromyMap probe(surface, matrix);
        } catch (const NotSymplectic& e) {
            fail(path + ".matrix", std::string("not a valid monodromy matrix: ") + e.what());
        }
        return ExplicitFactor{surface, std::move(matrix)};
    }
    if (type == "twist_word") {
        reject_unknown(j, path, {"type", "genus", "twists"});
        const long long g = get_genus(j, path);
        SurfaceModel surface(g);
        const json& tj = field(j, path, "twists");
        if (!tj.is_array() || tj.empty())
            fail(path + ".twists", "expected a non-empty array of twists");
        std::vector<std::pair<CurveClass, int>> word;
        for (std::size_t t = 0; t < tj.size(); ++t) {
            const std::string tpath = path + ".twists[" + std::to_string(t) + "]";
            require_object(tj[t], tpath);
            reject_unknown(tj[t], tpath, {"curve", "sign"});
            CurveClass curve = get_curve(field(tj[t], tpath, "curve"), tpath + ".curve",
                                         surface.dim());
            const long long sign = get_int(field(tj[t], tpath, "sign"), tpath + ".sign");
            if (sign != 1 && sign != -1) fail(tpath + ".sign", "expected 1 or -1");
            word.emplace_back(std::move(curve), static_cast<int>(sign));
        }
        return TwistWordFactor{surface, std::move(word)};
    }
    fail(path + ".type", "unknown factor type \"" + type + "\"");
}

FiberedLinkSpec parse_link(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"factors", "meridian_count"});
    const json& fj = field(j, path, "factors");
    if (!fj.is_array() || fj.empty())
        fail(path + ".factors", "expected a non-empty array of link factors");
    FiberedLinkSpec link;
    for (std::size_t i = 0; i < fj.size(); ++i)
        link.factors.push_back(parse_factor(fj[i], path + ".factors[" + std::to_string(i) + "]"));
    link.meridian_count = get_int(field(j, path, "meridian_count"), path + ".meridian_count");
    if (link.meridian_count < 0) fail(path + ".meridian_count", "must be non-negative");
    return link;
}

void parse_curves(const json& j, const std::string& path, SpecFile& out) {
    if (!j.is_array() || j.empty())
        fail(path, "expected a non-empty array of named curves");
    const std::size_t dim = static_cast<std::size_t>(2 * out.link.fiber_genus());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string cpath = path + "[" + std::to_string(i) + "]";
        require_object(j[i], cpath);
        reject_unknown(j[i], cpath, {"name", "coefficients"});
        NamedCurve nc;
        nc.name = get_string(field(j[i], cpath, "name"), cpath + ".name");
        if (nc.name.empty()) fail(cpath + ".name", "must be non-empty");
        if (!seen.insert(nc.name).second) fail(cpath + ".name", "duplicate curve name");
        nc.curve = get_curve(field(j[i], cpath, "coefficients"), cpath + ".coefficients", dim);
        out.curves.push_back(std::move(nc));
    }
}

void parse_ambient(const json& j, const std::string& path, SpecFile& out) {
    require_object(j, path);
    const std::string type = get_string(field(j, path, "type"), path + ".type");
    if (type == "interior_only") {
        reject_unknown(j, path, {"type"});
        out.ambient = AmbientMode::InteriorOnly;
        return;
    }
    if (type == "fiber_sum") {
        reject_unknown(j, path, {"type", "sites"});
        out.ambient = AmbientMode::FiberSum;
        if (out.link.meridian_count < 1)
            fail(path, "fiber_sum needs meridian_count of at least 1");
        const json& sj = field(j, path, "sites");
        if (!sj.is_array() || static_cast<long long>(sj.size()) != out.link.meridian_count)
            fail(path + ".sites",
                 "expected exactly one site record per meridian (" +
                     std::to_string(out.link.meridian_count) + ")");
        for (std::size_t i = 0; i < sj.size(); ++i) {
            const std::string spath = path + ".sites[" + std::to_string(i) + "]";
            require_object(sj[i], spath);
            reject_unknown(sj[i], spath,
                           {"complement_simply_connected", "fiber_square_zero_symplectic_torus",
                            "meridian_disjoint_from_curves", "vanishing_cycle_identification"});
            FiberSumSite site;
            site.complement_simply_connected =
                get_bool(field(sj[i], spath, "complement_simply_connected"),
                         spath + ".complement_simply_connected");
            site.fiber_square_zero_symplectic_torus =
                get_bool(field(sj[i], spath, "fiber_square_zero_symplectic_torus"),
                         spath + ".fiber_square_zero_symplectic_torus");
            site.meridian_disjoint_from_curves =
                get_bool(field(sj[i], spath, "meridian_disjoint_from_curves"),
                         spath + ".meridian_disjoint_from_curves");
            site.vanishing_cycle_identification =
                get_bool(field(sj[i], spath, "vanishing_cycle_identification"),
                         spath + ".vanishing_cycle_identification");
            out.sites.push_back(site);
        }
        return;
    }
    fail(path + ".type", "unknown ambient type \"" + type + "\"");
}

void parse_disc(const json& j, const std::string& path, std::vector<long long>& caps,
                long long& defect) {
    require_object(j, path);
    reject_unknown(j, path, {"cap_framings", "framing_defect"});
    caps = get_int_array(field(j, path, "cap_framings"), path + ".cap_framings");
    if (caps.empty()) fail(path + ".cap_framings", "expected at least one cap framing");
    defect = get_int(field(j, path, "framing_defect"), path + ".framing_defect");
}

MaslovData parse_maslov(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"c1_even", "fiber_disc", "circle_disc"});
    MaslovData d;
    d.c1_even = get_bool(field(j, path, "c1_even"), path + ".c1_even");
    parse_disc(field(j, path, "fiber_disc"), path + ".fiber_disc", d.fiber_caps, d.fiber_defect);
    parse_disc(field(j, path, "circle_disc"), path + ".circle_disc", d.circle_caps,
               d.circle_defect);
    return d;
}

SpecBounds parse_bounds(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"order_bound", "orbit_bound", "page_window"});
    SpecBounds b;
    if (j.contains("order_bound")) {
        b.order_bound = get_int(j["order_bound"], path + ".order_bound");
        if (b.order_bound < 1) fail(path + ".order_bound", "must be at least 1");
    }
    if (j.contains("orbit_bound")) {
        b.orbit_bound = get_int(j["orbit_bound"], path + ".orbit_bound");
        if (b.orbit_bound < 0) fail(path + ".orbit_bound", "must be non-negative");
    }
    if (j.contains("page_window")) {
        std::vector<long long> w = get_int_array(j["page_window"], path + ".page_window");
        if (w.size() != 2 || w[0] < 0 || w[1] < 0)
            fail(path + ".page_window", "expected [pmax, qmax] with non-negative entries");
        b.page_window = PageWindow{w[0], w[1]};
    }
    return b;
}

std::string trim_exception_tag(const char* what) {
    // nlohmann prefixes messages with "[json.exception...] "; drop it.
    std::string s = what;
    const std::size_t pos = s.find("] ");
    return pos == std::string::npos ? s : s.substr(pos + 2);
}

}  // namespace

FramedDisc MaslovData::fiber_disc() const {
    return FramedDisc(fiber_caps, fiber_defect, BoundaryLabel::FiberDirection);
}

FramedDisc MaslovData::circle_disc() const {
    return FramedDisc(circle_caps, circle_defect, BoundaryLabel::CircleDirection);
}

SurfaceModel SpecFile::surface() const {
    return standard_surface(link.fiber_genus());
}

SpecFile parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        long long line = 1;
        long long column = 1;
        const std::size_t stop =
            e.byte > 0 ? std::min(text.size(), static_cast<std::size_t>(e.byte) - 1) : 0;
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream os;
        os << "spec is not valid JSON (line " << line << ", column " << column
           << "): " << trim_exception_tag(e.what());
        throw ParseError(os.str(), line, column);
    }

    const std::string path = "$";
    require_object(j, path);
    reject_unknown(j, path,
                   {"schema_version", "link", "curves", "ambient", "maslov", "lambda_star",
                    "bounds"});

    SpecFile out;
    out.schema_version = get_int(field(j, path, "schema_version"), path + ".schema_version");
    if (out.schema_version != 1)
        fail(path + ".schema_version", "unsupported schema version (this build reads version 1)");
    out.link = parse_link(field(j, path, "link"), path + ".link");
    parse_curves(field(j, path, "curves"), path + ".curves", out);
    parse_ambient(field(j, path, "ambient"), path + ".ambient", out);
    if (j.contains("maslov")) out.maslov = parse_maslov(j["maslov"], path + ".maslov");
    if (j.contains("lambda_star")) {
        out.lambda_star = get_rational(j["lambda_star"], path + ".lambda_star");
        if (!(Rational(0) < out.lambda_star)) fail(path + ".lambda_star", "must be positive");
    }
    if (j.contains("bounds")) out.bounds = parse_bounds(j["bounds"], path + ".bounds");
    return out;
}

SpecFile load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string factor_description(const LinkFactor& factor) {
    struct Visitor {
        std::string operator()(const TrefoilFactor&) const { return "trefoil"; }
        std::string operator()(const TorusKnotFactor& f) const {
            return "torus_knot_2 n=" + std::to_string(f.n);
        }
        std::string operator()(const HopfFactor& f) const {
            std::string out = f.sign > 0 ? "hopf_positive" : "hopf_negative";
            out += " genus=" + std::to_string(f.surface.genus());
            out += " twist_curve=" + f.twist_curve.to_string();
            return out;
        }
        std::string operator()(const ExplicitFactor& f) const {
            return "explicit genus=" + std::to_string(f.surface.genus());
        }
        std::string operator()(const TwistWordFactor& f) const {
            return "twist_word genus=" + std::to_string(f.surface.genus()) +
                   " length=" + std::to_string(f.word.size());
        }
    };
    return std::visit(Visitor{}, factor);
}

TorusPairConfig pair_config(const SpecFile& spec, std::size_t i, std::size_t j,
                            AmbientMode mode) {
    if (i >= spec.curves.size() || j >= spec.curves.size())
        throw DomainError("curve index out of range");
    std::vector<FiberSumSite> sites;
    if (mode == AmbientMode::FiberSum) {
        if (spec.ambient != AmbientMode::FiberSum)
            throw AmbientMismatch("spec declares no fiber-sum site data");
        sites = spec.sites;
    }
    return TorusPairConfig(spec.surface(), spec.curves[i].curve, spec.curves[j].curve, spec.link,
                           mode, std::move(sites));
}

std::optional<ParityCertificate> parity_certificate(const SpecFile& spec) {
    if (!spec.maslov) return std::nullopt;
    if (spec.ambient == AmbientMode::FiberSum) {
        for (const FiberSumSite& s : spec.sites)
            if (!s.vanishing_cycle_identification) return std::nullopt;
    }
    return parity_check(spec.maslov->fiber_disc(), spec.maslov->circle_disc(),
                        spec.maslov->c1_even);
}

}  // namespace floertori
