#include <string>

#include "doctest.h"
#include "floertori/specfile.hpp"
#include "json.hpp"

using namespace floertori;
using nlohmann::json;

namespace {

// A complete, valid document exercising the fiber-sum ambient.
json baseline() {
    return json::parse(R"({
        "schema_version": 1,
        "link": {
            "factors": [{"type": "trefoil"}],
            "meridian_count": 2
        },
        "curves": [
            {"name": "gamma1", "coefficients": [1, 0]},
            {"name": "gamma2", "coefficients": [0, 1]},
            {"name": "gamma3", "coefficients": [1, -1]}
        ],
        "ambient": {
            "type": "fiber_sum",
            "sites": [
                {"complement_simply_connected": true,
                 "fiber_square_zero_symplectic_torus": true,
                 "meridian_disjoint_from_curves": true,
                 "vanishing_cycle_identification": true},
                {"complement_simply_connected": true,
                 "fiber_square_zero_symplectic_torus": true,
                 "meridian_disjoint_from_curves": true,
                 "vanishing_cycle_identification": true}
            ]
        },
        "maslov": {
            "c1_even": true,
            "fiber_disc": {"cap_framings": [-1, -1, -1, -1], "framing_defect": -2},
            "circle_disc": {"cap_framings": [-2], "framing_defect": 0}
        },
        "lambda_star": "1",
        "bounds": {"order_bound": 4096, "orbit_bound": 12, "page_window": [8, 8]}
    })");
}

SpecFile parse(const json& j) { return parse_spec(j.dump()); }

// Asserts the ValidationError message starts with the given field path.
void expect_reject(const json& j, const std::string& path_prefix) {
    try {
        parse_spec(j.dump());
        FAIL("expected rejection at ", path_prefix);
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        CHECK_MESSAGE(what.rfind(path_prefix, 0) == 0,
                      "expected path ", path_prefix, " in: ", what);
    }
}

}  // namespace

TEST_CASE("the baseline document parses into the expected model") {
    const SpecFile spec = parse(baseline());
    CHECK(spec.schema_version == 1);
    REQUIRE(spec.link.factors.size() == 1);
    CHECK(spec.link.fiber_genus() == 1);
    CHECK(spec.link.meridian_count == 2);
    REQUIRE(spec.curves.size() == 3);
    CHECK(spec.curves[0].name == "gamma1");
    CHECK(spec.curves[0].curve == CurveClass{{1, 0}});
    CHECK(spec.curves[2].curve == CurveClass{{1, -1}});
    CHECK(spec.ambient == AmbientMode::FiberSum);
    REQUIRE(spec.sites.size() == 2);
    CHECK(spec.sites[0].complement_simply_connected);
    REQUIRE(spec.maslov.has_value());
    CHECK(spec.maslov->c1_even);
    CHECK(spec.maslov->fiber_caps == std::vector<long long>{-1, -1, -1, -1});
    CHECK(spec.maslov->circle_defect == 0);
    CHECK(spec.lambda_star == Rational(1));
    CHECK(spec.bounds.order_bound == 4096);
    CHECK(spec.bounds.orbit_bound == 12);
    CHECK(spec.bounds.page_window.pmax == 8);
    CHECK(spec.surface().genus() == 1);

    const FramedDisc fd = spec.maslov->fiber_disc();
    CHECK(fd.boundary_label() == BoundaryLabel::FiberDirection);
    CHECK(maslov_index(fd) == -2);
    CHECK(maslov_index(spec.maslov->circle_disc()) == -2);
}

TEST_CASE("optional sections default sensibly") {
    json j = baseline();
    j.erase("maslov");
    j.erase("lambda_star");
    j.erase("bounds");
    const SpecFile spec = parse(j);
    CHECK_FALSE(spec.maslov.has_value());
    CHECK(spec.lambda_star == Rational(1));
    CHECK(spec.bounds.order_bound == kDefaultOrderBound);
    CHECK(spec.bounds.orbit_bound == 12);
    CHECK(spec.bounds.page_window.pmax == 8);
    CHECK(spec.bounds.page_window.qmax == 8);
}

TEST_CASE("malformed JSON raises ParseError with a position") {
    try {
        parse_spec("{ \"schema_version\": }");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 1);
        CHECK(std::string(e.what()).find("not valid JSON") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("[1, 2"), ParseError);
    // Valid JSON that is not an object is a schema violation, not a parse error.
    CHECK_THROWS_AS(parse_spec("[]"), ValidationError);
    CHECK_THROWS_AS(parse_spec("42"), ValidationError);
}

TEST_CASE("schema violations name the offending field path") {
    SUBCASE("top level") {
        json j = baseline();
        j.erase("schema_version");
        expect_reject(j, "$.schema_version");

        j = baseline();
        j["schema_version"] = 2;
        expect_reject(j, "$.schema_version");

        j = baseline();
        j["surprise"] = 1;
        expect_reject(j, "$.surprise");
    }

    SUBCASE("link and factors") {
        json j = baseline();
        j["link"]["factors"] = json::array();
        expect_reject(j, "$.link.factors");

        j = baseline();
        j["link"]["meridian_count"] = -1;
        expect_reject(j, "$.link.meridian_count");

        j = baseline();
        j["link"]["factors"][0]["type"] = "granny";
        expect_reject(j, "$.link.factors[0].type");

        j = baseline();
        j["link"]["factors"][0] = {{"type", "torus_knot_2"}, {"n", 0}};
        expect_reject(j, "$.link.factors[0].n");

        j = baseline();
        j["link"]["factors"][0] = {{"type", "hopf_positive"}, {"genus", 0}};
        expect_reject(j, "$.link.factors[0].genus");

        j = baseline();
        j["link"]["factors"][0] = {{"type", "trefoil"}, {"n", 1}};
        expect_reject(j, "$.link.factors[0].n");

        // Explicit factor: wrong shape, then a non-symplectic matrix.
        j = baseline();
        j["link"]["factors"][0] = {{"type", "explicit"}, {"genus", 1},
                                   {"matrix", {{1, 0}}}};
        expect_reject(j, "$.link.factors[0].matrix");
        j["link"]["factors"][0]["matrix"] = {{2, 0}, {0, 1}};
        expect_reject(j, "$.link.factors[0].matrix");

        j = baseline();
        j["link"]["factors"][0] = {{"type", "twist_word"}, {"genus", 1},
                                   {"twists", json::array()}};
        expect_reject(j, "$.link.factors[0].twists");
        j["link"]["factors"][0]["twists"] = {{{"curve", {1, 0}}, {"sign", 2}}};
        expect_reject(j, "$.link.factors[0].twists[0].sign");
    }

    SUBCASE("curves") {
        json j = baseline();
        j["curves"] = json::array();
        expect_reject(j, "$.curves");

        j = baseline();
        j["curves"][0]["coefficients"] = {1, 0, 0};
        expect_reject(j, "$.curves[0].coefficients");

        j = baseline();
        j["curves"][1]["name"] = "gamma1";
        expect_reject(j, "$.curves[1].name");

        j = baseline();
        j["curves"][0]["name"] = "";
        expect_reject(j, "$.curves[0].name");

        j = baseline();
        j["curves"][0]["coefficients"][0] = "one";
        expect_reject(j, "$.curves[0].coefficients[0]");
    }

    SUBCASE("ambient") {
        json j = baseline();
        j["ambient"]["type"] = "open_book";
        expect_reject(j, "$.ambient.type");

        j = baseline();
        j["ambient"]["sites"].erase(1);
        expect_reject(j, "$.ambient.sites");

        j = baseline();
        j["ambient"]["sites"][0].erase("complement_simply_connected");
        expect_reject(j, "$.ambient.sites[0].complement_simply_connected");

        j = baseline();
        j["ambient"]["sites"][0]["meridian_disjoint_from_curves"] = 1;
        expect_reject(j, "$.ambient.sites[0].meridian_disjoint_from_curves");

        // interior_only must not carry sites.
        j = baseline();
        j["ambient"] = {{"type", "interior_only"}, {"sites", json::array()}};
        expect_reject(j, "$.ambient.sites");

        // fiber_sum needs at least one meridian.
        j = baseline();
        j["link"]["meridian_count"] = 0;
        j["ambient"]["sites"] = json::array();
        expect_reject(j, "$.ambient");
    }

    SUBCASE("maslov") {
        json j = baseline();
        j["maslov"]["fiber_disc"]["cap_framings"] = json::array();
        expect_reject(j, "$.maslov.fiber_disc.cap_framings");

        j = baseline();
        j["maslov"].erase("c1_even");
        expect_reject(j, "$.maslov.c1_even");

        j = baseline();
        j["maslov"]["circle_disc"].erase("framing_defect");
        expect_reject(j, "$.maslov.circle_disc.framing_defect");
    }

    SUBCASE("lambda_star and bounds") {
        json j = baseline();
        j["lambda_star"] = "0";
        expect_reject(j, "$.lambda_star");

        j = baseline();
        j["lambda_star"] = "-1/2";
        expect_reject(j, "$.lambda_star");

        j = baseline();
        j["lambda_star"] = "2/0";
        expect_reject(j, "$.lambda_star");

        j = baseline();
        j["lambda_star"] = true;
        expect_reject(j, "$.lambda_star");

        j = baseline();
        j["bounds"]["order_bound"] = 0;
        expect_reject(j, "$.bounds.order_bound");

        j = baseline();
        j["bounds"]["orbit_bound"] = -1;
        expect_reject(j, "$.bounds.orbit_bound");

        j = baseline();
        j["bounds"]["page_window"] = {8};
        expect_reject(j, "$.bounds.page_window");
    }
}

TEST_CASE("lambda_star accepts integers and rational strings") {
    json j = baseline();
    j["lambda_star"] = 3;
    CHECK(parse(j).lambda_star == Rational(3));
    j["lambda_star"] = "5/2";
    CHECK(parse(j).lambda_star == Rational(5, 2));
}

TEST_CASE("factor descriptions") {
    CHECK(factor_description(TrefoilFactor{}) == "trefoil");
    CHECK(factor_description(TorusKnotFactor{3}) == "torus_knot_2 n=3");
    const SurfaceModel g1 = standard_surface(1);
    CHECK(factor_description(HopfFactor{+1, g1, CurveClass{{0, 0}}}) ==
          "hopf_positive genus=1 twist_curve=(0,0)");
    CHECK(factor_description(ExplicitFactor{g1, IntMatrix::identity(2)}) == "explicit genus=1");
    CHECK(factor_description(TwistWordFactor{g1, {{CurveClass{{1, 0}}, +1}}}) ==
          "twist_word genus=1 length=1");
}

TEST_CASE("pair_config builds configurations in the requested mode") {
    const SpecFile spec = parse(baseline());

    const TorusPairConfig fs = pair_config(spec, 0, 1, AmbientMode::FiberSum);
    CHECK(fs.ambient() == AmbientMode::FiberSum);
    CHECK(fs.sites().size() == 2);
    CHECK(fs.gamma0() == CurveClass{{1, 0}});
    CHECK(fs.gamma1() == CurveClass{{0, 1}});

    // The interior view of the same spec drops the site data.
    const TorusPairConfig in = pair_config(spec, 0, 2, AmbientMode::InteriorOnly);
    CHECK(in.ambient() == AmbientMode::InteriorOnly);
    CHECK(in.sites().empty());

    CHECK_THROWS_AS(pair_config(spec, 0, 3, AmbientMode::InteriorOnly), DomainError);

    // An interior-only spec cannot produce a fiber-sum configuration.
    json j = baseline();
    j["ambient"] = {{"type", "interior_only"}};
    const SpecFile interior_spec = parse(j);
    CHECK_THROWS_AS(pair_config(interior_spec, 0, 1, AmbientMode::FiberSum), AmbientMismatch);
    CHECK_NOTHROW(pair_config(interior_spec, 0, 1, AmbientMode::InteriorOnly));
}

TEST_CASE("parity_certificate gates on data presence and site attestation") {
    const SpecFile full = parse(baseline());
    const auto cert = parity_certificate(full);
    REQUIRE(cert.has_value());
    CHECK(cert->verdict == ParityVerdict::Even);
    CHECK(cert->index_fiber == -2);
    CHECK(cert->index_circle == -2);

    // No Maslov data, no certificate.
    json j = baseline();
    j.erase("maslov");
    CHECK_FALSE(parity_certificate(parse(j)).has_value());

    // A fiber-sum site without the vanishing-cycle attestation withdraws it.
    j = baseline();
    j["ambient"]["sites"][1]["vanishing_cycle_identification"] = false;
    CHECK_FALSE(parity_certificate(parse(j)).has_value());

    // Under interior ambient the site gate does not apply.
    j = baseline();
    j["ambient"] = {{"type", "interior_only"}};
    const auto interior_cert = parity_certificate(parse(j));
    REQUIRE(interior_cert.has_value());
    CHECK(interior_cert->verdict == ParityVerdict::Even);

    // Odd data yields a certificate, but an unverified one.
    j = baseline();
    j["maslov"]["circle_disc"]["cap_framings"] = {-1};
    const auto odd = parity_certificate(parse(j));
    REQUIRE(odd.has_value());
    CHECK(odd->verdict == ParityVerdict::Unverified);
}

TEST_CASE("load_spec reads fixture files") {
    const std::string dir = FLOERTORI_SPEC_DIR;
    const SpecFile meridian = load_spec(dir + "/trefoil_meridian.spec");
    CHECK(meridian.ambient == AmbientMode::FiberSum);
    CHECK(meridian.curves.size() == 3);

    const SpecFile interior = load_spec(dir + "/trefoil_interior.spec");
    CHECK(interior.ambient == AmbientMode::InteriorOnly);
    CHECK_FALSE(interior.maslov.has_value());

    CHECK_THROWS_AS(load_spec(dir + "/invalid_genus0.spec"), ValidationError);
    CHECK_THROWS_AS(load_spec(dir + "/does_not_exist.spec"), Error);
}
