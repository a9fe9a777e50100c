#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "floertori/report.hpp"
#include "json.hpp"

using namespace floertori;
using nlohmann::json;

namespace {

json fibersum_doc() {
    return json::parse(R"({
        "schema_version": 1,
        "link": {"factors": [{"type": "trefoil"}], "meridian_count": 2},
        "curves": [
            {"name": "gamma1", "coefficients": [1, 0]},
            {"name": "gamma2", "coefficients": [0, 1]},
            {"name": "gamma3", "coefficients": [1, -1]}
        ],
        "ambient": {"type": "fiber_sum", "sites": [
            {"complement_simply_connected": true,
             "fiber_square_zero_symplectic_torus": true,
             "meridian_disjoint_from_curves": true,
             "vanishing_cycle_identification": true},
            {"complement_simply_connected": true,
             "fiber_square_zero_symplectic_torus": true,
             "meridian_disjoint_from_curves": true,
             "vanishing_cycle_identification": true}
        ]},
        "maslov": {
            "c1_even": true,
            "fiber_disc": {"cap_framings": [-1, -1, -1, -1], "framing_defect": -2},
            "circle_disc": {"cap_framings": [-2], "framing_defect": 0}
        },
        "lambda_star": "1",
        "bounds": {"order_bound": 64, "orbit_bound": 12, "page_window": [8, 8]}
    })");
}

const PairEntry& entry(const IsotopyReport& r, const std::string& from, const std::string& to) {
    for (const PairEntry& e : r.pairs)
        if (e.from == from && e.to == to) return e;
    REQUIRE_MESSAGE(false, "missing pair ", from, " -> ", to);
    static PairEntry dummy;
    return dummy;
}

}  // namespace

TEST_CASE("classification of the two-meridian trefoil configuration") {
    const SpecFile spec = parse_spec(fibersum_doc().dump());
    const IsotopyReport r = classify(spec);

    CHECK(r.schema_version == 1);
    CHECK(r.factors == std::vector<std::string>{"trefoil"});
    CHECK(r.meridian_count == 2);
    CHECK(r.fiber_genus == 1);
    CHECK(r.ambient == AmbientMode::FiberSum);
    CHECK(r.monodromy_matrix == IntMatrix{{1, 1}, {-1, 0}});
    CHECK(r.monodromy_order == 6);
    CHECK(r.order_bound == 64);
    // Finite order makes powers 0..order-1 the canonical orbit scan.
    CHECK(r.orbit_bound_used == 5);
    REQUIRE(r.parity.has_value());
    CHECK(r.parity->verdict == ParityVerdict::Even);
    CHECK(r.pairs.size() == 9);

    SUBCASE("distinct transverse pair gamma1 -> gamma2") {
        const PairEntry& e = entry(r, "gamma1", "gamma2");
        REQUIRE(e.hf_self.computed());
        REQUIRE(e.hf_pair.computed());
        CHECK(*e.hf_self.module == GradedModule({1, 2, 1}));
        CHECK(*e.hf_pair.module == GradedModule({1, 1}));

        CHECK(e.hamiltonian_isotopic.is_no);

        CHECK(e.symplectic_isotopy_interior.yes);
        CHECK(e.symplectic_isotopy_interior.relations ==
              std::vector<OrbitHit>{{2, -1}, {5, +1}});

        CHECK(e.lagrangian_isotopy_fibersum.yes);
        CHECK(e.lagrangian_isotopy_fibersum.relations == e.symplectic_isotopy_interior.relations);

        CHECK(e.symplectic_isotopy_fibersum.is_no);
        REQUIRE(e.symplectic_isotopy_fibersum.hf_self_fibersum.has_value());
        REQUIRE(e.symplectic_isotopy_fibersum.hf_pair_fibersum.has_value());
        CHECK(*e.symplectic_isotopy_fibersum.hf_self_fibersum == GradedModule({1, 2, 1}));
        CHECK(*e.symplectic_isotopy_fibersum.hf_pair_fibersum == GradedModule({1, 1}));
        REQUIRE(e.symplectic_isotopy_fibersum.parity.has_value());
        CHECK(e.symplectic_isotopy_fibersum.parity->verdict == ParityVerdict::Even);

        CHECK(e.smooth_isotopy.present);
        CHECK(e.smooth_isotopy.witness == OrbitHit{2, -1});
    }

    SUBCASE("remaining off-diagonal orbit tables") {
        CHECK(entry(r, "gamma1", "gamma3").symplectic_isotopy_interior.relations ==
              std::vector<OrbitHit>{{1, +1}, {4, -1}});
        CHECK(entry(r, "gamma2", "gamma3").symplectic_isotopy_interior.relations ==
              std::vector<OrbitHit>{{2, +1}, {5, -1}});
        CHECK(entry(r, "gamma1", "gamma3").smooth_isotopy.witness == OrbitHit{1, +1});
    }

    SUBCASE("diagonal entry gamma1 -> gamma1") {
        const PairEntry& e = entry(r, "gamma1", "gamma1");
        CHECK(*e.hf_self.module == GradedModule({1, 2, 1}));
        CHECK(*e.hf_pair.module == GradedModule({1, 2, 1}));
        CHECK_FALSE(e.hamiltonian_isotopic.is_no);
        CHECK(e.hamiltonian_isotopic.note.find("identical torus") != std::string::npos);
        CHECK(e.symplectic_isotopy_interior.relations ==
              std::vector<OrbitHit>{{0, +1}, {3, -1}});
        // Equal modules in the summed manifold: inconclusive, never "no".
        CHECK_FALSE(e.symplectic_isotopy_fibersum.is_no);
        CHECK(e.symplectic_isotopy_fibersum.note.find("identical torus") != std::string::npos);
    }
}

TEST_CASE("interior-only specs mark all fiber-sum verdicts inconclusive") {
    json j = fibersum_doc();
    j["ambient"] = {{"type", "interior_only"}};
    j.erase("maslov");
    const IsotopyReport r = classify(parse_spec(j.dump()));

    CHECK_FALSE(r.parity.has_value());
    const PairEntry& e = entry(r, "gamma1", "gamma2");
    CHECK(e.symplectic_isotopy_interior.yes);
    CHECK_FALSE(e.lagrangian_isotopy_fibersum.yes);
    CHECK(e.lagrangian_isotopy_fibersum.relations.empty());
    CHECK_FALSE(e.symplectic_isotopy_fibersum.is_no);
    CHECK(e.symplectic_isotopy_fibersum.note.find("no fiber-sum ambient") != std::string::npos);
    // Interior HF is unaffected by the missing fiber-sum data.
    CHECK(*e.hf_pair.module == GradedModule({1, 1}));
    CHECK(e.hamiltonian_isotopic.is_no);
}

TEST_CASE("infinite-order monodromy blocks the fiber-sum isotopy shortcut") {
    json j = fibersum_doc();
    j["link"]["factors"][0] = {
        {"type", "twist_word"},
        {"genus", 1},
        {"twists", {{{"curve", {0, 1}}, {"sign", 1}}}}};
    j["bounds"]["order_bound"] = 50;
    const IsotopyReport r = classify(parse_spec(j.dump()));

    CHECK_FALSE(r.monodromy_order.has_value());
    CHECK(r.orbit_bound_used == 12);  // falls back to the configured bound

    // The diagonal still has orbit hits at power 0, but without finite
    // order they do not certify a Lagrangian isotopy in the sum.
    const PairEntry& e = entry(r, "gamma1", "gamma1");
    CHECK(e.symplectic_isotopy_interior.yes);
    CHECK_FALSE(e.lagrangian_isotopy_fibersum.yes);
}

TEST_CASE("failed obstruction attestations degrade to inconclusive, never fabricate") {
    json j = fibersum_doc();
    j["ambient"]["sites"][0]["meridian_disjoint_from_curves"] = false;
    const IsotopyReport r = classify(parse_spec(j.dump()));

    // Parity is still certified (vanishing-cycle flags are intact)...
    REQUIRE(r.parity.has_value());
    CHECK(r.parity->verdict == ParityVerdict::Even);

    // ...but the fiber-sum HF refuses through the obstruction gate.
    const PairEntry& e = entry(r, "gamma1", "gamma2");
    CHECK_FALSE(e.symplectic_isotopy_fibersum.is_no);
    CHECK_FALSE(e.symplectic_isotopy_fibersum.hf_self_fibersum.has_value());
    CHECK_FALSE(e.symplectic_isotopy_fibersum.hf_pair_fibersum.has_value());
    CHECK(e.symplectic_isotopy_fibersum.note.find("site1_meridian_disjoint") !=
          std::string::npos);

    // Interior results are untouched by the site attestation.
    CHECK(*e.hf_pair.module == GradedModule({1, 1}));
    CHECK(e.hamiltonian_isotopic.is_no);
}

TEST_CASE("an imprimitive curve yields recorded failures and inconclusive verdicts") {
    json j = fibersum_doc();
    j["curves"][1] = {{"name", "gamma2"}, {"coefficients", {2, 0}}};
    const IsotopyReport r = classify(parse_spec(j.dump()));

    const PairEntry& e = entry(r, "gamma1", "gamma2");
    // hf_self of gamma1 is fine; the pair computation refuses.
    CHECK(e.hf_self.computed());
    CHECK_FALSE(e.hf_pair.computed());
    CHECK(e.hf_pair.failure.find("gamma1_primitive") != std::string::npos);
    CHECK_FALSE(e.hamiltonian_isotopic.is_no);
    CHECK(e.hamiltonian_isotopic.note == "HF not available for this pair");

    // The source torus of the reversed pair is the bad one.
    const PairEntry& rev = entry(r, "gamma2", "gamma1");
    CHECK_FALSE(rev.hf_self.computed());
    CHECK(rev.hf_self.failure.find("undetermined") != std::string::npos);
}

TEST_CASE("removing Maslov data changes only parity and fiber-sum HF sections") {
    const json with = fibersum_doc();
    json without = fibersum_doc();
    without.erase("maslov");

    const std::string out_with = emit_report(classify(parse_spec(with.dump())),
                                             ReportFormat::Json);
    const std::string out_without = emit_report(classify(parse_spec(without.dump())),
                                                ReportFormat::Json);
    CHECK(out_with != out_without);

    json jw = json::parse(out_with);
    json jo = json::parse(out_without);
    CHECK(jw["parity"].is_object());
    CHECK(jo["parity"].is_null());

    jw.erase("parity");
    jo.erase("parity");
    for (auto& p : jw["pairs"]) p.erase("symplectic_isotopy_fibersum");
    for (auto& p : jo["pairs"]) p.erase("symplectic_isotopy_fibersum");
    CHECK(jw == jo);
}

TEST_CASE("JSON output is schema-versioned, ordered, newline-terminated, and round-trips") {
    const IsotopyReport r = classify(parse_spec(fibersum_doc().dump()));
    const std::string out = emit_report(r, ReportFormat::Json);

    REQUIRE_FALSE(out.empty());
    CHECK(out.back() == '\n');

    const json parsed = json::parse(out);
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["link"]["factors"][0] == "trefoil");
    CHECK(parsed["monodromy"]["order"] == 6);
    CHECK(parsed["monodromy"]["matrix"] == json::parse("[[1,1],[-1,0]]"));
    CHECK(parsed["parity"]["verdict"] == "even");
    CHECK(parsed["pairs"].size() == 9);

    // Keys serialize in sorted order, making the bytes canonical.
    CHECK(out.find("\"ambient\"") < out.find("\"curves\""));
    CHECK(out.find("\"curves\"") < out.find("\"link\""));
    CHECK(out.find("\"link\"") < out.find("\"pairs\""));

    // Verdict vocabulary is explicit; no bare booleans name a verdict.
    const json& pair0 = parsed["pairs"][0];
    CHECK(pair0["hamiltonian_isotopic"]["verdict"].is_string());
    CHECK(pair0["symplectic_isotopy_interior"]["verdict"].is_string());
    CHECK(pair0["smooth_isotopy"]["verdict"].is_string());
}

TEST_CASE("text output carries the standard module annotations and orbit sets") {
    const IsotopyReport r = classify(parse_spec(fibersum_doc().dump()));
    const std::string out = emit_report(r, ReportFormat::Text);

    CHECK(out.find("H*(T^2) (x) Lambda") != std::string::npos);
    CHECK(out.find("H*(S^1) (x) Lambda") != std::string::npos);
    CHECK(out.find("{(2,-1), (5,+1)}") != std::string::npos);
    CHECK(out.find("{(1,+1), (4,-1)}") != std::string::npos);
    CHECK(out.find("monodromy order: 6") != std::string::npos);
    CHECK(out.find("pair gamma1 -> gamma2") != std::string::npos);
    CHECK(out.find("yes via monodromy") != std::string::npos);
    CHECK(out.find("gamma3 = (1,-1)") != std::string::npos);
}

TEST_CASE("classification output is byte-deterministic across runs (randomized)") {
    std::mt19937_64 rng(97531);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(0, 1);

    for (int trial = 0; trial < 200; ++trial) {
        json j;
        j["schema_version"] = 1;
        j["link"] = {{"factors", {{{"type", "trefoil"}}}}, {"meridian_count", 1}};
        j["curves"] = json::array();
        j["curves"].push_back({{"name", "a"}, {"coefficients", {coeff(rng), coeff(rng)}}});
        j["curves"].push_back({{"name", "b"}, {"coefficients", {coeff(rng), coeff(rng)}}});
        if (pick(rng) == 0) {
            j["ambient"] = {{"type", "interior_only"}};
        } else {
            j["ambient"] = {{"type", "fiber_sum"},
                            {"sites", {{{"complement_simply_connected", pick(rng) == 0},
                                        {"fiber_square_zero_symplectic_torus", true},
                                        {"meridian_disjoint_from_curves", true},
                                        {"vanishing_cycle_identification", pick(rng) == 0}}}}};
        }
        if (pick(rng) == 0) {
            j["maslov"] = {{"c1_even", true},
                           {"fiber_disc",
                            {{"cap_framings", {-1, -1, -1, -1}}, {"framing_defect", -2}}},
                           {"circle_disc", {{"cap_framings", {-2}}, {"framing_defect", 0}}}};
        }
        j["bounds"] = {{"order_bound", 16}};
        const std::string text = j.dump();

        const std::string first = emit_report(classify(parse_spec(text)), ReportFormat::Json);
        const std::string second = emit_report(classify(parse_spec(text)), ReportFormat::Json);
        CHECK(first == second);
        CHECK(json::parse(first)["schema_version"] == 1);
    }
}
