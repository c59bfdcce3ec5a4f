#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>

#include "support.hpp"
#include "hopf/io.hpp"

using namespace hopf;
using Json = nlohmann::json;

namespace {

std::shared_ptr<const HopfAlgebra> h4_ptr() {
    static auto h = std::make_shared<const HopfAlgebra>(sweedler());
    return h;
}

void same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
    CHECK(a.field().order() == b.field().order());
    CHECK(a.dim() == b.dim());
    CHECK(a.algebra.mult == b.algebra.mult);
    CHECK(a.algebra.unit == b.algebra.unit);
    CHECK(a.comult == b.comult);
    CHECK(a.counit == b.counit);
    CHECK(a.antipode == b.antipode);
}

void same_yd(const YDModule& a, const YDModule& b) {
    same_hopf(*a.base, *b.base);
    CHECK(a.dim == b.dim);
    CHECK(a.action == b.action);
    CHECK(a.coaction == b.coaction);
}

std::string round_trip(const Manifest& m) { return serialize_manifest(parse_manifest(serialize_manifest(m))); }

std::string error_of(const std::string& text) {
    try {
        parse_manifest(text);
    } catch (const ParseError& e) {
        return e.what();
    } catch (const std::exception& e) {
        return std::string("other: ") + e.what();
    }
    return "no error";
}

Json sweedler_json() { return Json::parse(serialize_manifest(Manifest{"1", sweedler()})); }

}  // namespace

TEST_CASE("hopf round trip") {
    const CycloField& f3 = make_field(3);
    for (const HopfAlgebra& h : {sweedler(), taft(3, f3.zeta()), group_algebra(6), a_tau_mu(3, 2, testing::q(make_field(1), -1), 1)}) {
        Manifest m{"1", h};
        std::string text = serialize_manifest(m);
        Manifest back = parse_manifest(text);
        REQUIRE(back.kind() == ObjectKind::hopf);
        same_hopf(std::get<HopfAlgebra>(back.payload), h);
        CHECK(serialize_manifest(back) == text);
        CHECK(verify_hopf(std::get<HopfAlgebra>(back.payload)).ok());
    }
}

TEST_CASE("non-rational field elements survive") {
    const CycloField& f5 = make_field(5);
    HopfAlgebra t = taft(5, f5.zeta() * f5.zeta());
    Manifest back = parse_manifest(serialize_manifest(Manifest{"1", t}));
    same_hopf(std::get<HopfAlgebra>(back.payload), t);
}

TEST_CASE("yd and braided round trip") {
    BraidedHopf n = nichols_h4(h4_ptr());
    Manifest yd{"1", n.yd};
    Manifest back = parse_manifest(serialize_manifest(yd));
    REQUIRE(back.kind() == ObjectKind::yd);
    same_yd(std::get<YDModule>(back.payload), n.yd);
    CHECK(verify_yd(std::get<YDModule>(back.payload)).ok());

    Manifest br{"1", n};
    Manifest bb = parse_manifest(serialize_manifest(br));
    REQUIRE(bb.kind() == ObjectKind::braided);
    const BraidedHopf& r = std::get<BraidedHopf>(bb.payload);
    same_yd(r.yd, n.yd);
    CHECK(r.mult == n.mult);
    CHECK(r.comult == n.comult);
    CHECK(r.antipode == n.antipode);
    CHECK(verify_braided_hopf(r).ok());
    CHECK(round_trip(br) == serialize_manifest(br));
}

TEST_CASE("serialization is deterministic and sorted") {
    std::string a = serialize_manifest(Manifest{"1", sweedler()});
    CHECK(a == serialize_manifest(Manifest{"1", sweedler()}));
    Json j = Json::parse(a);
    CHECK(j["schema_version"] == "1");
    CHECK(j["object_kind"] == "hopf");
    CHECK(a.find("\"object_kind\"") < a.find("\"payload\""));
    CHECK(a.find("\"payload\"") < a.find("\"schema_version\""));
    // rationals are written canonically
    CHECK(a.find("\"-1/1\"") != std::string::npos);
    CHECK(a.find("/0\"") == std::string::npos);
}

TEST_CASE("non-canonical rationals are accepted and normalized") {
    Json j = sweedler_json();
    j["payload"]["unit"][0][0] = "2/2";
    Manifest m = parse_manifest(j.dump());
    CHECK(serialize_manifest(m) == serialize_manifest(Manifest{"1", sweedler()}));
}

TEST_CASE("parse errors name the offending field") {
    Json j = sweedler_json();
    j["payload"]["unit"][0][0] = "1/0";
    std::string msg = error_of(j.dump());
    CHECK(msg.rfind("$.payload.unit[0][0]", 0) == 0);

    j = sweedler_json();
    j["payload"]["mult"]["entries"][3][3][0] = "x";
    CHECK(error_of(j.dump()).rfind("$.payload.mult.entries[3]", 0) == 0);

    j = sweedler_json();
    j["payload"].erase("counit");
    CHECK(error_of(j.dump()).rfind("$.payload.counit", 0) == 0);

    j = sweedler_json();
    j["payload"]["dim"] = 5;
    CHECK(error_of(j.dump()).rfind("$.payload", 0) == 0);

    j = sweedler_json();
    j["object_kind"] = "group";
    CHECK(error_of(j.dump()).rfind("$.object_kind", 0) == 0);

    CHECK(error_of("{not json").rfind("malformed JSON", 0) == 0);
    CHECK(error_of("[]") != "no error");
}

TEST_CASE("schema version") {
    Json j = sweedler_json();
    j["schema_version"] = "2";
    CHECK_THROWS_AS(parse_manifest(j.dump()), SchemaVersionMismatch);
    j.erase("schema_version");
    CHECK_THROWS(parse_manifest(j.dump()));
}

TEST_CASE("files") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "hopf_test_io_manifest.json";
    Manifest m{"1", sweedler()};
    write_manifest(p.string(), m);
    CHECK(serialize_manifest(read_manifest(p.string())) == serialize_manifest(m));
    fs::remove(p);
    CHECK_THROWS_AS(read_manifest(p.string()), ParseError);
    CHECK_THROWS_AS(write_manifest("/nonexistent-dir/x.json", m), ParseError);
}

TEST_CASE("random algebras round trip") {
    // tensor products of small families with randomly chosen factors
    std::uniform_int_distribution<int> pick(0, 3);
    for (int n = 0; n < 10; ++n) {
        auto make = [&](int k) {
            switch (k) {
                case 0: return sweedler();
                case 1: return group_algebra(2);
                case 2: return group_algebra(3);
                default: return taft(3, make_field(3).zeta());
            }
        };
        HopfAlgebra a = make(pick(testing::rng())), b = make(pick(testing::rng()));
        if (a.field().order() != b.field().order()) continue;
        HopfAlgebra t = tensor_hopf(a, b);
        Manifest back = parse_manifest(serialize_manifest(Manifest{"1", t}));
        same_hopf(std::get<HopfAlgebra>(back.payload), t);
    }
}
