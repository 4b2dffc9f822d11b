#include "cw/catalog.hpp"

#include "doctest.h"
#include "support.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

using namespace cw;
using nlohmann::json;

namespace {

json builtin_json() {
    std::ifstream f(builtin_catalog_path());
    std::stringstream ss;
    ss << f.rdbuf();
    return json::parse(ss.str());
}

}  // namespace

TEST_CASE("builtin catalog loads and self-checks") {
    const auto& cat = support::catalog();
    CHECK(cat.schemaVersion == 1);
    CHECK(cat.entries("E2A1-two-nodes").size() == 2);
    auto rep = self_check(cat);
    for (const auto& f : rep.findings)
        if (f.severity != "ok") MESSAGE(f.type << ": " << f.message);
    CHECK(rep.ok());
    CHECK(cat.global.expectedChamberCount == 20);
    CHECK(cat.global.chambers.size() == 20);
}

TEST_CASE("serialize then load is the identity") {
    const auto& cat = support::catalog();
    std::string once = serialize_catalog(cat);
    std::string twice = serialize_catalog(load_catalog(once));
    CHECK(once == twice);
}

TEST_CASE("conductor weights are rejected") {
    json j = builtin_json();
    for (auto& t : j["types"]) {
        if (t["seedModel"].is_null()) continue;
        t["seedModel"]["components"][0]["conductors"][0]["weight"] = {{"b", 2}, {"c", 0}};
        break;
    }
    try {
        load_catalog(j.dump());
        FAIL("accepted a weighted conductor");
    } catch (const CatalogError& e) {
        CHECK(e.path.find("/conductors/0") != std::string::npos);
    }
}

TEST_CASE("schema errors carry a json pointer") {
    json j = builtin_json();
    j["types"][0]["seedModel"]["components"][0]["lattice"]["kind"] = "torus";
    CHECK_THROWS_AS(load_catalog(j.dump()), CatalogError);
    CHECK_THROWS_AS(load_catalog("{\"schemaVersion\": 1"), CatalogError);
}

TEST_CASE("wrong chamber count still loads") {
    json j = builtin_json();
    for (auto& t : j["types"])
        if (t["typeLabel"] == "E2A1" && t["ellChoice"] == "two-nodes") t["expectedChamberCount"] = 12;
    auto cat = load_catalog(j.dump());
    CHECK(cat.entries("E2A1-two-nodes").front()->expectedChamberCount == 12);
}

TEST_CASE("too many Eckardt points on the blown-up cubic") {
    CatalogFile cat = support::catalog();
    for (auto& t : cat.types) {
        if (t.key() != "E2A1-two-nodes" || !t.seedModel) continue;
        t.seedModel->at("1").eckardt = {{4, 5, 6}, {1, 2, 4}};
    }
    auto rep = self_check(cat);
    CHECK_FALSE(rep.ok());
    bool flagged = false;
    for (const auto& f : rep.findings)
        flagged = flagged || (f.severity == "error" && f.message.find("2 Eckardt points") != std::string::npos);
    CHECK(flagged);
}

TEST_CASE("empty catalog") {
    CatalogFile c;
    CHECK(self_check(c).findings.empty());
}
