#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "isodirac/errors.hpp"
#include "isodirac/families.hpp"
#include "isodirac/verify.hpp"
#include "isodirac/version.hpp"

using namespace isodirac;

namespace {

bool has_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return true;
    return false;
}

bool any_prefixed(const VerificationReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return true;
    return false;
}

void require_all_pass(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        INFO(c.name, ": measured ", c.measured, " tolerance ", c.tolerance);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("an empty request is trivially passing") {
    Family fam(FamilyParams::radial_oscillator(3.0, 1.0));
    auto rep = check_isospectrality(fam, fam.default_grid(), {}, 3);
    CHECK(rep.checks.empty());
    CHECK(rep.overall());
}

TEST_CASE("isospectrality check on the default grid") {
    Family fam(FamilyParams::radial_oscillator(3.0, 1.0));
    auto rep = check_isospectrality(fam, fam.default_grid(), {1.0}, 3);
    CHECK(rep.checks.size() == 2);
    CHECK(has_check(rep, "spectrum/base"));
    CHECK(has_check(rep, "spectrum/lambda=1"));
    require_all_pass(rep);
}

TEST_CASE("state-deletion check on the default grid") {
    Family fam(FamilyParams::radial_oscillator(3.0, 1.0));
    for (auto kind : {Deformation::Kind::Pursey, Deformation::Kind::AbrahamMoses}) {
        auto rep = check_state_deletion(fam, fam.default_grid(), kind, 2);
        CHECK(rep.checks.size() == 2);
        CHECK(has_check(rep, "deleted-spectrum"));
        CHECK(has_check(rep, "no-level-near-zero"));
        require_all_pass(rep);
    }
    CHECK_THROWS_AS(
        check_state_deletion(fam, fam.default_grid(), Deformation::Kind::Generic, 2),
        UsageError);
}

TEST_CASE("an unconverged eigensolve becomes a failed check, not a crash") {
    // at lambda = 0.05 the deformation is a spike near the origin that 200
    // nodes cannot resolve; the undeformed solve at the same grid is fine
    Family fam(FamilyParams::gpt(2.0, 5.0));
    GridSpec coarse = fam.default_grid();
    coarse.n = 200;
    auto rep = check_isospectrality(fam, coarse, {0.05}, 2);
    CHECK_FALSE(rep.overall());
    REQUIRE(!rep.checks.empty());
    bool saw_solver_note = false;
    for (const auto& c : rep.checks) {
        if (c.pass) continue;
        CHECK(c.measured > c.tolerance);
        if (c.note.find("between resolutions") != std::string::npos) saw_solver_note = true;
    }
    CHECK(saw_solver_note);
}

TEST_CASE("partnership identities on the default grid") {
    Family fam(FamilyParams::radial_oscillator(3.0, 1.0));
    auto rep = check_susy_relations(fam, fam.default_grid(), 2);
    CHECK(has_check(rep, "zero-mode"));
    CHECK(has_check(rep, "intertwine/n=0"));
    CHECK(has_check(rep, "schrodinger/sector1/n=0"));
    CHECK(has_check(rep, "schrodinger/sector2/n=0"));
    CHECK(has_check(rep, "nodes/n=1"));
    require_all_pass(rep);
}

TEST_CASE("full verification of a pinned worked example") {
    FamilyParams p = FamilyParams::scarf1(4.0, 2.0);
    GridSpec grid = Family(p).default_grid();
    auto rep = verify_family(p, grid);

    CHECK(rep.overall());
    require_all_pass(rep);
    CHECK(any_prefixed(rep, "isospectrality/"));
    CHECK(any_prefixed(rep, "pursey/"));
    CHECK(any_prefixed(rep, "abraham-moses/"));
    CHECK(any_prefixed(rep, "susy/"));
    // this parameter point has worked-example closed forms, so they are
    // cross-checked as part of the run
    CHECK(has_check(rep, "closed-forms/scarf/superpotential"));
    CHECK(has_check(rep, "closed-forms/scarf/two-route-potential"));
    // the transcription-suspect annotation only appears on failures
    for (const auto& c : rep.checks)
        CHECK(c.note.find("transcription") == std::string::npos);

    SUBCASE("text rendering") {
        std::string text = to_text(rep);
        CHECK(text.find("verification report") != std::string::npos);
        CHECK(text.find(rep.subject) != std::string::npos);
        CHECK(text.find("[pass]") != std::string::npos);
        CHECK(text.find("overall: PASS") != std::string::npos);
        CHECK(text.find("FAIL") == std::string::npos);
    }

    SUBCASE("tree rendering") {
        std::string tree = to_tree(rep);
        auto j = nlohmann::json::parse(tree);
        CHECK(j["report"] == "verification");
        CHECK(j["subject"] == rep.subject);
        CHECK(j["overall"] == true);
        CHECK(j["tool"]["name"] == "isodirac");
        CHECK(j["tool"]["version"] == std::string(kVersion));
        CHECK(j["checks"].size() == rep.checks.size());
        for (const auto& jc : j["checks"]) {
            CHECK(jc.contains("name"));
            CHECK(jc.contains("measured"));
            CHECK(jc.contains("tolerance"));
            CHECK(jc.contains("pass"));
        }
    }

    SUBCASE("reruns are reproducible byte for byte") {
        auto again = verify_family(p, grid);
        CHECK(to_tree(rep) == to_tree(again));
        CHECK(to_text(rep) == to_text(again));
    }
}

TEST_CASE("closed-form cross-checks are skipped off the pinned parameters") {
    FamilyParams p = FamilyParams::radial_oscillator(3.0, 2.0);
    GridSpec grid = Family(p).default_grid();
    auto rep = verify_family(p, grid);
    CHECK(rep.overall());
    CHECK_FALSE(any_prefixed(rep, "closed-forms/"));
    CHECK(any_prefixed(rep, "isospectrality/"));
}
