#include <doctest.h>

#include <sstream>

#include "finring/constructions.hpp"
#include "finring/harness.hpp"

using namespace finring;

namespace {

const Corpus& shared_corpus() {
    static const Corpus c = default_corpus();
    return c;
}

const InstanceRecord* find_instance(const ClaimResult& r, std::string_view rings) {
    for (const auto& i : r.instances)
        if (i.rings == rings) return &i;
    return nullptr;
}

} // namespace

TEST_CASE("default corpus") {
    const Corpus& c = shared_corpus();
    CHECK(c.size() == default_corpus_lines().size());
    CHECK(c.size() == 47);
    REQUIRE(c.find("GF(4)"));
    CHECK(c.find("GF(4)")->label == "GF(2, 2)");
    CHECK(c.find("GR(Z/2,C2xC2)"));
    CHECK_FALSE(c.find("Z/17"));
    for (const auto& e : c.entries()) {
        CHECK(e.expr.has_value());
        CHECK(e.ring.label() == e.label);
    }
}

TEST_CASE("corpus files") {
    std::istringstream in("# small corpus\nZ/4\n\n  M(2, Z/2)   # matrices\n");
    Corpus c = Corpus::parse(in, "test");
    CHECK(c.size() == 2);
    CHECK(c.entries()[1].label == "M(2, Z/2)");

    std::istringstream bad("Z/4\nZ/9\nZ/\n");
    try {
        Corpus::parse(bad, "bad");
        FAIL("expected a corpus error");
    } catch (const CorpusError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("claim catalog and filtering") {
    CHECK(claim_catalog().size() == 19);
    CHECK(claim_catalog().front().id == "C1");
    CHECK(claim_catalog().back().id == "C19");
    CHECK_THROWS_AS(run_claim("C99", shared_corpus()), ArgumentError);
    CHECK_THROWS_AS(run_suite(shared_corpus(), {"C1", "nope"}), ArgumentError);

    Report r = run_suite(shared_corpus(), {"C1"});
    REQUIRE(r.claims.size() == 1);
    CHECK(r.claims[0].id == "C1");
    CHECK(r.claims[0].instances.size() == shared_corpus().size());
    CHECK(r.claims[0].passed());
    CHECK(r.skipped.empty());
    CHECK(r.passed());
}

TEST_CASE("selected claims") {
    ClaimResult c13 = run_claim("C13", shared_corpus());
    CHECK(c13.passed());
    REQUIRE(find_instance(c13, "M(2, Z/2)"));
    CHECK(find_instance(c13, "M(2, Z/2)")->detail.find("index 7 fails") != std::string::npos);

    ClaimResult c6 = run_claim("C6", shared_corpus());
    CHECK(c6.passed());
    REQUIRE(find_instance(c6, "GF(2, 2)"));
    REQUIRE(find_instance(c6, "GF(3, 2)"));
    REQUIRE(find_instance(c6, "Z/2"));
    REQUIRE(find_instance(c6, "Z/3"));
    CHECK(find_instance(c6, "GF(2, 2)")->detail.find("not 2-sqrtJU") != std::string::npos);

    ClaimResult c18 = run_claim("C18", shared_corpus());
    CHECK(c18.passed());
    CHECK(find_instance(c18, "GR(Z/4, C3)"));

    ClaimResult c14 = run_claim("C14", shared_corpus());
    CHECK(c14.passed());
    REQUIRE(find_instance(c14, "TE(M(2, Z/2))"));
    CHECK(find_instance(c14, "TE(M(2, Z/2))")->detail ==
          "sqrtJ reading z in J(R): no, z in sqrtJ(R): yes");
}

TEST_CASE("claims are deterministic") {
    HarnessOptions opt;
    opt.threads = 3;
    Report a = run_suite(shared_corpus(), {"C2", "C3", "C14", "C17"}, opt);
    opt.threads = 1;
    Report b = run_suite(shared_corpus(), {"C2", "C3", "C14", "C17"}, opt);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].id == b.claims[i].id);
        CHECK(a.claims[i].vacuous == b.claims[i].vacuous);
        CHECK(a.claims[i].notes == b.claims[i].notes);
        REQUIRE(a.claims[i].instances.size() == b.claims[i].instances.size());
        for (std::size_t j = 0; j < a.claims[i].instances.size(); ++j) {
            CHECK(a.claims[i].instances[j].rings == b.claims[i].instances[j].rings);
            CHECK(a.claims[i].instances[j].passed == b.claims[i].instances[j].passed);
            CHECK(a.claims[i].instances[j].detail == b.claims[i].instances[j].detail);
        }
    }
}

TEST_CASE("a corrupted table is caught") {
    FiniteRing z6 = zmod(6);
    std::vector<Elem> add(36), mul(36);
    for (Elem x = 0; x < 6; ++x)
        for (Elem y = 0; y < 6; ++y) {
            add[x * 6 + y] = z6.add(x, y);
            mul[x * 6 + y] = z6.mul(x, y);
        }
    mul[2 * 6 + 3] = 1;  // 2*3 = 1 but 3*2 = 0
    Corpus c = Corpus::from_rings({zmod(4), FiniteRing::from_tables(6, 1, add, mul, "broken")}, "corrupted");
    Report r = run_suite(c, {"C1"});
    CHECK_FALSE(r.passed());
    REQUIRE(r.axiom_failures.size() == 1);
    CHECK(r.axiom_failures[0].ring == "broken");
    CHECK_FALSE(r.axiom_failures[0].witness.empty());
    CHECK_FALSE(r.claims[0].passed());
    CHECK(r.claims[0].failures() == 1);

    std::ostringstream out;
    print_report(out, r);
    CHECK(out.str().find("axioms: FAIL broken") != std::string::npos);
    CHECK(out.str().find("counterexample: broken") != std::string::npos);
    CHECK(out.str().find("0 passed, 1 failed, 0 skipped") != std::string::npos);
}
