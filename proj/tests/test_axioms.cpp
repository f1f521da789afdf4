#include <doctest.h>

#include "finring/axioms.hpp"
#include "finring/constructions.hpp"

using namespace finring;

namespace {

FiniteRing corrupt_mul(const FiniteRing& r, Elem x, Elem y, Elem value) {
    const std::size_t n = r.order();
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            add[a * n + b] = r.add(a, b);
            mul[a * n + b] = r.mul(a, b);
        }
    mul[x * n + y] = value;
    return FiniteRing::from_tables(n, r.one(), add, mul, "corrupted");
}

} // namespace

TEST_CASE("constructed rings satisfy the axioms") {
    CHECK(verify_axioms(zmod(6)).passed());
    auto rep = verify_axioms(group_ring(zmod(4), cyclic(2)));
    CHECK(rep.passed());
    for (const auto& c : rep.checks) CHECK(c.exhaustive);
    for (const FiniteRing& r : {matrix_ring(2, zmod(3)), upper_triangular(3, zmod(2)), trivial_extension(zmod(9)),
                                bt(zmod(3)), nil_extension(zmod(2), 3), gf(2, 3), product(zmod(4), gf(2, 2)),
                                group_ring(zmod(2), symmetric3()), group_ring(zmod(2), quaternion8()),
                                group_ring(zmod(2), dihedral4())})
        CHECK_MESSAGE(verify_axioms(r).passed(), r.label());
}

TEST_CASE("corrupted identity is reported with a witness") {
    FiniteRing bad = corrupt_mul(zmod(6), 1, 1, 2);
    auto rep = verify_axioms(bad);
    CHECK_FALSE(rep.passed());
    const AxiomCheck* f = rep.first_failure();
    REQUIRE(f);
    CHECK(f->name == "one is identity");
    REQUIRE(f->witness);
    CHECK((*f->witness)[0] == 1);
}

TEST_CASE("corrupted associativity is caught") {
    FiniteRing bad = corrupt_mul(zmod(5), 2, 3, 4);
    auto rep = verify_axioms(bad);
    CHECK_FALSE(rep.passed());
    bool assoc_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "multiplication associative") assoc_failed = !c.passed;
    CHECK(assoc_failed);
}

TEST_CASE("large rings are sampled reproducibly") {
    FiniteRing r = zmod(300);
    AxiomPolicy policy;
    auto a = verify_axioms(r, policy);
    CHECK(a.passed());
    for (const auto& c : a.checks) {
        if (c.name == "multiplication associative") {
            CHECK_FALSE(c.exhaustive);
            CHECK(c.cases >= 100000);
        }
    }
    // A single corrupted entry in a 300x300 table is caught by the exhaustive
    // unary/binary checks regardless of sampling.
    FiniteRing bad = corrupt_mul(r, 1, 7, 8);
    auto b1 = verify_axioms(bad, policy), b2 = verify_axioms(bad, policy);
    CHECK_FALSE(b1.passed());
    REQUIRE(b1.first_failure());
    CHECK(b1.first_failure()->name == b2.first_failure()->name);
    CHECK(b1.first_failure()->witness == b2.first_failure()->witness);
}
