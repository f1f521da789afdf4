#include "finring/axioms.hpp"

#include <functional>
#include <random>

namespace finring {

bool AxiomReport::passed() const { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

namespace {

using Unary = std::function<bool(Elem)>;
using Binary = std::function<bool(Elem, Elem)>;
using Ternary = std::function<bool(Elem, Elem, Elem)>;

AxiomCheck check_unary(const std::string& name, std::size_t n, const Unary& holds) {
    AxiomCheck c;
    c.name = name;
    for (Elem x = 0; x < n; ++x) {
        ++c.cases;
        if (!holds(x)) {
            c.passed = false;
            c.witness = std::array<Elem, 3>{x, 0, 0};
            break;
        }
    }
    return c;
}

AxiomCheck check_binary(const std::string& name, std::size_t n, const Binary& holds) {
    AxiomCheck c;
    c.name = name;
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            ++c.cases;
            if (!holds(x, y)) {
                c.passed = false;
                c.witness = std::array<Elem, 3>{x, y, 0};
                return c;
            }
        }
    }
    return c;
}

AxiomCheck check_ternary(const std::string& name, std::size_t n, const AxiomPolicy& policy,
                         std::uint64_t stream, const Ternary& holds) {
    AxiomCheck c;
    c.name = name;
    auto fail = [&](Elem x, Elem y, Elem z) {
        c.passed = false;
        c.witness = std::array<Elem, 3>{x, y, z};
    };
    if (n <= policy.exhaustive_max_order) {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z) {
                    ++c.cases;
                    if (!holds(x, y, z)) {
                        fail(x, y, z);
                        return c;
                    }
                }
        return c;
    }
    c.exhaustive = false;
    std::mt19937_64 rng(policy.seed ^ (stream * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
    for (std::size_t i = 0; i < policy.sampled_triples; ++i) {
        Elem x = pick(rng), y = pick(rng), z = pick(rng);
        ++c.cases;
        if (!holds(x, y, z)) {
            fail(x, y, z);
            break;
        }
    }
    return c;
}

} // namespace

AxiomReport verify_axioms(const FiniteRing& r, const AxiomPolicy& policy) {
    const std::size_t n = r.order();
    const Elem one = r.one();
    AxiomReport rep;
    auto& out = rep.checks;

    out.push_back(check_unary("one differs from zero", 1, [&](Elem) { return one != 0; }));
    out.push_back(check_unary("zero is additive identity", n,
                              [&](Elem x) { return r.add(x, 0) == x && r.add(0, x) == x; }));
    out.push_back(check_unary("additive inverse", n,
                              [&](Elem x) { return r.add(x, r.neg(x)) == 0 && r.add(r.neg(x), x) == 0; }));
    out.push_back(check_unary("one is identity", n,
                              [&](Elem x) { return r.mul(one, x) == x && r.mul(x, one) == x; }));
    out.push_back(check_binary("addition commutes", n, [&](Elem x, Elem y) { return r.add(x, y) == r.add(y, x); }));
    out.push_back(check_ternary("addition associative", n, policy, 1, [&](Elem x, Elem y, Elem z) {
        return r.add(r.add(x, y), z) == r.add(x, r.add(y, z));
    }));
    out.push_back(check_ternary("multiplication associative", n, policy, 2, [&](Elem x, Elem y, Elem z) {
        return r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z));
    }));
    out.push_back(check_ternary("left distributive", n, policy, 3, [&](Elem x, Elem y, Elem z) {
        return r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z));
    }));
    out.push_back(check_ternary("right distributive", n, policy, 4, [&](Elem x, Elem y, Elem z) {
        return r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z));
    }));
    return rep;
}

} // namespace finring
