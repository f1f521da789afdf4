// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "finring/classes.hpp"
#include "finring/cli.hpp"
#include "finring/harness.hpp"

using namespace finring;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::uint64_t rad(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) n /= p;
        }
    return n > 1 ? r * n : r;
}

bool is_2a3b(std::uint64_t n) {
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

const Corpus& corpus() {
    static const Corpus c = default_corpus();
    return c;
}

Outcome full_suite() {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = run_cli({"verify"}, out, err);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = out.str();
    const bool summary = text.find("19 passed, 0 failed, 2 skipped") != std::string::npos;
    const bool skips = text.find("SKIPPED C-torsion") != std::string::npos &&
                       text.find("SKIPPED C-powerseries") != std::string::npos;
    std::ostringstream d;
    d << "exit " << code << ", " << (summary ? "19 passed, 0 failed, 2 skipped" : "unexpected summary") << ", "
      << secs << "s";
    return {code == 0 && summary && skips && secs < 120.0, d.str()};
}

Outcome division_characterization() {
    std::string got;
    bool ok = true;
    for (const char* text : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(9)"}) {
        Analysis a{build_ring(text)};
        const bool tsj = is_two_sqrt_ju(a);
        const bool expect = std::string(text) == "GF(2)" || std::string(text) == "GF(3)";
        ok = ok && is_division(a).holds && tsj == expect;
        if (tsj) got += std::string(got.empty() ? "" : ", ") + text;
    }
    return {ok, "2-sqrtJU holds on {" + got + "}"};
}

Outcome zmod_law() {
    std::size_t agree = 0;
    std::string bad;
    for (std::uint64_t n = 2; n <= 64; ++n) {
        // Brute force with plain integers: x is in sqrtJ(Z/n) iff rad(n) divides x.
        bool brute = true;
        for (std::uint64_t u = 1; u < n; ++u)
            if (std::gcd(u, n) == 1 && ((u * u + n - 1) % n) % rad(n) != 0) brute = false;
        const bool lib = is_two_sqrt_ju(Analysis(zmod(n)));
        if (brute == lib && lib == is_2a3b(n))
            ++agree;
        else
            bad += " " + std::to_string(n);
    }
    return {agree == 63, std::to_string(agree) + "/63 agree" + (bad.empty() ? "" : "; disagree at" + bad)};
}

Outcome matrix_negative() {
    std::string detail;
    bool ok = true;
    for (std::uint64_t n : {2, 3, 4}) {
        FiniteRing base = zmod(n);
        Analysis a{matrix_ring(2, base)};
        const FiniteRing& r = a.ring();
        const Elem A = matrix_index(base, 2, std::vector<Elem>{1, 1, 1, 0});
        const Elem d = r.sub(r.mul(A, A), r.one());
        const bool witness = a.is_unit(A) && a.is_unit(d) && !a.sqrt_jacobson().contains(d);
        ok = ok && !is_two_sqrt_ju(a) && witness;
        detail += (detail.empty() ? "" : "; ") + r.label() + ": A = " + std::to_string(A) +
                  (witness ? " fails" : " does not fail");
    }
    return {ok, detail};
}

Outcome jacobson_oracle() {
    std::size_t good = 0;
    for (std::uint64_t n = 2; n <= 512; ++n) {
        std::vector<Elem> expect;
        for (std::uint64_t k = 0; k < n; k += rad(n)) expect.push_back(Elem(k));
        good += Analysis(zmod(n)).jacobson().members() == expect;
    }
    return {good == 511, std::to_string(good) + "/511 moduli match"};
}

Outcome sqrt_not_subring() {
    FiniteRing z2 = zmod(2);
    Analysis a{matrix_ring(2, z2)};
    const Elem e12 = matrix_index(z2, 2, std::vector<Elem>{0, 1, 0, 0});
    const Elem e21 = matrix_index(z2, 2, std::vector<Elem>{0, 0, 1, 0});
    const Elem sum = a.ring().add(e12, e21);
    const bool ok = a.sqrt_jacobson().contains(e12) && a.sqrt_jacobson().contains(e21) && a.is_unit(sum);
    return {ok, "E12 = " + std::to_string(e12) + ", E21 = " + std::to_string(e21) + ", sum " + std::to_string(sum) +
                    (a.is_unit(sum) ? " is a unit" : " is not a unit")};
}

Outcome te_formulas() {
    bool formulas = true;
    std::size_t j_reading = 0, sqrt_reading = 0, total = 0;
    auto check = [&](const FiniteRing& base, bool count) {
        Analysis r(base);
        Analysis t{trivial_extension(base)};
        const Elem n = Elem(base.order());
        bool jr = true, sr = true;
        for (Elem i = 0; i < t.ring().order(); ++i) {
            const Elem x = i / n;  // (x, m) -> x * |R| + m
            if (count) {
                formulas = formulas && t.is_unit(i) == r.is_unit(x);
                formulas = formulas && t.jacobson().contains(i) == r.jacobson().contains(x);
            }
            jr = jr && t.sqrt_jacobson().contains(i) == r.jacobson().contains(x);
            sr = sr && t.sqrt_jacobson().contains(i) == r.sqrt_jacobson().contains(x);
        }
        return std::pair{jr, sr};
    };
    for (std::uint64_t n : {2, 3, 4, 9}) {
        auto [jr, sr] = check(zmod(n), true);
        ++total;
        j_reading += jr;
        sqrt_reading += sr;
    }
    // Z/n has J = sqrtJ, so a noncommutative base is needed to separate the readings.
    auto [mj, ms] = check(matrix_ring(2, zmod(2)), false);
    std::ostringstream d;
    d << "U and J formulas " << (formulas ? "exact" : "FAIL") << " on TE(Z/2,3,4,9); sqrtJ reading z in J(R) "
      << j_reading << "/" << total << ", z in sqrtJ(R) " << sqrt_reading << "/" << total << "; on TE(M(2, Z/2)): J(R) "
      << (mj ? "holds" : "fails") << ", sqrtJ(R) " << (ms ? "holds" : "fails") << "; recorded reading: z in sqrtJ(R)";
    return {formulas && sqrt_reading == total && ms, d.str()};
}

Outcome bt_isomorphism() {
    std::string detail;
    bool ok = true;
    for (std::uint64_t n : {2, 3}) {
        FiniteRing base = zmod(n);
        FiniteRing inner = poly_quotient(base, std::vector<Elem>{0, 0, base.one()});
        FiniteRing poly = poly_quotient(inner, std::vector<Elem>{0, 0, inner.one()});
        FiniteRing b = bt(base);
        const Radix rad{n, 4};
        using Mat = std::array<Elem, 16>;
        // m + n x + p y + q xy, with index m + N n + N^2 p + N^3 q.
        auto poly_mat = [&](Elem i) {
            auto c = rad.decode(i);
            return Mat{c[0], c[1], c[2], c[3], 0, c[0], 0, c[2], 0, 0, c[0], c[1], 0, 0, 0, c[0]};
        };
        // BT element (x, p, y, q), little-endian.
        auto bt_mat = [&](Elem i) {
            auto c = rad.decode(i);
            return Mat{c[0], c[1], c[2], c[3], 0, c[0], 0, c[2], 0, 0, c[0], c[1], 0, 0, 0, c[0]};
        };
        std::map<Mat, Elem> bt_index;
        for (Elem i = 0; i < b.order(); ++i) bt_index.emplace(bt_mat(i), i);
        std::vector<Elem> phi(poly.order());
        std::set<Elem> image;
        bool mapped = bt_index.size() == b.order();
        for (Elem i = 0; i < poly.order(); ++i) {
            auto it = bt_index.find(poly_mat(i));
            if (it == bt_index.end()) {
                mapped = false;
                break;
            }
            phi[i] = it->second;
            image.insert(it->second);
        }
        const bool bijective = mapped && image.size() == b.order() && poly.order() == b.order();
        bool additive = bijective, multiplicative = bijective;
        for (Elem x = 0; bijective && x < poly.order(); ++x)
            for (Elem y = 0; y < poly.order(); ++y) {
                additive = additive && phi[poly.add(x, y)] == b.add(phi[x], phi[y]);
                multiplicative = multiplicative && phi[poly.mul(x, y)] == b.mul(phi[x], phi[y]);
            }
        const bool unital = bijective && phi[poly.one()] == b.one();
        // The displayed matrices multiply like the polynomials they stand for.
        bool matrices = true;
        for (Elem x = 0; x < poly.order(); ++x)
            for (Elem y = 0; y < poly.order(); ++y) {
                const Mat a = poly_mat(x), c = poly_mat(y), prod = poly_mat(poly.mul(x, y));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        Elem s = 0;
                        for (int k = 0; k < 4; ++k) s = base.add(s, base.mul(a[i * 4 + k], c[k * 4 + j]));
                        matrices = matrices && s == prod[i * 4 + j];
                    }
            }
        ok = ok && bijective && additive && multiplicative && unital && matrices;
        detail += (detail.empty() ? "" : "; ") + std::string("Z/") + std::to_string(n) + ": " +
                  std::to_string(poly.order()) + " elements, " +
                  (bijective && additive && multiplicative && unital && matrices ? "bijective, additive, multiplicative"
                                                                                : "FAIL");
    }
    return {ok, detail};
}

Outcome group_rings() {
    std::string detail;
    bool ok = true;
    for (auto [text, expect] : {std::pair{"GR(Z/4, C3)", false}, {"GR(Z/2, C3)", false}, {"GR(Z/9, C2)", true},
                                {"GR(Z/3, C2)", true}}) {
        const bool got = is_two_sqrt_ju(Analysis(build_ring(text)));
        ok = ok && got == expect;
        detail += (detail.empty() ? "" : ", ") + std::string(text) + (got ? " holds" : " fails");
    }
    return {ok, detail};
}

Outcome invariants() {
    std::string detail;
    bool ok = true;
    for (const char* id : {"C1", "C11", "C12"}) {
        ClaimResult r = run_claim(id, corpus());
        ok = ok && r.passed() && r.instances.size() + r.vacuous == corpus().size();
        detail += (detail.empty() ? "" : ", ") + std::string(id) + ": " + std::to_string(r.failures()) +
                  " counterexamples over " + std::to_string(r.instances.size()) + " rings";
    }
    return {ok, detail};
}

RingExpr random_expr(std::mt19937_64& rng, int depth) {
    auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
    std::function<GroupExpr(int)> group = [&](int d) -> GroupExpr {
        switch (pick(0, d > 0 ? 4 : 3)) {
        case 0: return GroupExpr::cyclic(pick(1, 64));
        case 1: return GroupExpr::named(GroupExpr::Kind::S3);
        case 2: return GroupExpr::named(GroupExpr::Kind::D4);
        case 3: return GroupExpr::named(GroupExpr::Kind::Q8);
        default: return GroupExpr::product(group(d - 1), group(d - 1));
        }
    };
    auto list = [&](std::size_t min) {
        std::vector<std::uint64_t> v(pick(min, 5));
        for (auto& x : v) x = pick(0, 99999);
        return v;
    };
    using K = RingExpr::Kind;
    const std::uint64_t primes[] = {2, 3, 5, 7, 31, 8191};
    switch (pick(0, depth > 0 ? 12 : 1)) {
    case 0: return RingExpr::zmod(pick(2, 1'000'000'000));
    case 1: return RingExpr::gf(primes[pick(0, 5)], pick(1, 12));
    case 2: return RingExpr::product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return RingExpr::unary(K::Matrix, random_expr(rng, depth - 1), {pick(1, 9)});
    case 4: return RingExpr::unary(K::UpperTri, random_expr(rng, depth - 1), {pick(2, 9)});
    case 5: return RingExpr::unary(K::TE, random_expr(rng, depth - 1));
    case 6: return RingExpr::unary(K::BT, random_expr(rng, depth - 1));
    case 7: return RingExpr::unary(K::Nil, random_expr(rng, depth - 1), {pick(1, 9)});
    case 8: return RingExpr::unary(K::PolyQ, random_expr(rng, depth - 1), list(2));
    case 9: return RingExpr::group_ring(random_expr(rng, depth - 1), group(2));
    case 10: return RingExpr::unary(K::ModJ, random_expr(rng, depth - 1));
    case 11: return RingExpr::unary(K::Corner, random_expr(rng, depth - 1), {pick(0, 9999)});
    default: return RingExpr::unary(K::Quot, random_expr(rng, depth - 1), list(1));
    }
}

Outcome engineering() {
    Limits computed;
    computed.materialize_threshold = 0;
    bool modes = true;
    for (const char* text : {"GR(Z/2, C4)", "M(2, Z/4)"}) {
        FiniteRing a = build_ring(text), b = build_ring(text, computed);
        modes = modes && a.mode() == Mode::Materialized && b.mode() == Mode::Computed && a.one() == b.one();
        for (Elem x = 0; modes && x < a.order(); ++x)
            for (Elem y = 0; y < a.order(); ++y)
                modes = modes && a.add(x, y) == b.add(x, y) && a.mul(x, y) == b.mul(x, y);
    }

    std::mt19937_64 rng(kDefaultSeed);
    std::size_t trips = 0;
    const std::size_t total = 20000;
    for (std::size_t i = 0; i < total; ++i) {
        RingExpr e = random_expr(rng, int(i % 5));
        const std::string text = format(e);
        try {
            RingExpr back = parse_ring(text);
            trips += back == e && format(back) == text;
        } catch (const ParseError&) {
        }
    }

    std::size_t axioms_ok = 0;
    for (const auto& e : corpus().entries()) axioms_ok += verify_axioms(e.ring).passed();

    std::ostringstream d;
    d << "modes " << (modes ? "agree" : "DISAGREE") << "; round trip " << trips << "/" << total << "; axioms "
      << axioms_ok << "/" << corpus().size() << " corpus rings";
    return {modes && trips == total && axioms_ok == corpus().size(), d.str()};
}

} // namespace

int main() {
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"full suite", full_suite},
        {"division characterization", division_characterization},
        {"Z/n law", zmod_law},
        {"matrix negative result", matrix_negative},
        {"Jacobson oracle", jacobson_oracle},
        {"sqrtJ not a subring", sqrt_not_subring},
        {"trivial extension formulas", te_formulas},
        {"BT isomorphism", bt_isomorphism},
        {"group ring theorems", group_rings},
        {"invariant suite", invariants},
        {"engineering invariants", engineering},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  " << index << ". " << name << ": " << o.detail << std::endl;
    }
    std::cout << (11 - failed) << "/11 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
