#include "finring/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "finring/classes.hpp"
#include "finring/constructions.hpp"

namespace finring {

// ---------------------------------------------------------------------------
// Corpus

namespace {

CorpusEntry make_entry(RingExpr expr, const Limits& limits) {
    FiniteRing ring = evaluate(expr, limits);
    CorpusEntry e;
    e.label = ring.label();
    e.expr = std::move(expr);
    e.analysis = std::make_shared<const Analysis>(ring);
    e.ring = std::move(ring);
    return e;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

Corpus Corpus::parse(std::istream& in, std::string name, const Limits& limits) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return from_lines(lines, std::move(name), limits);
}

Corpus Corpus::from_lines(const std::vector<std::string>& lines, std::string name, const Limits& limits) {
    Corpus c;
    c.name_ = std::move(name);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view raw = lines[i];
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string text = trim(raw);
        if (text.empty()) continue;
        try {
            c.entries_.push_back(make_entry(parse_ring(text), limits));
        } catch (const Error& err) {
            throw CorpusError(i + 1, "'" + text + "': " + err.what());
        }
    }
    return c;
}

Corpus Corpus::from_rings(std::vector<FiniteRing> rings, std::string name) {
    Corpus c;
    c.name_ = std::move(name);
    for (auto& r : rings) {
        CorpusEntry e;
        e.label = r.label();
        e.analysis = std::make_shared<const Analysis>(r);
        e.ring = std::move(r);
        c.entries_.push_back(std::move(e));
    }
    return c;
}

const CorpusEntry* Corpus::find(std::string_view text) const {
    std::string canonical;
    try {
        canonical = format(parse_ring(text));
    } catch (const ParseError&) {
        canonical = std::string(text);
    }
    for (const auto& e : entries_)
        if (e.label == canonical) return &e;
    return nullptr;
}

std::vector<std::string> default_corpus_lines() {
    std::vector<std::string> lines;
    for (int n = 2; n <= 16; ++n) lines.push_back("Z/" + std::to_string(n));
    for (int n : {18, 24, 27, 36}) lines.push_back("Z/" + std::to_string(n));
    const char* rest[] = {
        "GF(4)",        "GF(9)",    "M(2, Z/2)",    "M(2, Z/3)",    "M(2, Z/4)",
        "UT(2, Z/2)",   "UT(2, Z/4)",  "UT(3, Z/2)",   "UT(2, Z/5)",   "TE(Z/2)",
        "TE(Z/4)",      "TE(Z/3)",     "TE(Z/9)",      "BT(Z/2)",      "BT(Z/3)",
        "BT(Z/5)",      "NIL(Z/2, 2)", "NIL(Z/2, 3)",  "NIL(Z/3, 2)",  "GR(Z/2, C2)",
        "GR(Z/2, C3)",  "GR(Z/2, C4)", "GR(Z/2, C2 x C2)", "GR(Z/4, C2)", "GR(Z/4, C3)",
        "GR(Z/3, C2)",  "GR(Z/9, C2)", "GR(Z/2, S3)",
    };
    lines.insert(lines.end(), std::begin(rest), std::end(rest));
    return lines;
}

Corpus default_corpus(const Limits& limits) { return Corpus::from_lines(default_corpus_lines(), "default", limits); }

// ---------------------------------------------------------------------------
// Results

bool ClaimResult::passed() const { return failures() == 0; }

std::size_t ClaimResult::failures() const {
    return std::size_t(std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.passed; }));
}

std::size_t Report::passed_count() const {
    return std::size_t(std::count_if(claims.begin(), claims.end(), [](const auto& c) { return c.passed(); }));
}

std::size_t Report::failed_count() const { return claims.size() - passed_count(); }

// ---------------------------------------------------------------------------
// Claims

namespace {

struct Ctx {
    const Corpus& corpus;
    const HarnessOptions& opt;
    ClaimResult& out;

    void record(std::string rings, bool passed, std::string detail = {}) {
        out.instances.push_back({std::move(rings), passed, std::move(detail)});
    }

    /// Runs body; an exception becomes a failed instance rather than aborting the claim.
    template <class F>
    void guard(const std::string& rings, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            record(rings, false, std::string("error: ") + e.what());
        }
    }

    /// Corpus entry for text, or a freshly built one when absent.
    std::shared_ptr<const Analysis> ring(std::string_view text) const {
        if (const auto* e = corpus.find(text)) return e->analysis;
        return std::make_shared<const Analysis>(build_ring(text, opt.limits));
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string idx(Elem x) { return std::to_string(x); }

bool two_in(const Analysis& a, const ElementSet& s, int k) { return s.contains(a.ring().from_integer(k)); }

std::string unit_witness(const Analysis& a) {
    Verdict v = check_unit_class(a, 2, Target::SqrtJacobson);
    if (v.holds) return "2-sqrtJU";
    const FiniteRing& r = a.ring();
    Elem u = *v.witness;
    return "not 2-sqrtJU (unit " + idx(u) + ", u^2-1 = " + idx(r.sub(r.mul(u, u), r.one())) + " not in sqrtJ)";
}

/// Base ring of a corpus entry built as Kind(base, ...).
std::optional<FiniteRing> base_of(const CorpusEntry& e, RingExpr::Kind kind, const Limits& limits) {
    if (!e.expr || e.expr->kind != kind) return std::nullopt;
    return evaluate(e.expr->children.at(0), limits);
}

// C1
void claim_sqrt_basic(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            const FiniteRing& r = a.ring();
            const auto& sj = a.sqrt_jacobson();
            for (Elem u : a.units().members())
                if (sj.contains(u)) return c.record(e.label, false, "unit " + idx(u) + " lies in sqrtJ");
            for (Elem f : a.idempotents().members())
                if (f != 0 && sj.contains(f)) return c.record(e.label, false, "idempotent " + idx(f) + " lies in sqrtJ");
            for (Elem x = 0; x < r.order(); ++x)
                for (std::uint64_t k : {2, 3, 4})
                    if (sj.contains(r.pow(x, k)) && !sj.contains(x))
                        return c.record(e.label, false,
                                        "x = " + idx(x) + ", x^" + std::to_string(k) + " in sqrtJ but x is not");
            c.record(e.label, true);
        });
    }
}

// C2
void claim_quotient_iff(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            const FiniteRing& r = a.ring();
            const bool base = is_two_sqrt_ju(a);
            std::set<std::vector<Elem>> seen;
            std::vector<std::pair<std::string, ElementSet>> ideals{{"J(R)", a.jacobson()}};
            seen.insert(a.jacobson().members());
            for (Elem j : a.jacobson().members()) {
                ElementSet I = ideal_closure(r, std::span<const Elem>(&j, 1));
                if (seen.insert(I.members()).second) ideals.emplace_back("(" + idx(j) + ")", std::move(I));
            }
            for (const auto& [name, I] : ideals) {
                Quotient q = quotient(r, I, c.opt.limits);
                Analysis qa(q.ring);
                const bool quot = is_two_sqrt_ju(qa);
                const std::string rings = e.label + " / " + name;
                if (base == quot)
                    c.record(rings, true);
                else
                    c.record(rings, false,
                             "R: " + unit_witness(a) + "; R/I (order " + std::to_string(q.ring.order()) +
                                 "): " + unit_witness(qa));
            }
        });
    }
}

// C3
void claim_product_iff(Ctx& c) {
    const auto& es = c.corpus.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i; j < es.size(); ++j) {
            if (es[i].ring.order() * es[j].ring.order() > c.opt.pair_cap) continue;
            const std::string rings = es[i].label + " x " + es[j].label;
            c.guard(rings, [&] {
                Analysis p(product(es[i].ring, es[j].ring, c.opt.limits));
                const bool left = is_two_sqrt_ju(*es[i].analysis), right = is_two_sqrt_ju(*es[j].analysis);
                const bool prod = is_two_sqrt_ju(p);
                c.record(rings, prod == (left && right),
                         prod == (left && right) ? "" : "product: " + unit_witness(p) + "; factors " + yes_no(left) +
                                                            ", " + yes_no(right));
            });
        }
    }
}

// C4
void claim_corner(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            if (!is_two_sqrt_ju(a)) {
                ++c.out.vacuous;
                return;
            }
            for (Elem f : a.idempotents().members()) {
                if (f == 0) continue;
                Subring s = corner(a.ring(), f, c.opt.limits);
                Analysis ca(s.ring);
                const bool ok = is_two_sqrt_ju(ca);
                c.record(e.label + " e=" + idx(f), ok, ok ? "" : "corner: " + unit_witness(ca));
            }
        });
    }
}

// C5
void claim_unit_closed_subring(Ctx& c) {
    std::size_t not_closed = 0;
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            if (!is_two_sqrt_ju(a)) {
                ++c.out.vacuous;
                return;
            }
            std::set<std::vector<Elem>> seen;
            for (Elem x = 0; x < a.ring().order(); ++x) {
                Subring s = subring_closure(a.ring(), std::span<const Elem>(&x, 1), c.opt.limits);
                if (!seen.insert(s.embedding).second) continue;
                if (!is_unit_closed_subring(a, s)) {
                    ++not_closed;
                    continue;
                }
                Analysis sa(s.ring);
                const bool ok = is_two_sqrt_ju(sa);
                c.record(e.label + " <" + idx(x) + "> (order " + std::to_string(s.ring.order()) + ")", ok,
                         ok ? "" : "subring: " + unit_witness(sa));
            }
        });
    }
    c.out.notes.push_back(std::to_string(not_closed) + " single-generator subrings were not unit-closed and were skipped");
}

// C6
void claim_division(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            if (!is_division(a).holds) {
                ++c.out.vacuous;
                return;
            }
            const bool tsj = is_two_sqrt_ju(a);
            const bool small = a.ring().order() == 2 || a.ring().order() == 3;
            c.record(e.label, tsj == small,
                     "order " + std::to_string(a.ring().order()) + ", " + unit_witness(a));
        });
    }
}

// C7
void claim_local(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            if (!is_local(a).holds) {
                ++c.out.vacuous;
                return;
            }
            const std::size_t residue = a.ring().order() / a.jacobson().size();
            const bool tsj = is_two_sqrt_ju(a);
            c.record(e.label, tsj == (residue == 2 || residue == 3),
                     "|R/J| = " + std::to_string(residue) + ", " + unit_witness(a));
        });
    }
}

// C8
void claim_semisimple(Ctx& c) {
    struct Field {
        std::string name;
        FiniteRing ring;
        bool small;
    };
    const std::vector<Field> fields = {
        {"F2", zmod(2, c.opt.limits), true},
        {"F3", zmod(3, c.opt.limits), true},
        {"F4", gf(2, 2, c.opt.limits), false},
        {"F5", zmod(5, c.opt.limits), false},
    };
    std::vector<std::vector<std::size_t>> shapes;
    for (std::size_t a = 0; a < 4; ++a) {
        shapes.push_back({a});
        for (std::size_t b = a; b < 4; ++b) {
            shapes.push_back({a, b});
            for (std::size_t d = b; d < 4; ++d) shapes.push_back({a, b, d});
        }
    }
    for (const auto& shape : shapes) {
        std::string name;
        FiniteRing r = fields[shape.back()].ring;
        bool expect = true;
        for (std::size_t i = shape.size(); i-- > 0;) {
            if (i + 1 < shape.size()) r = product(fields[shape[i]].ring, r, c.opt.limits);
            name = fields[shape[i]].name + (name.empty() ? "" : " x " + name);
            expect = expect && fields[shape[i]].small;
        }
        c.guard(name, [&] {
            Analysis a(r);
            if (!is_semisimple(a).holds) return c.record(name, false, "J(R) is nonzero");
            const bool tsj = is_two_sqrt_ju(a);
            c.record(name, tsj == expect, tsj == expect ? "" : unit_witness(a));
        });
    }
}

// C9
void claim_sqrtju_iff(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            const bool sju = check_unit_class(a, 1, Target::SqrtJacobson).holds;
            const bool rhs = is_two_sqrt_ju(a) && two_in(a, a.jacobson(), 2);
            c.record(e.label, sju == rhs, "sqrtJU " + yes_no(sju) + ", 2-sqrtJU and 2 in J " + yes_no(rhs));
        });
    }
}

// C10
void claim_nil_extension(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        for (std::size_t p : {2, 3}) {
            if (saturating_pow(e.ring.order(), p) > c.opt.derived_cap) continue;
            const std::string rings = "NIL(" + e.label + ", " + std::to_string(p) + ")";
            c.guard(rings, [&] {
                Analysis ext(nil_extension(e.ring, p, c.opt.limits));
                const bool base = is_two_sqrt_ju(*e.analysis), up = is_two_sqrt_ju(ext);
                c.record(rings, base == up, base == up ? "" : "R " + yes_no(base) + ", extension: " + unit_witness(ext));
            });
        }
    }
}

// C11
void claim_unit_square_sum(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            if (!is_two_sqrt_ju(a)) {
                ++c.out.vacuous;
                return;
            }
            const FiniteRing& r = a.ring();
            const auto units = a.units().members();
            for (Elem u : units) {
                const Elem sq = r.mul(u, u);
                for (Elem v : units)
                    if (r.add(sq, v) == r.one())
                        return c.record(e.label, false, "u = " + idx(u) + ", v = " + idx(v) + " give u^2 + v = 1");
            }
            c.record(e.label, true);
        });
    }
}

// C12
void claim_central_sqrtj(Ctx& c) {
    for (const auto& e : c.corpus.entries()) {
        c.guard(e.label, [&] {
            const Analysis& a = *e.analysis;
            for (Elem x : a.sqrt_jacobson().intersect(a.center()).members())
                if (!a.jacobson().contains(x))
                    return c.record(e.label, false, "central " + idx(x) + " in sqrtJ but not in J");
            c.record(e.label, true);
        });
    }
}

// C13
void claim_matrix_never(Ctx& c) {
    for (std::string base : {"Z/2", "Z/3", "Z/4"}) {
        const std::string text = "M(2, " + base + ")";
        c.guard(text, [&] {
            auto a = c.ring(text);
            const FiniteRing& r = a->ring();
            const FiniteRing coeff = build_ring(base, c.opt.limits);
            const Elem one = coeff.one();
            const std::array<Elem, 4> entries{one, one, one, 0};
            const Elem w = matrix_index(coeff, 2, entries);
            const Elem sq_minus_one = r.sub(r.mul(w, w), r.one());
            const bool w_fails = a->is_unit(w) && a->is_unit(sq_minus_one) && !a->sqrt_jacobson().contains(sq_minus_one);
            Verdict v = check_unit_class(*a, 2, Target::SqrtJacobson);
            std::string detail = "witness matrix [[1,1],[1,0]] = index " + idx(w) + (w_fails ? " fails" : " does NOT fail") +
                                 "; first failing unit " + (v.witness ? idx(*v.witness) : std::string("none"));
            c.record(text, !v.holds && w_fails, detail);
        });
    }
}

// C14
void claim_trivial_extension(Ctx& c) {
    std::vector<std::pair<std::string, FiniteRing>> bases;
    std::set<std::string> labels;
    for (const auto& e : c.corpus.entries()) {
        if (auto b = base_of(e, RingExpr::Kind::TE, c.opt.limits); b && labels.insert(b->label()).second)
            bases.emplace_back(b->label(), *b);
    }
    for (const auto& e : c.corpus.entries())
        if (e.ring.order() * e.ring.order() <= c.opt.pair_cap && labels.insert(e.label).second)
            bases.emplace_back(e.label, e.ring);

    std::size_t reading_j = 0, reading_sqrt = 0, total = 0;
    for (const auto& [label, base] : bases) {
        const std::string rings = "TE(" + label + ")";
        c.guard(rings, [&] {
            const FiniteRing te = trivial_extension(base, c.opt.limits);
            const auto* entry = c.corpus.find(rings);
            std::shared_ptr<const Analysis> ta = entry ? entry->analysis : std::make_shared<const Analysis>(te);
            Analysis ra(base);
            const Elem n = Elem(base.order());
            std::string problem;
            bool j_reading = true, sqrt_reading = true;
            for (Elem i = 0; i < te.order() && problem.empty(); ++i) {
                const Elem x = i / n;
                if (ta->is_unit(i) != ra.is_unit(x)) problem = "U formula fails at " + idx(i);
                else if (ta->jacobson().contains(i) != ra.jacobson().contains(x)) problem = "J formula fails at " + idx(i);
                const bool in_sqrt = ta->sqrt_jacobson().contains(i);
                j_reading = j_reading && in_sqrt == ra.jacobson().contains(x);
                sqrt_reading = sqrt_reading && in_sqrt == ra.sqrt_jacobson().contains(x);
            }
            const bool b = is_two_sqrt_ju(ra), t = is_two_sqrt_ju(*ta);
            if (problem.empty() && b != t) problem = "R " + yes_no(b) + ", TE(R): " + unit_witness(*ta);
            if (problem.empty() && !j_reading && !sqrt_reading) problem = "neither sqrtJ reading matches";
            ++total;
            reading_j += j_reading;
            reading_sqrt += sqrt_reading;
            c.record(rings, problem.empty(),
                     problem.empty() ? std::string("sqrtJ reading z in J(R): ") + yes_no(j_reading) +
                                           ", z in sqrtJ(R): " + yes_no(sqrt_reading)
                                     : problem);
        });
    }
    c.out.notes.push_back("sqrtJ(T(R,R)) = {(z,n): z in J(R)} held on " + std::to_string(reading_j) + "/" +
                          std::to_string(total) + " instances");
    c.out.notes.push_back("sqrtJ(T(R,R)) = {(z,n): z in sqrtJ(R)} held on " + std::to_string(reading_sqrt) + "/" +
                          std::to_string(total) + " instances");
}

// C15
void claim_triangular(Ctx& c) {
    std::vector<std::pair<std::size_t, FiniteRing>> cases;
    std::set<std::string> labels;
    for (const auto& e : c.corpus.entries()) {
        if (auto b = base_of(e, RingExpr::Kind::UpperTri, c.opt.limits)) {
            const std::size_t m = e.expr->ints.at(0);
            if (labels.insert("UT(" + std::to_string(m) + ", " + b->label() + ")").second) cases.emplace_back(m, *b);
        }
    }
    for (const auto& e : c.corpus.entries())
        for (std::size_t m : {2, 3})
            if (saturating_pow(e.ring.order(), m * (m + 1) / 2) <= c.opt.derived_cap &&
                labels.insert("UT(" + std::to_string(m) + ", " + e.label + ")").second)
                cases.emplace_back(m, e.ring);

    for (const auto& [m, base] : cases) {
        const std::string rings = "UT(" + std::to_string(m) + ", " + base.label() + ")";
        c.guard(rings, [&] {
            Analysis ut(upper_triangular(m, base, c.opt.limits));
            Analysis ra(base);
            const bool t = is_two_sqrt_ju(ut), b = is_two_sqrt_ju(ra);
            if (!t) ++c.out.vacuous;
            c.record(rings, !t || b, "UT: " + unit_witness(ut) + "; R: " + unit_witness(ra));
        });
    }
}

/// 4x4 matrices over R as flat arrays.
using Mat4 = std::array<Elem, 16>;

Mat4 mat_mul(const FiniteRing& r, const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Elem s = 0;
            for (int k = 0; k < 4; ++k) s = r.add(s, r.mul(a[i * 4 + k], b[k * 4 + j]));
            out[i * 4 + j] = s;
        }
    return out;
}

Mat4 mat_add(const FiniteRing& r, const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 16; ++i) out[i] = r.add(a[i], b[i]);
    return out;
}

/// Checks that m + n x + p y + q xy -> [[m,n,p,q],[0,m,0,p],[0,0,m,n],[0,0,0,m]] is an
/// isomorphism R[x,y]/(x^2,y^2) -> BT(R). Returns an empty string on success.
std::string check_bt_isomorphism(const FiniteRing& base, const Limits& limits) {
    const FiniteRing poly = nil_extension(nil_extension(base, 2, limits), 2, limits);
    const FiniteRing btr = bt(base, limits);
    const Radix rad{base.order(), 4};
    // Polynomial coordinates: index = m + N n + N^2 p + N^3 q (outer y-digit over inner x-digit).
    auto poly_matrix = [&](Elem i) {
        auto d = rad.decode(i);
        const Elem m = d[0], n = d[1], p = d[2], q = d[3];
        return Mat4{m, n, p, q, 0, m, 0, p, 0, 0, m, n, 0, 0, 0, m};
    };
    auto bt_matrix = [&](Elem i) {
        auto d = rad.decode(i);
        const Elem x = d[0], p = d[1], y = d[2], q = d[3];
        return Mat4{x, p, y, q, 0, x, 0, y, 0, 0, x, p, 0, 0, 0, x};
    };
    std::map<Mat4, Elem> bt_index;
    for (Elem i = 0; i < btr.order(); ++i)
        if (!bt_index.emplace(bt_matrix(i), i).second) return "BT matrix form is not injective";
    std::vector<Elem> theta(poly.order());
    std::set<Elem> image;
    for (Elem i = 0; i < poly.order(); ++i) {
        auto it = bt_index.find(poly_matrix(i));
        if (it == bt_index.end()) return "image of " + idx(i) + " is not a BT matrix";
        theta[i] = it->second;
        image.insert(it->second);
    }
    if (image.size() != btr.order()) return "coordinate map is not bijective";
    if (theta[poly.one()] != btr.one()) return "coordinate map does not preserve 1";
    for (Elem a = 0; a < poly.order(); ++a)
        for (Elem b = 0; b < poly.order(); ++b) {
            if (theta[poly.add(a, b)] != btr.add(theta[a], theta[b])) return "not additive at " + idx(a) + ", " + idx(b);
            if (theta[poly.mul(a, b)] != btr.mul(theta[a], theta[b]))
                return "not multiplicative at " + idx(a) + ", " + idx(b);
            // The matrix realizations multiply as 4x4 matrices.
            if (poly_matrix(poly.mul(a, b)) != mat_mul(base, poly_matrix(a), poly_matrix(b)) ||
                poly_matrix(poly.add(a, b)) != mat_add(base, poly_matrix(a), poly_matrix(b)))
                return "matrix realization fails at " + idx(a) + ", " + idx(b);
        }
    return {};
}

bool is_commutative(const FiniteRing& r) {
    for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = 0; b < a; ++b)
            if (r.mul(a, b) != r.mul(b, a)) return false;
    return true;
}

// C16
void claim_bt(Ctx& c) {
    std::vector<FiniteRing> bases;
    std::set<std::string> labels;
    for (const auto& e : c.corpus.entries())
        if (auto b = base_of(e, RingExpr::Kind::BT, c.opt.limits); b && labels.insert(b->label()).second)
            bases.push_back(*b);
    for (const auto& e : c.corpus.entries())
        if (saturating_pow(e.ring.order(), 4) <= c.opt.derived_cap && labels.insert(e.label).second)
            bases.push_back(e.ring);

    for (const auto& base : bases) {
        const std::string rings = "BT(" + base.label() + ")";
        c.guard(rings, [&] {
            const auto* entry = c.corpus.find(rings);
            auto ba = entry ? entry->analysis : std::make_shared<const Analysis>(bt(base, c.opt.limits));
            Analysis ra(base);
            const bool b = is_two_sqrt_ju(ra), t = is_two_sqrt_ju(*ba);
            std::string detail = b == t ? "" : "R " + yes_no(b) + ", BT(R): " + unit_witness(*ba);
            bool ok = b == t;
            if (ok && saturating_pow(base.order(), 4) <= c.opt.derived_cap && is_commutative(base)) {
                detail = check_bt_isomorphism(base, c.opt.limits);
                ok = detail.empty();
                if (ok) detail = "R[x,y]/(x^2,y^2) -> BT(R) verified isomorphic";
            }
            c.record(rings, ok, detail);
        });
    }
}

struct GroupRingCase {
    std::string label;
    FiniteRing base;
    GroupTable group;
    std::shared_ptr<const Analysis> ring;
};

std::vector<GroupRingCase> corpus_group_rings(const Ctx& c) {
    std::vector<GroupRingCase> out;
    for (const auto& e : c.corpus.entries()) {
        if (!e.expr || e.expr->kind != RingExpr::Kind::GroupRing) continue;
        out.push_back({e.label, evaluate(e.expr->children.at(0), c.opt.limits), evaluate(e.expr->group.at(0), c.opt.limits),
                       e.analysis});
    }
    return out;
}

GroupRingCase group_ring_case(const Ctx& c, std::string_view text) {
    RingExpr e = parse_ring(text);
    if (e.kind != RingExpr::Kind::GroupRing) throw ArgumentError("not a group ring expression");
    return {format(e), evaluate(e.children.at(0), c.opt.limits), evaluate(e.group.at(0), c.opt.limits), c.ring(text)};
}

// C17
void claim_group_ring_implies(Ctx& c) {
    for (const auto& g : corpus_group_rings(c)) {
        c.guard(g.label, [&] {
            const bool rg = is_two_sqrt_ju(*g.ring);
            Analysis ra(g.base);
            const bool r = is_two_sqrt_ju(ra);
            if (!rg) ++c.out.vacuous;
            c.record(g.label + " => R", !rg || r, "RG: " + unit_witness(*g.ring) + "; R: " + unit_witness(ra));

            const Radix big{g.base.order(), g.group.order()};
            for (const auto& h : subgroups(g.group)) {
                GroupTable sub = subgroup_table(g.group, h, "H{" + [&] {
                    std::string s;
                    for (Elem x : h) s += (s.empty() ? "" : ",") + idx(x);
                    return s;
                }() + "}");
                const std::string rings = g.label + " ⊇ R" + sub.label();
                Subring rh{group_ring(g.base, sub, c.opt.limits), {}};
                const Radix small{g.base.order(), h.size()};
                rh.embedding.resize(rh.ring.order());
                std::vector<Elem> coeff(g.group.order());
                for (Elem i = 0; i < rh.ring.order(); ++i) {
                    auto d = small.decode(i);
                    std::fill(coeff.begin(), coeff.end(), 0);
                    for (std::size_t k = 0; k < h.size(); ++k) coeff[h[k]] = d[k];
                    rh.embedding[i] = big.encode(coeff);
                }
                const FiniteRing& parent = g.ring->ring();
                for (Elem a = 0; a < rh.ring.order(); ++a)
                    for (Elem b = 0; b < rh.ring.order(); ++b)
                        if (rh.embedding[rh.ring.mul(a, b)] != parent.mul(rh.embedding[a], rh.embedding[b]))
                            return c.record(rings, false, "RH -> RG is not multiplicative");
                const bool closed = is_unit_closed_subring(*g.ring, rh);
                Analysis ha(rh.ring);
                const bool sub_ok = is_two_sqrt_ju(ha);
                if (!rg) ++c.out.vacuous;
                c.record(rings, closed && (!rg || sub_ok),
                         std::string("unit-closed ") + yes_no(closed) + "; RH: " + unit_witness(ha));
            }
        });
    }
}

// C18
void claim_two_group(Ctx& c) {
    std::vector<GroupRingCase> cases;
    std::set<std::string> labels;
    for (const char* text : {"GR(Z/4, C3)", "GR(Z/2, C3)", "GR(Z/2, S3)"}) {
        auto g = group_ring_case(c, text);
        labels.insert(g.label);
        cases.push_back(std::move(g));
    }
    for (auto& g : corpus_group_rings(c))
        if (labels.insert(g.label).second) cases.push_back(std::move(g));

    for (const auto& g : cases) {
        c.guard(g.label, [&] {
            Analysis ra(g.base);
            const bool premise = two_in(ra, ra.jacobson(), 2) && !g.group.is_two_group();
            if (!premise) {
                ++c.out.vacuous;
                return;
            }
            const bool rg = is_two_sqrt_ju(*g.ring);
            c.record(g.label, !rg, "2 in J(R), |G| = " + std::to_string(g.group.order()) + "; RG: " + unit_witness(*g.ring));
        });
    }
}

// C19
void claim_two_group_converse(Ctx& c) {
    std::vector<GroupRingCase> cases;
    std::set<std::string> labels;
    for (const char* text : {"GR(Z/9, C2)", "GR(Z/3, C2)", "GR(Z/9, C2 x C2)"}) {
        try {
            auto g = group_ring_case(c, text);
            labels.insert(g.label);
            cases.push_back(std::move(g));
        } catch (const LimitError& err) {
            c.out.notes.push_back(std::string(text) + " skipped: " + err.what());
        }
    }
    for (auto& g : corpus_group_rings(c))
        if (labels.insert(g.label).second) cases.push_back(std::move(g));

    for (const auto& g : cases) {
        c.guard(g.label, [&] {
            Analysis ra(g.base);
            const bool premise = is_two_sqrt_ju(ra) && two_in(ra, ra.jacobson(), 3) && g.group.is_two_group();
            if (!premise) {
                ++c.out.vacuous;
                return;
            }
            const bool rg = is_two_sqrt_ju(*g.ring);
            c.record(g.label, rg, "R 2-sqrtJU, 3 in J(R), |G| = " + std::to_string(g.group.order()) + "; RG: " +
                                      unit_witness(*g.ring));
        });
    }
}

struct ClaimDef {
    ClaimInfo info;
    std::string_view domain;
    void (*run)(Ctx&);
};

const std::vector<ClaimDef>& registry() {
    static const std::vector<ClaimDef> defs = {
        {{"C1", "sqrt-basic", "U ∩ sqrtJ = ∅; sqrtJ ∩ Id = {0}; x^k ∈ sqrtJ ⇒ x ∈ sqrtJ (k = 2,3,4)"},
         "every corpus ring, every element", claim_sqrt_basic},
        {{"C2", "quotient-iff", "I ⊆ J(R): R is 2-sqrtJU ⟺ R/I is 2-sqrtJU"},
         "every corpus ring; I = J(R) and every principal ideal generated inside J(R)", claim_quotient_iff},
        {{"C3", "product-iff", "R1 × R2 is 2-sqrtJU ⟺ R1 and R2 are"},
         "unordered corpus pairs with |R1||R2| within the pair cap", claim_product_iff},
        {{"C4", "corner", "R 2-sqrtJU ⇒ eRe 2-sqrtJU for every nonzero idempotent e"},
         "every 2-sqrtJU corpus ring, every nonzero idempotent", claim_corner},
        {{"C5", "unit-closed-subring", "R 2-sqrtJU ⇒ every unit-closed subring is 2-sqrtJU"},
         "single-generator subrings of every 2-sqrtJU corpus ring", claim_unit_closed_subring},
        {{"C6", "division-char", "division ring R: 2-sqrtJU ⟺ |R| ∈ {2,3}"}, "division rings of the corpus",
         claim_division},
        {{"C7", "local-char", "local R: 2-sqrtJU ⟺ |R/J(R)| ∈ {2,3}"}, "local rings of the corpus", claim_local},
        {{"C8", "semisimple-char", "product of fields: 2-sqrtJU ⟺ every factor is F2 or F3"},
         "products of 1 to 3 factors from F2, F3, F4, F5", claim_semisimple},
        {{"C9", "sqrtju-iff", "sqrtJU ⟺ 2-sqrtJU and 2 ∈ J(R)"}, "every corpus ring", claim_sqrtju_iff},
        {{"C10", "nilext-iff", "R 2-sqrtJU ⟺ R[x]/(x^p) 2-sqrtJU, p = 2,3"},
         "corpus rings with |R|^p within the derived cap", claim_nil_extension},
        {{"C11", "unit-square-sum", "R 2-sqrtJU ⇒ u^2 + v ≠ 1 for all units u, v"},
         "every 2-sqrtJU corpus ring, all unit pairs", claim_unit_square_sum},
        {{"C12", "central-sqrtj", "sqrtJ ∩ C ⊆ J"}, "every corpus ring", claim_central_sqrtj},
        {{"C13", "matrix-never", "M2(R) is never 2-sqrtJU; [[1,1],[1,0]] is a failing unit"}, "R ∈ {Z/2, Z/3, Z/4}",
         claim_matrix_never},
        {{"C14", "te-iff", "R 2-sqrtJU ⟺ T(R,R) 2-sqrtJU; U and J of T(R,R) match the displayed formulas"},
         "TE corpus bases and corpus rings with |R|^2 within the pair cap", claim_trivial_extension},
        {{"C15", "tri-implies", "UT(n,R) 2-sqrtJU ⇒ R 2-sqrtJU, n = 2,3"},
         "UT corpus entries and corpus rings with |UT(n,R)| within the derived cap", claim_triangular},
        {{"C16", "bt-iff", "R 2-sqrtJU ⟺ BT(R) 2-sqrtJU; R[x,y]/(x^2,y^2) ≅ BT(R) for commutative R"},
         "BT corpus bases and corpus rings with |R|^4 within the derived cap", claim_bt},
        {{"C17", "groupring-implies", "RG 2-sqrtJU ⇒ R and RH 2-sqrtJU for H ≤ G; RH unit-closed in RG"},
         "group rings of the corpus, every subgroup", claim_group_ring_implies},
        {{"C18", "two-group", "2 ∈ J(R) and G not a 2-group ⇒ RG not 2-sqrtJU"},
         "GR(Z/4,C3), GR(Z/2,C3), GR(Z/2,S3) and corpus group rings", claim_two_group},
        {{"C19", "locally-finite-2group", "R 2-sqrtJU, 3 ∈ J(R), G a 2-group ⇒ RG 2-sqrtJU"},
         "GR(Z/9,C2), GR(Z/3,C2), GR(Z/9,C2xC2) and corpus group rings", claim_two_group_converse},
    };
    return defs;
}

const ClaimDef& lookup(std::string_view id) {
    for (const auto& d : registry())
        if (d.info.id == id) return d;
    throw ArgumentError("unknown claim id '" + std::string(id) + "'");
}

std::string witness_text(const AxiomCheck& c) {
    if (!c.witness) return {};
    const auto& w = *c.witness;
    return "(" + idx(w[0]) + ", " + idx(w[1]) + ", " + idx(w[2]) + ")";
}

} // namespace

const std::vector<ClaimInfo>& claim_catalog() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> v;
        for (const auto& d : registry()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

ClaimResult run_claim(std::string_view id, const Corpus& corpus, const HarnessOptions& options) {
    const ClaimDef& def = lookup(id);
    ClaimResult res;
    res.id = std::string(def.info.id);
    res.name = std::string(def.info.name);
    res.statement = std::string(def.info.statement);
    res.domain = std::string(def.domain);
    const auto start = std::chrono::steady_clock::now();
    Ctx ctx{corpus, options, res};
    def.run(ctx);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

Report run_suite(const Corpus& corpus, const std::vector<std::string>& filter, const HarnessOptions& options) {
    std::vector<std::string> ids;
    if (filter.empty()) {
        for (const auto& d : registry()) ids.emplace_back(d.info.id);
    } else {
        for (const auto& id : filter) ids.emplace_back(lookup(id).info.id);
    }

    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.corpus = corpus.name();
    rep.corpus_size = corpus.size();
    rep.seed = options.axioms.seed;

    for (const auto& e : corpus.entries()) {
        try {
            AxiomReport ax = verify_axioms(e.ring, options.axioms);
            if (const auto* f = ax.first_failure()) rep.axiom_failures.push_back({e.label, f->name, witness_text(*f)});
        } catch (const std::exception& err) {
            rep.axiom_failures.push_back({e.label, "evaluation", err.what()});
        }
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<ClaimResult>> pending;
    std::vector<ClaimResult> done;
    std::size_t next = 0;
    // Bounded pool: at most `threads` claims in flight.
    while (next < ids.size() || !pending.empty()) {
        while (next < ids.size() && pending.size() < threads) {
            const std::string id = ids[next++];
            pending.push_back(std::async(std::launch::async, [&corpus, &options, id] {
                return run_claim(id, corpus, options);
            }));
        }
        done.push_back(pending.front().get());
        pending.erase(pending.begin());
    }
    auto order = [&](const ClaimResult& r) {
        return std::find(ids.begin(), ids.end(), r.id) - ids.begin();
    };
    std::sort(done.begin(), done.end(), [&](const auto& a, const auto& b) { return order(a) < order(b); });
    rep.claims = std::move(done);

    if (filter.empty()) {
        rep.skipped = {
            {"C-torsion", "torsion-group theorem: every finite group is torsion, so no finite instance can falsify it"},
            {"C-powerseries", "R[[t]] and R[[x;a]] are infinite; their finite shadow R[x]/(x^p) is covered by C10"},
        };
    }
    rep.notes = {
        "M_n(R): the stated 'iff n >= 2' conflicts with M_2(R) never being 2-sqrtJU; C13 checks the negative form",
        "C14 tests both readings of the displayed sqrtJ(T(R,M)) formula; see its notes for which one held",
        "C18 reads '2 is in the Jacobson radical' as 2 in J(R); C19 reads the conclusion as u^2 in 1 + sqrtJ(RG)",
        "strongly nil-clean and semi-boolean examples are not tested (no predicates for those classes)",
    };
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

void print_report(std::ostream& out, const Report& rep) {
    out << "corpus: " << rep.corpus << " (" << rep.corpus_size << " rings), axiom sampling seed 0x" << std::hex
        << std::uppercase << rep.seed << std::dec << std::nouppercase << '\n';
    if (rep.axiom_failures.empty()) {
        out << "axioms: all " << rep.corpus_size << " rings pass\n";
    } else {
        for (const auto& f : rep.axiom_failures)
            out << "axioms: FAIL " << f.ring << ": " << f.axiom << " " << f.witness << '\n';
    }
    for (const auto& c : rep.claims) {
        out << std::left << std::setw(4) << c.id << ' ' << std::setw(22) << c.name << ' '
            << (c.passed() ? "PASS" : "FAIL") << "  ";
        if (c.passed())
            out << "no counterexample found over " << c.instances.size() << " instances";
        else
            out << c.failures() << " counterexample(s) over " << c.instances.size() << " instances";
        if (c.vacuous) out << " (" << c.vacuous << " vacuous)";
        out << std::fixed << std::setprecision(2) << "  [" << c.seconds << "s]\n";
        out.unsetf(std::ios::floatfield);
        out << "     " << c.statement << "\n     domain: " << c.domain << '\n';
        for (const auto& n : c.notes) out << "     note: " << n << '\n';
        for (const auto& inst : c.instances)
            if (!inst.passed) out << "     counterexample: " << inst.rings << ": " << inst.detail << '\n';
    }
    for (const auto& s : rep.skipped) out << "SKIPPED " << s.id << ": " << s.reason << '\n';
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
    out << rep.passed_count() << " passed, " << rep.failed_count() << " failed, " << rep.skipped.size()
        << " skipped\n";
}

} // namespace finring
