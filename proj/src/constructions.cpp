#include "finring/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace finring {

namespace {

constexpr std::size_t kMaxDigits = 32;
using Digits = std::array<Elem, kMaxDigits>;

std::string paren_if_product(const std::string& label) {
    // Product chains associate to the right, so only a left operand needs parentheses.
    int depth = 0;
    for (std::size_t i = 0; i + 2 < label.size(); ++i) {
        char c = label[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth == 0 && label.compare(i, 3, " x ") == 0) return "(" + label + ")";
    }
    return label;
}

Radix radix_for(const FiniteRing& r, std::size_t digits, const Limits& limits, const std::string& what) {
    if (digits > kMaxDigits) throw LimitError(what + ": too many coordinates");
    check_order(saturating_pow(r.order(), digits), limits, what);
    return Radix{r.order(), digits};
}

/// Arithmetic over coordinate vectors with componentwise addition.
class CoordinateArithmetic : public Arithmetic {
public:
    CoordinateArithmetic(FiniteRing base, Radix radix) : base_(std::move(base)), radix_(radix) {}

    Elem add(Elem x, Elem y) const override {
        Digits a{}, b{};
        decode(x, a);
        decode(y, b);
        for (std::size_t i = 0; i < radix_.digits; ++i) a[i] = base_.add(a[i], b[i]);
        return encode(a);
    }
    Elem neg(Elem x) const override {
        Digits a{};
        decode(x, a);
        for (std::size_t i = 0; i < radix_.digits; ++i) a[i] = base_.neg(a[i]);
        return encode(a);
    }

protected:
    void decode(Elem x, Digits& d) const { radix_.decode(x, std::span<Elem>(d.data(), radix_.digits)); }
    Elem encode(const Digits& d) const { return radix_.encode(std::span<const Elem>(d.data(), radix_.digits)); }

    FiniteRing base_;
    Radix radix_;
};

class ZmodArithmetic : public Arithmetic {
public:
    explicit ZmodArithmetic(std::uint64_t n) : n_(n) {}
    Elem add(Elem x, Elem y) const override { return Elem((std::uint64_t(x) + y) % n_); }
    Elem mul(Elem x, Elem y) const override { return Elem((std::uint64_t(x) * y) % n_); }
    Elem neg(Elem x) const override { return Elem((n_ - x) % n_); }

private:
    std::uint64_t n_;
};

class ProductArithmetic : public Arithmetic {
public:
    ProductArithmetic(FiniteRing a, FiniteRing b) : a_(std::move(a)), b_(std::move(b)), m_(Elem(b_.order())) {}
    Elem add(Elem x, Elem y) const override { return combine(a_.add(x / m_, y / m_), b_.add(x % m_, y % m_)); }
    Elem mul(Elem x, Elem y) const override { return combine(a_.mul(x / m_, y / m_), b_.mul(x % m_, y % m_)); }
    Elem neg(Elem x) const override { return combine(a_.neg(x / m_), b_.neg(x % m_)); }

private:
    Elem combine(Elem a, Elem b) const { return a * m_ + b; }
    FiniteRing a_, b_;
    Elem m_;
};

class MatrixArithmetic : public CoordinateArithmetic {
public:
    MatrixArithmetic(FiniteRing base, Radix radix, std::size_t m) : CoordinateArithmetic(std::move(base), radix), m_(m) {}

    Elem mul(Elem x, Elem y) const override {
        Digits a{}, b{}, c{};
        decode(x, a);
        decode(y, b);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                Elem s = 0;
                for (std::size_t k = 0; k < m_; ++k) s = base_.add(s, base_.mul(a[i * m_ + k], b[k * m_ + j]));
                c[i * m_ + j] = s;
            }
        return encode(c);
    }

private:
    std::size_t m_;
};

class UpperTriangularArithmetic : public CoordinateArithmetic {
public:
    UpperTriangularArithmetic(FiniteRing base, Radix radix, std::size_t m)
        : CoordinateArithmetic(std::move(base), radix), m_(m) {}

    static std::size_t slot(std::size_t m, std::size_t i, std::size_t j) {
        // Row i starts after rows 0..i-1, which hold m + (m-1) + ... + (m-i+1) entries.
        return i * m - i * (i - 1) / 2 + (j - i);
    }

    Elem mul(Elem x, Elem y) const override {
        Digits a{}, b{}, c{};
        decode(x, a);
        decode(y, b);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i; j < m_; ++j) {
                Elem s = 0;
                for (std::size_t k = i; k <= j; ++k)
                    s = base_.add(s, base_.mul(a[slot(m_, i, k)], b[slot(m_, k, j)]));
                c[slot(m_, i, j)] = s;
            }
        return encode(c);
    }

private:
    std::size_t m_;
};

class TrivialExtensionArithmetic : public Arithmetic {
public:
    explicit TrivialExtensionArithmetic(FiniteRing base) : base_(std::move(base)), n_(Elem(base_.order())) {}
    Elem add(Elem a, Elem b) const override { return pack(base_.add(a / n_, b / n_), base_.add(a % n_, b % n_)); }
    Elem neg(Elem a) const override { return pack(base_.neg(a / n_), base_.neg(a % n_)); }
    // (x, m)(y, n) = (xy, xn + my)
    Elem mul(Elem a, Elem b) const override {
        Elem x = a / n_, m = a % n_, y = b / n_, n = b % n_;
        return pack(base_.mul(x, y), base_.add(base_.mul(x, n), base_.mul(m, y)));
    }

private:
    Elem pack(Elem x, Elem m) const { return x * n_ + m; }
    FiniteRing base_;
    Elem n_;
};

/// (x, p, y, q) read as ((x, p), (y, q)) in T(T(R,R), T(R,R)).
class BtArithmetic : public CoordinateArithmetic {
public:
    using CoordinateArithmetic::CoordinateArithmetic;

    Elem mul(Elem u, Elem v) const override {
        Digits a{}, b{}, c{};
        decode(u, a);
        decode(v, b);
        // Inner ring T(R,R): (x, p)(y, q) = (xy, xq + py).
        auto te_mul = [&](Elem x1, Elem p1, Elem x2, Elem p2) {
            return std::pair{base_.mul(x1, x2), base_.add(base_.mul(x1, p2), base_.mul(p1, x2))};
        };
        auto [x, p] = te_mul(a[0], a[1], b[0], b[1]);
        auto [l0, l1] = te_mul(a[0], a[1], b[2], b[3]);
        auto [r0, r1] = te_mul(a[2], a[3], b[0], b[1]);
        c[0] = x;
        c[1] = p;
        c[2] = base_.add(l0, r0);
        c[3] = base_.add(l1, r1);
        return encode(c);
    }
};

class PolyQuotientArithmetic : public CoordinateArithmetic {
public:
    PolyQuotientArithmetic(FiniteRing base, Radix radix, std::vector<Elem> modulus)
        : CoordinateArithmetic(std::move(base), radix), modulus_(std::move(modulus)) {}

    Elem mul(Elem u, Elem v) const override {
        const std::size_t d = radix_.digits;
        Digits a{}, b{};
        decode(u, a);
        decode(v, b);
        std::array<Elem, 2 * kMaxDigits> c{};
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) c[i + j] = base_.add(c[i + j], base_.mul(a[i], b[j]));
        // x^d = -(f_0 + f_1 x + ... + f_(d-1) x^(d-1))
        for (std::size_t t = 2 * d - 1; t-- > d;) {
            Elem lead = c[t];
            if (lead == 0) continue;
            c[t] = 0;
            for (std::size_t i = 0; i < d; ++i)
                c[t - d + i] = base_.sub(c[t - d + i], base_.mul(lead, modulus_[i]));
        }
        Digits out{};
        std::copy_n(c.begin(), d, out.begin());
        return encode(out);
    }

private:
    std::vector<Elem> modulus_;
};

class GroupRingArithmetic : public CoordinateArithmetic {
public:
    GroupRingArithmetic(FiniteRing base, Radix radix, GroupTable group)
        : CoordinateArithmetic(std::move(base), radix), group_(std::move(group)) {}

    Elem mul(Elem u, Elem v) const override {
        const std::size_t n = group_.order();
        Digits a{}, b{}, c{};
        decode(u, a);
        decode(v, b);
        for (Elem g = 0; g < n; ++g) {
            if (a[g] == 0) continue;
            for (Elem h = 0; h < n; ++h) {
                if (b[h] == 0) continue;
                Elem gh = group_.op(g, h);
                c[gh] = base_.add(c[gh], base_.mul(a[g], b[h]));
            }
        }
        return encode(c);
    }

private:
    GroupTable group_;
};

class QuotientArithmetic : public Arithmetic {
public:
    QuotientArithmetic(FiniteRing parent, std::vector<Elem> projection, std::vector<Elem> reps)
        : parent_(std::move(parent)), projection_(std::move(projection)), reps_(std::move(reps)) {}
    Elem add(Elem a, Elem b) const override { return projection_[parent_.add(reps_[a], reps_[b])]; }
    Elem mul(Elem a, Elem b) const override { return projection_[parent_.mul(reps_[a], reps_[b])]; }
    Elem neg(Elem a) const override { return projection_[parent_.neg(reps_[a])]; }

private:
    FiniteRing parent_;
    std::vector<Elem> projection_;
    std::vector<Elem> reps_;
};

constexpr Elem kAbsent = ~Elem{0};

class SubsetArithmetic : public Arithmetic {
public:
    SubsetArithmetic(FiniteRing parent, std::vector<Elem> embedding)
        : parent_(std::move(parent)), embedding_(std::move(embedding)), index_(parent_.order(), kAbsent) {
        for (std::size_t i = 0; i < embedding_.size(); ++i) index_[embedding_[i]] = Elem(i);
    }
    Elem add(Elem a, Elem b) const override { return lookup(parent_.add(embedding_[a], embedding_[b])); }
    Elem mul(Elem a, Elem b) const override { return lookup(parent_.mul(embedding_[a], embedding_[b])); }
    Elem neg(Elem a) const override { return lookup(parent_.neg(embedding_[a])); }
    Elem lookup(Elem parent_index) const {
        Elem i = index_[parent_index];
        if (i == kAbsent) throw ConsistencyError("subset is not closed under the ring operations");
        return i;
    }

private:
    FiniteRing parent_;
    std::vector<Elem> embedding_;
    std::vector<Elem> index_;
};

Subring make_subring(const FiniteRing& r, std::vector<Elem> members, Elem identity, std::string label,
                     const Limits& limits) {
    std::sort(members.begin(), members.end());
    auto arith = std::make_shared<SubsetArithmetic>(r, members);
    Elem one = arith->lookup(identity);
    auto ring = FiniteRing::from_arithmetic(members.size(), one, arith, std::move(label), limits);
    return Subring{std::move(ring), std::move(members)};
}

} // namespace

// ---------------------------------------------------------------------------

Elem Radix::encode(std::span<const Elem> coords) const {
    std::uint64_t index = 0;
    for (std::size_t i = coords.size(); i-- > 0;) index = index * base + coords[i];
    return Elem(index);
}

void Radix::decode(Elem index, std::span<Elem> coords) const {
    for (auto& c : coords) {
        c = Elem(index % base);
        index = Elem(index / base);
    }
}

std::vector<Elem> Radix::decode(Elem index) const {
    std::vector<Elem> out(digits);
    decode(index, out);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteRing zmod(std::uint64_t n, const Limits& limits) {
    if (n < 2) throw ArgumentError("Z/n requires n >= 2, got " + std::to_string(n));
    check_order(n, limits, "Z/" + std::to_string(n));
    return FiniteRing::from_arithmetic(n, 1, std::make_shared<ZmodArithmetic>(n), "Z/" + std::to_string(n), limits);
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k) {
    if (!is_prime(p)) throw ArgumentError("GF: " + std::to_string(p) + " is not prime");
    if (k == 0) throw ArgumentError("GF: degree must be at least 1");
    using Poly = std::vector<std::uint64_t>;  // little-endian, monic

    // Enumerates monic polynomials of degree d in lexicographic order of
    // their coefficient lists read from the leading term downward.
    auto monic = [p](std::size_t d, std::uint64_t rank) {
        Poly f(d + 1, 0);
        f[d] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            f[i] = rank % p;
            rank /= p;
        }
        return f;
    };
    auto divides = [p](const Poly& g, Poly f) {
        // g monic; true when f mod g == 0.
        const std::size_t dg = g.size() - 1;
        for (std::size_t t = f.size(); t-- > dg;) {
            std::uint64_t lead = f[t] % p;
            if (lead == 0) continue;
            for (std::size_t i = 0; i <= dg; ++i) f[t - dg + i] = (f[t - dg + i] + (p - lead) * g[i]) % p;
        }
        return std::all_of(f.begin(), f.end(), [p](std::uint64_t c) { return c % p == 0; });
    };

    const std::uint64_t count = saturating_pow(p, k);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        Poly f = monic(k, rank);
        bool irreducible = true;
        for (std::size_t d = 1; d <= k / 2 && irreducible; ++d) {
            const std::uint64_t divisors = saturating_pow(p, d);
            for (std::uint64_t s = 0; s < divisors && irreducible; ++s)
                if (divides(monic(d, s), f)) irreducible = false;
        }
        if (irreducible) return f;
    }
    throw ConsistencyError("no irreducible polynomial found");
}

FiniteRing gf(std::uint64_t p, std::uint64_t k, const Limits& limits) {
    if (!is_prime(p)) throw ArgumentError("GF: " + std::to_string(p) + " is not prime");
    if (k == 0) throw ArgumentError("GF: degree must be at least 1");
    const std::string label = "GF(" + std::to_string(p) + ", " + std::to_string(k) + ")";
    if (k > kMaxDigits) throw LimitError(label + ": degree too large");
    const std::size_t order = saturating_pow(p, k);
    check_order(order, limits, label);
    const auto modulus = smallest_irreducible(p, k);
    std::vector<Elem> f(modulus.begin(), modulus.end());
    return poly_quotient(zmod(p, limits), f, limits).relabeled(label);
}

FiniteRing product(const FiniteRing& a, const FiniteRing& b, const Limits& limits) {
    const std::string label = paren_if_product(a.label()) + " x " + b.label();
    const std::size_t order = a.order() * b.order();
    check_order(order, limits, label);
    Elem one = Elem(a.one() * b.order() + b.one());
    return FiniteRing::from_arithmetic(order, one, std::make_shared<ProductArithmetic>(a, b), label, limits);
}

FiniteRing matrix_ring(std::size_t m, const FiniteRing& r, const Limits& limits) {
    const std::string label = "M(" + std::to_string(m) + ", " + r.label() + ")";
    if (m < 1) throw ArgumentError("matrix size must be at least 1");
    if (m > kMaxDigits) throw LimitError(label + ": matrix size too large");
    Radix radix = radix_for(r, m * m, limits, label);
    Digits id{};
    for (std::size_t i = 0; i < m; ++i) id[i * m + i] = r.one();
    Elem one = radix.encode(std::span<const Elem>(id.data(), m * m));
    auto arith = std::make_shared<MatrixArithmetic>(r, radix, m);
    return FiniteRing::from_arithmetic(saturating_pow(r.order(), m * m), one, std::move(arith), label, limits);
}

FiniteRing upper_triangular(std::size_t m, const FiniteRing& r, const Limits& limits) {
    const std::string label = "UT(" + std::to_string(m) + ", " + r.label() + ")";
    if (m < 2) throw ArgumentError("upper triangular size must be at least 2");
    if (m > kMaxDigits) throw LimitError(label + ": matrix size too large");
    const std::size_t slots = m * (m + 1) / 2;
    Radix radix = radix_for(r, slots, limits, label);
    Digits id{};
    for (std::size_t i = 0; i < m; ++i) id[UpperTriangularArithmetic::slot(m, i, i)] = r.one();
    Elem one = radix.encode(std::span<const Elem>(id.data(), slots));
    auto arith = std::make_shared<UpperTriangularArithmetic>(r, radix, m);
    return FiniteRing::from_arithmetic(saturating_pow(r.order(), slots), one, std::move(arith), label, limits);
}

FiniteRing trivial_extension(const FiniteRing& r, const Limits& limits) {
    const std::string label = "TE(" + r.label() + ")";
    radix_for(r, 2, limits, label);
    Elem one = Elem(r.one() * r.order());
    return FiniteRing::from_arithmetic(r.order() * r.order(), one, std::make_shared<TrivialExtensionArithmetic>(r),
                                       label, limits);
}

FiniteRing bt(const FiniteRing& r, const Limits& limits) {
    const std::string label = "BT(" + r.label() + ")";
    Radix radix = radix_for(r, 4, limits, label);
    return FiniteRing::from_arithmetic(saturating_pow(r.order(), 4), r.one(), std::make_shared<BtArithmetic>(r, radix),
                                       label, limits);
}

FiniteRing poly_quotient(const FiniteRing& r, std::span<const Elem> f, const Limits& limits) {
    std::string label = "POLYQ(" + r.label() + ", [";
    for (std::size_t i = 0; i < f.size(); ++i) label += (i ? ", " : "") + std::to_string(f[i]);
    label += "])";
    if (f.size() < 2) throw ArgumentError("POLYQ: modulus must have degree at least 1");
    for (Elem c : f) r.check(c);
    if (f.back() != r.one()) throw ArgumentError("POLYQ: modulus must be monic (last coefficient = index of 1)");
    for (Elem c : f)
        for (Elem x = 0; x < r.order(); ++x)
            if (r.mul(c, x) != r.mul(x, c))
                throw ArgumentError("POLYQ: coefficient " + std::to_string(c) + " is not central");
    const std::size_t d = f.size() - 1;
    Radix radix = radix_for(r, d, limits, label);
    std::vector<Elem> modulus(f.begin(), f.end() - 1);
    auto arith = std::make_shared<PolyQuotientArithmetic>(r, radix, std::move(modulus));
    // The constant polynomial 1 has digit 0 = one and no higher terms.
    return FiniteRing::from_arithmetic(saturating_pow(r.order(), d), r.one(), std::move(arith), label, limits);
}

FiniteRing nil_extension(const FiniteRing& r, std::size_t p, const Limits& limits) {
    if (p < 1) throw ArgumentError("NIL: exponent must be at least 1");
    if (p > kMaxDigits) throw LimitError("NIL: exponent too large");
    std::vector<Elem> f(p + 1, 0);
    f[p] = r.one();
    return poly_quotient(r, f, limits).relabeled("NIL(" + r.label() + ", " + std::to_string(p) + ")");
}

FiniteRing group_ring(const FiniteRing& r, const GroupTable& g, const Limits& limits) {
    const std::string label = "GR(" + r.label() + ", " + g.label() + ")";
    if (g.order() > kMaxDigits) throw LimitError(label + ": group too large");
    Radix radix = radix_for(r, g.order(), limits, label);
    return FiniteRing::from_arithmetic(saturating_pow(r.order(), g.order()), r.one(),
                                       std::make_shared<GroupRingArithmetic>(r, radix, g), label, limits);
}

std::optional<IdealViolation> find_ideal_violation(const FiniteRing& r, const ElementSet& set) {
    if (set.universe() != r.order()) throw ArgumentError("set does not belong to this ring");
    if (!set.contains(0)) return IdealViolation{0, 0, "does not contain zero"};
    const auto members = set.members();
    for (Elem x : members) {
        if (!set.contains(r.neg(x))) return IdealViolation{x, x, "not closed under negation"};
        for (Elem y : members)
            if (!set.contains(r.add(x, y))) return IdealViolation{x, y, "not closed under addition"};
        for (Elem s = 0; s < r.order(); ++s) {
            if (!set.contains(r.mul(s, x))) return IdealViolation{x, s, "not closed under left multiplication"};
            if (!set.contains(r.mul(x, s))) return IdealViolation{x, s, "not closed under right multiplication"};
        }
    }
    return std::nullopt;
}

Quotient quotient(const FiniteRing& r, const ElementSet& ideal, const Limits& limits) {
    if (auto bad = find_ideal_violation(r, ideal))
        throw ArgumentError("quotient: set is not a two-sided ideal (" + std::string(bad->reason) + ", pair " +
                            std::to_string(bad->member) + ", " + std::to_string(bad->other) + ")");
    const auto members = ideal.members();
    std::vector<Elem> projection(r.order(), kAbsent);
    std::vector<Elem> reps;
    for (Elem x = 0; x < r.order(); ++x) {
        if (projection[x] != kAbsent) continue;
        const Elem cls = Elem(reps.size());
        reps.push_back(x);
        for (Elem i : members) projection[r.add(x, i)] = cls;
    }
    std::string label = r.label() + " / I";
    auto arith = std::make_shared<QuotientArithmetic>(r, projection, reps);
    Elem one = projection[r.one()];
    auto ring = FiniteRing::from_arithmetic(reps.size(), one, std::move(arith), std::move(label), limits);
    return Quotient{std::move(ring), std::move(projection), std::move(reps)};
}

Subring corner(const FiniteRing& r, Elem e, const Limits& limits) {
    r.check(e);
    if (e == 0 || r.mul(e, e) != e)
        throw ArgumentError("corner: " + std::to_string(e) + " is not a nonzero idempotent");
    ElementSet seen(r.order());
    for (Elem x = 0; x < r.order(); ++x) seen.insert(r.mul(r.mul(e, x), e));
    return make_subring(r, seen.members(), e, "CORNER(" + r.label() + ", " + std::to_string(e) + ")", limits);
}

Subring subring_closure(const FiniteRing& r, std::span<const Elem> gens, const Limits& limits) {
    ElementSet in(r.order());
    std::vector<Elem> members;
    auto push = [&](Elem x) {
        if (in.insert(x)) members.push_back(x);
    };
    push(0);
    push(r.one());
    for (Elem g : gens) {
        r.check(g);
        push(g);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        push(r.neg(members[i]));
        for (std::size_t j = 0; j <= i; ++j) {
            const Elem a = members[i], b = members[j];
            push(r.add(a, b));
            push(r.mul(a, b));
            push(r.mul(b, a));
        }
    }
    std::string label = "subring of " + r.label();
    return make_subring(r, std::move(members), r.one(), std::move(label), limits);
}

Elem matrix_index(const FiniteRing& r, std::size_t m, std::span<const Elem> entries) {
    if (entries.size() != m * m) throw ArgumentError("matrix_index: expected m*m entries");
    for (Elem e : entries) r.check(e);
    return Radix{r.order(), m * m}.encode(entries);
}

} // namespace finring
