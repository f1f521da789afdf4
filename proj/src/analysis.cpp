#include "finring/analysis.hpp"

namespace finring {

namespace {
constexpr Elem kNoInverse = ~Elem{0};
}

Analysis::Analysis(FiniteRing ring) : ring_(std::move(ring)) {
    if (!ring_.valid()) throw ArgumentError("analysis of an empty ring handle");
}

const ElementSet& Analysis::units() const {
    std::call_once(units_once_, [this] {
        const FiniteRing& r = ring_;
        const std::size_t n = r.order();
        ElementSet u(n);
        std::vector<Elem> inv(n, kNoInverse);
        for (Elem x = 0; x < n; ++x) {
            if (inv[x] != kNoInverse) continue;
            for (Elem y = 0; y < n; ++y) {
                if (r.mul(x, y) != r.one()) continue;
                // Finite rings are Dedekind-finite; a one-sided inverse that is
                // not two-sided means the tables are broken.
                if (r.mul(y, x) != r.one())
                    throw ConsistencyError("ring " + r.label() + ": " + std::to_string(x) + "*" + std::to_string(y) +
                                           " = 1 but the reverse product is not");
                inv[x] = y;
                inv[y] = x;
                u.insert(x);
                u.insert(y);
                break;
            }
        }
        units_ = std::move(u);
        inverse_ = std::move(inv);
    });
    return units_;
}

Elem Analysis::inverse(Elem u) const {
    ring_.check(u);
    units();
    if (inverse_[u] == kNoInverse) throw ArgumentError(std::to_string(u) + " is not a unit");
    return inverse_[u];
}

bool Analysis::in_jacobson(Elem x) const {
    ring_.check(x);
    const ElementSet& u = units();
    const FiniteRing& r = ring_;
    for (Elem s = 0; s < r.order(); ++s)
        if (!u.contains(r.sub(r.one(), r.mul(s, x)))) return false;
    return true;
}

const ElementSet& Analysis::jacobson() const {
    std::call_once(jacobson_once_, [this] {
        ElementSet j(ring_.order());
        for (Elem x = 0; x < ring_.order(); ++x)
            if (in_jacobson(x)) j.insert(x);
        if (auto bad = find_ideal_violation(ring_, j))
            throw ConsistencyError("ring " + ring_.label() + ": computed Jacobson radical is not an ideal (" +
                                   bad->reason + ")");
        jacobson_ = std::move(j);
    });
    return jacobson_;
}

bool Analysis::in_sqrt_jacobson(Elem x) const {
    const ElementSet& j = jacobson();
    for (Elem p : ring_.power_orbit(x))
        if (j.contains(p)) return true;
    return false;
}

const ElementSet& Analysis::sqrt_jacobson() const {
    std::call_once(sqrt_once_, [this] {
        ElementSet s(ring_.order());
        for (Elem x = 0; x < ring_.order(); ++x)
            if (in_sqrt_jacobson(x)) s.insert(x);
        sqrt_jacobson_ = std::move(s);
    });
    return sqrt_jacobson_;
}

const ElementSet& Analysis::nilpotents() const {
    std::call_once(nil_once_, [this] {
        ElementSet s(ring_.order());
        for (Elem x = 0; x < ring_.order(); ++x) {
            auto orbit = ring_.power_orbit(x);
            if (orbit.back() == 0) s.insert(x);
        }
        nilpotents_ = std::move(s);
    });
    return nilpotents_;
}

const ElementSet& Analysis::idempotents() const {
    std::call_once(idem_once_, [this] {
        ElementSet s(ring_.order());
        for (Elem x = 0; x < ring_.order(); ++x)
            if (ring_.mul(x, x) == x) s.insert(x);
        idempotents_ = std::move(s);
    });
    return idempotents_;
}

const ElementSet& Analysis::center() const {
    std::call_once(center_once_, [this] {
        const FiniteRing& r = ring_;
        ElementSet s(r.order());
        for (Elem x = 0; x < r.order(); ++x) {
            bool central = true;
            for (Elem y = 0; y < r.order() && central; ++y) central = r.mul(x, y) == r.mul(y, x);
            if (central) s.insert(x);
        }
        center_ = std::move(s);
    });
    return center_;
}

ElementSet ideal_closure(const FiniteRing& r, std::span<const Elem> gens) {
    ElementSet in(r.order());
    std::vector<Elem> members;
    auto push = [&](Elem x) {
        if (in.insert(x)) members.push_back(x);
    };
    push(0);
    for (Elem g : gens) {
        r.check(g);
        push(g);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Elem a = members[i];
        push(r.neg(a));
        for (std::size_t j = 0; j <= i; ++j) push(r.add(a, members[j]));
        for (Elem s = 0; s < r.order(); ++s) {
            push(r.mul(s, a));
            push(r.mul(a, s));
        }
    }
    return in;
}

bool is_unit_closed_subring(const Analysis& parent, const Subring& sub) {
    const ElementSet& parent_units = parent.units();
    Analysis inner(sub.ring);
    const ElementSet& sub_units = inner.units();
    for (Elem i = 0; i < sub.embedding.size(); ++i)
        if (sub_units.contains(i) != parent_units.contains(sub.embedding[i])) return false;
    return true;
}

} // namespace finring
