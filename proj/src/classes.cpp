#include "finring/classes.hpp"

#include "finring/constructions.hpp"

namespace finring {

std::string_view class_name(RingClass c) {
    switch (c) {
    case RingClass::UU: return "UU";
    case RingClass::UJ: return "UJ";
    case RingClass::TwoUU: return "2-UU";
    case RingClass::TwoUJ: return "2-UJ";
    case RingClass::SqrtJU: return "sqrtJU";
    case RingClass::TwoSqrtJU: return "2-sqrtJU";
    case RingClass::Division: return "division";
    case RingClass::Local: return "local";
    case RingClass::Semisimple: return "semisimple";
    case RingClass::DedekindFinite: return "dedekind-finite";
    }
    return "?";
}

std::string_view class_key(RingClass c) {
    switch (c) {
    case RingClass::UU: return "UU";
    case RingClass::UJ: return "UJ";
    case RingClass::TwoUU: return "2UU";
    case RingClass::TwoUJ: return "2UJ";
    case RingClass::SqrtJU: return "sqrtJU";
    case RingClass::TwoSqrtJU: return "2sqrtJU";
    case RingClass::Division: return "division";
    case RingClass::Local: return "local";
    case RingClass::Semisimple: return "semisimple";
    case RingClass::DedekindFinite: return "dedekindFinite";
    }
    return "?";
}

Verdict check_unit_class(const Analysis& a, int power, Target target) {
    if (power != 1 && power != 2) throw ArgumentError("unit class power must be 1 or 2");
    const FiniteRing& r = a.ring();
    auto in_target = [&](Elem x) {
        switch (target) {
        case Target::Nilpotent: return a.nilpotents().contains(x);
        case Target::Jacobson: return a.jacobson().contains(x);
        case Target::SqrtJacobson: return a.sqrt_jacobson().contains(x);
        }
        return false;
    };
    for (Elem u : a.units().members()) {
        Elem v = power == 1 ? u : r.mul(u, u);
        if (!in_target(r.sub(v, r.one()))) return Verdict{false, u, std::nullopt};
    }
    return Verdict{};
}

Verdict is_division(const Analysis& a) {
    const auto& u = a.units();
    for (Elem x = 1; x < a.ring().order(); ++x)
        if (!u.contains(x)) return Verdict{false, x, std::nullopt};
    return Verdict{};
}

Verdict is_local(const Analysis& a) {
    auto q = quotient(a.ring(), a.jacobson(), Limits{a.ring().order(), a.ring().order(), 64});
    Analysis residue(q.ring);
    Verdict v = is_division(residue);
    // Report the witness in the parent's index space.
    if (v.witness) v.witness = q.representatives[*v.witness];
    return v;
}

Verdict is_semisimple(const Analysis& a) {
    for (Elem j : a.jacobson().members())
        if (j != 0) return Verdict{false, j, std::nullopt};
    return Verdict{};
}

Verdict is_dedekind_finite(const Analysis& a) {
    const FiniteRing& r = a.ring();
    for (Elem x = 0; x < r.order(); ++x)
        for (Elem y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.one() && r.mul(y, x) != r.one()) return Verdict{false, x, y};
    return Verdict{};
}

Verdict check_class(const Analysis& a, RingClass c) {
    switch (c) {
    case RingClass::UU: return check_unit_class(a, 1, Target::Nilpotent);
    case RingClass::UJ: return check_unit_class(a, 1, Target::Jacobson);
    case RingClass::TwoUU: return check_unit_class(a, 2, Target::Nilpotent);
    case RingClass::TwoUJ: return check_unit_class(a, 2, Target::Jacobson);
    case RingClass::SqrtJU: return check_unit_class(a, 1, Target::SqrtJacobson);
    case RingClass::TwoSqrtJU: return check_unit_class(a, 2, Target::SqrtJacobson);
    case RingClass::Division: return is_division(a);
    case RingClass::Local: return is_local(a);
    case RingClass::Semisimple: return is_semisimple(a);
    case RingClass::DedekindFinite: return is_dedekind_finite(a);
    }
    throw ArgumentError("unknown ring class");
}

ClassReport classify(const Analysis& a) {
    ClassReport rep;
    rep.label = a.ring().label();
    for (RingClass c : kAllClasses) rep.verdicts[static_cast<std::size_t>(c)] = check_class(a, c);
    return rep;
}

} // namespace finring
