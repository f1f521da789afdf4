#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "finring/analysis.hpp"

namespace finring {

/// Set that u^k - 1 must land in for a unit-condition class.
enum class Target { Nilpotent, Jacobson, SqrtJacobson };

enum class RingClass {
    UU,             // U = 1 + N
    UJ,             // U = 1 + J
    TwoUU,          // u^2 in 1 + N
    TwoUJ,          // u^2 in 1 + J
    SqrtJU,         // U = 1 + sqrt J
    TwoSqrtJU,      // u^2 in 1 + sqrt J
    Division,
    Local,
    Semisimple,
    DedekindFinite,
};

inline constexpr std::array<RingClass, 10> kAllClasses = {
    RingClass::UU,        RingClass::UJ,       RingClass::TwoUU,         RingClass::TwoUJ,
    RingClass::SqrtJU,    RingClass::TwoSqrtJU, RingClass::Division,     RingClass::Local,
    RingClass::Semisimple, RingClass::DedekindFinite,
};

/// Display name, e.g. "2-sqrtJU".
std::string_view class_name(RingClass c);
/// JSON key, e.g. "2sqrtJU".
std::string_view class_key(RingClass c);

struct Verdict {
    bool holds = true;
    /// Smallest failing index (a unit for unit-condition classes, a nonzero
    /// non-unit for division).
    std::optional<Elem> witness;
    /// Second witness index where a pair is needed (a*b = 1, b*a != 1).
    std::optional<Elem> witness2;
};

/// Every unit u satisfies u^power - 1 in target.
Verdict check_unit_class(const Analysis& a, int power, Target target);

Verdict is_division(const Analysis& a);
/// R/J(R) is a division ring.
Verdict is_local(const Analysis& a);
/// J(R) = 0; valid as the semisimplicity test because finite rings are Artinian.
Verdict is_semisimple(const Analysis& a);
Verdict is_dedekind_finite(const Analysis& a);

inline bool is_two_sqrt_ju(const Analysis& a) { return check_unit_class(a, 2, Target::SqrtJacobson).holds; }

Verdict check_class(const Analysis& a, RingClass c);

struct ClassReport {
    std::string label;
    std::array<Verdict, kAllClasses.size()> verdicts{};

    const Verdict& operator[](RingClass c) const { return verdicts[static_cast<std::size_t>(c)]; }
};

ClassReport classify(const Analysis& a);

} // namespace finring
