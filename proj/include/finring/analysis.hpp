#pragma once

/**
 * @file analysis.hpp
 * @brief Structural subsets of a finite ring: U(R), J(R), sqrt J(R), N(R), Id(R), C(R).
 *
 * Every set is computed lazily at most once per Analysis and cached; concurrent
 * callers block on the single computation and then share the immutable result.
 *
 * J(R) is computed by quasi-regularity: x is in J(R) iff 1 - r x is a unit for
 * every r. sqrt J(R) membership is decided by scanning the power orbit of x.
 */

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/ring.hpp"

namespace finring {

class Analysis {
public:
    explicit Analysis(FiniteRing ring);

    Analysis(const Analysis&) = delete;
    Analysis& operator=(const Analysis&) = delete;

    const FiniteRing& ring() const noexcept { return ring_; }

    const ElementSet& units() const;
    /// Two-sided inverse of a unit; throws ArgumentError for non-units.
    Elem inverse(Elem u) const;
    bool is_unit(Elem x) const { return units().contains(x); }

    /// Quasi-regularity test against the cached unit set.
    bool in_jacobson(Elem x) const;
    const ElementSet& jacobson() const;

    bool in_sqrt_jacobson(Elem x) const;
    const ElementSet& sqrt_jacobson() const;

    const ElementSet& nilpotents() const;
    const ElementSet& idempotents() const;
    const ElementSet& center() const;

private:
    FiniteRing ring_;

    mutable std::once_flag units_once_, jacobson_once_, sqrt_once_, nil_once_, idem_once_, center_once_;
    mutable ElementSet units_;
    mutable std::vector<Elem> inverse_;
    mutable ElementSet jacobson_, sqrt_jacobson_, nilpotents_, idempotents_, center_;
};

/// Smallest two-sided ideal containing gens.
ElementSet ideal_closure(const FiniteRing& r, std::span<const Elem> gens);

/// U(S) = U(R) ∩ S, read through the subring's embedding.
bool is_unit_closed_subring(const Analysis& parent, const Subring& sub);

} // namespace finring
