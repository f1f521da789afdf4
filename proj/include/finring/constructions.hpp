#pragma once

/**
 * @file constructions.hpp
 * @brief Ring constructions and their canonical element encodings.
 *
 * Encodings (zero is always index 0):
 *  - zmod(n):              residue i -> i; one = 1.
 *  - gf(p, k):             coefficients c_0 + c_1 x + ... read little-endian base p; one = 1.
 *  - product(A, B):        (a, b) -> a * |B| + b; one = (1, 1).
 *  - matrix_ring(m, R):    entries in row-major order, little-endian base |R|.
 *  - upper_triangular:     upper-triangle entries (1,1), (1,2), ..., (m,m) row-major, little-endian.
 *  - trivial_extension(R): (x, m) -> x * |R| + m; one = (1, 0).
 *  - bt(R):                (x, p, y, q) little-endian base |R|; one = (1, 0, 0, 0).
 *  - poly_quotient(R, f):  coefficient vector little-endian base |R|.
 *  - group_ring(R, G):     coefficient of group element g is digit g, little-endian base |R|.
 *  - quotient:             cosets ordered by smallest member; the representative is that member.
 *  - corner / subring:     parent indices sorted ascending, relabeled by position.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "finring/group.hpp"
#include "finring/ring.hpp"

namespace finring {

/// Little-endian mixed-radix coordinates with a fixed base.
struct Radix {
    std::size_t base = 0;
    std::size_t digits = 0;

    Elem encode(std::span<const Elem> coords) const;
    void decode(Elem index, std::span<Elem> coords) const;
    std::vector<Elem> decode(Elem index) const;
};

FiniteRing zmod(std::uint64_t n, const Limits& limits = {});
FiniteRing gf(std::uint64_t p, std::uint64_t k, const Limits& limits = {});

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// F_p, little-endian coefficients (k + 1 entries, last is 1).
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t k);

bool is_prime(std::uint64_t n);

FiniteRing product(const FiniteRing& a, const FiniteRing& b, const Limits& limits = {});
FiniteRing matrix_ring(std::size_t m, const FiniteRing& r, const Limits& limits = {});
FiniteRing upper_triangular(std::size_t m, const FiniteRing& r, const Limits& limits = {});
FiniteRing trivial_extension(const FiniteRing& r, const Limits& limits = {});
FiniteRing bt(const FiniteRing& r, const Limits& limits = {});

/// R[x]/(f) for monic f with central coefficients (little-endian element indices).
FiniteRing poly_quotient(const FiniteRing& r, std::span<const Elem> f, const Limits& limits = {});
/// R[x]/(x^p).
FiniteRing nil_extension(const FiniteRing& r, std::size_t p, const Limits& limits = {});

FiniteRing group_ring(const FiniteRing& r, const GroupTable& g, const Limits& limits = {});

struct Quotient {
    FiniteRing ring;
    std::vector<Elem> projection;       // parent index -> coset index
    std::vector<Elem> representatives;  // coset index -> smallest parent member
};

/// R/I. Throws ArgumentError naming a violating pair when I is not a two-sided ideal.
Quotient quotient(const FiniteRing& r, const ElementSet& ideal, const Limits& limits = {});

struct Subring {
    FiniteRing ring;
    std::vector<Elem> embedding;  // sub index -> parent index, increasing
};

/// eRe with identity e.
Subring corner(const FiniteRing& r, Elem e, const Limits& limits = {});

/// Smallest subring containing gens, 0 and 1.
Subring subring_closure(const FiniteRing& r, std::span<const Elem> gens, const Limits& limits = {});

/// Left/right ideal membership violation, if any: (x, r) with x in I and
/// x+y, -x, r*x or x*r outside I.
struct IdealViolation {
    Elem member;
    Elem other;
    const char* reason;
};
std::optional<IdealViolation> find_ideal_violation(const FiniteRing& r, const ElementSet& set);

/// Index of the m x m matrix with the given row-major entries.
Elem matrix_index(const FiniteRing& r, std::size_t m, std::span<const Elem> entries);

} // namespace finring
