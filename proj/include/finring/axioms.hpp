#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// "R1NG" in ASCII.
inline constexpr std::uint64_t kDefaultSeed = 0x52314E47;

struct AxiomPolicy {
    /// Rings up to this order get every triple checked.
    std::size_t exhaustive_max_order = 256;
    /// Triples sampled per ternary axiom above the exhaustive bound.
    std::size_t sampled_triples = 100000;
    std::uint64_t seed = kDefaultSeed;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t cases = 0;
    /// Offending arguments (unused slots are 0).
    std::optional<std::array<Elem, 3>> witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool passed() const;
    /// First failing check, or nullptr.
    const AxiomCheck* first_failure() const;
};

AxiomReport verify_axioms(const FiniteRing& ring, const AxiomPolicy& policy = {});

} // namespace finring
