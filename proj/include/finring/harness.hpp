#pragma once

/**
 * @file harness.hpp
 * @brief Replays the 2-sqrtJU theory over a corpus of constructed rings.
 *
 * Each claim is a universally quantified statement checked over the corpus
 * and over rings derived from it (quotients, corners, subrings, products,
 * extensions). A passing claim means "no counterexample found over N
 * instances", never a proof.
 */

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finring/analysis.hpp"
#include "finring/axioms.hpp"
#include "finring/expr.hpp"

namespace finring {

struct CorpusEntry {
    std::string label;
    std::optional<RingExpr> expr;  // absent for rings loaded from raw tables
    FiniteRing ring;
    std::shared_ptr<const Analysis> analysis;
};

class CorpusError : public Error {
public:
    CorpusError(std::size_t line, const std::string& message)
        : Error("corpus line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class Corpus {
public:
    /// One expression per line; '#' starts a comment; blank lines ignored.
    /// Fails atomically with the offending line.
    static Corpus parse(std::istream& in, std::string name, const Limits& limits = {});
    static Corpus from_lines(const std::vector<std::string>& lines, std::string name, const Limits& limits = {});
    static Corpus from_rings(std::vector<FiniteRing> rings, std::string name);

    const std::string& name() const noexcept { return name_; }
    const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Entry whose canonical label equals format(parse_ring(text)).
    const CorpusEntry* find(std::string_view text) const;

private:
    std::string name_;
    std::vector<CorpusEntry> entries_;
};

std::vector<std::string> default_corpus_lines();
Corpus default_corpus(const Limits& limits = {});

struct HarnessOptions {
    Limits limits;
    AxiomPolicy axioms;
    /// Largest derived ring (extension, quotient) built by a claim.
    std::size_t derived_cap = 1024;
    /// Largest product R1 x R2 built from corpus pairs.
    std::size_t pair_cap = 256;
    /// Worker threads for run_suite; 0 picks hardware concurrency.
    unsigned threads = 0;
};

struct InstanceRecord {
    std::string rings;
    bool passed = true;
    std::string detail;
};

struct ClaimResult {
    std::string id;
    std::string name;
    std::string statement;
    std::string domain;
    std::vector<InstanceRecord> instances;
    /// Instances whose hypothesis was false (implication holds vacuously).
    std::size_t vacuous = 0;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

struct ClaimInfo {
    std::string_view id;
    std::string_view name;
    std::string_view statement;
};

/// C1..C19 in order.
const std::vector<ClaimInfo>& claim_catalog();

struct SkippedClaim {
    std::string id;
    std::string reason;
};

struct AxiomFailure {
    std::string ring;
    std::string axiom;
    std::string witness;
};

struct Report {
    std::string corpus;
    std::size_t corpus_size = 0;
    std::uint64_t seed = kDefaultSeed;
    std::vector<AxiomFailure> axiom_failures;
    std::vector<ClaimResult> claims;
    std::vector<SkippedClaim> skipped;
    std::vector<std::string> notes;
    double seconds = 0;

    std::size_t passed_count() const;
    std::size_t failed_count() const;
    bool passed() const { return failed_count() == 0 && axiom_failures.empty(); }
};

/// Throws ArgumentError for an unknown id.
ClaimResult run_claim(std::string_view id, const Corpus& corpus, const HarnessOptions& options = {});

/// Runs every claim, or only those in `filter`; throws ArgumentError on an unknown id.
Report run_suite(const Corpus& corpus, const std::vector<std::string>& filter = {},
                 const HarnessOptions& options = {});

void print_report(std::ostream& out, const Report& report);

} // namespace finring
