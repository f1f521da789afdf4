#pragma once

/**
 * @file ring.hpp
 * @brief Finite unital rings over canonical element indices.
 *
 * A FiniteRing stores its elements as the integers 0..n-1. Index 0 is always
 * the additive identity; the multiplicative identity is fixed per construction
 * (see constructions.hpp for the encodings).
 *
 * Two storage modes exist:
 *  - Materialized: full n x n addition and multiplication tables.
 *  - Computed: products are evaluated on demand from construction data
 *    (an Arithmetic implementation), used above the materialization threshold.
 *
 * FiniteRing is a cheap-to-copy immutable handle; copies share storage.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "finring/error.hpp"

namespace finring {

using Elem = std::uint32_t;

/// Size limits applied by every construction.
struct Limits {
    std::size_t max_order = 10000;
    std::size_t materialize_threshold = 1024;
    std::size_t max_group_order = 64;
};

enum class Mode { Materialized, Computed };

/// On-demand arithmetic for rings that are not materialized.
class Arithmetic {
public:
    virtual ~Arithmetic() = default;
    virtual Elem add(Elem x, Elem y) const = 0;
    virtual Elem mul(Elem x, Elem y) const = 0;
    virtual Elem neg(Elem x) const = 0;
};

class FiniteRing {
public:
    FiniteRing() = default;

    /// Builds a materialized ring from raw row-major tables. Tables are not
    /// required to satisfy the ring axioms; use verify_axioms() for that.
    static FiniteRing from_tables(std::size_t order, Elem one, std::vector<Elem> add_table,
                                  std::vector<Elem> mul_table, std::string label);

    /// Wraps construction arithmetic. The result is materialized when
    /// order <= limits.materialize_threshold and computed otherwise.
    static FiniteRing from_arithmetic(std::size_t order, Elem one,
                                      std::shared_ptr<const Arithmetic> arithmetic,
                                      std::string label, const Limits& limits);

    std::size_t order() const noexcept { return n_; }
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }
    const std::string& label() const noexcept;
    Mode mode() const noexcept { return data_ && !data_->add.empty() ? Mode::Materialized : Mode::Computed; }
    bool valid() const noexcept { return data_ != nullptr; }

    Elem add(Elem x, Elem y) const {
        check(x);
        check(y);
        return data_->add.empty() ? data_->arith->add(x, y) : data_->add[std::size_t(x) * n_ + y];
    }
    Elem mul(Elem x, Elem y) const {
        check(x);
        check(y);
        return data_->mul.empty() ? data_->arith->mul(x, y) : data_->mul[std::size_t(x) * n_ + y];
    }
    Elem neg(Elem x) const {
        check(x);
        return data_->neg[x];
    }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    /// x^k for k >= 1, by repeated squaring.
    Elem pow(Elem x, std::uint64_t k) const;

    /// Distinct powers x, x^2, x^3, ... in order of first appearance, stopping
    /// before the first repeat.
    std::vector<Elem> power_orbit(Elem x) const;

    /// Smallest k >= 1 with k*1 = 0.
    std::uint64_t characteristic() const;

    /// The element k*1 (k may be negative).
    Elem from_integer(std::int64_t k) const;

    /// Same arithmetic, new display label.
    FiniteRing relabeled(std::string label) const;

    /// Copy with full tables, regardless of the current mode.
    FiniteRing materialized() const;

    void check(Elem x) const {
        if (x >= n_) throw_out_of_range(x);
    }

private:
    struct Data {
        std::vector<Elem> add;
        std::vector<Elem> mul;
        std::vector<Elem> neg;
        std::shared_ptr<const Arithmetic> arith;
        std::string label;
    };

    [[noreturn]] void throw_out_of_range(Elem x) const;

    std::shared_ptr<const Data> data_;
    std::size_t n_ = 0;
    Elem one_ = 0;
};

/// A subset of a ring's element indices with O(1) membership.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : mask_(universe, 0) {}
    static ElementSet of(std::size_t universe, std::span<const Elem> members);
    static ElementSet all(std::size_t universe);

    std::size_t universe() const noexcept { return mask_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x] != 0; }
    /// Returns false when x was already present.
    bool insert(Elem x);

    /// Members in increasing order.
    std::vector<Elem> members() const;

    bool is_subset_of(const ElementSet& other) const;
    ElementSet intersect(const ElementSet& other) const;

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

private:
    std::vector<std::uint8_t> mask_;
    std::size_t count_ = 0;
};

/// Writes the table dump format: `order n`, `one i`, the addition table, a
/// blank line, then the multiplication table.
void write_tables(std::ostream& out, const FiniteRing& ring);

/// Parses the table dump format back into a materialized ring.
FiniteRing read_tables(std::istream& in, std::string label = "table");

/// Rejects orders above limits.max_order. `what` names the construction.
void check_order(std::size_t order, const Limits& limits, const std::string& what);

/// base^exp with overflow saturating to SIZE_MAX.
std::size_t saturating_pow(std::size_t base, std::size_t exp);

} // namespace finring
