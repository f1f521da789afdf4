#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// A finite group given by a validated Cayley table. Index 0 is the identity.
class GroupTable {
public:
    GroupTable() = default;

    /// Validates associativity (exhaustively), identity at 0, and inverses.
    static GroupTable from_table(std::size_t order, std::vector<Elem> table, std::string label);

    std::size_t order() const noexcept { return n_; }
    Elem op(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
    Elem inverse(Elem a) const { return inverse_[a]; }
    const std::string& label() const noexcept { return label_; }

    /// For finite groups, equivalent to every element having 2-power order.
    bool is_two_group() const noexcept;

    /// Index of the identity; always 0.
    static constexpr Elem identity() { return 0; }

private:
    std::size_t n_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::string label_;
};

GroupTable cyclic(std::size_t n, const Limits& limits = {});

/// Direct product; (g, h) is encoded as g * |H| + h.
GroupTable group_product(const GroupTable& g, const GroupTable& h, const Limits& limits = {});

/// Permutations of {0,1,2} in lexicographic order of their images.
GroupTable symmetric3();
/// r^i s^j encoded as i + 4j, with s r s = r^-1.
GroupTable dihedral4();
/// Sign-and-unit pairs: index 2b + s, b in (1, i, j, k), s = 1 for negation.
GroupTable quaternion8();

/// Every subgroup of g, each as a sorted list of element indices.
std::vector<std::vector<Elem>> subgroups(const GroupTable& g);

/// The subgroup on `elements` (sorted, containing 0) relabeled by position.
GroupTable subgroup_table(const GroupTable& g, const std::vector<Elem>& elements, std::string label);

} // namespace finring
