#include "finring/group.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace finring {

GroupTable GroupTable::from_table(std::size_t order, std::vector<Elem> table, std::string label) {
    if (order == 0) throw ArgumentError("group order must be positive");
    if (table.size() != order * order) throw ArgumentError("group table size mismatch");
    for (Elem v : table)
        if (v >= order) throw ArgumentError("group table entry out of range");

    GroupTable g;
    g.n_ = order;
    g.table_ = std::move(table);
    g.label_ = std::move(label);
    for (Elem a = 0; a < order; ++a)
        if (g.op(0, a) != a || g.op(a, 0) != a)
            throw ArgumentError("group " + g.label_ + ": index 0 is not the identity (at " + std::to_string(a) + ")");
    for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b)
            for (Elem c = 0; c < order; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw ArgumentError("group " + g.label_ + ": not associative");
    g.inverse_.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
        bool found = false;
        for (Elem b = 0; b < order && !found; ++b) {
            if (g.op(a, b) == 0 && g.op(b, a) == 0) {
                g.inverse_[a] = b;
                found = true;
            }
        }
        if (!found) throw ArgumentError("group " + g.label_ + ": element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

bool GroupTable::is_two_group() const noexcept { return n_ != 0 && (n_ & (n_ - 1)) == 0; }

GroupTable cyclic(std::size_t n, const Limits& limits) {
    if (n == 0) throw ArgumentError("cyclic group order must be positive");
    if (n > limits.max_group_order)
        throw LimitError("group order " + std::to_string(n) + " exceeds limit " + std::to_string(limits.max_group_order));
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = Elem((a + b) % n);
    return GroupTable::from_table(n, std::move(t), "C" + std::to_string(n));
}

GroupTable group_product(const GroupTable& g, const GroupTable& h, const Limits& limits) {
    const std::size_t n = g.order() * h.order();
    if (n > limits.max_group_order)
        throw LimitError("group order " + std::to_string(n) + " exceeds limit " + std::to_string(limits.max_group_order));
    const std::size_t m = h.order();
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = Elem(g.op(Elem(a / m), Elem(b / m)) * m + h.op(Elem(a % m), Elem(b % m)));
    return GroupTable::from_table(n, std::move(t), g.label() + " x " + h.label());
}

GroupTable symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return Elem(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<Elem> t(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
            t[a * 6 + b] = index(c);
        }
    return GroupTable::from_table(6, std::move(t), "S3");
}

GroupTable dihedral4() {
    // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l)
    std::vector<Elem> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
            int rot = ((i + (j ? -k : k)) % 4 + 4) % 4;
            t[a * 8 + b] = Elem(rot + 4 * ((j + l) % 2));
        }
    return GroupTable::from_table(8, std::move(t), "D4");
}

GroupTable quaternion8() {
    // Unit products among 1, i, j, k as (sign, unit).
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Elem> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
            int s = (sa + sb + kSign[ua][ub]) % 2;
            t[a * 8 + b] = Elem(2 * kUnit[ua][ub] + s);
        }
    return GroupTable::from_table(8, std::move(t), "Q8");
}

std::vector<std::vector<Elem>> subgroups(const GroupTable& g) {
    const std::size_t n = g.order();
    auto close = [&](std::vector<std::uint8_t> in) {
        std::vector<Elem> members;
        for (Elem a = 0; a < n; ++a)
            if (in[a]) members.push_back(a);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                for (Elem c : {g.op(members[i], members[j]), g.op(members[j], members[i])}) {
                    if (!in[c]) {
                        in[c] = 1;
                        members.push_back(c);
                    }
                }
            }
        }
        return in;
    };

    std::vector<std::uint8_t> trivial(n, 0);
    trivial[0] = 1;
    std::set<std::vector<std::uint8_t>> found{trivial};
    std::vector<std::vector<std::uint8_t>> frontier{trivial};
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& h : frontier) {
            for (Elem a = 0; a < n; ++a) {
                if (h[a]) continue;
                auto grown = h;
                grown[a] = 1;
                grown = close(std::move(grown));
                if (found.insert(grown).second) next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<Elem>> out;
    for (const auto& mask : found) {
        std::vector<Elem> members;
        for (Elem a = 0; a < n; ++a)
            if (mask[a]) members.push_back(a);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<Elem>& elements, std::string label) {
    if (elements.empty() || elements.front() != 0 || !std::is_sorted(elements.begin(), elements.end()))
        throw ArgumentError("subgroup elements must be sorted and contain the identity");
    const std::size_t m = elements.size();
    std::vector<Elem> t(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Elem c = g.op(elements[a], elements[b]);
            auto it = std::lower_bound(elements.begin(), elements.end(), c);
            if (it == elements.end() || *it != c) throw ArgumentError("subgroup is not closed under the operation");
            t[a * m + b] = Elem(it - elements.begin());
        }
    return GroupTable::from_table(m, std::move(t), std::move(label));
}

} // namespace finring
