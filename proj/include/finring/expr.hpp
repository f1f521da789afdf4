#pragma once

/**
 * @file expr.hpp
 * @brief The ring-construction expression language.
 *
 *   Expr   := Term { "x" Term }
 *   Term   := "Z" "/" INT | "GF" "(" INT ["," INT] ")" | "M" "(" INT "," Expr ")"
 *           | "UT" "(" INT "," Expr ")" | "TE" "(" Expr ")" | "BT" "(" Expr ")"
 *           | "NIL" "(" Expr "," INT ")" | "POLYQ" "(" Expr "," "[" INT {"," INT} "]" ")"
 *           | "GR" "(" Expr "," GExpr ")" | "MODJ" "(" Expr ")"
 *           | "CORNER" "(" Expr "," INT ")" | "QUOT" "(" Expr "," "[" INT {"," INT} "]" ")"
 *           | "(" Expr ")"
 *   GExpr  := GTerm { "x" GTerm }
 *   GTerm  := "C" INT | "S3" | "D4" | "Q8" | "(" GExpr ")"
 *
 * "x" is right-associative. Keywords are uppercase; integers are decimal.
 * GF(q) with a single prime-power argument is read as GF(p, k) and formatted that way.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "finring/group.hpp"
#include "finring/ring.hpp"

namespace finring {

struct GroupExpr {
    enum class Kind { Cyclic, Product, S3, D4, Q8 };

    Kind kind = Kind::Cyclic;
    std::uint64_t n = 0;              // Cyclic order
    std::vector<GroupExpr> children;  // Product operands

    static GroupExpr cyclic(std::uint64_t n) { return {Kind::Cyclic, n, {}}; }
    static GroupExpr product(GroupExpr a, GroupExpr b) { return {Kind::Product, 0, {std::move(a), std::move(b)}}; }
    static GroupExpr named(Kind k) { return {k, 0, {}}; }

    bool operator==(const GroupExpr&) const = default;
};

struct RingExpr {
    enum class Kind { Zmod, GF, Product, Matrix, UpperTri, TE, BT, Nil, PolyQ, GroupRing, ModJ, Corner, Quot };

    Kind kind = Kind::Zmod;
    /// Integer parameters: Zmod {n}, GF {p, k}, Matrix/UpperTri {m}, Nil {p},
    /// PolyQ {coefficients}, Corner {index}, Quot {generators}.
    std::vector<std::uint64_t> ints;
    std::vector<RingExpr> children;
    std::vector<GroupExpr> group;  // GroupRing only, exactly one entry

    static RingExpr zmod(std::uint64_t n) { return {Kind::Zmod, {n}, {}, {}}; }
    static RingExpr gf(std::uint64_t p, std::uint64_t k) { return {Kind::GF, {p, k}, {}, {}}; }
    static RingExpr product(RingExpr a, RingExpr b) { return {Kind::Product, {}, {std::move(a), std::move(b)}, {}}; }
    static RingExpr unary(Kind k, RingExpr e, std::vector<std::uint64_t> ints = {}) {
        return {k, std::move(ints), {std::move(e)}, {}};
    }
    static RingExpr group_ring(RingExpr e, GroupExpr g) { return {Kind::GroupRing, {}, {std::move(e)}, {std::move(g)}}; }

    bool operator==(const RingExpr&) const = default;
};

class ParseError : public Error {
public:
    enum class Kind { Lexical, Syntax, Bound };

    ParseError(Kind kind, std::size_t offset, std::string message, std::vector<std::string> expected = {});

    Kind kind() const noexcept { return kind_; }
    /// Byte offset into the source text.
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

RingExpr parse_ring(std::string_view text);
GroupExpr parse_group(std::string_view text);

std::string format(const RingExpr& e);
std::string format(const GroupExpr& g);

GroupTable evaluate(const GroupExpr& g, const Limits& limits = {});
/// Builds the ring; its label is format(e).
FiniteRing evaluate(const RingExpr& e, const Limits& limits = {});

/// parse_ring + evaluate.
FiniteRing build_ring(std::string_view text, const Limits& limits = {});

} // namespace finring
