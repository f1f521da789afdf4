#include "finring/ring.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace finring {

FiniteRing FiniteRing::from_tables(std::size_t order, Elem one, std::vector<Elem> add_table,
                                   std::vector<Elem> mul_table, std::string label) {
    if (order == 0) throw ArgumentError("ring order must be positive");
    if (add_table.size() != order * order || mul_table.size() != order * order)
        throw ArgumentError("table size does not match order " + std::to_string(order));
    if (one >= order) throw ArgumentError("identity index out of range");
    auto in_range = [order](Elem v) { return v < order; };
    if (!std::all_of(add_table.begin(), add_table.end(), in_range) ||
        !std::all_of(mul_table.begin(), mul_table.end(), in_range))
        throw ArgumentError("table entry out of range");

    auto data = std::make_shared<Data>();
    data->neg.assign(order, 0);
    for (std::size_t x = 0; x < order; ++x) {
        // Left additive inverse; a table with none keeps 0 here and fails
        // verify_axioms().
        for (std::size_t y = 0; y < order; ++y) {
            if (add_table[x * order + y] == 0) {
                data->neg[x] = Elem(y);
                break;
            }
        }
    }
    data->add = std::move(add_table);
    data->mul = std::move(mul_table);
    data->label = std::move(label);

    FiniteRing r;
    r.data_ = std::move(data);
    r.n_ = order;
    r.one_ = one;
    return r;
}

FiniteRing FiniteRing::from_arithmetic(std::size_t order, Elem one,
                                       std::shared_ptr<const Arithmetic> arithmetic,
                                       std::string label, const Limits& limits) {
    if (order == 0) throw ArgumentError("ring order must be positive");
    if (one >= order) throw ArgumentError("identity index out of range");
    check_order(order, limits, label);

    auto data = std::make_shared<Data>();
    data->neg.resize(order);
    for (std::size_t x = 0; x < order; ++x) data->neg[x] = arithmetic->neg(Elem(x));
    if (order <= limits.materialize_threshold) {
        data->add.resize(order * order);
        data->mul.resize(order * order);
        for (std::size_t x = 0; x < order; ++x) {
            for (std::size_t y = 0; y < order; ++y) {
                data->add[x * order + y] = arithmetic->add(Elem(x), Elem(y));
                data->mul[x * order + y] = arithmetic->mul(Elem(x), Elem(y));
            }
        }
    } else {
        data->arith = std::move(arithmetic);
    }
    data->label = std::move(label);

    FiniteRing r;
    r.data_ = std::move(data);
    r.n_ = order;
    r.one_ = one;
    return r;
}

const std::string& FiniteRing::label() const noexcept {
    static const std::string empty;
    return data_ ? data_->label : empty;
}

Elem FiniteRing::pow(Elem x, std::uint64_t k) const {
    check(x);
    if (k == 0) throw ArgumentError("pow: exponent must be at least 1");
    Elem result = x;
    Elem base = x;
    --k;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<Elem> FiniteRing::power_orbit(Elem x) const {
    check(x);
    std::vector<std::uint8_t> seen(n_, 0);
    std::vector<Elem> orbit;
    Elem p = x;
    while (!seen[p]) {
        seen[p] = 1;
        orbit.push_back(p);
        p = mul(p, x);
    }
    return orbit;
}

std::uint64_t FiniteRing::characteristic() const {
    std::uint64_t k = 1;
    Elem acc = one_;
    while (acc != 0) {
        if (k > n_) throw ConsistencyError("characteristic: additive order of 1 exceeds ring order");
        acc = add(acc, one_);
        ++k;
    }
    return k;
}

Elem FiniteRing::from_integer(std::int64_t k) const {
    auto c = static_cast<std::int64_t>(characteristic());
    std::int64_t r = ((k % c) + c) % c;
    Elem acc = 0;
    for (std::int64_t i = 0; i < r; ++i) acc = add(acc, one_);
    return acc;
}

FiniteRing FiniteRing::relabeled(std::string label) const {
    FiniteRing r = *this;
    auto data = std::make_shared<Data>(*data_);
    data->label = std::move(label);
    r.data_ = std::move(data);
    return r;
}

FiniteRing FiniteRing::materialized() const {
    if (mode() == Mode::Materialized) return *this;
    std::vector<Elem> a(n_ * n_), m(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
            a[x * n_ + y] = add(Elem(x), Elem(y));
            m[x * n_ + y] = mul(Elem(x), Elem(y));
        }
    }
    return from_tables(n_, one_, std::move(a), std::move(m), label());
}

void FiniteRing::throw_out_of_range(Elem x) const {
    throw ArgumentError("element index " + std::to_string(x) + " out of range for ring of order " +
                        std::to_string(n_));
}

// ---------------------------------------------------------------------------

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> members) {
    ElementSet s(universe);
    for (Elem x : members) {
        if (x >= universe)
            throw ArgumentError("set member " + std::to_string(x) + " out of range " + std::to_string(universe));
        s.insert(x);
    }
    return s;
}

ElementSet ElementSet::all(std::size_t universe) {
    ElementSet s(universe);
    std::fill(s.mask_.begin(), s.mask_.end(), std::uint8_t{1});
    s.count_ = universe;
    return s;
}

bool ElementSet::insert(Elem x) {
    if (x >= mask_.size()) throw ArgumentError("set member " + std::to_string(x) + " out of range");
    if (mask_[x]) return false;
    mask_[x] = 1;
    ++count_;
    return true;
}

std::vector<Elem> ElementSet::members() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(Elem(i));
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && !other.contains(Elem(i))) return false;
    return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    ElementSet s(universe());
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && other.contains(Elem(i))) s.insert(Elem(i));
    return s;
}

// ---------------------------------------------------------------------------

void write_tables(std::ostream& out, const FiniteRing& ring) {
    const std::size_t n = ring.order();
    out << "order " << n << '\n' << "one " << ring.one() << '\n';
    auto dump = [&](auto op) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c) out << ' ';
                out << op(Elem(r), Elem(c));
            }
            out << '\n';
        }
    };
    dump([&](Elem a, Elem b) { return ring.add(a, b); });
    out << '\n';
    dump([&](Elem a, Elem b) { return ring.mul(a, b); });
}

FiniteRing read_tables(std::istream& in, std::string label) {
    std::string word;
    std::size_t n = 0;
    long long one = -1;
    if (!(in >> word) || word != "order" || !(in >> n) || n == 0)
        throw ArgumentError("table dump: expected 'order n'");
    if (!(in >> word) || word != "one" || !(in >> one) || one < 0)
        throw ArgumentError("table dump: expected 'one i'");
    if (n > 65536) throw ArgumentError("table dump: order too large");
    auto read_table = [&](const char* name) {
        std::vector<Elem> t(n * n);
        for (auto& v : t) {
            long long x = -1;
            if (!(in >> x) || x < 0 || static_cast<std::size_t>(x) >= n)
                throw ArgumentError(std::string("table dump: bad entry in ") + name + " table");
            v = Elem(x);
        }
        return t;
    };
    auto a = read_table("addition");
    auto m = read_table("multiplication");
    return FiniteRing::from_tables(n, Elem(one), std::move(a), std::move(m), std::move(label));
}

void check_order(std::size_t order, const Limits& limits, const std::string& what) {
    if (order > limits.max_order)
        throw LimitError("order " + (order == std::numeric_limits<std::size_t>::max() ? std::string("overflow")
                                                                                      : std::to_string(order)) +
                         " of " + what + " exceeds limit " + std::to_string(limits.max_order));
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base) return kMax;
        r *= base;
    }
    return r;
}

} // namespace finring
