#pragma once

// Exact rank, kernel and solve over the rationals.
//
// Matrices are stored column-sparse. All routines go through ColumnSpace, an
// incremental column echelon form that remembers how each reduced column was
// obtained from the generators fed to it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lochom {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

namespace detail {

/// a + f * b, dropping cancelled entries.
inline SparseVector axpy(const SparseVector& a, const Rational& f, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, f * j->second);
            ++j;
        } else {
            Rational v = i->second + f * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

inline SparseVector to_sparse(const RationalVector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace_back(i, v[i]);
    return out;
}

inline RationalVector to_dense(const SparseVector& v, std::size_t n) {
    RationalVector out(n, Rational(0));
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

/// Rescales a nonzero vector to the primitive integer vector on the same line
/// whose first nonzero entry is positive.
inline RationalVector make_primitive(RationalVector v) {
    using Int = boost::multiprecision::mpz_int;
    Int l = 1;
    for (const auto& x : v)
        if (x != 0) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
    Int g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        if (x != 0) g = boost::multiprecision::gcd(g, Int(boost::multiprecision::numerator(x)));
    }
    if (g == 0) return v;
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : v) x /= Rational(g);
    return v;
}

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static ExactMatrix from_integers(const std::vector<std::vector<long long>>& rows) {
        std::vector<std::vector<Rational>> q;
        for (const auto& row : rows) q.emplace_back(row.begin(), row.end());
        return from_rows(q);
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    Rational at(std::size_t r, std::size_t c) const {
        check(r, c);
        const auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, std::size_t row) { return e.first < row; });
        return (it != col.end() && it->first == r) ? it->second : Rational(0);
    }

    void set(std::size_t r, std::size_t c, const Rational& value) {
        check(r, c);
        auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, std::size_t row) { return e.first < row; });
        const bool present = it != col.end() && it->first == r;
        if (value == 0) {
            if (present) col.erase(it);
        } else if (present) {
            it->second = value;
        } else {
            col.insert(it, {r, value});
        }
    }

    const SparseVector& column(std::size_t c) const { return columns_.at(c); }

    /// Appends a column; entries must be sorted and within the row bound.
    void push_column(SparseVector col) {
        for (const auto& e : col)
            if (e.first >= rows_) throw std::out_of_range("column entry outside matrix bounds");
        columns_.push_back(std::move(col));
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols(), rows_);
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
        return t;
    }

    RationalVector apply(const RationalVector& x) const {
        if (x.size() != cols()) throw std::invalid_argument("vector length does not match column count");
        RationalVector y(rows_, Rational(0));
        for (std::size_t c = 0; c < cols(); ++c) {
            if (x[c] == 0) continue;
            for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
        }
        return y;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("incompatible matrix product");
        ExactMatrix out(a.rows(), b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c) {
            SparseVector acc;
            for (const auto& [k, v] : b.columns_[c]) acc = detail::axpy(acc, v, a.columns_[k]);
            out.columns_[c] = std::move(acc);
        }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols())
            throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") outside " + std::to_string(rows_) + "x" + std::to_string(cols()));
    }

    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Incremental column echelon form over Q.
///
/// Generators are added one at a time. Each reduced pivot column has a
/// distinct leading (smallest) row, so reducing a new vector against the
/// pivots strictly increases its leading row and terminates.
class ColumnSpace {
public:
    explicit ColumnSpace(bool track_combinations = true) : track_(track_combinations) {}

    /// Adds `v` as generator number generator_count(). Returns true when it
    /// enlarges the span. When it does not, last_relation() holds the
    /// coefficients of a vanishing combination with coefficient 1 on `v`.
    bool add(SparseVector v) {
        const std::size_t id = generators_++;
        SparseVector combo;
        if (track_) combo.emplace_back(id, Rational(1));
        reduce(v, combo);
        if (v.empty()) {
            last_relation_ = std::move(combo);
            return false;
        }
        const std::size_t lead = v.front().first;
        pivots_.emplace(lead, Pivot{std::move(v), std::move(combo)});
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t generator_count() const { return generators_; }
    const SparseVector& last_relation() const { return last_relation_; }

    bool in_span(SparseVector v) const {
        reduce_untracked(v);
        return v.empty();
    }

    /// Coefficients c over the generators with sum c_i g_i = v, or nullopt.
    std::optional<SparseVector> express(SparseVector v) const {
        if (!track_) throw std::logic_error("ColumnSpace built without combination tracking");
        SparseVector x;
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) return std::nullopt;
            const Rational f = v.front().second / it->second.vec.front().second;
            v = detail::axpy(v, -f, it->second.vec);
            x = detail::axpy(x, f, it->second.combo);
        }
        return x;
    }

private:
    struct Pivot {
        SparseVector vec;
        SparseVector combo;
    };

    void reduce(SparseVector& v, SparseVector& combo) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) return;
            const Rational f = -(v.front().second / it->second.vec.front().second);
            v = detail::axpy(v, f, it->second.vec);
            if (track_) combo = detail::axpy(combo, f, it->second.combo);
        }
    }

    void reduce_untracked(SparseVector& v) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) return;
            const Rational f = -(v.front().second / it->second.vec.front().second);
            v = detail::axpy(v, f, it->second.vec);
        }
    }

    bool track_;
    std::size_t generators_ = 0;
    std::unordered_map<std::size_t, Pivot> pivots_;
    SparseVector last_relation_;
};

struct LinalgOptions {
    /// Try rank over GF(2^31 - 1) first. The modular rank never exceeds the
    /// rational rank, so it is accepted only when it reaches min(rows, cols);
    /// otherwise the rational computation runs.
    bool modular_fast_path = false;
};

struct RankProfile {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<RationalVector> kernel_basis;
};

namespace detail {

/// Column order for elimination: fewest nonzeros first, ties by index.
inline std::vector<std::size_t> sparsest_first(const ExactMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m.column(a).size() < m.column(b).size();
    });
    return order;
}

}  // namespace detail

inline constexpr std::uint64_t kMersennePrime31 = 2147483647ULL;

/// Rank over GF(p) for prime p < 2^32.
inline std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p = kMersennePrime31) {
    using Col = std::vector<std::pair<std::size_t, std::uint64_t>>;
    auto residue = [p](const Rational& q) {
        using Int = boost::multiprecision::mpz_int;
        Int num = boost::multiprecision::numerator(q) % Int(p);
        Int den = boost::multiprecision::denominator(q) % Int(p);
        if (num < 0) num += Int(p);
        if (den == 0) throw std::domain_error("denominator divisible by the modulus");
        return std::pair{num.convert_to<std::uint64_t>(), den.convert_to<std::uint64_t>()};
    };
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    auto inverse = [&](std::uint64_t a) { return power(a, p - 2); };

    std::unordered_map<std::size_t, Col> pivots;
    for (std::size_t c : detail::sparsest_first(m)) {
        Col v;
        for (const auto& [r, q] : m.column(c)) {
            auto [num, den] = residue(q);
            const std::uint64_t x = num * inverse(den) % p;
            if (x) v.emplace_back(r, x);
        }
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) break;
            const auto& piv = it->second;
            const std::uint64_t f = v.front().second * inverse(piv.front().second) % p;
            Col out;
            auto i = v.begin();
            auto j = piv.begin();
            while (i != v.end() || j != piv.end()) {
                if (j == piv.end() || (i != v.end() && i->first < j->first)) {
                    out.push_back(*i++);
                } else if (i == v.end() || j->first < i->first) {
                    out.emplace_back(j->first, (p - f * j->second % p) % p);
                    ++j;
                } else {
                    const std::uint64_t x = (i->second + p - f * j->second % p) % p;
                    if (x) out.emplace_back(i->first, x);
                    ++i;
                    ++j;
                }
            }
            v = std::move(out);
        }
        if (!v.empty()) pivots.emplace(v.front().first, std::move(v));
    }
    return pivots.size();
}

/// Rank over Q.
inline std::size_t rank(const ExactMatrix& m, const LinalgOptions& options = {}) {
    if (options.modular_fast_path) {
        const std::size_t r = rank_mod_p(m);
        if (r == std::min(m.rows(), m.cols())) return r;
    }
    ColumnSpace space(false);
    for (std::size_t c : detail::sparsest_first(m)) space.add(m.column(c));
    return space.rank();
}

/// Rank, nullity and a primitive-integer basis of the right null space.
inline RankProfile rank_profile(const ExactMatrix& m) {
    RankProfile out;
    ColumnSpace space;
    const auto order = detail::sparsest_first(m);
    for (std::size_t c : order) {
        if (space.add(m.column(c))) continue;
        RationalVector k(m.cols(), Rational(0));
        for (const auto& [g, x] : space.last_relation()) k[order[g]] = x;
        out.kernel_basis.push_back(make_primitive(std::move(k)));
    }
    out.rank = space.rank();
    out.nullity = m.cols() - out.rank;
    return out;
}

inline std::vector<RationalVector> kernel_basis(const ExactMatrix& m) { return rank_profile(m).kernel_basis; }

/// Some x with m * x = b, or nullopt when b is outside the column space.
inline std::optional<RationalVector> solve_in_image(const ExactMatrix& m, const RationalVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    ColumnSpace space;
    for (std::size_t c = 0; c < m.cols(); ++c) space.add(m.column(c));
    auto x = space.express(to_sparse(b));
    if (!x) return std::nullopt;
    return to_dense(*x, m.cols());
}

}  // namespace lochom
