#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "lochom/error.hpp"

namespace lochom {

/// Dense vertex index. The integer order is the fixed total vertex order used
/// for orientation signs.
using VertexId = std::uint32_t;

/// A nonempty, strictly increasing list of vertex ids.
class Simplex {
public:
    Simplex() = default;

    Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

    /// Takes vertices in any order; throws MalformedInput on duplicates or emptiness.
    explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw MalformedInput("simplex must have at least one vertex");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw MalformedInput("simplex has a repeated vertex");
    }

    /// Trusted constructor: `sorted` must already be strictly increasing and nonempty.
    static Simplex from_sorted(std::vector<VertexId> sorted) {
        Simplex s;
        s.vertices_ = std::move(sorted);
        return s;
    }

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    std::span<const VertexId> vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    VertexId front() const { return vertices_.front(); }

    bool contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

    /// True iff every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                             vertices_.end());
    }

    bool disjoint_from(const Simplex& other) const {
        auto a = vertices_.begin();
        auto b = other.vertices_.begin();
        while (a != vertices_.end() && b != other.vertices_.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    /// Face obtained by deleting the i-th vertex; its orientation sign is (-1)^i.
    Simplex facet(std::size_t i) const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j)
            if (j != i) out.push_back(vertices_[j]);
        return from_sorted(std::move(out));
    }

    Simplex with_vertex(VertexId v) const {
        std::vector<VertexId> out(vertices_);
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return Simplex(std::move(out));
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(vertices_[i]);
        }
        return out + "]";
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vertices_ <=> b.vertices_; }

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (VertexId v : s.vertices()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Calls `fn` on every nonempty subset of `s` (including `s` itself).
template <typename Fn>
void for_each_face(const Simplex& s, Fn&& fn) {
    const auto n = s.size();
    std::vector<VertexId> buf;
    buf.reserve(n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        buf.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) buf.push_back(s[i]);
        fn(Simplex::from_sorted(buf));
    }
}

/// An arbitrary set of simplices, hash keyed.
class SimplexSet {
public:
    using Storage = std::unordered_set<Simplex, SimplexHash>;
    using const_iterator = Storage::const_iterator;

    SimplexSet() = default;
    SimplexSet(std::initializer_list<Simplex> members) : members_(members) {}
    template <typename It>
    SimplexSet(It first, It last) : members_(first, last) {}

    bool insert(const Simplex& s) { return members_.insert(s).second; }
    bool insert(Simplex&& s) { return members_.insert(std::move(s)).second; }
    bool erase(const Simplex& s) { return members_.erase(s) > 0; }
    bool contains(const Simplex& s) const { return members_.count(s) > 0; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }

    /// Members in lexicographic order.
    std::vector<Simplex> sorted() const {
        std::vector<Simplex> out(members_.begin(), members_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Members grouped by dimension, each group lexicographic.
    std::vector<std::vector<Simplex>> by_dimension() const {
        std::vector<std::vector<Simplex>> out;
        for (const auto& s : members_) {
            const auto d = static_cast<std::size_t>(s.dim());
            if (out.size() <= d) out.resize(d + 1);
            out[d].push_back(s);
        }
        for (auto& group : out) std::sort(group.begin(), group.end());
        return out;
    }

    int max_dim() const {
        int d = -1;
        for (const auto& s : members_) d = std::max(d, s.dim());
        return d;
    }

    bool is_subset_of(const SimplexSet& other) const {
        if (size() > other.size()) return false;
        return std::all_of(members_.begin(), members_.end(),
                           [&](const Simplex& s) { return other.contains(s); });
    }

    SimplexSet& unite(const SimplexSet& other) {
        members_.insert(other.members_.begin(), other.members_.end());
        return *this;
    }

    friend SimplexSet set_union(SimplexSet a, const SimplexSet& b) { return a.unite(b); }

    friend SimplexSet set_intersection(const SimplexSet& a, const SimplexSet& b) {
        const auto& small = a.size() <= b.size() ? a : b;
        const auto& large = a.size() <= b.size() ? b : a;
        SimplexSet out;
        for (const auto& s : small)
            if (large.contains(s)) out.insert(s);
        return out;
    }

    friend SimplexSet set_difference(const SimplexSet& a, const SimplexSet& b) {
        SimplexSet out;
        for (const auto& s : a)
            if (!b.contains(s)) out.insert(s);
        return out;
    }

    friend bool operator==(const SimplexSet& a, const SimplexSet& b) { return a.members_ == b.members_; }

private:
    Storage members_;
};

}  // namespace lochom
