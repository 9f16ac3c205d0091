#pragma once

// Abstract simplicial complexes stored by their maximal simplices, and the
// Alexandrov-topology operators (star, closure, link, frontier, interior).

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lochom/error.hpp"
#include "lochom/simplex.hpp"

namespace lochom {

/// Original vertex label from the input (JSON allows integers or strings).
using Label = std::variant<std::int64_t, std::string>;

inline std::string label_to_string(const Label& l) {
    if (const auto* i = std::get_if<std::int64_t>(&l)) return std::to_string(*i);
    return std::get<std::string>(l);
}

/// Immutable, locally finite simplicial complex.
///
/// Only maximal simplices are stored. Faces of a given dimension are
/// enumerated on first request and memoized; the memo is guarded so shared
/// read access from several threads is safe.
class SimplicialComplex {
public:
    SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

    /// Builds a complex from arbitrary labels. Labels are interned to
    /// 0..n-1 in first-encounter order; labels first seen in the same input
    /// simplex are ordered among themselves by label value. Simplices that are
    /// faces of other inputs are dropped.
    static SimplicialComplex from_maximal(const std::vector<std::vector<Label>>& simplices) {
        std::map<Label, VertexId> ids;
        std::vector<Label> labels;
        std::vector<std::vector<VertexId>> raw;
        raw.reserve(simplices.size());
        for (const auto& list : simplices) {
            if (list.empty()) throw MalformedInput("empty simplex in input");
            std::vector<Label> fresh;
            for (const auto& l : list)
                if (!ids.count(l)) fresh.push_back(l);
            std::sort(fresh.begin(), fresh.end());
            fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
            for (const auto& l : fresh) {
                ids.emplace(l, static_cast<VertexId>(labels.size()));
                labels.push_back(l);
            }
            std::vector<VertexId> s;
            s.reserve(list.size());
            for (const auto& l : list) s.push_back(ids.at(l));
            raw.push_back(std::move(s));
        }
        return build(raw, std::move(labels));
    }

    /// Builds a complex whose vertices are already integer ids. Every id in
    /// 0..n-1 must occur in some simplex, where n = max id + 1 (isolated
    /// vertices are given as singleton simplices). Labels default to the ids.
    static SimplicialComplex from_ids(const std::vector<std::vector<VertexId>>& simplices) {
        VertexId n = 0;
        for (const auto& s : simplices)
            for (VertexId v : s) n = std::max<VertexId>(n, v + 1);
        std::vector<Label> labels(n);
        for (VertexId v = 0; v < n; ++v) labels[v] = static_cast<std::int64_t>(v);
        return from_ids(simplices, std::move(labels));
    }

    /// As above with an explicit id -> label table; its length is the vertex count.
    static SimplicialComplex from_ids(const std::vector<std::vector<VertexId>>& simplices, std::vector<Label> labels) {
        const auto n = labels.size();
        for (const auto& s : simplices)
            for (VertexId v : s)
                if (v >= n) throw MalformedInput("vertex id " + std::to_string(v) + " has no label");
        auto X = build(simplices, std::move(labels));
        for (VertexId v = 0; v < n; ++v)
            if (X.vertex_to_maximal_[v].empty())
                throw MalformedInput("vertex id " + std::to_string(v) + " does not occur in any simplex");
        return X;
    }

    int dim() const { return dim_; }
    bool empty() const { return maximal_.empty(); }
    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(VertexId v) const { return labels_.at(v); }

    std::optional<VertexId> find_label(const Label& l) const {
        for (VertexId v = 0; v < labels_.size(); ++v)
            if (labels_[v] == l) return v;
        return std::nullopt;
    }

    /// Vertex labels in brackets; ids outside the complex print as #id.
    std::string format(const Simplex& s) const {
        std::string out = "[";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += s[i] < labels_.size() ? label_to_string(labels_[s[i]]) : "#" + std::to_string(s[i]);
        }
        return out + "]";
    }

    /// Indices into maximal_simplices() of the maximal simplices containing `v`.
    const std::vector<std::size_t>& maximal_containing(VertexId v) const { return vertex_to_maximal_.at(v); }

    bool contains(const Simplex& s) const {
        if (s.size() == 0 || s[s.size() - 1] >= vertex_count()) return false;
        for (std::size_t idx : vertex_to_maximal_[s.front()])
            if (s.is_face_of(maximal_[idx])) return true;
        return false;
    }

    /// All k-faces, each exactly once, in lexicographic order. Empty when k > dim.
    const std::vector<Simplex>& faces(int k) const {
        static const std::vector<Simplex> none;
        if (k < 0 || k > dim_) return none;
        std::lock_guard lock(cache_->mutex);
        auto& slot = cache_->faces[static_cast<std::size_t>(k)];
        if (!slot) {
            SimplexSet found;
            for (const auto& m : maximal_) {
                if (m.dim() < k) continue;
                for_each_k_subset(m, static_cast<std::size_t>(k) + 1,
                                  [&](Simplex f) { found.insert(std::move(f)); });
            }
            slot = found.sorted();
        }
        return *slot;
    }

    /// Every face of the complex.
    SimplexSet all_simplices() const {
        SimplexSet out;
        for (int k = 0; k <= dim_; ++k)
            for (const auto& f : faces(k)) out.insert(f);
        return out;
    }

    std::size_t face_count() const {
        std::size_t n = 0;
        for (int k = 0; k <= dim_; ++k) n += faces(k).size();
        return n;
    }

    /// Faces one dimension up that contain `s`, lexicographic. Memoized.
    std::vector<Simplex> cofacets(const Simplex& s) const {
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->cofacets.find(s);
            if (it != cache_->cofacets.end()) return it->second;
        }
        std::vector<Simplex> out;
        if (contains(s)) {
            std::vector<VertexId> extra;
            for (std::size_t idx : vertex_to_maximal_[s.front()]) {
                const auto& m = maximal_[idx];
                if (!s.is_face_of(m)) continue;
                for (VertexId w : m.vertices())
                    if (!s.contains(w)) extra.push_back(w);
            }
            std::sort(extra.begin(), extra.end());
            extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
            for (VertexId w : extra) out.push_back(s.with_vertex(w));
        }
        std::lock_guard lock(cache_->mutex);
        cache_->cofacets.emplace(s, out);
        return out;
    }

    /// star of a single simplex: every face of X containing `s`.
    SimplexSet star_of(const Simplex& s) const {
        SimplexSet out;
        if (!contains(s)) return out;
        for (std::size_t idx : vertex_to_maximal_[s.front()]) {
            const auto& m = maximal_[idx];
            if (!s.is_face_of(m)) continue;
            std::vector<VertexId> rest;
            for (VertexId w : m.vertices())
                if (!s.contains(w)) rest.push_back(w);
            out.insert(s);
            const auto r = rest.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
                std::vector<VertexId> v(s.vertices().begin(), s.vertices().end());
                for (std::size_t i = 0; i < r; ++i)
                    if (mask & (std::uint64_t{1} << i)) v.push_back(rest[i]);
                out.insert(Simplex(std::move(v)));
            }
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.maximal_ == b.maximal_ && a.labels_ == b.labels_;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::size_t, std::optional<std::vector<Simplex>>> faces;
        std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> cofacets;
    };

    template <typename Fn>
    static void for_each_k_subset(const Simplex& m, std::size_t k, Fn&& fn) {
        const std::size_t n = m.size();
        if (k > n) return;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::vector<VertexId> buf(k);
        while (true) {
            for (std::size_t i = 0; i < k; ++i) buf[i] = m[idx[i]];
            fn(Simplex::from_sorted(buf));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) return;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    static SimplicialComplex build(const std::vector<std::vector<VertexId>>& raw, std::vector<Label> labels) {
        std::vector<Simplex> simplices;
        simplices.reserve(raw.size());
        for (const auto& s : raw) simplices.emplace_back(s);
        // Larger simplices first so that domination checks only look backwards.
        std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

        SimplicialComplex X;
        X.labels_ = std::move(labels);
        X.vertex_to_maximal_.assign(X.labels_.size(), {});
        std::vector<Simplex> kept;
        for (auto& s : simplices) {
            bool dominated = false;
            for (std::size_t idx : X.vertex_to_maximal_.at(s.front())) {
                if (s.is_face_of(kept[idx])) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) continue;
            for (VertexId v : s.vertices()) X.vertex_to_maximal_.at(v).push_back(kept.size());
            kept.push_back(std::move(s));
        }
        // Re-index in lexicographic order.
        std::vector<std::size_t> order(kept.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return kept[a] < kept[b]; });
        std::vector<std::size_t> rank(kept.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        for (auto& list : X.vertex_to_maximal_) {
            for (auto& idx : list) idx = rank[idx];
            std::sort(list.begin(), list.end());
        }
        X.maximal_.reserve(kept.size());
        for (std::size_t i : order) X.maximal_.push_back(std::move(kept[i]));
        X.dim_ = -1;
        for (const auto& m : X.maximal_) X.dim_ = std::max(X.dim_, m.dim());
        return X;
    }

    std::vector<Simplex> maximal_;
    std::vector<Label> labels_;
    std::vector<std::vector<std::size_t>> vertex_to_maximal_;
    int dim_ = -1;
    std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Alexandrov-topology operators. Every operator requires A to be a set of
// faces of X; members that are not faces are ignored by star and rejected
// nowhere, so callers validate with `is_subset_of_complex` where it matters.

inline bool is_subset_of_complex(const SimplicialComplex& X, const SimplexSet& A) {
    return std::all_of(A.begin(), A.end(), [&](const Simplex& s) { return X.contains(s); });
}

/// Smallest open set containing A: every face of X containing a member of A.
inline SimplexSet star(const SimplicialComplex& X, const SimplexSet& A) {
    SimplexSet out;
    for (const auto& a : A) out.unite(X.star_of(a));
    return out;
}

/// Smallest closed set (subcomplex) containing A.
inline SimplexSet closure(const SimplicialComplex&, const SimplexSet& A) {
    SimplexSet out;
    for (const auto& a : A) {
        if (out.contains(a)) continue;
        for_each_face(a, [&](Simplex f) { out.insert(std::move(f)); });
    }
    return out;
}

inline SimplexSet complement(const SimplicialComplex& X, const SimplexSet& A) {
    return set_difference(X.all_simplices(), A);
}

/// Largest open set contained in A.
inline SimplexSet interior(const SimplicialComplex& X, const SimplexSet& A) {
    SimplexSet out;
    for (const auto& a : A) {
        const auto st = X.star_of(a);
        if (st.is_subset_of(A)) out.insert(a);
    }
    return out;
}

/// lk A = cl star A \ (star A u cl A).
inline SimplexSet link(const SimplicialComplex& X, const SimplexSet& A) {
    const auto st = star(X, A);
    return set_difference(set_difference(closure(X, st), st), closure(X, A));
}

/// fr A = cl A n cl(X \ A).
///
/// A face of cl A lies in cl(X \ A) iff it is outside A or its star leaves A,
/// so the complement of A is never materialized.
inline SimplexSet frontier(const SimplicialComplex& X, const SimplexSet& A) {
    SimplexSet out;
    for (const auto& f : closure(X, A)) {
        if (!A.contains(f) || !X.star_of(f).is_subset_of(A)) out.insert(f);
    }
    return out;
}

inline bool is_open(const SimplicialComplex& X, const SimplexSet& A) {
    for (const auto& a : A)
        for (const auto& c : X.cofacets(a))
            if (!A.contains(c)) return false;
    return true;
}

inline bool is_closed(const SimplicialComplex&, const SimplexSet& A) {
    for (const auto& a : A) {
        if (a.size() < 2) continue;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!A.contains(a.facet(i))) return false;
    }
    return true;
}

/// Vertices of a set of simplices, ascending.
inline std::vector<VertexId> vertex_set(const SimplexSet& A) {
    std::vector<VertexId> out;
    for (const auto& s : A)
        for (VertexId v : s.vertices()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Number of connected components of A under the face relation restricted to A.
inline std::size_t connected_components(const SimplexSet& A) {
    const auto members = A.sorted();
    std::unordered_map<Simplex, std::size_t, SimplexHash> index;
    for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
    std::vector<std::size_t> parent(members.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = members.size();
    // Two members are related when one is a face of the other; chains through
    // intermediate dimensions are covered once every proper face is checked.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for_each_face(members[i], [&](const Simplex& f) {
            auto it = index.find(f);
            if (it == index.end()) return;
            auto a = find(i), b = find(it->second);
            if (a != b) {
                parent[a] = b;
                --count;
            }
        });
    }
    return count;
}

}  // namespace lochom
