#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fortress/forts.hpp"
#include "fortress/tree_structure.hpp"

namespace fortress {

/// How a classification result was obtained.
enum class ClassifyMethod {
    bruteforce,     ///< exhaustive enumeration only (non-tree within guard)
    tree_fastpath,  ///< structural tree rule only (tree above guard)
    both_agree,     ///< tree rule cross-checked against enumeration
};

/// Short stable name for a classification method.
inline const char* classify_method_name(ClassifyMethod m) {
    switch (m) {
        case ClassifyMethod::bruteforce: return "bruteforce";
        case ClassifyMethod::tree_fastpath: return "tree_fastpath";
        case ClassifyMethod::both_agree: return "both_agree";
    }
    return "unknown";
}

/// Outcome of classifying a graph as well-failed / well-forced.
struct Classification {
    bool well_failed = false;
    bool well_forced = false;
    ClassifyMethod method = ClassifyMethod::bruteforce;
    /// Two minimal forts of different sizes when not well-failed (lex-first
    /// of the smallest and of the largest size); empty otherwise.
    std::vector<VertexSet> fort_witnesses;
    /// Two minimal zero forcing sets of different sizes when not well-forced;
    /// empty otherwise.
    std::vector<VertexSet> zfs_witnesses;
};

/// True when all minimal forts of a tree share one size, decided by shape alone.
inline bool is_well_failed_tree_fastpath(const Graph& t) {
    TreeShape shape = tree_shape(t);
    if (shape.tag == ShapeTag::path) {
        int n = shape.order;
        return n <= 4 || n == 6;
    }
    if (shape.tag == ShapeTag::star222) return true;
    return is_leafy(t);
}

/// True when all minimal zero forcing sets of a tree share one size.
inline bool is_well_forced_tree_fastpath(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("is_well_forced_tree_fastpath: not a tree");
    if (t.order() == 1) return true;
    VertexSet residual = star_centers(t).final_residual;
    bool ok = true;
    residual.for_each([&](int v) {
        int inside = 0;
        for (int u : t.neighbors(v))
            if (residual.contains(u)) ++inside;
        if (inside != 1) ok = false;
    });
    return ok;
}

namespace detail {

/// Checks size-uniformity of a set family sorted by canonical_less; when it
/// fails, emits the first set of the smallest and of the largest size.
inline bool uniform_sizes(const std::vector<VertexSet>& family, std::vector<VertexSet>& witnesses) {
    if (family.empty()) return true;
    int lo = family.front().size();
    int hi = family.back().size();
    if (lo == hi) return true;
    witnesses.push_back(family.front());
    for (const VertexSet& s : family) {
        if (s.size() == hi) {
            witnesses.push_back(s);
            break;
        }
    }
    return false;
}

}  // namespace detail

/// Classifies a graph as well-failed and well-forced.  Trees within the guard
/// are decided by both the structural rule and enumeration (which must agree);
/// larger trees use the rule alone; anything else beyond the guard throws
/// GuardExceeded.
inline Classification is_well_failed(const Graph& g, int guard = kDefaultExactGuard) {
    bool tree = is_tree(g);
    bool within = g.order() <= detail::effective_guard(guard);
    if (!tree && !within) throw GuardExceeded(g.order(), detail::effective_guard(guard));

    Classification c;
    if (within) {
        c.well_failed = detail::uniform_sizes(minimal_fort_family(g, guard), c.fort_witnesses);
        c.well_forced = detail::uniform_sizes(minimal_zero_forcing_sets(g, guard), c.zfs_witnesses);
        c.method = ClassifyMethod::bruteforce;
    }
    if (tree) {
        bool fast_failed = is_well_failed_tree_fastpath(g);
        bool fast_forced = is_well_forced_tree_fastpath(g);
        if (within) {
            if (fast_failed != c.well_failed || fast_forced != c.well_forced)
                throw std::logic_error("is_well_failed: tree rule disagrees with enumeration");
            c.method = ClassifyMethod::both_agree;
        } else {
            c.well_failed = fast_failed;
            c.well_forced = fast_forced;
            c.method = ClassifyMethod::tree_fastpath;
        }
    }
    return c;
}

/// True when all minimal zero forcing sets of the graph share one size.
inline bool is_well_forced(const Graph& g, int guard = kDefaultExactGuard) {
    return is_well_failed(g, guard).well_forced;
}

}  // namespace fortress
