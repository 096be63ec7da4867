#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "composition.hpp"

namespace fncalc {

/// Planar level tree of a depth-ordering. Every vertex sits at an integer
/// height; the root is at height 0 and all leaves at the top height. Two leaves
/// share the vertex at height h exactly when every entry between them is >= h.
class LevelTree {
public:
    struct Vertex {
        int height = 0;
        int parent = -1;            // -1 for the root
        std::vector<int> children;  // left to right
        int leaf = -1;              // leaf position (0-based) for top vertices
    };

    LevelTree() = default;

    /// Tree of a labeled cell in ambient dimension m. For m = infinity the
    /// canonical truncation puts the leaves at height max(entries) + 1.
    static LevelTree of(const DepthOrdering& g, AmbientDim m = kInfinity) {
        const auto& a = g.shape().entries();
        const int top = m.is_infinite() ? g.shape().max_entry() + 1 : m.value();
        if (!g.shape().fits(m)) throw std::invalid_argument("cell does not fit the ambient dimension");
        LevelTree t;
        t.m_ = m;
        t.labels_ = g.labels();
        const int n = g.n();
        const int hmax = std::max(top, 0);
        // groups[h] holds the vertex index of every leaf at height h
        std::vector<int> prev;
        for (int h = 0; h <= hmax; ++h) {
            std::vector<int> cur(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                bool joins = i > 0 && a[static_cast<std::size_t>(i - 1)] >= h;
                if (joins) {
                    cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
                    continue;
                }
                Vertex v;
                v.height = h;
                v.parent = h == 0 ? -1 : prev[static_cast<std::size_t>(i)];
                int id = static_cast<int>(t.vertices_.size());
                t.vertices_.push_back(v);
                if (v.parent >= 0) t.vertices_[static_cast<std::size_t>(v.parent)].children.push_back(id);
                cur[static_cast<std::size_t>(i)] = id;
            }
            prev = std::move(cur);
        }
        for (int i = 0; i < n; ++i) {
            t.vertices_[static_cast<std::size_t>(prev[static_cast<std::size_t>(i)])].leaf = i;
            t.leaves_.push_back(prev[static_cast<std::size_t>(i)]);
        }
        return t;
    }
    static LevelTree of(const Composition& a, AmbientDim m = kInfinity) { return of(DepthOrdering::identity(a), m); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<int>& leaves() const { return leaves_; }
    const std::vector<int>& labels() const { return labels_; }
    AmbientDim ambient() const { return m_; }
    int root() const { return 0; }

    /// Height of the meet of two leaves (positions).
    int meet_height(int i, int j) const {
        int u = leaves_[static_cast<std::size_t>(i)], v = leaves_[static_cast<std::size_t>(j)];
        while (u != v) {
            u = vertices_[static_cast<std::size_t>(u)].parent;
            v = vertices_[static_cast<std::size_t>(v)].parent;
        }
        return vertices_[static_cast<std::size_t>(u)].height;
    }

    /// Recover the depth-ordering; inverse of `of`.
    DepthOrdering cell() const {
        std::vector<int> a;
        for (std::size_t i = 0; i + 1 < leaves_.size(); ++i) a.push_back(meet_height(static_cast<int>(i), static_cast<int>(i) + 1));
        return DepthOrdering(labels_, a);
    }

private:
    AmbientDim m_;
    std::vector<Vertex> vertices_;
    std::vector<int> leaves_;
    std::vector<int> labels_;
};

}  // namespace fncalc
