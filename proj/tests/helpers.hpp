#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "mfp/codec.hpp"
#include "mfp/geometry.hpp"
#include "mfp/staircase.hpp"

// Shared fixtures and independent oracles for the test suites. Everything in
// here recomputes results from first principles (cell coverage, pairwise
// segment scans) so it can cross-check the library's faster paths.
namespace th {

using namespace mfp;

inline FloorplanDrawing make(std::vector<Block> blocks, Coord w, Coord h) {
    return FloorplanDrawing::validate(std::move(blocks), w, h);
}

inline FloorplanDrawing unit_drawing() { return make({{0, 0, 1, 1}}, 1, 1); }

// two blocks side by side
inline FloorplanDrawing vsplit() { return make({{0, 0, 1, 1}, {1, 0, 2, 1}}, 2, 1); }

// two blocks stacked
inline FloorplanDrawing hsplit() { return make({{0, 0, 1, 1}, {0, 1, 1, 2}}, 1, 2); }

// five blocks, rotational layout, already in standard form
inline FloorplanDrawing pinwheel() {
    return make({{0, 0, 2, 1}, {2, 0, 3, 2}, {0, 1, 1, 3}, {1, 2, 3, 3}, {1, 1, 2, 2}}, 3, 3);
}

// Smallest drawing violating standard form: the interior horizontal at y=1 is
// touched from below at x=3 and from above at x=1.
inline FloorplanDrawing nonstandard4() {
    return make({{0, 0, 3, 1}, {3, 0, 4, 1}, {0, 1, 1, 2}, {1, 1, 4, 2}}, 4, 2);
}

// bottom slab with two blocks on top (types (1,1) then (0,0) when encoding)
inline FloorplanDrawing slab_two() {
    return make({{0, 0, 2, 1}, {0, 1, 1, 2}, {1, 1, 2, 2}}, 2, 2);
}

// Unit-cell brute force: every cell of [0,W]x[0,H] covered exactly once.
inline bool covers_exactly_once(const std::vector<Block>& blocks, Coord w, Coord h) {
    for (Coord x = 0; x < w; ++x)
        for (Coord y = 0; y < h; ++y) {
            int cnt = 0;
            for (const Block& b : blocks)
                if (b.x1 <= x && x < b.x2 && b.y1 <= y && y < b.y2) ++cnt;
            if (cnt != 1) return false;
        }
    return true;
}

// Maximal segments of a block set, recomputed directly (merge collinear
// touching edges). Horizontal and vertical segments together.
inline std::vector<Segment> all_segments(const std::vector<Block>& blocks) {
    std::vector<Segment> edges;
    for (const Block& b : blocks) {
        edges.push_back({Segment::Axis::Vertical, b.x1, b.y1, b.y2, false});
        edges.push_back({Segment::Axis::Vertical, b.x2, b.y1, b.y2, false});
        edges.push_back({Segment::Axis::Horizontal, b.y1, b.x1, b.x2, false});
        edges.push_back({Segment::Axis::Horizontal, b.y2, b.x1, b.x2, false});
    }
    std::sort(edges.begin(), edges.end(), [](const Segment& a, const Segment& b) {
        if (a.axis != b.axis) return a.axis < b.axis;
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.lo < b.lo;
    });
    std::vector<Segment> out;
    for (const Segment& e : edges) {
        if (!out.empty() && out.back().axis == e.axis && out.back().pos == e.pos &&
            out.back().hi >= e.lo)
            out.back().hi = std::max(out.back().hi, e.hi);
        else
            out.push_back(e);
    }
    return out;
}

// Independent standard-form check: evaluate the side-set conditions by a
// direct scan over all segment pairs.
inline bool brute_standard_form(const FloorplanDrawing& f) {
    std::vector<Segment> segs = all_segments(f.blocks());
    std::vector<Segment> hs, vs;
    for (const Segment& s : segs)
        (s.axis == Segment::Axis::Horizontal ? hs : vs).push_back(s);

    for (const Segment& h : hs) {
        if (h.pos == 0 || h.pos == f.height()) continue;
        Coord max_below = -1, min_above = -1;
        for (const Segment& v : vs) {
            if (v.pos < h.lo || v.pos > h.hi) continue;
            if (v.hi == h.pos)  // ends on h from below
                max_below = std::max(max_below, v.pos);
            if (v.lo == h.pos) {  // starts on h going up
                if (min_above == -1 || v.pos < min_above) min_above = v.pos;
            }
        }
        if (max_below != -1 && min_above != -1 && max_below >= min_above) return false;
    }
    for (const Segment& v : vs) {
        if (v.pos == 0 || v.pos == f.width()) continue;
        Coord max_left = -1, min_right = -1;
        for (const Segment& h : hs) {
            if (h.pos < v.lo || h.pos > v.hi) continue;
            if (h.hi == v.pos) max_left = std::max(max_left, h.pos);
            if (h.lo == v.pos) {
                if (min_right == -1 || h.pos < min_right) min_right = h.pos;
            }
        }
        if (max_left != -1 && min_right != -1 && max_left >= min_right) return false;
    }
    return true;
}

// Constraint-graph equality under the canonical segment labeling induced by
// normalize (segments in (coordinate, span start) order). Complete and sound
// for mosaic equivalence; used as the oracle against code equality.
inline bool graphs_equal_canonical(const FloorplanDrawing& a, const FloorplanDrawing& b) {
    FloorplanDrawing na = normalize(a), nb = normalize(b);
    ConstraintGraphs ga = constraint_graphs(na), gb = constraint_graphs(nb);
    if (ga.gh_vertices != gb.gh_vertices || ga.gv_vertices != gb.gv_vertices) return false;
    if (ga.west != gb.west || ga.east != gb.east || ga.south != gb.south || ga.north != gb.north)
        return false;
    auto edge_multiset = [](const std::vector<ConstraintGraphs::Edge>& edges) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(edges.size());
        for (const auto& e : edges) out.emplace_back(e.from, e.to);
        std::sort(out.begin(), out.end());
        return out;
    };
    return edge_multiset(ga.gh) == edge_multiset(gb.gh) &&
           edge_multiset(ga.gv) == edge_multiset(gb.gv);
}

// Graph preservation under the block-induced segment correspondence: block i
// of `before` and block i of `after` must bound the same segments up to a
// consistent bijective relabeling that fixes the four boundary vertices.
inline bool graphs_preserved(const FloorplanDrawing& before, const FloorplanDrawing& after) {
    if (before.size() != after.size()) return false;
    ConstraintGraphs gb = constraint_graphs(before), ga = constraint_graphs(after);
    auto consistent = [](std::size_t nb, std::size_t na,
                         const std::vector<ConstraintGraphs::Edge>& eb,
                         const std::vector<ConstraintGraphs::Edge>& ea,
                         std::size_t src_b, std::size_t src_a, std::size_t snk_b,
                         std::size_t snk_a) {
        if (nb != na) return false;
        std::map<std::size_t, std::size_t> fwd, rev;
        auto bind = [&](std::size_t x, std::size_t y) {
            auto f = fwd.find(x);
            if (f != fwd.end()) return f->second == y;
            auto r = rev.find(y);
            if (r != rev.end()) return false;
            fwd[x] = y;
            rev[y] = x;
            return true;
        };
        if (!bind(src_b, src_a) || !bind(snk_b, snk_a)) return false;
        for (std::size_t i = 0; i < eb.size(); ++i)
            if (!bind(eb[i].from, ea[i].from) || !bind(eb[i].to, ea[i].to)) return false;
        return true;
    };
    return consistent(gb.gh_vertices, ga.gh_vertices, gb.gh, ga.gh, gb.west, ga.west, gb.east,
                      ga.east) &&
           consistent(gb.gv_vertices, ga.gv_vertices, gb.gv, ga.gv, gb.south, ga.south, gb.north,
                      ga.north);
}

// Stretch one coordinate slice of a drawing; a pure sliding move, so the
// result is equivalent but not coordinate-identical. The cut is clamped into
// [1, extent] so the move is always well defined.
inline FloorplanDrawing stretch_x(const FloorplanDrawing& f, Coord at, Coord by) {
    at = std::max<Coord>(1, std::min(at, f.width()));
    std::vector<Block> blocks;
    for (Block b : f.blocks()) {
        if (b.x1 >= at) b.x1 += by;
        if (b.x2 >= at) b.x2 += by;
        blocks.push_back(b);
    }
    return FloorplanDrawing::validate(std::move(blocks), f.width() + by, f.height());
}

inline FloorplanDrawing stretch_y(const FloorplanDrawing& f, Coord at, Coord by) {
    at = std::max<Coord>(1, std::min(at, f.height()));
    std::vector<Block> blocks;
    for (Block b : f.blocks()) {
        if (b.y1 >= at) b.y1 += by;
        if (b.y2 >= at) b.y2 += by;
        blocks.push_back(b);
    }
    return FloorplanDrawing::validate(std::move(blocks), f.width(), f.height() + by);
}

} // namespace th
