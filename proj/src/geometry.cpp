#include "mfp/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace mfp {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotATiling: return "NotATiling";
        case Errc::FourCornerMeeting: return "FourCornerMeeting";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::NotStandardForm: return "NotStandardForm";
        case Errc::NoDeletable: return "NoDeletable";
        case Errc::MultipleDeletable: return "MultipleDeletable";
        case Errc::LastBlock: return "LastBlock";
        case Errc::InvalidAttachment: return "InvalidAttachment";
        case Errc::InvariantBreach: return "InvariantBreach";
        case Errc::InvalidCode: return "InvalidCode";
        case Errc::BadLength: return "BadLength";
        case Errc::BadMagic: return "BadMagic";
        case Errc::TruncatedPayload: return "TruncatedPayload";
        case Errc::TrailingGarbage: return "TrailingGarbage";
        case Errc::NotBaxter: return "NotBaxter";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

namespace detail {

// Pairwise interior disjointness by a left-to-right sweep: the active
// y-intervals must stay pairwise disjoint.
void check_disjoint(const std::vector<Block>& blocks) {
    struct Event {
        Coord x;
        bool insert;
        Coord y1, y2;
    };
    std::vector<Event> events;
    events.reserve(blocks.size() * 2);
    for (const Block& b : blocks) {
        events.push_back({b.x1, true, b.y1, b.y2});
        events.push_back({b.x2, false, b.y1, b.y2});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.insert < b.insert;  // removals first
    });

    std::map<Coord, Coord> active;  // y1 -> y2
    for (const Event& e : events) {
        if (!e.insert) {
            auto it = active.find(e.y1);
            if (it != active.end() && it->second == e.y2) active.erase(it);
            continue;
        }
        auto next = active.lower_bound(e.y1);
        if (next != active.end() && next->first < e.y2)
            throw Error(Errc::NotATiling, "overlapping blocks");
        if (next != active.begin() && std::prev(next)->second > e.y1)
            throw Error(Errc::NotATiling, "overlapping blocks");
        if (next != active.end() && next->first == e.y1)
            throw Error(Errc::NotATiling, "overlapping blocks");
        active.emplace(e.y1, e.y2);
    }
}

} // namespace detail

FloorplanDrawing FloorplanDrawing::validate(std::vector<Block> blocks, Coord width, Coord height) {
    if (blocks.empty()) throw Error(Errc::EmptyInput, "no blocks");
    if (width <= 0 || height <= 0) throw Error(Errc::NotATiling, "non-positive bounding box");

    unsigned __int128 area = 0;
    for (const Block& b : blocks) {
        if (b.degenerate()) throw Error(Errc::NotATiling, "degenerate block");
        if (b.x1 < 0 || b.y1 < 0 || b.x2 > width || b.y2 > height)
            throw Error(Errc::NotATiling, "block outside bounding box");
        area += (unsigned __int128)(b.width()) * (unsigned __int128)(b.height());
    }

    detail::check_disjoint(blocks);

    // With disjoint interiors, four corners at one point means a crossing.
    std::unordered_map<std::pair<Coord, Coord>, int, PointHash> corner_count;
    corner_count.reserve(blocks.size() * 4);
    for (const Block& b : blocks) {
        ++corner_count[{b.x1, b.y1}];
        ++corner_count[{b.x1, b.y2}];
        ++corner_count[{b.x2, b.y1}];
        ++corner_count[{b.x2, b.y2}];
    }
    for (const auto& [pt, cnt] : corner_count) {
        (void)pt;
        if (cnt >= 4) throw Error(Errc::FourCornerMeeting, "four blocks meet at a point");
    }

    if (area != (unsigned __int128)(width) * (unsigned __int128)(height))
        throw Error(Errc::NotATiling, "blocks do not cover the bounding box");

    return FloorplanDrawing(std::move(blocks), width, height);
}

bool operator==(const FloorplanDrawing& a, const FloorplanDrawing& b) {
    if (a.width_ != b.width_ || a.height_ != b.height_) return false;
    std::vector<Block> sa = a.blocks_, sb = b.blocks_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

namespace {

// Merge collinear touching/overlapping edges into maximal segments.
// In a valid drawing same-line segments can only touch at a crossing, which
// the four-corner check already rejects, so merging by touch is exact.
std::vector<Segment> merge_segments(std::vector<Segment> edges) {
    std::sort(edges.begin(), edges.end(), [](const Segment& a, const Segment& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.lo < b.lo;
    });
    std::vector<Segment> out;
    for (const Segment& e : edges) {
        if (!out.empty() && out.back().pos == e.pos && out.back().hi >= e.lo) {
            out.back().hi = std::max(out.back().hi, e.hi);
        } else {
            out.push_back(e);
        }
    }
    return out;
}

std::size_t find_segment(const std::vector<Segment>& segs, Coord pos, Coord lo, Coord hi) {
    Segment key{segs.front().axis, pos, lo, hi, false};
    auto it = std::upper_bound(segs.begin(), segs.end(), key,
                               [](const Segment& a, const Segment& b) {
                                   if (a.pos != b.pos) return a.pos < b.pos;
                                   return a.lo < b.lo;
                               });
    // the containing segment is the last one with (pos, lo) <= (pos, lo)
    if (it == segs.begin()) throw std::logic_error("segment lookup failed");
    --it;
    if (it->pos != pos || it->lo > lo || it->hi < hi)
        throw std::logic_error("segment lookup failed");
    return std::size_t(it - segs.begin());
}

} // namespace

SegmentModel extract_segments(const FloorplanDrawing& f) {
    SegmentModel m;

    std::vector<Segment> vedges, hedges;
    vedges.reserve(f.size() * 2);
    hedges.reserve(f.size() * 2);
    for (const Block& b : f.blocks()) {
        vedges.push_back({Segment::Axis::Vertical, b.x1, b.y1, b.y2, false});
        vedges.push_back({Segment::Axis::Vertical, b.x2, b.y1, b.y2, false});
        hedges.push_back({Segment::Axis::Horizontal, b.y1, b.x1, b.x2, false});
        hedges.push_back({Segment::Axis::Horizontal, b.y2, b.x1, b.x2, false});
    }
    m.vertical = merge_segments(std::move(vedges));
    m.horizontal = merge_segments(std::move(hedges));
    for (Segment& s : m.vertical) s.boundary = (s.pos == 0 || s.pos == f.width());
    for (Segment& s : m.horizontal) s.boundary = (s.pos == 0 || s.pos == f.height());

    m.west = find_segment(m.vertical, 0, 0, f.height());
    m.east = find_segment(m.vertical, f.width(), 0, f.height());
    m.south = find_segment(m.horizontal, 0, 0, f.width());
    m.north = find_segment(m.horizontal, f.height(), 0, f.width());

    m.block_sides.reserve(f.size());
    for (const Block& b : f.blocks()) {
        SegmentModel::BlockSides s;
        s.left = find_segment(m.vertical, b.x1, b.y1, b.y2);
        s.right = find_segment(m.vertical, b.x2, b.y1, b.y2);
        s.bottom = find_segment(m.horizontal, b.y1, b.x1, b.x2);
        s.top = find_segment(m.horizontal, b.y2, b.x1, b.x2);
        m.block_sides.push_back(s);
    }

    // Every segment endpoint lies on exactly one transversal segment; invert
    // those contacts into the side sets.
    m.above.assign(m.horizontal.size(), {});
    m.below.assign(m.horizontal.size(), {});
    m.left.assign(m.vertical.size(), {});
    m.right.assign(m.vertical.size(), {});
    for (std::size_t vi = 0; vi < m.vertical.size(); ++vi) {
        const Segment& v = m.vertical[vi];
        m.above[find_segment(m.horizontal, v.lo, v.pos, v.pos)].push_back(vi);
        m.below[find_segment(m.horizontal, v.hi, v.pos, v.pos)].push_back(vi);
    }
    for (std::size_t hi = 0; hi < m.horizontal.size(); ++hi) {
        const Segment& h = m.horizontal[hi];
        m.right[find_segment(m.vertical, h.lo, h.pos, h.pos)].push_back(hi);
        m.left[find_segment(m.vertical, h.hi, h.pos, h.pos)].push_back(hi);
    }
    // vertical lists are built in x order and horizontal lists in y order
    // already, since segments are sorted by (pos, lo)

    return m;
}

ConstraintGraphs constraint_graphs(const FloorplanDrawing& f) {
    SegmentModel m = extract_segments(f);
    ConstraintGraphs g;
    g.gh_vertices = m.vertical.size();
    g.gv_vertices = m.horizontal.size();
    g.west = m.west;
    g.east = m.east;
    g.south = m.south;
    g.north = m.north;
    g.gh.reserve(f.size());
    g.gv.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        g.gh.push_back({m.block_sides[i].left, m.block_sides[i].right, i});
        g.gv.push_back({m.block_sides[i].bottom, m.block_sides[i].top, i});
    }
    return g;
}

bool is_standard_form(const FloorplanDrawing& f) {
    SegmentModel m = extract_segments(f);
    for (std::size_t hi = 0; hi < m.horizontal.size(); ++hi) {
        if (m.horizontal[hi].boundary) continue;
        if (m.below[hi].empty() || m.above[hi].empty()) continue;
        Coord max_below = m.vertical[m.below[hi].back()].pos;
        Coord min_above = m.vertical[m.above[hi].front()].pos;
        if (max_below >= min_above) return false;
    }
    for (std::size_t vi = 0; vi < m.vertical.size(); ++vi) {
        if (m.vertical[vi].boundary) continue;
        if (m.left[vi].empty() || m.right[vi].empty()) continue;
        Coord max_left = m.horizontal[m.left[vi].back()].pos;
        Coord min_right = m.horizontal[m.right[vi].front()].pos;
        if (max_left >= min_right) return false;
    }
    return true;
}

namespace {

// Longest-path layers from the source of a DAG given by adjacency lists.
// Throws CycleDetected if not acyclic.
std::vector<Coord> longest_path_layers(std::size_t n,
                                       const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<int> indeg(n, 0);
    for (const auto& out : adj)
        for (std::size_t t : out) ++indeg[t];
    std::vector<Coord> dist(n, 0);
    std::vector<std::size_t> queue;
    queue.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    std::size_t processed = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t u = queue[qi];
        ++processed;
        for (std::size_t t : adj[u]) {
            dist[t] = std::max(dist[t], dist[u] + 1);
            if (--indeg[t] == 0) queue.push_back(t);
        }
    }
    if (processed != n) throw Error(Errc::CycleDetected, "precedence relation has a cycle");
    return dist;
}

} // namespace

FloorplanDrawing normalize(const FloorplanDrawing& f) {
    SegmentModel m = extract_segments(f);

    // Block edges, plus one ordering edge per segment forcing its below feet
    // left of its above feet (left feet under right feet for verticals). The
    // feet on one side are already chained by the blocks between them, so a
    // single max->min edge pins the whole order.
    std::vector<std::vector<std::size_t>> gh(m.vertical.size()), gv(m.horizontal.size());
    for (const auto& s : m.block_sides) {
        gh[s.left].push_back(s.right);
        gv[s.bottom].push_back(s.top);
    }
    for (std::size_t hi = 0; hi < m.horizontal.size(); ++hi) {
        if (!m.below[hi].empty() && !m.above[hi].empty())
            gh[m.below[hi].back()].push_back(m.above[hi].front());
    }
    for (std::size_t vi = 0; vi < m.vertical.size(); ++vi) {
        if (!m.left[vi].empty() && !m.right[vi].empty())
            gv[m.left[vi].back()].push_back(m.right[vi].front());
    }

    std::vector<Coord> x = longest_path_layers(m.vertical.size(), gh);
    std::vector<Coord> y = longest_path_layers(m.horizontal.size(), gv);

    std::vector<Block> blocks;
    blocks.reserve(f.size());
    for (const auto& s : m.block_sides)
        blocks.push_back({x[s.left], y[s.bottom], x[s.right], y[s.top]});

    FloorplanDrawing out = FloorplanDrawing::validate(std::move(blocks), x[m.east], y[m.north]);
    if (!is_standard_form(out))
        throw std::logic_error("normalize: result not in standard form");
    return out;
}

namespace {

FloorplanDrawing map_blocks(const FloorplanDrawing& f, bool flip_x, bool flip_y) {
    std::vector<Block> blocks;
    blocks.reserve(f.size());
    for (const Block& b : f.blocks()) {
        Block n = b;
        if (flip_x) {
            n.x1 = f.width() - b.x2;
            n.x2 = f.width() - b.x1;
        }
        if (flip_y) {
            n.y1 = f.height() - b.y2;
            n.y2 = f.height() - b.y1;
        }
        blocks.push_back(n);
    }
    return FloorplanDrawing::validate(std::move(blocks), f.width(), f.height());
}

} // namespace

FloorplanDrawing mirror_h(const FloorplanDrawing& f) { return map_blocks(f, true, false); }
FloorplanDrawing mirror_v(const FloorplanDrawing& f) { return map_blocks(f, false, true); }
FloorplanDrawing rotate180(const FloorplanDrawing& f) { return map_blocks(f, true, true); }

} // namespace mfp
