#pragma once

#include <cstddef>
#include <vector>

#include "mfp/types.hpp"

namespace mfp {

// A rectangle dissection: blocks with pairwise disjoint interiors whose union
// is exactly [0,W] x [0,H], and no point where four blocks meet.
//
// The block order is stable: every operation that returns a derived drawing
// (normalize, mirrors) keeps block i of the output corresponding to block i
// of the input.
class FloorplanDrawing {
public:
    // Validates the tiling and junction conditions.
    // Throws Error with EmptyInput, NotATiling or FourCornerMeeting.
    static FloorplanDrawing validate(std::vector<Block> blocks, Coord width, Coord height);

    Coord width() const { return width_; }
    Coord height() const { return height_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }

    // Coordinate-exact comparison, block order ignored.
    friend bool operator==(const FloorplanDrawing& a, const FloorplanDrawing& b);

private:
    FloorplanDrawing(std::vector<Block> blocks, Coord width, Coord height)
        : blocks_(std::move(blocks)), width_(width), height_(height) {}

    std::vector<Block> blocks_;
    Coord width_ = 0;
    Coord height_ = 0;
};

// Maximal axis-parallel segment of a drawing. No two distinct segments of the
// same orientation are collinear and touching.
struct Segment {
    enum class Axis { Horizontal, Vertical };
    Axis axis;
    Coord pos;  // y for horizontal, x for vertical
    Coord lo;   // span start (x for horizontal, y for vertical)
    Coord hi;   // span end
    bool boundary;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Segments of a drawing plus the incidence data derived from them.
//
// Side sets follow T-junction contact: a transversal segment belongs to a
// side set iff one of its endpoints lies on the host segment and its body is
// entirely on that side. A transversal crossing the host belongs to neither.
struct SegmentModel {
    std::vector<Segment> vertical;    // sorted by (pos, lo)
    std::vector<Segment> horizontal;  // sorted by (pos, lo)

    std::size_t west, east;    // indices into `vertical` (x = 0 and x = W)
    std::size_t south, north;  // indices into `horizontal` (y = 0 and y = H)

    struct BlockSides {
        std::size_t left, right;  // vertical segment indices
        std::size_t bottom, top;  // horizontal segment indices
    };
    std::vector<BlockSides> block_sides;  // one entry per block

    // per horizontal segment: touching verticals, sorted by x
    std::vector<std::vector<std::size_t>> above, below;
    // per vertical segment: touching horizontals, sorted by y
    std::vector<std::vector<std::size_t>> left, right;
};

SegmentModel extract_segments(const FloorplanDrawing& f);

// G_H: one vertex per vertical segment, one edge per block from its left
// bounding segment to its right bounding segment. W is the unique source and
// E the unique sink. G_V is the analogue on horizontal segments (S -> N).
struct ConstraintGraphs {
    struct Edge {
        std::size_t from, to;
        std::size_t block;
    };
    std::size_t gh_vertices, gv_vertices;
    std::size_t west, east, south, north;
    std::vector<Edge> gh, gv;  // one edge per block, in block order
};

ConstraintGraphs constraint_graphs(const FloorplanDrawing& f);

// True iff on every interior horizontal the below-side feet all lie strictly
// left of the above-side feet, and on every interior vertical the left-side
// feet all lie strictly under the right-side feet.
bool is_standard_form(const FloorplanDrawing& f);

// Canonical coordinates: every vertical segment gets the longest-path layer
// index from W in G_H augmented with one edge per horizontal segment forcing
// its below feet left of its above feet; symmetrically for y. The result is
// in standard form, has the same constraint graphs, and is a fixed point of
// this function. Throws CycleDetected if the augmented relation has a cycle.
FloorplanDrawing normalize(const FloorplanDrawing& f);

FloorplanDrawing mirror_h(const FloorplanDrawing& f);   // x -> W - x
FloorplanDrawing mirror_v(const FloorplanDrawing& f);   // y -> H - y
FloorplanDrawing rotate180(const FloorplanDrawing& f);  // both

// Mosaic equivalence, decided by canonical-code equality (see codec.hpp for
// the code itself; defined in codec.cpp).
bool equivalent(const FloorplanDrawing& a, const FloorplanDrawing& b);

namespace detail {
// Throws NotATiling if any two blocks have overlapping interiors.
void check_disjoint(const std::vector<Block>& blocks);
} // namespace detail

} // namespace mfp
