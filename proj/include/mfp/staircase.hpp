#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mfp/geometry.hpp"
#include "mfp/types.hpp"

namespace mfp {

// Horizontal border piece of a staircase, excluding the x-axis.
// Steps are counted 1-based from the bottom-right piece; heights strictly
// increase going left.
struct Step {
    Coord x_lo, x_hi;
    Coord y;
    std::size_t index;  // 1 = bottom-right

    friend bool operator==(const Step&, const Step&) = default;
};

// Classification of a deletable rectangle r whose top edge lies on step k:
//   t2 = 0  iff the top edge of r is the entire step,
//   t1 = 0  iff the right edge of r descends to the level of step k-1
//            (the x-axis when k = 1); t1 = 1 marks the ⊣ junction at r's
//            bottom-right corner.
// Removing r changes the step count by t1 + t2 - 1.
struct RectType {
    bool t1 = false;
    bool t2 = false;

    int removal_step_delta() const { return int(t1) + int(t2) - 1; }

    friend bool operator==(const RectType&, const RectType&) = default;
};

// Blocks tiling the region under a non-increasing height profile anchored on
// the x- and y-axes. Value type: removal and attachment return new values.
class Staircase {
public:
    // A drawing is a one-step staircase. Requires standard form
    // (NotStandardForm otherwise).
    static Staircase from_drawing(const FloorplanDrawing& f);

    // Validating constructor for an arbitrary block set.
    static Staircase from_blocks(std::vector<Block> blocks);

    // The unit square seed used by decoding.
    static Staircase unit();

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    Coord width() const { return width_; }
    Coord height() const { return profile_.empty() ? 0 : profile_.begin()->second; }

    std::vector<Step> steps() const;
    std::size_t step_count() const { return profile_.size(); }

    // The unique block whose top and right edges both lie on the border.
    // Scans every border corner; throws NoDeletable / MultipleDeletable if
    // the count is not exactly one.
    std::size_t find_deletable_index() const;
    Block find_deletable() const { return blocks_[find_deletable_index()]; }

    // Type of a deletable rectangle. Cross-checks the observed step-count
    // change against the classification (InvariantBreach on disagreement).
    RectType classify(std::size_t idx) const;
    RectType classify(const Block& r) const { return classify(index_of(r)); }

    Staircase remove_deletable(std::size_t idx) const;
    Staircase remove_deletable(const Block& r) const { return remove_deletable(index_of(r)); }

    // Adds a block of the requested type adjacent to blocks_[prev] (sharing a
    // horizontal edge when share_horizontal, a vertical edge otherwise), so
    // that the new block is the unique deletable rectangle of the result and
    // removing it restores *this. Placement may renumber coordinates by
    // monotone shifts; the relative structure of existing blocks is kept.
    // Throws InvalidAttachment when no placement exists.
    std::pair<Staircase, std::size_t> attach_block(RectType t, bool share_horizontal,
                                                   std::size_t prev) const;
    std::pair<Staircase, Block> attach_block(RectType t, bool share_horizontal,
                                             const Block& prev) const;

    // In-place cores used by the codec loops.
    void remove_deletable_inplace(std::size_t idx);
    std::size_t attach_block_inplace(RectType t, bool share_horizontal, std::size_t prev);

    // Blocks with each axis relabeled by coordinate rank; identifies
    // staircases that differ only by monotone re-coordinatization.
    std::vector<Block> canonical_blocks() const;

    std::size_t index_of(const Block& r) const;

private:
    Staircase() = default;
    void rebuild_profile_and_corners();
    void shift_x(Coord cut);  // +1 to every x >= cut
    void shift_y(Coord cut);
    bool deletable_at(std::size_t idx) const;

    std::vector<Block> blocks_;
    // height profile: piece start x -> height; pieces maximal, heights
    // strictly decreasing left to right. width_ closes the last piece.
    std::map<Coord, Coord> profile_;
    Coord width_ = 0;
    // top-right corner -> block index, for the deletable scan
    std::unordered_map<std::pair<Coord, Coord>, std::size_t, PointHash> corners_;
};

// Free-function spellings.
inline Staircase as_staircase(const FloorplanDrawing& f) { return Staircase::from_drawing(f); }
inline std::vector<Step> steps(const Staircase& s) { return s.steps(); }
inline Block find_deletable(const Staircase& s) { return s.find_deletable(); }
inline RectType classify(const Staircase& s, const Block& r) { return s.classify(r); }
inline Staircase remove_deletable(const Staircase& s, const Block& r) {
    return s.remove_deletable(r);
}
inline std::pair<Staircase, Block> attach_block(const Staircase& s, RectType t,
                                                bool share_horizontal, const Block& prev) {
    return s.attach_block(t, share_horizontal, prev);
}

// Shared-edge orientation of two adjacent blocks: true for a horizontal edge,
// false for a vertical one, nothing if they do not share an edge of positive
// length.
std::optional<bool> shared_edge_horizontal(const Block& a, const Block& b);

} // namespace mfp
