#include "mfp/staircase.hpp"

#include <algorithm>
#include <set>

namespace mfp {

std::optional<bool> shared_edge_horizontal(const Block& a, const Block& b) {
    bool y_touch = (a.y2 == b.y1) || (b.y2 == a.y1);
    bool x_touch = (a.x2 == b.x1) || (b.x2 == a.x1);
    Coord x_overlap = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    Coord y_overlap = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (y_touch && x_overlap > 0) return true;
    if (x_touch && y_overlap > 0) return false;
    return std::nullopt;
}

Staircase Staircase::unit() {
    Staircase s;
    s.blocks_ = {Block{0, 0, 1, 1}};
    s.profile_ = {{0, 1}};
    s.width_ = 1;
    s.corners_[{1, 1}] = 0;
    return s;
}

Staircase Staircase::from_blocks(std::vector<Block> blocks) {
    if (blocks.empty()) throw Error(Errc::EmptyInput, "no blocks");
    Coord min_x = blocks[0].x1, min_y = blocks[0].y1;
    for (const Block& b : blocks) {
        if (b.degenerate() || b.x1 < 0 || b.y1 < 0)
            throw Error(Errc::NotATiling, "bad block coordinates");
        min_x = std::min(min_x, b.x1);
        min_y = std::min(min_y, b.y1);
    }
    if (min_x != 0 || min_y != 0)
        throw Error(Errc::NotATiling, "staircase must touch both axes");

    detail::check_disjoint(blocks);

    std::unordered_map<std::pair<Coord, Coord>, int, PointHash> corner_count;
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

    Staircase s;
    s.blocks_ = std::move(blocks);
    s.rebuild_profile_and_corners();

    // The profile must be a strictly decreasing positive step function over
    // the whole width, and the blocks must fill the region under it exactly.
    unsigned __int128 region = 0;
    Coord prev_h = -1;
    for (auto it = s.profile_.begin(); it != s.profile_.end(); ++it) {
        Coord lo = it->first;
        auto nxt = std::next(it);
        Coord hi = (nxt == s.profile_.end()) ? s.width_ : nxt->first;
        if (it->second <= 0 || (prev_h >= 0 && it->second >= prev_h))
            throw Error(Errc::NotATiling, "border is not a non-increasing staircase");
        prev_h = it->second;
        region += (unsigned __int128)(hi - lo) * (unsigned __int128)(it->second);
    }
    unsigned __int128 area = 0;
    for (const Block& b : s.blocks_)
        area += (unsigned __int128)(b.width()) * (unsigned __int128)(b.height());
    if (area != region)
        throw Error(Errc::NotATiling, "blocks do not tile the staircase region");

    return s;
}

Staircase Staircase::from_drawing(const FloorplanDrawing& f) {
    if (!is_standard_form(f)) throw Error(Errc::NotStandardForm, "drawing is not in standard form");
    Staircase s = from_blocks(f.blocks());
    if (s.profile_.size() != 1)
        throw Error(Errc::NotATiling, "drawing region is not a rectangle");
    return s;
}

void Staircase::rebuild_profile_and_corners() {
    corners_.clear();
    corners_.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        corners_[{blocks_[i].x2, blocks_[i].y2}] = i;

    // Upper envelope of the blocks by an x-sweep over a height multiset.
    struct Event {
        Coord x;
        bool insert;
        Coord y2;
    };
    std::vector<Event> events;
    events.reserve(blocks_.size() * 2);
    for (const Block& b : blocks_) {
        events.push_back({b.x1, true, b.y2});
        events.push_back({b.x2, false, b.y2});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.insert < b.insert;
    });

    profile_ = {};
    width_ = 0;
    std::multiset<Coord> active;
    Coord last_height = 0;
    for (std::size_t i = 0; i < events.size();) {
        Coord x = events[i].x;
        while (i < events.size() && events[i].x == x) {
            if (events[i].insert)
                active.insert(events[i].y2);
            else
                active.erase(active.find(events[i].y2));
            ++i;
        }
        Coord h = active.empty() ? 0 : *active.rbegin();
        if (h != last_height) {
            if (h > 0) profile_[x] = h;
            if (h == 0) width_ = x;
            last_height = h;
        }
    }
    if (last_height != 0) throw std::logic_error("staircase envelope did not close");
    // Interior zero-height gaps cannot be represented by the piece list; the
    // strict-decrease and area checks in from_blocks reject those inputs.
}

std::vector<Step> Staircase::steps() const {
    std::vector<Step> out;
    out.reserve(profile_.size());
    std::size_t m = profile_.size();
    std::size_t pos = 0;  // from the left
    for (auto it = profile_.begin(); it != profile_.end(); ++it, ++pos) {
        auto nxt = std::next(it);
        Coord hi = (nxt == profile_.end()) ? width_ : nxt->first;
        out.push_back(Step{it->first, hi, it->second, m - pos});
    }
    std::reverse(out.begin(), out.end());  // index 1 (bottom-right) first
    return out;
}

bool Staircase::deletable_at(std::size_t idx) const {
    const Block& b = blocks_[idx];
    auto it = profile_.upper_bound(b.x1);
    if (it == profile_.begin()) return false;
    --it;
    if (it->second != b.y2) return false;  // top edge not on the border
    auto nxt = std::next(it);
    Coord piece_end = (nxt == profile_.end()) ? width_ : nxt->first;
    if (piece_end != b.x2) return false;  // right edge not on a border drop
    Coord next_h = (nxt == profile_.end()) ? 0 : nxt->second;
    return b.y1 >= next_h;  // right edge inside the drop
}

std::size_t Staircase::find_deletable_index() const {
    std::size_t found = blocks_.size();
    std::size_t count = 0;
    for (auto it = profile_.begin(); it != profile_.end(); ++it) {
        auto nxt = std::next(it);
        Coord piece_end = (nxt == profile_.end()) ? width_ : nxt->first;
        auto corner = corners_.find({piece_end, it->second});
        if (corner == corners_.end()) continue;
        if (deletable_at(corner->second)) {
            found = corner->second;
            ++count;
        }
    }
    if (count == 0) throw Error(Errc::NoDeletable, "no deletable rectangle");
    if (count > 1) throw Error(Errc::MultipleDeletable, "more than one deletable rectangle");
    return found;
}

RectType Staircase::classify(std::size_t idx) const {
    if (idx >= blocks_.size()) throw std::out_of_range("classify: bad block index");
    if (!deletable_at(idx))
        throw Error(Errc::InvariantBreach, "classify: block is not a deletable rectangle");
    const Block& b = blocks_[idx];
    auto it = std::prev(profile_.upper_bound(b.x1));
    auto nxt = std::next(it);
    Coord next_h = (nxt == profile_.end()) ? 0 : nxt->second;

    RectType t;
    t.t2 = b.x1 > it->first;   // top edge covers only part of the step
    t.t1 = b.y1 > next_h;      // right edge stops above the next step level

    // Cross-check the observed step-count change against the type table.
    if (blocks_.size() >= 2) {
        Staircase after = *this;
        after.remove_deletable_inplace(idx);
        long observed = long(after.step_count()) - long(step_count());
        if (observed != t.removal_step_delta())
            throw Error(Errc::InvariantBreach, "step-count change disagrees with rectangle type");
    }
    return t;
}

void Staircase::remove_deletable_inplace(std::size_t idx) {
    if (blocks_.size() == 1) throw Error(Errc::LastBlock, "cannot remove the last block");
    if (idx >= blocks_.size()) throw std::out_of_range("remove_deletable: bad block index");
    if (!deletable_at(idx))
        throw Error(Errc::InvariantBreach, "remove_deletable: block is not deletable");

    Block b = blocks_[idx];
    auto it = std::prev(profile_.upper_bound(b.x1));
    auto nxt = std::next(it);
    Coord next_h = (nxt == profile_.end()) ? 0 : nxt->second;

    if (b.y1 == 0) {
        // only possible on the last piece; the staircase narrows
        if (b.x1 == it->first) profile_.erase(it);
        width_ = b.x1;
    } else if (b.y1 == next_h) {
        // exposed stretch joins the step on the right
        profile_.erase(nxt);
        profile_[b.x1] = b.y1;
    } else {
        profile_[b.x1] = b.y1;
    }

    corners_.erase({b.x2, b.y2});
    blocks_.erase(blocks_.begin() + std::ptrdiff_t(idx));
    for (auto& [pt, bi] : corners_) {
        (void)pt;
        if (bi > idx) --bi;
    }
}

Staircase Staircase::remove_deletable(std::size_t idx) const {
    Staircase s = *this;
    s.remove_deletable_inplace(idx);
    return s;
}

void Staircase::shift_x(Coord cut) {
    for (Block& b : blocks_) {
        if (b.x1 >= cut) ++b.x1;
        if (b.x2 >= cut) ++b.x2;
    }
    std::map<Coord, Coord> shifted;
    for (const auto& [x, h] : profile_)
        shifted.emplace_hint(shifted.end(), x >= cut ? x + 1 : x, h);
    profile_ = std::move(shifted);
    if (width_ >= cut) ++width_;
    corners_.clear();
    for (std::size_t i = 0; i < blocks_.size(); ++i) corners_[{blocks_[i].x2, blocks_[i].y2}] = i;
}

void Staircase::shift_y(Coord cut) {
    for (Block& b : blocks_) {
        if (b.y1 >= cut) ++b.y1;
        if (b.y2 >= cut) ++b.y2;
    }
    for (auto& [x, h] : profile_) {
        (void)x;
        if (h >= cut) ++h;
    }
    corners_.clear();
    for (std::size_t i = 0; i < blocks_.size(); ++i) corners_[{blocks_[i].x2, blocks_[i].y2}] = i;
}

std::size_t Staircase::attach_block_inplace(RectType t, bool share_horizontal, std::size_t prev) {
    if (prev >= blocks_.size()) throw std::out_of_range("attach_block: bad prev index");

    // Structural feasibility on the current state. prev must sit at the
    // convex corner of its step, i.e. be the deletable rectangle.
    if (!deletable_at(prev))
        throw Error(Errc::InvalidAttachment, "prev block is not at a border corner");
    {
        Block p = blocks_[prev];
        auto it = std::prev(profile_.upper_bound(p.x1));
        auto nxt = std::next(it);
        if (share_horizontal) {
            if (t.t2 && it == profile_.begin())
                throw Error(Errc::InvalidAttachment, "no step to the left to end against");
        } else {
            if (t.t1 && nxt == profile_.end())
                throw Error(Errc::InvalidAttachment, "no step to the right to end against");
        }
        // Fresh coordinates for the free extents, via monotone +1 shifts.
        if (share_horizontal) {
            if (!t.t2) shift_y(p.y2 + 1);
            if (!t.t1) shift_x(p.x1 + 1);
        } else {
            if (!t.t2) shift_y(p.y1 + 1);
            if (!t.t1) shift_x(p.x2 + 1);
        }
    }

    // Re-read everything after the shifts.
    Block p = blocks_[prev];
    auto it = std::prev(profile_.upper_bound(p.x1));
    Coord A = it->first, h = it->second;
    auto nxt = std::next(it);
    Coord B = (nxt == profile_.end()) ? width_ : nxt->first;
    Coord next_h = (nxt == profile_.end()) ? 0 : nxt->second;

    Block r;
    if (share_horizontal) {
        // New block on top of prev's step, spanning from the step's left end.
        r.x1 = A;
        r.y1 = h;
        r.x2 = t.t1 ? B : p.x1 + 1;
        r.y2 = t.t2 ? std::prev(it)->second : h + 1;
    } else {
        // New block to the right of prev, resting on the next step (the
        // x-axis when prev's step is the last one).
        r.x1 = B;
        r.y1 = next_h;
        r.y2 = t.t2 ? h : p.y1 + 1;
        if (t.t1) {
            auto nn = std::next(nxt);
            r.x2 = (nn == profile_.end()) ? width_ : nn->first;
        } else {
            r.x2 = B + 1;
        }
    }
    if (r.degenerate())
        throw Error(Errc::InvalidAttachment, "no placement with positive extent");

    // Keep a snapshot so the removal postcondition can be checked exactly.
    std::vector<Block> saved_blocks = blocks_;
    std::map<Coord, Coord> saved_profile = profile_;
    Coord saved_width = width_;

    // Border surgery.
    if (share_horizontal) {
        if (r.x2 < B) profile_[r.x2] = h;
        if (t.t2)
            profile_.erase(A);  // joins the step on the left
        else
            profile_[A] = r.y2;
    } else {
        if (nxt == profile_.end()) {
            if (!t.t2) profile_[B] = r.y2;
            width_ = r.x2;
        } else {
            Coord step_end = (std::next(nxt) == profile_.end()) ? width_ : std::next(nxt)->first;
            profile_.erase(nxt);
            if (!t.t2) profile_[B] = r.y2;
            if (r.x2 < step_end) profile_[r.x2] = next_h;
        }
    }
    blocks_.push_back(r);
    std::size_t new_idx = blocks_.size() - 1;
    corners_[{r.x2, r.y2}] = new_idx;

    // The placement is verified, not assumed: the new block must be the
    // unique deletable rectangle, classify to the requested type, share the
    // requested edge with prev, and removing it must restore the staircase.
    std::size_t del;
    try {
        del = find_deletable_index();
    } catch (const Error&) {
        throw Error(Errc::InvalidAttachment, "attachment breaks deletable-rectangle uniqueness");
    }
    if (del != new_idx)
        throw Error(Errc::InvalidAttachment, "attached block is not the deletable rectangle");
    if (classify(new_idx) != t)
        throw Error(Errc::InvalidAttachment, "attached block classifies differently");
    auto sh = shared_edge_horizontal(r, blocks_[prev]);
    if (!sh || *sh != share_horizontal)
        throw Error(Errc::InvalidAttachment, "attached block does not share the requested edge");
    {
        Staircase undo = *this;
        undo.remove_deletable_inplace(new_idx);
        if (undo.blocks_ != saved_blocks || undo.profile_ != saved_profile ||
            undo.width_ != saved_width)
            throw Error(Errc::InvalidAttachment, "removal does not restore the staircase");
    }
    return new_idx;
}

std::pair<Staircase, std::size_t> Staircase::attach_block(RectType t, bool share_horizontal,
                                                          std::size_t prev) const {
    Staircase s = *this;
    std::size_t idx = s.attach_block_inplace(t, share_horizontal, prev);
    return {std::move(s), idx};
}

std::pair<Staircase, Block> Staircase::attach_block(RectType t, bool share_horizontal,
                                                    const Block& prev) const {
    auto [s, idx] = attach_block(t, share_horizontal, index_of(prev));
    Block b = s.blocks()[idx];
    return {std::move(s), b};
}

std::size_t Staircase::index_of(const Block& r) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] == r) return i;
    throw std::invalid_argument("block is not part of the staircase");
}

std::vector<Block> Staircase::canonical_blocks() const {
    std::vector<Coord> xs, ys;
    xs.reserve(blocks_.size() * 2);
    ys.reserve(blocks_.size() * 2);
    for (const Block& b : blocks_) {
        xs.push_back(b.x1);
        xs.push_back(b.x2);
        ys.push_back(b.y1);
        ys.push_back(b.y2);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto rank = [](const std::vector<Coord>& v, Coord c) {
        return Coord(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_)
        out.push_back({rank(xs, b.x1), rank(ys, b.y1), rank(xs, b.x2), rank(ys, b.y2)});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mfp
