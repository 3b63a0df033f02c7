#include "mfp/baxter.hpp"

#include <algorithm>
#include <set>

#include "mfp/staircase.hpp"

namespace mfp {

Permutation Permutation::from_values(std::vector<int> values) {
    std::vector<bool> seen(values.size(), false);
    for (int v : values) {
        if (v < 1 || std::size_t(v) > values.size() || seen[std::size_t(v) - 1])
            throw Error(Errc::ParseError, "not a permutation of 1..n");
        seen[std::size_t(v) - 1] = true;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = int(i) + 1;
    return Permutation(std::move(v));
}

mpz_class baxter_number(unsigned n) {
    if (n < 1) throw std::invalid_argument("baxter_number: n must be positive");
    mpz_class sum = 0;
    for (unsigned r = 0; r + 1 <= n; ++r) {
        mpz_class a, b, c;
        mpz_bin_uiui(a.get_mpz_t(), n + 1, r);
        mpz_bin_uiui(b.get_mpz_t(), n + 1, r + 1);
        mpz_bin_uiui(c.get_mpz_t(), n + 1, r + 2);
        sum += a * b * c;
    }
    mpz_class divisor = mpz_class(n + 1) * (mpz_class(n + 1) * n / 2);
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), divisor.get_mpz_t());
    if (rem != 0) throw std::logic_error("baxter_number: division is not exact");
    return q;
}

bool is_baxter(const Permutation& p) {
    const std::vector<int>& v = p.values();
    std::size_t n = v.size();
    // An occurrence of 2-41-3 needs a descent v[j] > v[j+1] with some earlier
    // value and some later value nested strictly between them, the earlier
    // one smaller. Symmetrically 3-14-2 on ascents.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        int lo = std::min(v[j], v[j + 1]);
        int hi = std::max(v[j], v[j + 1]);
        if (hi - lo < 3) continue;  // no room for two nested values
        bool descent = v[j] > v[j + 1];
        int best_early = -1, best_late = -1;
        if (descent) {
            // earliest side wants the minimum, late side the maximum
            for (std::size_t i = 0; i < j; ++i)
                if (v[i] > lo && v[i] < hi && (best_early == -1 || v[i] < best_early))
                    best_early = v[i];
            for (std::size_t k = j + 2; k < n; ++k)
                if (v[k] > lo && v[k] < hi && (best_late == -1 || v[k] > best_late))
                    best_late = v[k];
            if (best_early != -1 && best_late != -1 && best_early < best_late) return false;
        } else {
            for (std::size_t i = 0; i < j; ++i)
                if (v[i] > lo && v[i] < hi && (best_early == -1 || v[i] > best_early))
                    best_early = v[i];
            for (std::size_t k = j + 2; k < n; ++k)
                if (v[k] > lo && v[k] < hi && (best_late == -1 || v[k] < best_late))
                    best_late = v[k];
            if (best_early != -1 && best_late != -1 && best_late < best_early) return false;
        }
    }
    return true;
}

namespace {

// Deletable-rectangle removal order of a normalized drawing, as indices into
// the drawing's block list.
std::vector<std::size_t> deletion_sequence(const FloorplanDrawing& f) {
    Staircase s = Staircase::from_drawing(normalize(f));
    std::vector<std::size_t> order;
    order.reserve(s.size());
    // Track original indices through removals.
    std::vector<std::size_t> original(s.size());
    for (std::size_t i = 0; i < original.size(); ++i) original[i] = i;
    while (s.size() > 1) {
        std::size_t idx = s.find_deletable_index();
        order.push_back(original[idx]);
        original.erase(original.begin() + std::ptrdiff_t(idx));
        s.remove_deletable_inplace(idx);
    }
    order.push_back(original[0]);
    return order;
}

} // namespace

Permutation fp2bp(const FloorplanDrawing& f) {
    // Rank every block by the top-left deletion order, then read the ranks in
    // the bottom-left deletion order. Mirroring keeps block indices stable,
    // so both sequences index f's own blocks.
    std::vector<std::size_t> top_left = deletion_sequence(mirror_h(f));
    std::vector<std::size_t> bottom_left = deletion_sequence(rotate180(f));
    std::vector<int> rank(f.size());
    for (std::size_t k = 0; k < top_left.size(); ++k) rank[top_left[k]] = int(k) + 1;
    std::vector<int> out;
    out.reserve(f.size());
    for (std::size_t b : bottom_left) out.push_back(rank[b]);
    return Permutation::from_values(std::move(out));
}

namespace {

// Relative order pattern of a value slice, as a permutation of 1..k.
Permutation pattern_of(const std::vector<int>& values, std::size_t from) {
    std::vector<int> slice(values.begin() + std::ptrdiff_t(from), values.end());
    std::vector<int> sorted = slice;
    std::sort(sorted.begin(), sorted.end());
    for (int& v : slice)
        v = int(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    return Permutation::from_values(std::move(slice));
}

// All drawings obtained from f by one bottom-left corner insertion: a new
// block pushed under a prefix of the bottom row, or pushed left of a prefix
// of the left column. These are exactly the inverses of deleting the
// bottom-left corner block and letting its neighbors slide back.
std::vector<FloorplanDrawing> bottom_left_insertions(const FloorplanDrawing& f) {
    std::vector<FloorplanDrawing> out;

    std::set<Coord> widths, heights;
    for (const Block& b : f.blocks()) {
        if (b.y1 == 0) widths.insert(b.x2);
        if (b.x1 == 0) heights.insert(b.y2);
    }

    for (Coord w : widths) {
        std::vector<Block> blocks;
        blocks.reserve(f.size() + 1);
        for (Block b : f.blocks()) {
            if (b.y1 >= 1) ++b.y1;
            if (b.y2 >= 1) ++b.y2;
            if (b.y1 == 0 && b.x2 <= w) b.y1 = 1;  // lifted onto the new block
            blocks.push_back(b);
        }
        blocks.push_back(Block{0, 0, w, 1});
        out.push_back(FloorplanDrawing::validate(std::move(blocks), f.width(), f.height() + 1));
    }
    for (Coord h : heights) {
        std::vector<Block> blocks;
        blocks.reserve(f.size() + 1);
        for (Block b : f.blocks()) {
            if (b.x1 >= 1) ++b.x1;
            if (b.x2 >= 1) ++b.x2;
            if (b.x1 == 0 && b.y2 <= h) b.x1 = 1;  // pushed right of the new block
            blocks.push_back(b);
        }
        blocks.push_back(Block{0, 0, 1, h});
        out.push_back(FloorplanDrawing::validate(std::move(blocks), f.width() + 1, f.height()));
    }
    return out;
}

} // namespace

FloorplanDrawing bp2fp(const Permutation& p) {
    if (!is_baxter(p)) throw Error(Errc::NotBaxter, "permutation contains a prohibited pattern");
    std::size_t n = p.size();
    if (n == 0) throw Error(Errc::EmptyInput, "empty permutation");

    // Grow the drawing one bottom-left insertion at a time so that after i
    // insertions fp2bp equals the pattern of p's suffix of length i. The
    // matching insertion is unique; the final drawing therefore maps back to
    // p exactly.
    FloorplanDrawing f = FloorplanDrawing::validate({Block{0, 0, 1, 1}}, 1, 1);
    for (std::size_t i = 2; i <= n; ++i) {
        Permutation target = pattern_of(p.values(), n - i);
        FloorplanDrawing* match = nullptr;
        std::vector<FloorplanDrawing> candidates = bottom_left_insertions(f);
        std::size_t hits = 0;
        for (auto& cand : candidates) {
            if (fp2bp(cand) == target) {
                ++hits;
                match = &cand;
            }
        }
        if (hits != 1)
            throw std::logic_error("bp2fp: suffix pattern not uniquely realizable");
        f = std::move(*match);
    }
    FloorplanDrawing out = normalize(f);
    if (!(fp2bp(out) == p)) throw std::logic_error("bp2fp: result does not map back");
    return out;
}

CodeString encode_permutation(const Permutation& p) {
    return encode(bp2fp(p));
}

Permutation decode_permutation(const CodeString& code) {
    return fp2bp(decode(code));
}

} // namespace mfp
