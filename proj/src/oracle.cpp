#include "mfp/oracle.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "mfp/baxter.hpp"
#include "mfp/staircase.hpp"

namespace mfp {

namespace {

// DFS over triple prefixes. A prefix dies at the first impossible attachment;
// a staircase with m steps needs at least m-1 more blocks to close, so
// subtrees that cannot finish are cut as well.
void search(const Staircase& s, std::size_t prev, unsigned remaining,
            std::vector<Triple>& stack,
            const std::function<void(const std::vector<Triple>&, const Staircase&)>& leaf) {
    if (remaining == 0) {
        if (s.step_count() == 1) leaf(stack, s);
        return;
    }
    if (s.step_count() > std::size_t(remaining) + 1) return;
    for (unsigned v = 0; v < 8; ++v) {
        Triple tr = Triple::from_value(v);
        Staircase next = s;
        std::size_t idx;
        try {
            idx = next.attach_block_inplace(RectType{tr.t1, tr.t2}, tr.loc, prev);
        } catch (const Error& e) {
            if (e.code() == Errc::InvalidAttachment) continue;
            throw;
        }
        stack.push_back(tr);
        search(next, idx, remaining - 1, stack, leaf);
        stack.pop_back();
    }
}

} // namespace

void enumerate_floorplans(unsigned n,
                          const std::function<void(const CodeString&, const FloorplanDrawing&)>& emit,
                          unsigned cap) {
    if (n < 1 || n > cap) throw Error(Errc::CapExceeded, "n outside the enumeration cap");
    std::vector<Triple> stack;
    search(Staircase::unit(), 0, n - 1, stack,
           [&](const std::vector<Triple>& triples, const Staircase& s) {
               CodeString code{triples};
               FloorplanDrawing raw = FloorplanDrawing::validate(s.blocks(), s.width(), s.height());
               emit(code, normalize(raw));
           });
}

std::uint64_t count_valid_codes(unsigned n, unsigned cap) {
    if (n < 1 || n > cap) throw Error(Errc::CapExceeded, "n outside the enumeration cap");
    std::uint64_t count = 0;
    std::vector<Triple> stack;
    search(Staircase::unit(), 0, n - 1, stack,
           [&](const std::vector<Triple>&, const Staircase&) { ++count; });
    return count;
}

FloorplanDrawing random_floorplan(unsigned n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_floorplan: n must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, 7);
    Staircase s = Staircase::unit();
    std::size_t prev = 0;
    for (unsigned placed = 1; placed < n; ++placed) {
        unsigned remaining = n - placed;  // including this attachment
        for (;;) {
            Triple tr = Triple::from_value(dist(rng));
            RectType t{tr.t1, tr.t2};
            // attaching a type-t block changes the step count by -delta(t);
            // reject choices that leave too few blocks to close the staircase
            long steps_after = long(s.step_count()) - t.removal_step_delta();
            if (steps_after > long(remaining)) continue;
            try {
                auto [next, idx] = s.attach_block(t, tr.loc, prev);
                s = std::move(next);
                prev = idx;
                break;
            } catch (const Error& e) {
                if (e.code() == Errc::InvalidAttachment) continue;
                throw;
            }
        }
    }
    return FloorplanDrawing::validate(s.blocks(), s.width(), s.height());
}

EnumerationReport enumeration_report(unsigned n, unsigned cap) {
    EnumerationReport r;
    r.n = n;
    r.total_codes = 1;
    for (unsigned i = 1; i < n; ++i) r.total_codes *= 8;
    r.expected = baxter_number(n);
    auto start = std::chrono::steady_clock::now();
    r.valid = count_valid_codes(n, cap);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = mpz_class(r.valid) == r.expected;
    return r;
}

std::string report_text(const EnumerationReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << " total=" << r.total_codes << " valid=" << r.valid
       << " expected=" << r.expected.get_str() << " seconds=" << r.seconds
       << " pass=" << (r.pass ? "true" : "false");
    return os.str();
}

std::string report_csv_header() { return "n,total,valid,expected,seconds,pass"; }

std::string report_csv_row(const EnumerationReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.total_codes << ',' << r.valid << ',' << r.expected.get_str() << ','
       << r.seconds << ',' << (r.pass ? "true" : "false");
    return os.str();
}

EntropyReport entropy_report(unsigned n) {
    EntropyReport r;
    r.n = n;
    r.bits_used = n >= 1 ? 3ull * n - 3 : 0;
    mpz_class b = baxter_number(n);
    // ceil(log2 b): size in base 2, minus one when b is a power of two
    std::size_t sz = mpz_sizeinbase(b.get_mpz_t(), 2);
    bool pow2 = mpz_scan1(b.get_mpz_t(), 0) == sz - 1;
    r.bits_required = pow2 ? sz - 1 : sz;
    r.slack = r.bits_used - r.bits_required;
    return r;
}

std::string entropy_text(const EntropyReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << " bits_used=" << r.bits_used << " bits_required=" << r.bits_required
       << " slack=" << r.slack;
    return os.str();
}

} // namespace mfp
