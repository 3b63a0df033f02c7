// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; the only measured quantities are the
// stated time budgets.

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "mfp/baxter.hpp"
#include "mfp/codec.hpp"
#include "mfp/oracle.hpp"

using namespace mfp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Valid-code counts equal B(n) for n = 1..8, within 60 seconds.
void criterion1() {
    const std::uint64_t expected[] = {1, 2, 6, 22, 92, 422, 2074, 10754};
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (unsigned n = 1; n <= 8; ++n) {
        std::uint64_t got = count_valid_codes(n);
        if (got != expected[n - 1]) ok = false;
        detail << (n > 1 ? " " : "") << got;
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) ok = false;
    detail << "; " << secs << " s";
    report(1, ok, "valid-code counts match the Baxter numbers for n=1..8", detail.str());
}

// 2. encode always emits exactly 3n-3 bits.
void criterion2() {
    bool ok = true;
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 7; ++n)
        enumerate_floorplans(n, [&](const CodeString&, const FloorplanDrawing& f) {
            ++checked;
            if (encode(f).bit_length() != 3 * f.size() - 3) ok = false;
        });
    for (unsigned n : {10u, 100u, 1000u, 10000u}) {
        FloorplanDrawing f = random_floorplan(n, 2024 + n);
        ++checked;
        if (encode(f).bit_length() != 3ull * n - 3) ok = false;
    }
    report(2, ok, "encode emits exactly 3n-3 bits",
           std::to_string(checked) + " drawings incl. n=10000");
}

// 3. The 18-bit example string decodes to a 7-block standard-form drawing and
//    re-encodes byte-identically, in under a millisecond.
void criterion3() {
    const std::string bits = "000 011 101 000 110 111";
    CodeString code = code_from_ascii(bits);
    // warm pass for correctness
    FloorplanDrawing f = decode(code);
    bool ok = f.size() == 7 && is_standard_form(f) &&
              code_to_ascii(encode(f), true) == bits;
    auto t0 = Clock::now();
    FloorplanDrawing f2 = decode(code);
    CodeString back = encode(f2);
    double secs = seconds_since(t0);
    ok = ok && back == code && secs < 0.001;
    std::ostringstream detail;
    detail << "n=" << f.size() << ", " << secs * 1e6 << " us";
    report(3, ok, "example code decodes and re-encodes byte-identically", detail.str());
}

// 4. decode . encode = identity on classes, encode . decode = identity on
//    codes, exhaustively for n <= 7.
void criterion4() {
    bool ok = true;
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 7; ++n)
        enumerate_floorplans(n, [&](const CodeString& c, const FloorplanDrawing& f) {
            ++checked;
            if (encode(f) != c) ok = false;
            if (!equivalent(decode(c), f)) ok = false;
        });
    report(4, ok, "both roundtrips are the identity for all n<=7",
           std::to_string(checked) + " codes");
}

// 5. In every removal step of every exhaustive run the deletable-rectangle
//    scan finds exactly one candidate, and consecutive removals are adjacent.
void criterion5() {
    bool ok = true;
    std::size_t steps = 0;
    for (unsigned n = 2; n <= 7; ++n)
        enumerate_floorplans(n, [&](const CodeString&, const FloorplanDrawing& f) {
            Staircase s = as_staircase(f);
            while (s.size() > 1) {
                std::size_t idx;
                try {
                    idx = s.find_deletable_index();  // throws unless exactly one
                } catch (const Error&) {
                    ok = false;
                    return;
                }
                Block removed = s.blocks()[idx];
                s.remove_deletable_inplace(idx);
                Block next = s.blocks()[s.find_deletable_index()];
                if (!shared_edge_horizontal(removed, next).has_value()) ok = false;
                ++steps;
            }
        });
    report(5, ok, "unique deletable rectangle and adjacency in every removal step",
           std::to_string(steps) + " removals, zero violations");
}

// 6. normalize yields standard form and preserves the constraint graphs.
void criterion6() {
    bool ok = true;
    std::size_t checked = 0;
    auto check = [&](const FloorplanDrawing& f) {
        ++checked;
        FloorplanDrawing norm = normalize(f);
        if (!is_standard_form(norm)) ok = false;
        if (!th::graphs_preserved(f, norm)) ok = false;
    };
    for (unsigned n = 1; n <= 6; ++n)
        enumerate_floorplans(n, [&](const CodeString&, const FloorplanDrawing& f) { check(f); });
    // randomized cases, denormalized by slides before the check
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        FloorplanDrawing f = random_floorplan(6 + unsigned(seed % 30), seed);
        check(th::stretch_x(th::stretch_y(f, 1 + Coord(seed % 3), 2), 1, 1 + Coord(seed % 2)));
    }
    report(6, ok, "normalize reaches standard form and keeps the graphs",
           std::to_string(checked) + " drawings");
}

// 7. Pattern-avoidance count equals the formula for n = 1..9.
void criterion7() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (unsigned n = 1; n <= 9; ++n) {
        std::vector<int> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = int(i) + 1;
        std::uint64_t count = 0;
        do {
            if (is_baxter(Permutation::from_values(v))) ++count;
        } while (std::next_permutation(v.begin(), v.end()));
        if (mpz_class(count) != baxter_number(n)) ok = false;
        detail << (n > 1 ? " " : "") << count;
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0) ok = false;
    detail << "; " << secs << " s";
    report(7, ok, "Baxter recognition agrees with the formula for n=1..9", detail.str());
}

// 8. fp2bp is injective, Baxter-valued and surjective for n <= 6, and the two
//    maps invert each other.
void criterion8() {
    bool ok = true;
    std::ostringstream detail;
    for (unsigned n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> images;
        std::size_t drawings = 0;
        enumerate_floorplans(n, [&](const CodeString&, const FloorplanDrawing& f) {
            ++drawings;
            Permutation p = fp2bp(f);
            if (!is_baxter(p)) ok = false;
            images.insert(p.values());
            if (!(fp2bp(bp2fp(p)) == p)) ok = false;
            if (!equivalent(bp2fp(fp2bp(f)), f)) ok = false;
        });
        if (images.size() != drawings) ok = false;  // injectivity
        // surjectivity: every Baxter permutation is hit
        std::vector<int> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = int(i) + 1;
        std::uint64_t baxter_count = 0;
        do {
            if (is_baxter(Permutation::from_values(v))) ++baxter_count;
        } while (std::next_permutation(v.begin(), v.end()));
        if (images.size() != baxter_count) ok = false;
        detail << (n > 1 ? " " : "") << images.size();
    }
    report(8, ok, "deletion-order bijection with Baxter permutations for n<=6", detail.str());
}

// 9. Entropy report for n = 7: 18 bits used, 12 required.
void criterion9() {
    EntropyReport r = entropy_report(7);
    bool ok = r.bits_used == 18 && r.bits_required == 12 && r.slack == 6;
    report(9, ok, "size report: 18 bits used vs ceil(log2 B(7)) = 12",
           entropy_text(r));
}

} // namespace

int main() {
    auto t0 = Clock::now();
    void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
    for (int i = 0; i < 9; ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(i + 1, false, "unhandled exception", e.what());
        }
    }
    std::printf("%s: %d of 9 criteria failed, %.1f s total\n", failures == 0 ? "OK" : "FAILED",
                failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
