#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>

#include "mfp/codec.hpp"
#include "mfp/geometry.hpp"

namespace mfp {

inline constexpr unsigned kDefaultEnumerationCap = 8;

// Yields every valid code of length 3(n-1) in lexicographic order together
// with its decoded drawing. Prefix-pruned: a triple sequence is abandoned at
// the first impossible attachment, plus the step-count bound (a staircase
// with m steps needs at least m-1 further blocks to close).
// Throws CapExceeded when n exceeds cap.
void enumerate_floorplans(unsigned n,
                          const std::function<void(const CodeString&, const FloorplanDrawing&)>& emit,
                          unsigned cap = kDefaultEnumerationCap);

// Same search without materializing drawings.
std::uint64_t count_valid_codes(unsigned n, unsigned cap = kDefaultEnumerationCap);

// Deterministic in (n, seed): attaches n-1 blocks with uniformly sampled
// legal (type, loc) choices, rejecting impossible ones; choices that would
// leave too few blocks to close the staircase are also rejected so the run
// always ends at a full rectangle.
FloorplanDrawing random_floorplan(unsigned n, std::uint64_t seed);

struct EnumerationReport {
    unsigned n = 0;
    std::uint64_t total_codes = 0;  // 8^(n-1)
    std::uint64_t valid = 0;
    mpz_class expected;  // B(n)
    double seconds = 0.0;
    bool pass = false;
};

EnumerationReport enumeration_report(unsigned n, unsigned cap = kDefaultEnumerationCap);
std::string report_text(const EnumerationReport& r);
std::string report_csv_header();
std::string report_csv_row(const EnumerationReport& r);

struct EntropyReport {
    unsigned n = 0;
    std::uint64_t bits_used = 0;      // 3n-3
    std::uint64_t bits_required = 0;  // ceil(log2 B(n))
    std::uint64_t slack = 0;
};

EntropyReport entropy_report(unsigned n);
std::string entropy_text(const EntropyReport& r);

} // namespace mfp
