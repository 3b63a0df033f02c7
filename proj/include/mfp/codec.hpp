#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mfp/geometry.hpp"

namespace mfp {

// One removed rectangle: two type bits and one location bit. loc = 1 when the
// rectangle shares a horizontal edge with the previously revealed deletable
// rectangle, 0 for a vertical edge.
struct Triple {
    bool t1 = false;
    bool t2 = false;
    bool loc = false;

    unsigned value() const { return (unsigned(t1) << 2) | (unsigned(t2) << 1) | unsigned(loc); }
    static Triple from_value(unsigned v) {
        return Triple{(v & 4) != 0, (v & 2) != 0, (v & 1) != 0};
    }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The 3n-3 bit representation of an n-block drawing: one triple per block
// except the first. Triples are ordered for left-to-right decoding: the
// second-removed-last block (r_2) comes first, the first-removed (r_n) last.
struct CodeString {
    std::vector<Triple> triples;

    std::size_t block_count() const { return triples.size() + 1; }
    std::size_t bit_length() const { return 3 * triples.size(); }

    friend bool operator==(const CodeString&, const CodeString&) = default;
};

// Removes the unique deletable rectangle n-1 times and records (type, loc)
// for each. Normalizes internally; the code is a complete invariant of the
// mosaic equivalence class.
CodeString encode(const FloorplanDrawing& f);

// Rebuilds the drawing from the single-block staircase by attaching one block
// per triple, then normalizes. Throws InvalidCode (with the failing triple
// index) when an attachment is impossible or the final staircase is not a
// full rectangle.
FloorplanDrawing decode(const CodeString& code);

bool is_valid_code(const CodeString& code);
bool is_valid_code(std::string_view ascii_bits);

// ASCII form: '0'/'1' with whitespace ignored. Length must be divisible by 3
// (BadLength); any other character is a ParseError.
CodeString code_from_ascii(std::string_view text);
std::string code_to_ascii(const CodeString& code, bool grouped = false);

// Binary container: magic "MFP1", n as u32 little-endian, then
// ceil((3n-3)/8) payload bytes, bits packed MSB-first in triple order,
// padding bits zero.
std::vector<std::uint8_t> pack(const CodeString& code);
CodeString unpack(const std::vector<std::uint8_t>& bytes);

} // namespace mfp
