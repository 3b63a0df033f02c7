#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace mfp {

using Coord = std::int64_t;

struct PointHash {
    std::size_t operator()(const std::pair<Coord, Coord>& p) const {
        std::uint64_t h = std::uint64_t(p.first) * 0x9e3779b97f4a7c15ull;
        h ^= std::uint64_t(p.second) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return std::size_t(h);
    }
};

// Axis-aligned block on the integer grid, y increasing upward.
// Closed rectangle [x1,x2] x [y1,y2] with x1 < x2 and y1 < y2.
struct Block {
    Coord x1 = 0;
    Coord y1 = 0;
    Coord x2 = 0;
    Coord y2 = 0;

    Coord width() const { return x2 - x1; }
    Coord height() const { return y2 - y1; }
    bool degenerate() const { return x1 >= x2 || y1 >= y2; }

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

enum class Errc {
    // geometry
    NotATiling,
    FourCornerMeeting,
    EmptyInput,
    CycleDetected,
    NotStandardForm,
    // staircase
    NoDeletable,
    MultipleDeletable,
    LastBlock,
    InvalidAttachment,
    InvariantBreach,
    // codec
    InvalidCode,
    BadLength,
    BadMagic,
    TruncatedPayload,
    TrailingGarbage,
    // baxter
    NotBaxter,
    // oracle
    CapExceeded,
    // text formats
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
    Error(Errc code, const std::string& message, std::size_t index)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code),
          index_(index) {}

    Errc code() const { return code_; }
    // failing triple index for InvalidCode, line number for ParseError
    std::optional<std::size_t> index() const { return index_; }

private:
    Errc code_;
    std::optional<std::size_t> index_;
};

} // namespace mfp
