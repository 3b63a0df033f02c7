#include "mfp/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace mfp {

namespace {

std::string line_msg(std::size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

bool parse_int(std::string_view token, Coord& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

} // namespace

FloorplanDrawing parse_floorplan_text(std::string_view text) {
    std::vector<Block> blocks;
    std::set<Block> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 4)
            throw Error(Errc::ParseError, line_msg(line_no, "expected `x1 y1 x2 y2`"), line_no);
        Block b;
        if (!parse_int(tokens[0], b.x1) || !parse_int(tokens[1], b.y1) ||
            !parse_int(tokens[2], b.x2) || !parse_int(tokens[3], b.y2))
            throw Error(Errc::ParseError, line_msg(line_no, "malformed integer"), line_no);
        if (b.degenerate())
            throw Error(Errc::ParseError, line_msg(line_no, "block has no area"), line_no);
        if (!seen.insert(b).second)
            throw Error(Errc::ParseError, line_msg(line_no, "duplicate block"), line_no);
        blocks.push_back(b);
    }
    if (blocks.empty()) throw Error(Errc::EmptyInput, "no blocks in input");

    Coord min_x = blocks[0].x1, min_y = blocks[0].y1, max_x = blocks[0].x2, max_y = blocks[0].y2;
    for (const Block& b : blocks) {
        min_x = std::min(min_x, b.x1);
        min_y = std::min(min_y, b.y1);
        max_x = std::max(max_x, b.x2);
        max_y = std::max(max_y, b.y2);
    }
    if (min_x != 0 || min_y != 0)
        throw Error(Errc::ParseError, "coordinate minima must be 0");
    return FloorplanDrawing::validate(std::move(blocks), max_x, max_y);
}

std::string format_floorplan_text(const FloorplanDrawing& f) {
    std::vector<Block> blocks = f.blocks();
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.y1 != b.y1) return a.y1 < b.y1;
        if (a.x1 != b.x1) return a.x1 < b.x1;
        return a < b;
    });
    std::ostringstream os;
    os << "# " << f.size() << (f.size() == 1 ? " block, " : " blocks, ") << f.width() << " x "
       << f.height() << "\n";
    for (const Block& b : blocks)
        os << b.x1 << ' ' << b.y1 << ' ' << b.x2 << ' ' << b.y2 << "\n";
    return os.str();
}

Permutation parse_permutation_text(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() &&
               (text[i] == ' ' || text[i] == ',' || text[i] == '\t' || text[i] == '\n' ||
                text[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != ',' && text[i] != '\t' &&
               text[i] != '\n' && text[i] != '\r')
            ++i;
        if (i == start) continue;
        std::string_view token = text.substr(start, i - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw Error(Errc::ParseError, "malformed permutation entry");
        values.push_back(v);
    }
    if (values.empty()) throw Error(Errc::ParseError, "empty permutation");
    return Permutation::from_values(std::move(values));
}

std::string format_permutation_text(const Permutation& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) os << ' ';
        os << p[i];
    }
    return os.str();
}

} // namespace mfp
