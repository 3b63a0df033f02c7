#include "mfp/render.hpp"

#include <algorithm>
#include <sstream>

namespace mfp {

std::string render_svg(const FloorplanDrawing& f, Coord scale) {
    if (scale <= 0) throw std::invalid_argument("render_svg: scale must be positive");
    std::vector<Block> blocks = f.blocks();
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.y1 != b.y1) return a.y1 < b.y1;
        if (a.x1 != b.x1) return a.x1 < b.x1;
        return a < b;
    });

    Coord w = f.width() * scale;
    Coord h = f.height() * scale;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (const Block& b : blocks) {
        Coord x = b.x1 * scale;
        Coord y = (f.height() - b.y2) * scale;  // y up in the model, down in SVG
        os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << b.width() * scale
           << "\" height=\"" << b.height() * scale
           << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace mfp
