#include "mfp/codec.hpp"

#include <algorithm>

#include "mfp/staircase.hpp"

namespace mfp {

CodeString encode(const FloorplanDrawing& f) {
    FloorplanDrawing n = normalize(f);
    Staircase s = Staircase::from_drawing(n);

    // Remove the unique deletable rectangle n-1 times, recording its type and
    // the edge it shares with the next one. Triples come out in removal order
    // (r_n first) and are reversed for left-to-right decoding.
    std::vector<Triple> reversed;
    reversed.reserve(s.size() > 0 ? s.size() - 1 : 0);
    while (s.size() > 1) {
        std::size_t idx = s.find_deletable_index();
        Block removed = s.blocks()[idx];
        RectType t = s.classify(idx);
        s.remove_deletable_inplace(idx);
        Block next = s.blocks()[s.find_deletable_index()];
        auto shared = shared_edge_horizontal(removed, next);
        if (!shared)
            throw Error(Errc::InvariantBreach,
                        "consecutive deletable rectangles are not edge-adjacent");
        reversed.push_back(Triple{t.t1, t.t2, *shared});
    }
    CodeString code;
    code.triples.assign(reversed.rbegin(), reversed.rend());
    return code;
}

FloorplanDrawing decode(const CodeString& code) {
    Staircase s = Staircase::unit();
    std::size_t prev = 0;
    for (std::size_t i = 0; i < code.triples.size(); ++i) {
        const Triple& tr = code.triples[i];
        try {
            prev = s.attach_block_inplace(RectType{tr.t1, tr.t2}, tr.loc, prev);
        } catch (const Error& e) {
            if (e.code() == Errc::InvalidAttachment)
                throw Error(Errc::InvalidCode, "impossible attachment", i);
            throw;
        }
    }
    if (s.step_count() != 1)
        throw Error(Errc::InvalidCode, "code ends before the staircase closes",
                    code.triples.size());
    FloorplanDrawing raw =
        FloorplanDrawing::validate(s.blocks(), s.width(), s.height());
    return normalize(raw);
}

bool is_valid_code(const CodeString& code) {
    try {
        decode(code);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_valid_code(std::string_view ascii_bits) {
    try {
        return is_valid_code(code_from_ascii(ascii_bits));
    } catch (const Error&) {
        return false;
    }
}

CodeString code_from_ascii(std::string_view text) {
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '0' || c == '1')
            bits.push_back(c == '1');
        else if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        else
            throw Error(Errc::ParseError, std::string("unexpected character '") + c + "' in code");
    }
    if (bits.size() % 3 != 0)
        throw Error(Errc::BadLength, "bit count is not divisible by 3");
    CodeString code;
    code.triples.reserve(bits.size() / 3);
    for (std::size_t i = 0; i < bits.size(); i += 3)
        code.triples.push_back(Triple{bits[i], bits[i + 1], bits[i + 2]});
    return code;
}

std::string code_to_ascii(const CodeString& code, bool grouped) {
    std::string out;
    out.reserve(code.triples.size() * 4);
    for (std::size_t i = 0; i < code.triples.size(); ++i) {
        if (grouped && i > 0) out.push_back(' ');
        const Triple& t = code.triples[i];
        out.push_back(t.t1 ? '1' : '0');
        out.push_back(t.t2 ? '1' : '0');
        out.push_back(t.loc ? '1' : '0');
    }
    return out;
}

namespace {
constexpr char kMagic[4] = {'M', 'F', 'P', '1'};
} // namespace

std::vector<std::uint8_t> pack(const CodeString& code) {
    std::vector<std::uint8_t> out;
    std::size_t n = code.block_count();
    std::size_t bits = code.bit_length();
    out.reserve(8 + (bits + 7) / 8);
    out.insert(out.end(), kMagic, kMagic + 4);
    std::uint32_t n32 = std::uint32_t(n);
    for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t((n32 >> (8 * i)) & 0xff));

    std::uint8_t acc = 0;
    int used = 0;
    auto put = [&](bool bit) {
        acc = std::uint8_t((acc << 1) | (bit ? 1 : 0));
        if (++used == 8) {
            out.push_back(acc);
            acc = 0;
            used = 0;
        }
    };
    for (const Triple& t : code.triples) {
        put(t.t1);
        put(t.t2);
        put(t.loc);
    }
    if (used > 0) out.push_back(std::uint8_t(acc << (8 - used)));  // zero padding
    return out;
}

CodeString unpack(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw Error(Errc::BadMagic, "missing MFP1 magic");
    if (bytes.size() < 8) throw Error(Errc::TruncatedPayload, "header cut short");
    std::uint32_t n = 0;
    for (int i = 0; i < 4; ++i) n |= std::uint32_t(bytes[4 + i]) << (8 * i);
    if (n == 0) throw Error(Errc::BadLength, "block count must be at least 1");

    std::size_t bits = 3 * (std::size_t(n) - 1);
    std::size_t payload = (bits + 7) / 8;
    if (bytes.size() < 8 + payload) throw Error(Errc::TruncatedPayload, "payload cut short");
    if (bytes.size() > 8 + payload) throw Error(Errc::TrailingGarbage, "bytes after payload");

    auto bit_at = [&](std::size_t i) {
        return (bytes[8 + i / 8] >> (7 - i % 8)) & 1;
    };
    CodeString code;
    code.triples.reserve(n - 1);
    for (std::size_t i = 0; i < bits; i += 3)
        code.triples.push_back(Triple{bit_at(i) != 0, bit_at(i + 1) != 0, bit_at(i + 2) != 0});
    for (std::size_t i = bits; i < payload * 8; ++i)
        if (bit_at(i)) throw Error(Errc::TrailingGarbage, "padding bits must be zero");
    return code;
}

bool equivalent(const FloorplanDrawing& a, const FloorplanDrawing& b) {
    if (a.size() != b.size()) return false;
    return encode(a) == encode(b);
}

} // namespace mfp
