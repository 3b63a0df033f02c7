#pragma once

#include <gmpxx.h>

#include <vector>

#include "mfp/codec.hpp"
#include "mfp/geometry.hpp"

namespace mfp {

// A sequence containing each of 1..n exactly once.
class Permutation {
public:
    static Permutation from_values(std::vector<int> values);  // validates
    static Permutation identity(std::size_t n);

    const std::vector<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }  // 0-based position

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
    std::vector<int> values_;
};

// B(n) = [C(n+1,1) C(n+1,2)]^-1 * sum_{r=0}^{n-1} C(n+1,r) C(n+1,r+1) C(n+1,r+2),
// computed exactly. The division is exact for every n; a nonzero remainder
// would be a bug and throws.
mpz_class baxter_number(unsigned n);

// True iff p avoids the vincular patterns 2-41-3 and 3-14-2 (the middle pair
// adjacent). O(n^2).
bool is_baxter(const Permutation& p);

// Label each block by its rank in the top-left deletion order, then read the
// labels in the bottom-left deletion order. Both orders come from the
// deletable-rectangle sequence of the mirrored / rotated drawing.
Permutation fp2bp(const FloorplanDrawing& f);

// Inverse of fp2bp on Baxter permutations. Grows the drawing by bottom-left
// corner insertions, keeping fp2bp of every partial drawing equal to the
// corresponding suffix pattern of p; the final result is verified to map back
// to p exactly. Polynomial in n. Throws NotBaxter for non-Baxter input.
FloorplanDrawing bp2fp(const Permutation& p);

// encode . bp2fp and fp2bp . decode.
CodeString encode_permutation(const Permutation& p);
Permutation decode_permutation(const CodeString& code);

} // namespace mfp
