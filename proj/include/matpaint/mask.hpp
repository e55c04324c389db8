#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace matpaint {

// Subsets of a ground set with at most 16 elements, as bit masks over the
// sorted label order. Everything downstream (circuits, cocircuits, minors)
// lives in this representation.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask(1) << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    for (Mask t = m; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

// Lexicographic order on subsets viewed as ascending element sequences,
// e.g. {} < {a} < {a,b} < {a,c} < {b}. Used for every "pick the least"
// step so witnesses are reproducible.
inline bool mask_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask diff = a ^ b;
    int i = lowest_bit(diff);
    if (has_bit(a, i)) {
        // a owns the first differing element; a is smaller iff b has nothing
        // beyond the common prefix (b is a proper prefix of a -> b smaller).
        return (b >> i) != 0 ? true : false;
    }
    return (a >> i) != 0 ? false : true;
}

struct MaskLexLess {
    bool operator()(Mask a, Mask b) const { return mask_lex_less(a, b); }
};

// Enumerate all submasks of m (including 0 and m itself).
template <typename F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

}  // namespace matpaint
