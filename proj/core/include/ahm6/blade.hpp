#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ahm6 {

// A blade e_{i1...ik} with 1 <= i1 < ... < ik <= n is stored as a bitmask:
// index i occupies bit i-1. Sign bookkeeping for wedge, interior and
// Clifford products reduces to popcounts on these masks.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return std::popcount(b); }

inline Blade blade_bit(int index) { return Blade{1} << (index - 1); }

inline Blade blade_of(std::initializer_list<int> indices) {
    Blade b = 0;
    for (int i : indices) b |= blade_bit(i);
    return b;
}

inline std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int i = 1; b; ++i, b >>= 1)
        if (b & 1) out.push_back(i);
    return out;
}

/// "e135" for the blade {1,3,5}; "1" for the empty blade.
inline std::string blade_str(Blade b) {
    if (b == 0) return "1";
    std::string s = "e";
    for (int i : blade_indices(b)) s += static_cast<char>('0' + i);
    return s;
}

/// Permutation sign of concatenating two disjoint ascending index lists,
/// 0 if they overlap. This is the wedge sign e_a ^ e_b = sign * e_{a|b}.
inline int wedge_sign(Blade a, Blade b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Blade t = b; t; t &= t - 1) {
        int pos = std::countr_zero(t);
        swaps += std::popcount(a >> (pos + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

/// Sign of e_i -| e_b when i is in b: (-1)^(p-1) with p the position of i.
inline int interior_sign(int index, Blade b) {
    int below = std::popcount(b & (blade_bit(index) - 1));
    return (below & 1) ? -1 : 1;
}

/// Sign of the Clifford product e_a * e_b under the convention e_i e_i = -1.
/// The resulting blade is a XOR b.
inline int clifford_sign(Blade a, Blade b) {
    int swaps = 0;
    for (Blade t = b; t; t &= t - 1) {
        int pos = std::countr_zero(t);
        swaps += std::popcount(a >> (pos + 1));
    }
    swaps += std::popcount(a & b); // each repeated index contributes e_i e_i = -1
    return (swaps & 1) ? -1 : 1;
}

/// Graded lexicographic order: by grade, then by the ascending index tuples.
struct BladeLess {
    bool operator()(Blade a, Blade b) const {
        int ga = blade_grade(a), gb = blade_grade(b);
        if (ga != gb) return ga < gb;
        Blade d = a ^ b;
        if (d == 0) return false;
        return (a & (d & -d)) != 0; // a owns the smaller first-difference index
    }
};

/// All grade-k blades on {1..n} in lexicographic tuple order.
inline std::vector<Blade> enumerate_blades(int n, int k) {
    std::vector<Blade> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        Blade b = 0;
        for (int i : idx) b |= blade_bit(i);
        out.push_back(b);
        if (k == 0) break;
        int p = k - 1;
        while (p >= 0 && idx[p] == n - (k - 1 - p)) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
}

/// Position of a blade in enumerate_blades(n, grade(b)), or -1.
inline int blade_position(int n, Blade b) {
    // Combinatorial rank in the lexicographic tuple order.
    auto idx = blade_indices(b);
    int k = static_cast<int>(idx.size());
    auto binom = [](int nn, int kk) -> long {
        if (kk < 0 || kk > nn) return 0;
        long r = 1;
        for (int i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
        return r;
    };
    long rank = 0;
    int prev = 0;
    for (int p = 0; p < k; ++p) {
        for (int v = prev + 1; v < idx[p]; ++v) rank += binom(n - v, k - p - 1);
        prev = idx[p];
    }
    return static_cast<int>(rank);
}

} // namespace ahm6
