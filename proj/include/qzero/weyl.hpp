// Symmetric-group bookkeeping: permutations with inversion length and reduced
// words in the adjacent transpositions s_1..s_n.

#pragma once

#include <string>
#include <vector>

#include "qzero/core.hpp"

namespace qz {

struct Permutation {
    std::vector<int> images;  // images[k-1] = sigma(k), values 1..m

    static Permutation identity(int m);
    static Permutation transposition(int m, int k);  // s_k = (k, k+1)

    int size() const { return static_cast<int>(images.size()); }
    int length() const;  // inversion count
    bool is_identity() const;
    void validate() const;

    // (a * b)(k) = a(b(k))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

std::vector<Permutation> all_permutations(int m);

struct ReducedWord {
    int n = 1;                 // rank: letters range over 1..n
    std::vector<int> letters;  // left-to-right

    int length() const { return static_cast<int>(letters.size()); }
    Permutation permutation() const;  // element of S_{n+1}
    bool is_reduced() const;          // inversion length == letter count
    void validate() const;            // throws "invalid-word"
    std::string str() const;          // "s1s2s1", "e" for the empty word
};

// One canonical reduced word per element of S_{n+1}: products of descending
// runs s_b s_{b-1} .. s_a grouped by strictly increasing b.
std::vector<ReducedWord> canonical_reduced_words(int n);

// Every reduced expression of every element (DFS, letters appended only when
// they increase the inversion count).  Grows fast; intended for small n.
std::vector<ReducedWord> all_reduced_expressions(int n);

}  // namespace qz
