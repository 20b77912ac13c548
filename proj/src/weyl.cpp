#include "qzero/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace qz {

Permutation Permutation::identity(int m) {
    Permutation p;
    p.images.resize(m);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::transposition(int m, int k) {
    if (k < 1 || k >= m) throw Error("invalid-parameter", "transposition index out of range");
    Permutation p = identity(m);
    std::swap(p.images[k - 1], p.images[k]);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i) + 1) return false;
    return true;
}

void Permutation::validate() const {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
            throw Error("invalid-parameter", "not a bijection");
        seen[v - 1] = 1;
    }
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error("invalid-parameter", "size mismatch");
    Permutation p;
    p.images.resize(a.size());
    for (int k = 1; k <= a.size(); ++k) p.images[k - 1] = a.images[b.images[k - 1] - 1];
    return p;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation ReducedWord::permutation() const {
    Permutation p = Permutation::identity(n + 1);
    for (int k : letters) p = p * Permutation::transposition(n + 1, k);
    return p;
}

bool ReducedWord::is_reduced() const {
    for (int k : letters)
        if (k < 1 || k > n) return false;
    return permutation().length() == length();
}

void ReducedWord::validate() const {
    if (n < 1) throw Error("invalid-parameter", "rank must be >= 1");
    if (!is_reduced()) throw Error("invalid-word", "word is not reduced for rank " + std::to_string(n));
}

std::string ReducedWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (int k : letters) s += "s" + std::to_string(k);
    return s;
}

std::vector<ReducedWord> canonical_reduced_words(int n) {
    // choose a subset of run tops b_1 < ... < b_k and a start a_i <= b_i each
    std::vector<ReducedWord> out;
    const int m = n;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> tops;
        for (int b = 1; b <= m; ++b)
            if (mask & (1 << (b - 1))) tops.push_back(b);
        std::vector<int> starts(tops.size(), 1);
        // iterate over all start choices a_i in 1..b_i
        while (true) {
            ReducedWord w;
            w.n = n;
            for (size_t i = 0; i < tops.size(); ++i)
                for (int k = tops[i]; k >= starts[i]; --k) w.letters.push_back(k);
            out.push_back(w);
            int pos = static_cast<int>(tops.size()) - 1;
            while (pos >= 0 && starts[pos] == tops[pos]) {
                starts[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++starts[pos];
        }
    }
    std::sort(out.begin(), out.end(), [](const ReducedWord& a, const ReducedWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters < b.letters;
    });
    return out;
}

namespace {
void extend_expressions(const ReducedWord& w, std::vector<ReducedWord>& out) {
    out.push_back(w);
    for (int k = 1; k <= w.n; ++k) {
        ReducedWord next = w;
        next.letters.push_back(k);
        if (next.is_reduced()) extend_expressions(next, out);
    }
}
}  // namespace

std::vector<ReducedWord> all_reduced_expressions(int n) {
    std::vector<ReducedWord> out;
    ReducedWord e;
    e.n = n;
    extend_expressions(e, out);
    std::sort(out.begin(), out.end(), [](const ReducedWord& a, const ReducedWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters < b.letters;
    });
    return out;
}

}  // namespace qz
