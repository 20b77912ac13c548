// Canonical irreducible representations of A_2(0) for the six reduced words,
// irreducibility witnesses, the faithful Toeplitz-circle embedding, its
// character factorizations, and the proper-subalgebra demonstration.

#pragma once

#include "qzero/crystal.hpp"

namespace qz {

enum class Word6 { e, s1, s2, s12, s21, s121 };

std::string word6_str(Word6 w);
Word6 word6_parse(const std::string& s);
ReducedWord word6_reduced_word(Word6 w);
const std::vector<Word6>& all_words6();

struct CanonicalModel {
    Cplx lambda{1.0}, mu{1.0};
    Word6 word = Word6::e;
    ZRep rep;
};

// Built by crystal convolution of the q = 0 elementary blocks; for the words
// with explicitly tabulated matrices this reproduces them entrywise.
CanonicalModel canonical_model(Cplx lambda, Cplx mu, Word6 word, int dim);

// Matrix-unit formulas: scalar * word-in-generators applied to the model must
// reproduce literal matrix units |e_j><e_k| (tensored with identities).
// Reports the interior deviation over a grid of indices up to max_index.
RelationReport irreducibility_witness(const CanonicalModel& m, int max_index, int margin);

// The faithful embedding into C(S^1) (x) C(S^1) (x) T^{(x)3}: line factors of
// dimension 2M+1 carry the bilateral shift; the Toeplitz part is the
// canonical s1s2s1 model at phases (1,1) on half-line factors of dimension N.
Rep phi_embedding(int M, int N);

struct ThetaReport {
    Word6 word;
    double max_deviation = 0.0;  // entrywise, against the canonical model
    bool exact = false;
};

// Applies circle evaluations at (lambda, mu) to the two line factors and the
// Toeplitz symbol at 1 to the half-line factors the word discards, acting on
// the syntactic block decomposition; compares with canonical_model.
ThetaReport theta_factorize(Cplx lambda, Cplx mu, Word6 word, int M, int dim);

// Character-level obstruction: evaluates p under z_{i,j} |-> delta_{i,j} and
// returns max over sample phases of |lambda^2 - value|.  The result is >= 1
// for every polynomial, which keeps S (x) S (x) S* out of the image closure.
double toeplitz_gap_demo(const StarPolynomial& p, const std::vector<Cplx>& sample_phases);
std::vector<Cplx> eighth_roots();

}  // namespace qz
