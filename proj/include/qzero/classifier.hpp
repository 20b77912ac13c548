// Classification of relation-satisfying rank-2 generator families: detect
// which of the six cases the family falls into from the norms of z31, z32,
// z21 and z21*z32, extract the unit phases spectrally, and build the unitary
// intertwiner onto the matching canonical model.

#pragma once

#include <random>

#include "qzero/areps.hpp"
#include "qzero/rep.hpp"

namespace qz {

struct ClassificationReport {
    int case_id = 0;  // 1..6
    Word6 word = Word6::e;
    Cplx extracted_lambda{1.0}, extracted_mu{1.0};  // per-case spectral values
    Cplx canon_lambda{1.0}, canon_mu{1.0};  // parameters of the equivalent canonical model
    double n31 = 0, n32 = 0, n21 = 0, n2132 = 0;  // decision norms
    double decision_margin = 0;                   // min distance of a norm to tol
};

// Decision table over the four norms at threshold `tol`:
//   case 1  z31 = 0, z32 = 0, z21 = 0          -> word e
//   case 2  z31 = 0, z32 = 0, z21 != 0         -> word s1
//   case 3  z31 = 0, z32 != 0, z21 = 0         -> word s2
//   case 4  z31 = 0, z32 != 0, z21 != 0        -> word s1s2
//   case 5  z31 != 0, z21 z32 = 0              -> word s2s1
//   case 6  z31 != 0, z21 z32 != 0             -> word s1s2s1
// Throws "indeterminate" when a decision norm falls within an order of
// magnitude of tol, "not-a-representation" when the spectral structure the
// cases rely on is absent (non-normal decision operators, non-unit phases,
// norm pattern inconsistent with the relations).
ClassificationReport classify(const DenseRep& r, double tol = 1e-6);

struct Intertwiner {
    CMat u;  // input_space x canonical_space, orbit columns
    double residual = 0.0;         // max_{i,j} ||(pi(z) U - U psi(z)) C||
    double orthonormality = 0.0;   // ||C (U*U - I) C|| on interior columns
};

// Builds the orbit unitary from the canonical model with the report's
// parameters (per-factor dimension `dim`) onto the input representation.
Intertwiner build_intertwiner(const DenseRep& r, const ClassificationReport& report, int dim,
                              int margin = 4);

// Haar-distributed unitary (for conjugation tests and demos).
CMat haar_unitary(int dim, std::mt19937_64& rng);

DenseRep conjugate(const DenseRep& r, const CMat& u);

}  // namespace qz
