#pragma once

#include <array>

#include "negsim/decoherence.hpp"
#include "negsim/types.hpp"

namespace negsim {

// 9x9 complex matrix, row major; basis |ij> -> index 3*i + j, probe A first.
using Mat9 = std::array<Cx, 81>;

struct TwoQutritState {
    Mat9 rho{};
};

// (|00> + |11> + |22>)/sqrt(3) as a projector: value 1/3 on the nine
// positions with row and column in {0, 4, 8}.
TwoQutritState initial_state();

// Dephased state: diagonal 1/3 at 0, 4, 8; entry (0,4) = f15/3, (0,8) = f19/3,
// (4,8) = f59/3, conjugates mirrored, all else zero. Rejects factor
// magnitudes above 1 + 1e-9 (they would break positivity).
TwoQutritState evolved_state(const DecoherenceSet& f);

// Transpose on probe A: out[(i,j),(k,l)] = in[(k,j),(i,l)].
Mat9 partial_transpose(const TwoQutritState& s);

// Eigenvalues of a 9x9 Hermitian matrix, ascending, by cyclic complex Jacobi
// rotations (no external solver). Convergence: off-diagonal Frobenius norm
// <= 1e-13. Rejects input that is not Hermitian to 1e-10. If vecs is given,
// its columns receive the eigenvectors in the same order.
std::array<double, 9> hermitian_eigenvalues(const Mat9& m, Mat9* vecs = nullptr);

// (sum of |eigenvalues of the partial transpose| - 1) / 2.
double negativity_spectral(const TwoQutritState& s);

// (|f15| + |f19| + |f59|) / 3. Rejects magnitudes outside [-1e-9, 1 + 1e-9].
double negativity_closed_form(double f15_mag, double f19_mag, double f59_mag);

}  // namespace negsim
