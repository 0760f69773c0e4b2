#ifndef OCEAN_FFT_HPP
#define OCEAN_FFT_HPP

#include <utility>

#include "ocean/core.hpp"

namespace ocean {

// Frequency-space fields use a centered layout: storage index (i, j) holds
// the coefficient of wave index (i - N/2, j - N/2), with N a power of two.
// The synthesis direction is the plain (unnormalized) sum
//     out[a, b] = sum_{n,m} in[n, m] * exp(+2*pi*i*(n*a + m*b) / N)
// over wave indices n, m in [-N/2, N/2). An analysis transform would carry
// the 1/N^2; the synthesis here carries none so spatial amplitudes equal the
// direct sum of the stored coefficients.

// Storage index of the negated wave vector; index 0 (wave -N/2) aliases to
// itself.
inline int neg_index(int s, int n) { return s == 0 ? 0 : n - s; }

// True when field[i, j] == conj(field[-i, -j]) within tol, the symmetry that
// makes the synthesized signal real.
bool is_conjugate_symmetric(const ComplexField& field, double tol = 1e-9);

// Centered inverse transform: unnormalized inverse FFT in storage order
// followed by the (-1)^(i+j) sign correction that accounts for the
// [-N/2, N/2) indexing.
ComplexField ifft2_centered(ComplexField field);

// Packs two conjugate-symmetric spectra into one transform of X + iY and
// splits the real and imaginary parts of the result. Equivalent to two
// separate transforms of X and Y (whose outputs are real), at half the cost.
// When `check` is set the symmetry precondition is verified and an
// invariant violation throws.
std::pair<RealField, RealField> ifft2_hermitian_pair(const ComplexField& x,
                                                     const ComplexField& y,
                                                     bool check = false);

}  // namespace ocean

#endif
