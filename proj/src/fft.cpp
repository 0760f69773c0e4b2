#include "ocean/fft.hpp"

#include <vector>

namespace ocean {

namespace {

void check_square_pow2(const ComplexField& f) {
  if (f.size() < 2 || !is_power_of_two(f.size()))
    throw ConfigError("FFT field size must be a power of two >= 2, got " +
                      std::to_string(f.size()));
}

// In-place radix-2 transform with exponent +i (synthesis direction),
// unnormalized. `twiddle[j] = exp(+2*pi*i*j/n)` for j < n/2.
void fft1d(cplx* a, int n, const std::vector<cplx>& twiddle) {
  // bit reversal
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    int stride = n / len;
    for (int i = 0; i < n; i += len) {
      for (int k = 0; k < len / 2; ++k) {
        cplx w = twiddle[static_cast<size_t>(k) * stride];
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

void ifft2_raw(ComplexField& f) {
  int n = f.size();
  std::vector<cplx> twiddle(n / 2);
  for (int j = 0; j < n / 2; ++j)
    twiddle[j] = cplx(std::cos(2.0 * kPi * j / n), std::sin(2.0 * kPi * j / n));

  for (int i = 0; i < n; ++i) fft1d(f.data() + static_cast<size_t>(i) * n, n, twiddle);

  std::vector<cplx> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = f.at(i, j);
    fft1d(col.data(), n, twiddle);
    for (int i = 0; i < n; ++i) f.at(i, j) = col[i];
  }
}

}  // namespace

bool is_conjugate_symmetric(const ComplexField& field, double tol) {
  int n = field.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx a = field.at(i, j);
      cplx b = std::conj(field.at(neg_index(i, n), neg_index(j, n)));
      if (std::abs(a - b) > tol) return false;
    }
  }
  return true;
}

ComplexField ifft2_centered(ComplexField field) {
  check_square_pow2(field);
  ifft2_raw(field);
  int n = field.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) & 1) field.at(i, j) = -field.at(i, j);
  return field;
}

std::pair<RealField, RealField> ifft2_hermitian_pair(const ComplexField& x,
                                                     const ComplexField& y,
                                                     bool check) {
  check_square_pow2(x);
  if (x.size() != y.size()) throw ConfigError("paired FFT fields must have equal size");
  if (check) {
    if (!is_conjugate_symmetric(x) || !is_conjugate_symmetric(y))
      throw NumericError("ifft2_hermitian_pair: inputs are not conjugate-symmetric");
  }
  int n = x.size();
  ComplexField packed(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) packed.at(i, j) = x.at(i, j) + cplx(0, 1) * y.at(i, j);
  packed = ifft2_centered(std::move(packed));
  RealField re(n), im(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      re.at(i, j) = packed.at(i, j).real();
      im.at(i, j) = packed.at(i, j).imag();
    }
  }
  return {std::move(re), std::move(im)};
}

}  // namespace ocean
