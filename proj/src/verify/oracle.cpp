#include "tga/verify/oracle.hpp"

#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

namespace tga::verify {

namespace {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

Mat pauli(int which) {
  Mat m = Mat::Zero(2, 2);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, C(0, -1), C(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Jordan-Wigner: generator 2k is Z..Z X I..I, generator 2k+1 is Z..Z Y I..I
// (k leading Z factors). All square to +1 and anticommute pairwise.
Mat jordan_wigner(int index, int qubits) {
  const int site = index / 2;
  Mat out = Mat::Identity(1, 1);
  for (int q = 0; q < qubits; ++q) {
    const int factor = q < site ? 3 : q == site ? 1 + index % 2 : 0;
    out = Mat(Eigen::kroneckerProduct(out, pauli(factor)));
  }
  return out;
}

}  // namespace

MatrixOracle::MatrixOracle(const Signature& sig) : sig_(sig) {
  const int qubits = std::max(1, (sig.dim() + 1) / 2);
  size_ = 1 << qubits;
  std::vector<Mat> gens;
  for (int i = 0; i < sig.dim(); ++i) {
    Mat g = jordan_wigner(i, qubits);
    if (sig.square(i) < 0) g *= C(0, 1);
    gens.push_back(g);
  }
  blades_.reserve(sig.blade_count());
  for (Blade b = 0; b < sig.blade_count(); ++b) {
    Mat m = Mat::Identity(size_, size_);
    for (int i = 0; i < sig.dim(); ++i) {
      if (b & (Blade{1} << i)) m = m * gens[i];
    }
    blades_.push_back(m);
  }
}

Eigen::MatrixXcd MatrixOracle::represent(const Multivector& m) const {
  Mat out = Mat::Zero(size_, size_);
  for (Blade b = 0; b < m.size(); ++b) {
    if (m[b] != 0.0) out += m[b] * blades_[b];
  }
  return out;
}

double MatrixOracle::scalar_part(const Eigen::MatrixXcd& m) const {
  return m.trace().real() / size_;
}

}  // namespace tga::verify
