#pragma once

#include <Eigen/Core>
#include <vector>

#include "tga/multivector.hpp"

namespace tga::verify {

/// Faithful complex matrix representation of Cl(p,q) built from Kronecker
/// products of Pauli matrices. Generators of negative square carry a factor i.
/// Independent of the blade-table product, so it serves as an oracle for it.
class MatrixOracle {
 public:
  explicit MatrixOracle(const Signature& sig);

  const Signature& signature() const { return sig_; }
  int matrix_size() const { return size_; }

  Eigen::MatrixXcd represent(const Multivector& m) const;
  /// Re tr(M) / size, the scalar part of the represented element.
  double scalar_part(const Eigen::MatrixXcd& m) const;

 private:
  Signature sig_;
  int size_;
  std::vector<Eigen::MatrixXcd> blades_;
};

}  // namespace tga::verify
