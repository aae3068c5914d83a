#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylreal/series.hpp"
#include "weylreal/structure.hpp"
#include "weylreal/weyl_algebra.hpp"

namespace weylreal {

/// Rectangular matrix of Elements with parity-graded rows and columns.
/// Indices are 1-based to match the generator numbering.
class OpMatrix {
 public:
  OpMatrix(const Signature& sig, int truncation, std::vector<int> rowParity,
           std::vector<int> colParity);
  static OpMatrix identity(const Signature& sig, int truncation,
                           std::vector<int> parity);

  int rows() const { return static_cast<int>(rowParity_.size()); }
  int cols() const { return static_cast<int>(colParity_.size()); }
  const Signature& signature() const { return sig_; }
  int truncation() const { return trunc_; }
  const std::vector<int>& row_parity() const { return rowParity_; }
  const std::vector<int>& col_parity() const { return colParity_; }

  const Element& at(int r, int c) const;
  Element& at(int r, int c);

  OpMatrix operator+(const OpMatrix& o) const;
  OpMatrix operator-(const OpMatrix& o) const;
  OpMatrix operator*(const OpMatrix& o) const;  // row-into-column, left to right
  OpMatrix operator*(const Rational& c) const;
  bool operator==(const OpMatrix& o) const;
  bool is_zero() const;

  /// True when every entry is parity-homogeneous of parity
  /// (rowParity + colParity) mod 2.
  bool parity_consistent() const;

 private:
  Signature sig_;
  int trunc_;
  std::vector<int> rowParity_, colParity_;
  std::vector<Element> entries_;
};

inline OpMatrix operator*(const Rational& c, const OpMatrix& m) {
  return m * c;
}

/// The (n+m)x(n+m) operator matrix Ct_{AB} = sum_J Ctilde_{AJB} D_J; every
/// entry is homogeneous of ddegree 1.
OpMatrix build_ctilde(const FlatStructure& flat, int N);

/// The three blocks of the upper-triangular Ct: the even-even n x n block
/// Cmat_{mu nu} = sum_a C_{mu a nu} d_a, the n x m block
/// Lmat_{mu a} = -sum_b K_{b mu a} q_b, and the m x m block
/// Kmat_{ab} = sum_rho K_{a rho b} d_rho.
struct Blocks {
  OpMatrix C, L, K;
};
Blocks blocks(const AlgebraSpec& spec, int N);

/// [[C, L], [0, K]]; must reproduce build_ctilde(flatten(spec), N).
OpMatrix assemble_blocks(const Blocks& b);

/// sum_{k=0}^{N} fn[k] Mat^k with truncation N. Requires a square matrix
/// whose entries all have ddegree >= 1 (so the series terminates), built
/// at truncation N, and fn.order() >= N.
OpMatrix matrix_series(const OpMatrix& Mat, const SeriesFn& fn, int N);

/// Top-right n x m block of f(Ct) by the explicit double sum
/// F = sum_{k>=1} b_k sum_{l=1}^{k} C^{k-l} L K^{l-1}.
OpMatrix block_F(const AlgebraSpec& spec, int N);

/// The realized generators Zhat_A = sum_J z_J f(Ct)_{AJ}.
struct Realization {
  FlatStructure source;
  int truncation = 0;
  std::vector<Element> zhats;  // zhats[A-1]

  Signature signature() const { return Signature(source.n, source.m); }
  const Element& zhat(int A) const { return zhats.at(A - 1); }
  std::string str() const;
  nlohmann::ordered_json to_json() const;
};

Realization realization(const FlatStructure& flat, int N);

/// Same construction with an arbitrary coefficient front in place of the
/// Bernoulli one (negative controls, order-by-order solving).
Realization realization_with(const FlatStructure& flat, const SeriesFn& fn,
                             int N);

/// T = e^{Ct}, S = e^{-Ct}; T*S = identity modulo truncation.
std::pair<OpMatrix, OpMatrix> shift_operators(const FlatStructure& flat,
                                              int N);

}  // namespace weylreal
