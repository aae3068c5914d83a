#include "weylreal/realize.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weylreal {

OpMatrix::OpMatrix(const Signature& sig, int truncation,
                   std::vector<int> rowParity, std::vector<int> colParity)
    : sig_(sig),
      trunc_(truncation),
      rowParity_(std::move(rowParity)),
      colParity_(std::move(colParity)),
      entries_(rowParity_.size() * colParity_.size(),
               Element::zero(sig, truncation)) {
  for (int p : rowParity_)
    if (p != 0 && p != 1) throw std::invalid_argument("parity must be 0 or 1");
  for (int p : colParity_)
    if (p != 0 && p != 1) throw std::invalid_argument("parity must be 0 or 1");
}

OpMatrix OpMatrix::identity(const Signature& sig, int truncation,
                            std::vector<int> parity) {
  OpMatrix I(sig, truncation, parity, parity);
  for (int r = 1; r <= I.rows(); ++r)
    I.at(r, r) = Element::unit(sig, truncation);
  return I;
}

const Element& OpMatrix::at(int r, int c) const {
  if (r < 1 || r > rows() || c < 1 || c > cols())
    throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r - 1) * cols() + (c - 1)];
}

Element& OpMatrix::at(int r, int c) {
  if (r < 1 || r > rows() || c < 1 || c > cols())
    throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r - 1) * cols() + (c - 1)];
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
  if (rowParity_ != o.rowParity_ || colParity_ != o.colParity_)
    throw std::invalid_argument("matrix shape/parity mismatch");
  OpMatrix r(sig_, trunc_, rowParity_, colParity_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
  if (rowParity_ != o.rowParity_ || colParity_ != o.colParity_)
    throw std::invalid_argument("matrix shape/parity mismatch");
  OpMatrix r(sig_, trunc_, rowParity_, colParity_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
  if (colParity_ != o.rowParity_)
    throw std::invalid_argument("matrix inner shape/parity mismatch");
  OpMatrix r(sig_, trunc_, rowParity_, o.colParity_);
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= o.cols(); ++j) {
      Element acc = Element::zero(sig_, trunc_);
      for (int k = 1; k <= cols(); ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

OpMatrix OpMatrix::operator*(const Rational& c) const {
  OpMatrix r(sig_, trunc_, rowParity_, colParity_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = entries_[i] * c;
  return r;
}

bool OpMatrix::operator==(const OpMatrix& o) const {
  return rowParity_ == o.rowParity_ && colParity_ == o.colParity_ &&
         entries_ == o.entries_;
}

bool OpMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool OpMatrix::parity_consistent() const {
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= cols(); ++c) {
      const int p = (rowParity_[r - 1] + colParity_[c - 1]) % 2;
      if (!at(r, c).parity_part(1 - p).is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> parities(const FlatStructure& flat) {
  std::vector<int> p(flat.dim());
  for (int A = 1; A <= flat.dim(); ++A) p[A - 1] = flat.parity(A);
  return p;
}

}  // namespace

OpMatrix build_ctilde(const FlatStructure& flat, int N) {
  if (N < 1) throw std::invalid_argument("truncation order must be >= 1");
  const Signature sig(flat.n, flat.m);
  OpMatrix mat(sig, N, parities(flat), parities(flat));
  for (const auto& [key, v] : flat.ctilde) {
    const auto [A, J, B] = key;
    mat.at(A, B) += Element::D(sig, N, J) * v;
  }
  return mat;
}

Blocks blocks(const AlgebraSpec& spec, int N) {
  if (N < 1) throw std::invalid_argument("truncation order must be >= 1");
  const ValidationReport report = validate(spec);
  if (!report.ok())
    throw std::invalid_argument("invalid structure:\n" + report.str());
  const Signature sig(spec.n, spec.m);
  const std::vector<int> even(spec.n, 0), odd(spec.m, 1);

  Blocks b{OpMatrix(sig, N, even, even), OpMatrix(sig, N, even, odd),
           OpMatrix(sig, N, odd, odd)};
  for (int mu = 1; mu <= spec.n; ++mu)
    for (int nu = 1; nu <= spec.n; ++nu)
      for (int al = 1; al <= spec.n; ++al) {
        const Rational v = spec.c(mu, al, nu);
        if (v != 0) b.C.at(mu, nu) += Element::d(sig, N, al) * v;
      }
  for (int mu = 1; mu <= spec.n; ++mu)
    for (int a = 1; a <= spec.m; ++a)
      for (int bb = 1; bb <= spec.m; ++bb) {
        const Rational v = spec.k(bb, mu, a);
        if (v != 0) b.L.at(mu, a) -= Element::q(sig, N, bb) * v;
      }
  for (int a = 1; a <= spec.m; ++a)
    for (int bb = 1; bb <= spec.m; ++bb)
      for (int rho = 1; rho <= spec.n; ++rho) {
        const Rational v = spec.k(a, rho, bb);
        if (v != 0) b.K.at(a, bb) += Element::d(sig, N, rho) * v;
      }
  return b;
}

OpMatrix assemble_blocks(const Blocks& b) {
  const Signature& sig = b.C.signature();
  const int n = b.C.rows();
  const int m = b.K.rows();
  std::vector<int> parity(n + m, 0);
  for (int a = 0; a < m; ++a) parity[n + a] = 1;
  OpMatrix full(sig, b.C.truncation(), parity, parity);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) full.at(i, j) = b.C.at(i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) full.at(i, n + j) = b.L.at(i, j);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) full.at(n + i, n + j) = b.K.at(i, j);
  return full;
}

OpMatrix matrix_series(const OpMatrix& Mat, const SeriesFn& fn, int N) {
  if (Mat.rows() != Mat.cols())
    throw std::invalid_argument("matrix series needs a square matrix");
  if (Mat.truncation() != N)
    throw std::invalid_argument("matrix truncation must equal series order");
  if (fn.order() < N)
    throw std::invalid_argument("coefficient front shorter than series order");
  for (int r = 1; r <= Mat.rows(); ++r)
    for (int c = 1; c <= Mat.cols(); ++c) {
      const Element& e = Mat.at(r, c);
      if (!e.is_zero() && e.min_ddegree() < 1)
        throw std::invalid_argument(
            "matrix series needs entries of ddegree >= 1");
    }

  OpMatrix power = OpMatrix::identity(Mat.signature(), N, Mat.row_parity());
  OpMatrix acc = power * fn[0];
  for (int k = 1; k <= N; ++k) {
    power = power * Mat;
    if (power.is_zero()) break;
    if (fn[k] != 0) acc = acc + power * fn[k];
  }
  return acc;
}

OpMatrix block_F(const AlgebraSpec& spec, int N) {
  const Blocks b = blocks(spec, N);
  const Signature sig(spec.n, spec.m);
  const SeriesFn bern = bernoulli_coeffs(N);

  std::vector<OpMatrix> Cp{OpMatrix::identity(sig, N, b.C.row_parity())};
  std::vector<OpMatrix> Kp{OpMatrix::identity(sig, N, b.K.row_parity())};
  for (int k = 1; k <= N - 1; ++k) {
    Cp.push_back(Cp.back() * b.C);
    Kp.push_back(Kp.back() * b.K);
  }

  OpMatrix F(sig, N, b.L.row_parity(), b.L.col_parity());
  for (int k = 1; k <= N; ++k) {
    if (bern[k] == 0) continue;
    for (int l = 1; l <= k; ++l)
      F = F + Cp[k - l] * b.L * Kp[l - 1] * bern[k];
  }
  return F;
}

// ---------------------------------------------------------------------------

Realization realization_with(const FlatStructure& flat, const SeriesFn& fn,
                             int N) {
  const Signature sig(flat.n, flat.m);
  const OpMatrix fC = matrix_series(build_ctilde(flat, N), fn, N);
  Realization R;
  R.source = flat;
  R.truncation = N;
  R.zhats.reserve(flat.dim());
  for (int A = 1; A <= flat.dim(); ++A) {
    Element zhat = Element::zero(sig, N);
    for (int J = 1; J <= flat.dim(); ++J)
      zhat += Element::z(sig, N, J) * fC.at(A, J);
    R.zhats.push_back(std::move(zhat));
  }
  return R;
}

Realization realization(const FlatStructure& flat, int N) {
  return realization_with(flat, bernoulli_coeffs(N), N);
}

std::pair<OpMatrix, OpMatrix> shift_operators(const FlatStructure& flat,
                                              int N) {
  const OpMatrix ct = build_ctilde(flat, N);
  return {matrix_series(ct, exp_coeffs(N), N),
          matrix_series(ct, exp_neg_coeffs(N), N)};
}

std::string Realization::str() const {
  std::ostringstream os;
  for (int A = 1; A <= source.dim(); ++A) {
    const std::string name = A <= source.n
                                 ? "X" + std::to_string(A)
                                 : "theta" + std::to_string(A - source.n);
    os << name << " = " << zhat(A).str() << "\n";
  }
  return os.str();
}

nlohmann::ordered_json Realization::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = source.n;
  j["m"] = source.m;
  j["truncation"] = truncation;
  auto gens = nlohmann::ordered_json::array();
  for (int A = 1; A <= source.dim(); ++A) {
    const std::string name = A <= source.n
                                 ? "X" + std::to_string(A)
                                 : "theta" + std::to_string(A - source.n);
    gens.push_back({{"name", name},
                    {"element", zhat(A).to_json()},
                    {"text", zhat(A).str()}});
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace weylreal
