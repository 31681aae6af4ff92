#include "stringy/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringy {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("IntMat: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<std::vector<Int>>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  IntMat m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r)
      throw std::invalid_argument("IntMat: ragged cols");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  return m;
}

std::vector<Int> IntMat::row(int i) const {
  std::vector<Int> v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

std::vector<Int> IntMat::col(int j) const {
  std::vector<Int> v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch");
  IntMat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("IntMat: vector dimension mismatch");
  std::vector<Int> r(static_cast<size_t>(rows_), Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

HnfResult hnf(const IntMat& A) {
  HnfResult res{A, IntMat::identity(A.rows()), 0};
  IntMat& H = res.H;
  IntMat& U = res.U;
  const int m = A.rows(), n = A.cols();
  int r = 0;
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(H.at(a, j), H.at(b, j));
    for (int j = 0; j < m; ++j) std::swap(U.at(a, j), U.at(b, j));
  };
  auto addmul_row = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < n; ++j) H.at(dst, j) += q * H.at(src, j);
    for (int j = 0; j < m; ++j) U.at(dst, j) += q * U.at(src, j);
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < n; ++j) H.at(i, j) = -H.at(i, j);
    for (int j = 0; j < m; ++j) U.at(i, j) = -U.at(i, j);
  };
  for (int c = 0; c < n && r < m; ++c) {
    // euclidean reduction in column c among rows >= r
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        if (piv < 0 || boost::multiprecision::abs(H.at(i, c)) <
                           boost::multiprecision::abs(H.at(piv, c)))
          piv = i;
      }
      if (piv < 0) break;
      swap_rows(r, piv);
      bool more = false;
      for (int i = r + 1; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        Int q = H.at(i, c) / H.at(r, c); // truncated division shrinks |entry|
        addmul_row(i, r, -q);
        if (H.at(i, c) != 0) more = true;
      }
      if (!more) break;
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) negate_row(r);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(H.at(i, c), H.at(r, c));
      addmul_row(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMat kernel(const IntMat& A) {
  // rows u of U with u * A^T = 0 give A u^T = 0
  const IntMat At = A.transpose();
  HnfResult h = hnf(At);
  std::vector<std::vector<Int>> basis;
  for (int i = h.rank; i < At.rows(); ++i) basis.push_back(h.U.row(i));
  if (basis.empty()) return IntMat(A.cols(), 0);
  return IntMat::from_cols(basis);
}

IntMat saturate(const IntMat& S) {
  if (S.cols() == 0) return IntMat(S.rows(), 0);
  const IntMat K = kernel(S.transpose());
  if (K.cols() == 0) return IntMat::identity(S.rows());
  return kernel(K.transpose());
}

int IntMat::rank() const { return hnf(*this).rank; }

namespace {

// Fraction-free Bareiss determinant over an integral domain element type.
template <typename R, typename IsZero, typename ExactDiv>
R bareiss_det(std::vector<std::vector<R>> m, const R& one, IsZero is_zero,
              ExactDiv exact_div) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return one;
  R prev = one;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(m[i][k])) { piv = i; break; }
      if (piv < 0) return R{}; // zero column: determinant vanishes
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
    prev = m[k][k];
  }
  R d = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) d = R{} - d;
  return d;
}

} // namespace

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
  std::vector<std::vector<Int>> m(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) m[static_cast<size_t>(i)] = row(i);
  return bareiss_det<Int>(
      std::move(m), Int(1), [](const Int& x) { return x == 0; },
      [](const Int& a, const Int& b) {
        if (a % b != 0) throw std::logic_error("bareiss: inexact division");
        return Int(a / b);
      });
}

bool IntMat::is_unimodular() const {
  if (rows_ != cols_) return false;
  const Int d = det();
  return d == 1 || d == -1;
}

LPoly IntMat::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("char_poly: matrix not square");
  std::vector<std::vector<LPoly>> m(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    m[static_cast<size_t>(i)].resize(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) {
      LPoly e(-at(i, j));
      if (i == j) e += LPoly::var();
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
    }
  }
  return bareiss_det<LPoly>(
      std::move(m), LPoly::one(), [](const LPoly& p) { return p.is_zero(); },
      [](const LPoly& a, const LPoly& b) { return a.divide_exact(b); });
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& A, const std::vector<Rat>& b) {
  const int m = A.rows(), n = A.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve: size mismatch");
  std::vector<std::vector<Rat>> w(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(A.at(i, j));
    w[i][static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (w[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[static_cast<size_t>(r)], w[static_cast<size_t>(piv)]);
    const Rat d = w[r][c];
    for (int j = c; j <= n; ++j) w[r][j] /= d;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][c] == 0) continue;
      const Rat f = w[i][c];
      for (int j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (w[i][static_cast<size_t>(n)] != 0) return std::nullopt;
  std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
  for (int i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = w[i][static_cast<size_t>(n)];
  return x;
}

std::optional<std::vector<Int>> solve_integral(const IntMat& A, const std::vector<Int>& b) {
  std::vector<Rat> br(b.begin(), b.end());
  auto x = solve_rational(A, br);
  if (!x) return std::nullopt;
  std::vector<Int> out;
  out.reserve(x->size());
  for (const auto& q : *x) {
    if (den(q) != 1) return std::nullopt;
    out.push_back(num(q));
  }
  return out;
}

IntMat IntMat::inverse_unimodular() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  IntMat inv(rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    std::vector<Int> e(static_cast<size_t>(rows_), Int(0));
    e[static_cast<size_t>(j)] = 1;
    auto x = solve_integral(*this, e);
    if (!x) throw std::invalid_argument("inverse: matrix not unimodular");
    for (int i = 0; i < rows_; ++i) inv.at(i, j) = (*x)[static_cast<size_t>(i)];
  }
  return inv;
}

IntMat quotient_lattice_action(const IntMat& A, const IntMat& S) {
  const int m = A.rows();
  if (A.cols() != m || S.rows() != m)
    throw std::invalid_argument("quotient_lattice_action: shape mismatch");
  const IntMat Ssat = saturate(S);
  const int k = Ssat.cols();
  HnfResult h = hnf(Ssat);
  if (h.rank != k) throw std::logic_error("quotient_lattice_action: basis not independent");
  // saturated basis in HNF has unit pivots, so U*Ssat = (I_k ; 0)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (h.H.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("quotient_lattice_action: saturation failed");
  const IntMat C = h.U * A * h.U.inverse_unimodular();
  for (int i = k; i < m; ++i)
    for (int j = 0; j < k; ++j)
      if (C.at(i, j) != 0)
        throw std::invalid_argument("quotient_lattice_action: sublattice not stabilized");
  IntMat Q(m - k, m - k);
  for (int i = k; i < m; ++i)
    for (int j = k; j < m; ++j) Q.at(i - k, j - k) = C.at(i, j);
  return Q;
}

IntMat restrict_action(const IntMat& A, const IntMat& K) {
  const IntMat AK = A * K;
  IntMat R(K.cols(), K.cols());
  for (int j = 0; j < K.cols(); ++j) {
    auto x = solve_integral(K, AK.col(j));
    if (!x) throw std::invalid_argument("restrict_action: sublattice not stabilized");
    for (int i = 0; i < K.cols(); ++i) R.at(i, j) = (*x)[static_cast<size_t>(i)];
  }
  if (A * K != K * R) throw std::invalid_argument("restrict_action: sublattice not stabilized");
  return R;
}

} // namespace stringy
