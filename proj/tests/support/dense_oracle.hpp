#pragma once

// Brute-force reference built from Kronecker products of 2x2 matrices. It
// shares no code with the library and is only fit for small N.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using C = std::complex<double>;

inline Mat pauli2(int axis) {
  Mat m(2, 2);
  // Column 0 is the sigma_z = +1 state.
  switch (axis) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, C(0, -1), C(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Site l (1-based) is bit l-1 of the basis index, so it is the rightmost
// factor for l = 1.
inline Mat site_op(int n, int site, const Mat& op) {
  Mat out = Mat::Identity(1, 1);
  for (int l = n; l >= 1; --l) out = kron(out, l == site ? op : Mat::Identity(2, 2));
  return out;
}

inline Mat pauli(int n, int axis, int site) { return site_op(n, site, pauli2(axis)); }

inline Mat tfim(int n, double lambda) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat h = Mat::Zero(d, d);
  for (int l = 1; l <= n; ++l) {
    const int next = l % n + 1;
    h -= pauli(n, 2, l) * pauli(n, 2, next);
    h += lambda * pauli(n, 0, l);
  }
  return h;
}

inline Mat global_flip(int n) {
  Mat x = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int l = 1; l <= n; ++l) x = x * pauli(n, 0, l);
  return x;
}

inline Eigen::VectorXd spectrum(const Mat& h) {
  return Eigen::SelfAdjointEigenSolver<Mat>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

inline Mat vcm(const Vec& psi, int n) {
  std::vector<Mat> ops;
  for (int l = 1; l <= n; ++l)
    for (int a = 0; a < 3; ++a) ops.push_back(pauli(n, a, l));
  const Eigen::Index m = 3 * n;
  Mat v(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const C ab = psi.dot(ops[i] * ops[j] * psi);
      const C a = psi.dot(ops[i] * psi);
      const C b = psi.dot(ops[j] * psi);
      v(i, j) = ab - a * b;
    }
  }
  return v;
}

inline Mat w_matrix(const Mat& rho, int n) {
  std::vector<Mat> comm;
  for (int l = 1; l <= n; ++l)
    for (int a = 0; a < 3; ++a) {
      const Mat s = pauli(n, a, l);
      comm.push_back(rho * s - s * rho);
    }
  const Eigen::Index m = 3 * n;
  Mat w(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) w(i, j) = (comm[i] * comm[j].adjoint()).trace();
  return w;
}

inline Mat gibbs(const Mat& h, double kT) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd e = es.eigenvalues();
  Eigen::VectorXd w = (-(e.array() - e(0)) / kT).exp();
  w /= w.sum();
  return es.eigenvectors() * w.cast<C>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace oracle
