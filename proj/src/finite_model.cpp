#include "gabor/finite_model.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/SVD>

#include "gabor/error.hpp"

namespace gabor {

namespace {

double scale_of(const Matrix& K) { return std::max(1.0, K.norm()); }

struct Svd {
  Matrix U;
  Eigen::VectorXd sigma;
  Matrix V;
  Eigen::Index rank = 0;
};

Svd thin_svd(const Matrix& A, double tol) {
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out{svd.matrixU(), svd.singularValues(), svd.matrixV(), 0};
  const double cutoff = out.sigma.size() > 0 ? tol * out.sigma(0) : 0.0;
  while (out.rank < out.sigma.size() && out.sigma(out.rank) > cutoff && out.sigma(out.rank) > 0.0) {
    ++out.rank;
  }
  return out;
}

void require_square(const FiniteModel& model, const KOperator& K) {
  if (K.matrix.rows() != model.P() || K.matrix.cols() != model.P()) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator is " + std::to_string(K.matrix.rows()) + "x" +
                    std::to_string(K.matrix.cols()) + ", model has P = " + std::to_string(model.P()));
  }
}

}  // namespace

FiniteModel::FiniteModel(const GaborSystem& sys, std::int64_t periods)
    : M_(sys.M()), N_(sys.N()), L_(sys.L()) {
  if (periods < 1) throw Error(ErrorKind::ParameterMismatch, "periods must be positive");
  const std::int64_t base = std::lcm(std::lcm(M_, N_), sys.set().period());
  P_ = periods * base;
  const std::int64_t shifts = P_ / N_;
  U_ = Matrix::Zero(P_, L_ * shifts * M_);
  atoms_.reserve(static_cast<std::size_t>(U_.cols()));
  Eigen::Index col = 0;
  for (std::int64_t l = 0; l < L_; ++l) {
    const Window& g = sys.window(l);
    if (g.size() > P_) wraps_ = true;
    for (std::int64_t n = 0; n < shifts; ++n) {
      for (std::int64_t m = 0; m < M_; ++m, ++col) {
        atoms_.push_back({l, m, n});
        for (std::int64_t i = 0; i < g.size(); ++i) {
          const std::int64_t j = g.first() + i + n * N_;
          U_(mod_floor(j, P_), col) += g.values()[static_cast<std::size_t>(i)] * unit_root(m * j, M_);
        }
      }
    }
  }
  for (std::int64_t j = 0; j < P_; ++j) {
    if (sys.set().contains(j)) set_rows_.push_back(j);
  }
}

Matrix FiniteModel::frame_operator() const { return U_ * U_.adjoint(); }

Vector FiniteModel::periodize(const Window& f) const {
  Vector x = Vector::Zero(P_);
  for (std::int64_t i = 0; i < f.size(); ++i) {
    x(mod_floor(f.first() + i, P_)) += f.values()[static_cast<std::size_t>(i)];
  }
  return x;
}

Matrix FiniteModel::modulation_matrix(std::int64_t m) const {
  Matrix E = Matrix::Zero(P_, P_);
  for (std::int64_t j = 0; j < P_; ++j) E(j, j) = unit_root(m * j, M_);
  return E;
}

Matrix FiniteModel::translation_matrix(std::int64_t shift) const {
  Matrix T = Matrix::Zero(P_, P_);
  for (std::int64_t j = 0; j < P_; ++j) T(mod_floor(j + shift, P_), j) = 1.0;
  return T;
}

FiniteModel build_model(const GaborSystem& sys, std::int64_t periods) {
  return FiniteModel(sys, periods);
}

SpectralBounds spectral_frame_bounds(const FiniteModel& model) {
  const auto& rows = model.set_rows();
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Matrix sub(n, n);
  const Matrix S = model.frame_operator();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) sub(a, b) = S(rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(b)]);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sub, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

Matrix range_projector(const Matrix& U, double tol) {
  const Svd svd = thin_svd(U, tol);
  const Matrix basis = svd.U.leftCols(svd.rank);
  return basis * basis.adjoint();
}

double douglas_residual(const FiniteModel& model, const KOperator& K, double tol) {
  require_square(model, K);
  const Matrix Pi = range_projector(model.synthesis(), tol);
  return (K.matrix - Pi * K.matrix).norm() / scale_of(K.matrix);
}

bool douglas_range_check(const FiniteModel& model, const KOperator& K, double tol) {
  return douglas_residual(model, K, tol) <= tol;
}

KFrameVerdict kframe_verdict(const FiniteModel& model, const KOperator& K, double tol) {
  require_square(model, K);
  KFrameVerdict out;
  out.P = model.P();
  const Matrix S = model.frame_operator();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(S);
  const auto& lambda = eig.eigenvalues();
  out.B = lambda.maxCoeff();
  if (K.matrix.norm() == 0.0) {
    out.zero_operator = true;
    out.is_kframe = true;
    return out;
  }
  out.is_kframe = douglas_range_check(model, K, tol);
  if (!out.is_kframe) return out;

  // (U Uᴴ)⁺ on the numerically nonzero spectrum
  const double cutoff = tol * std::max(out.B, 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > cutoff && lambda(i) > 0.0) inv(i) = 1.0 / lambda(i);
  }
  const Matrix& V = eig.eigenvectors();
  const Matrix S_pinv = V * inv.cast<cplx>().asDiagonal() * V.adjoint();
  const Matrix inner = K.matrix.adjoint() * S_pinv * K.matrix;
  Eigen::SelfAdjointEigenSolver<Matrix> inner_eig(inner, Eigen::EigenvaluesOnly);
  const double top = inner_eig.eigenvalues().maxCoeff();
  if (top > 0.0) out.A_opt = 1.0 / top;
  return out;
}

KOperator s_hg_matrix(const FiniteModel& model_g, const FiniteModel& model_h) {
  if (model_g.P() != model_h.P() || model_g.atom_count() != model_h.atom_count()) {
    throw Error(ErrorKind::DimensionMismatch, "models differ in P or atom indexing");
  }
  return {model_g.synthesis() * model_h.synthesis().adjoint()};
}

Matrix k_dual_minimal_norm(const FiniteModel& model, const KOperator& K, double tol) {
  require_square(model, K);
  if (!douglas_range_check(model, K, tol)) {
    throw Error(ErrorKind::RangeViolation, "range(K) is not contained in range(U)");
  }
  const Svd svd = thin_svd(model.synthesis(), tol);
  const Eigen::Index r = svd.rank;
  Matrix pinv = Matrix::Zero(model.atom_count(), model.P());
  if (r > 0) {
    const Eigen::VectorXd inv = svd.sigma.head(r).cwiseInverse();
    pinv = svd.V.leftCols(r) * inv.cast<cplx>().asDiagonal() * svd.U.leftCols(r).adjoint();
  }
  const Matrix factor = pinv * K.matrix;
  const double residual = (model.synthesis() * factor - K.matrix).norm() / scale_of(K.matrix);
  if (residual > tol) {
    throw Error(ErrorKind::RangeViolation, "factorization residual " + std::to_string(residual));
  }
  return factor.adjoint();
}

Vector random_vector(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector x(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    x(i) = cplx(re, im);
  }
  return x;
}

double k_dual_reconstruction_error(const FiniteModel& model, const KOperator& K,
                                   const Matrix& duals, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vector x = random_vector(model.P(), seed + static_cast<std::uint64_t>(s));
    // Σ_i ⟨x, f_i⟩ atom_i = U (dualsᴴ x)
    const Vector rebuilt = model.synthesis() * (duals.adjoint() * x);
    worst = std::max(worst, (K.matrix * x - rebuilt).norm() / std::max(1.0, x.norm()));
  }
  return worst;
}

bool k_minimality_check(const FiniteModel& model, double tol) {
  if (model.atom_count() > model.P()) return false;
  const Svd svd = thin_svd(model.synthesis(), tol);
  return svd.rank == model.atom_count();
}

bool km_composition_check(const FiniteModel& model, const KOperator& K, const KOperator& Mop,
                          const Matrix& kduals, double tol, std::uint64_t seed) {
  require_square(model, K);
  require_square(model, Mop);
  const KOperator composed{K.matrix * Mop.matrix};
  if (!douglas_range_check(model, composed, kDefaultRankTol)) {
    throw Error(ErrorKind::RangeViolation, "range(K·M) is not contained in range(U)");
  }
  const Matrix moved = Mop.matrix.adjoint() * kduals;
  const double scale = std::max(1.0, composed.matrix.norm());
  return k_dual_reconstruction_error(model, composed, moved, 20, seed) <= tol * scale;
}

}  // namespace gabor
