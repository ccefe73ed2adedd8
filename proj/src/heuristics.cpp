#include <conelift/error.hpp>
#include <conelift/factorize.hpp>

#include <cmath>
#include <random>

namespace conelift {

namespace {

using Eigen::MatrixXd;

MatrixXd to_double_matrix(const RatMatrix& m) {
  MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

double max_abs(const MatrixXd& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

// One run of hierarchical alternating least squares.
double hals(const MatrixXd& m, MatrixXd& w, MatrixXd& h, double tol, int iterations) {
  const Index k = w.cols();
  double res = max_abs(w * h - m);
  for (int it = 0; it < iterations && res >= tol; ++it) {
    const MatrixXd wtm = w.transpose() * m;
    const MatrixXd wtw = w.transpose() * w;
    for (Index r = 0; r < k; ++r) {
      if (wtw(r, r) <= 0) continue;
      h.row(r) = (h.row(r) + (wtm.row(r) - wtw.row(r) * h) / wtw(r, r)).cwiseMax(0.0);
    }
    const MatrixXd mht = m * h.transpose();
    const MatrixXd hht = h * h.transpose();
    for (Index r = 0; r < k; ++r) {
      if (hht(r, r) <= 0) continue;
      w.col(r) = (w.col(r) + (mht.col(r) - w * hht.col(r)) / hht(r, r)).cwiseMax(0.0);
    }
    res = max_abs(w * h - m);
  }
  return res;
}

struct GramState {
  std::vector<MatrixXd> u;  // rows
  std::vector<MatrixXd> v;  // columns
};

MatrixXd gram_residual(const MatrixXd& m, const GramState& s) {
  MatrixXd r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      r(i, j) = (s.u[static_cast<std::size_t>(i)].transpose() * s.v[static_cast<std::size_t>(j)]).squaredNorm() - m(i, j);
  return r;
}

double objective(const MatrixXd& r) { return r.squaredNorm(); }

// Damped Gauss-Newton (Levenberg-Marquardt) on the residuals ||U_i^T V_j||^2 - M_ij. Large damping
// turns the step into a short gradient step; a step is kept only when it decreases the sum of squares.
double gram_descent(const MatrixXd& m, GramState& s, double tol, int iterations) {
  const Index p = m.rows();
  const Index q = m.cols();
  const Index k = s.u.empty() ? 0 : s.u.front().rows();
  const Index block = k * k;
  const Index nparams = (p + q) * block;
  MatrixXd r = gram_residual(m, s);
  double f = objective(r);
  double lambda = 1e-3;
  for (int it = 0; it < iterations && max_abs(r) >= tol; ++it) {
    MatrixXd jac = MatrixXd::Zero(p * q, nparams);
    Eigen::VectorXd res(p * q);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < q; ++j) {
        const Index row = i * q + j;
        const MatrixXd& u = s.u[static_cast<std::size_t>(i)];
        const MatrixXd& v = s.v[static_cast<std::size_t>(j)];
        const MatrixXd du = 2 * v * (v.transpose() * u);
        const MatrixXd dv = 2 * u * (u.transpose() * v);
        jac.block(row, i * block, 1, block) = du.reshaped().transpose();
        jac.block(row, (p + j) * block, 1, block) = dv.reshaped().transpose();
        res(row) = r(i, j);
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Eigen::VectorXd step;
      if (p * q < nparams) {
        MatrixXd jjt = jac * jac.transpose();
        jjt.diagonal().array() += lambda;
        step = -jac.transpose() * jjt.ldlt().solve(res);
      } else {
        MatrixXd jtj = jac.transpose() * jac;
        jtj.diagonal().array() += lambda;
        step = -jtj.ldlt().solve(jac.transpose() * res);
      }
      GramState trial = s;
      for (Index i = 0; i < p; ++i)
        trial.u[static_cast<std::size_t>(i)] += step.segment(i * block, block).reshaped(k, k);
      for (Index j = 0; j < q; ++j)
        trial.v[static_cast<std::size_t>(j)] += step.segment((p + j) * block, block).reshaped(k, k);
      const MatrixXd tr = gram_residual(m, trial);
      const double tf = objective(tr);
      if (std::isfinite(tf) && tf < f) {
        s = std::move(trial);
        r = tr;
        f = tf;
        lambda = std::max(lambda / 3, 1e-12);
        improved = true;
      } else {
        lambda *= 4;
      }
    }
    if (!improved) break;
  }
  return max_abs(r);
}

// max |<a_i, b_j> - M_ij| over the stored factors.
double stored_residual(const MatrixXd& m, const NumericFactorization& f) {
  double worst = 0;
  for (std::size_t i = 0; i < f.a_list.size(); ++i)
    for (std::size_t j = 0; j < f.b_list.size(); ++j)
      worst = std::max(worst, std::abs(f.a_list[i].cwiseProduct(f.b_list[j]).sum() -
                                       m(static_cast<Index>(i), static_cast<Index>(j))));
  return worst;
}

}  // namespace

std::optional<NumericFactorization> nmf_heuristic(const RatMatrix& m, Index k, const HeuristicOptions& opts) {
  if ((m.array() < 0).any()) throw Error(ErrorCode::NegativeEntry, "matrix has a negative entry");
  if (opts.tol <= 0) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  const MatrixXd md = to_double_matrix(m);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scale = std::sqrt(std::max(md.size() ? md.mean() : 0.0, 1e-12) / std::max<Index>(k, 1));
  for (int run = 0; run < opts.restarts; ++run) {
    MatrixXd w(m.rows(), k), h(k, m.cols());
    for (Index i = 0; i < w.size(); ++i) w.data()[i] = scale * unit(rng);
    for (Index i = 0; i < h.size(); ++i) h.data()[i] = scale * unit(rng);
    const double res = hals(md, w, h, opts.tol, opts.max_iterations);
    if (res < opts.tol) {
      NumericFactorization out;
      out.cone = {ConeKind::Orthant, k};
      out.residual = res;
      out.seed = opts.seed;
      for (Index i = 0; i < m.rows(); ++i) out.a_list.push_back(w.row(i).transpose());
      for (Index j = 0; j < m.cols(); ++j) out.b_list.push_back(h.col(j));
      out.residual = stored_residual(md, out);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<NumericFactorization> psd_heuristic(const RatMatrix& m, Index k, const HeuristicOptions& opts) {
  if (opts.tol <= 0) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  const MatrixXd md = to_double_matrix(m);
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = std::pow(std::max(md.size() ? md.cwiseAbs().mean() : 0.0, 1e-12), 0.25) / std::sqrt(double(k));
  for (int run = 0; run < opts.restarts; ++run) {
    GramState s;
    for (Index i = 0; i < m.rows(); ++i) {
      MatrixXd u(k, k);
      for (Index t = 0; t < u.size(); ++t) u.data()[t] = scale * normal(rng);
      s.u.push_back(u);
    }
    for (Index j = 0; j < m.cols(); ++j) {
      MatrixXd v(k, k);
      for (Index t = 0; t < v.size(); ++t) v.data()[t] = scale * normal(rng);
      s.v.push_back(v);
    }
    const double res = gram_descent(md, s, opts.tol, opts.max_iterations);
    if (res < opts.tol) {
      NumericFactorization out;
      out.cone = {ConeKind::Psd, k};
      out.residual = res;
      out.seed = opts.seed;
      for (const auto& u : s.u) out.a_list.push_back(u * u.transpose());
      for (const auto& v : s.v) out.b_list.push_back(v * v.transpose());
      out.residual = stored_residual(md, out);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace conelift
