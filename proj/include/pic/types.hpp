#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pic {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008;

// Loss families. One entry per supported transformation-pair row; the
// Cox partial-likelihood row is intentionally absent.
enum class Family {
  GaussianMSE,
  GaussianNLL,
  Subbotin,        // exponent r > 1; r = 2 matches GaussianMSE
  Laplace,
  GumbelNLL,       // minimum-type convention, see losses
  BernoulliNLL,    // sin link, eta restricted to [-pi/2, pi/2]
  BernoulliWSL,
  PoissonNLL,      // pivotal link mu = eta^2/4, eta > 0
  PoissonWSL,
  ExponentialNLL,
};

enum class LossKind { NLL, WSL, MrE };

// A loss family together with its asymptotic calibration constant c.
struct FamilySpec {
  Family family = Family::GaussianMSE;
  double r = 2.0;  // Subbotin exponent; ignored by other families
  double c = 1.0;
  LossKind loss_kind = LossKind::MrE;

  static FamilySpec gaussian_mse();
  static FamilySpec gaussian_nll();
  static FamilySpec subbotin(double r);
  static FamilySpec laplace();
  static FamilySpec gumbel();
  static FamilySpec bernoulli_wsl();
  static FamilySpec bernoulli_nll();
  static FamilySpec poisson_wsl();
  static FamilySpec poisson_nll();
  static FamilySpec exponential();

  std::string name() const;
  // Parses a CLI tag ("gaussian", "bernoulli", "subbotin", ...). The
  // bare exponential-family tags map to the WSL variants.
  static FamilySpec from_name(const std::string& tag, double subbotin_r = 1.5);

  bool is_location_scale() const;
  bool is_gaussian() const {
    return family == Family::GaussianMSE || family == Family::GaussianNLL;
  }
  bool is_bernoulli() const {
    return family == Family::BernoulliNLL || family == Family::BernoulliWSL;
  }
  bool is_poisson() const {
    return family == Family::PoissonNLL || family == Family::PoissonWSL;
  }
};

enum class PenaltyKind { L1, SCAD, L0Forward };

struct PenaltySpec {
  PenaltyKind kind = PenaltyKind::L1;
  double a = 3.7;  // SCAD shape, must be > 2

  static PenaltySpec l1() { return {PenaltyKind::L1, 3.7}; }
  static PenaltySpec scad(double a = 3.7);
  std::string name() const;
  static PenaltySpec from_name(const std::string& tag, double a = 3.7);
};

// Design matrix and response. Columns of a standardized design have
// mean zero and squared norm n; col_means/col_scales undo the map.
struct Dataset {
  MatrixXd X;
  VectorXd y;
  bool standardized = false;
  VectorXd col_means;
  VectorXd col_scales;
  std::vector<std::string> col_names;  // may be empty (synthetic data)

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index p() const { return X.cols(); }
  std::string name_of(Eigen::Index j) const {
    if (j >= 0 && j < static_cast<Eigen::Index>(col_names.size())) return col_names[j];
    return "x" + std::to_string(j + 1);
  }
};

// Ground truth for synthetic data: sparse coefficient vector plus
// nuisance parameters.
struct TruthSpec {
  double beta0 = 0.0;
  std::vector<int> support;  // 0-based, distinct
  VectorXd values;           // one per support index
  double sigma = 1.0;

  VectorXd dense_beta(Eigen::Index p) const;
};

struct SolverDiagnostics {
  double monotone_violation = 0.0;  // max observed objective increase
  double final_step = 0.0;
  bool degenerate_fit = false;      // stopped on (near-)exact interpolation
};

struct FitResult {
  double beta0_hat = 0.0;
  VectorXd beta_hat;
  std::optional<double> sigma_hat;
  std::vector<int> support_hat;  // exact nonzeros of beta_hat, 0-based
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<VectorXd> refit_beta;
  SolverDiagnostics diag;
};

std::vector<int> nonzero_support(const VectorXd& beta);

}  // namespace pic
