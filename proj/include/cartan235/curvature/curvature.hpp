#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cartan235/exterior/coframe.hpp"

namespace cartan235::curvature {

using exterior::Coframe;
using exterior::DifferentialForm;
using symcore::Matrix;
using symcore::RationalFunction;

/// Levi-Civita connection 1-forms Gamma^i_j = Gamma^i_jk theta^k in the theta basis,
/// with d theta^i = -Gamma^i_j ^ theta^j.
class ConnectionForms {
 public:
  ConnectionForms(std::size_t n, std::vector<DifferentialForm> forms) : n_(n), forms_(std::move(forms)) {}

  std::size_t dimension() const noexcept { return n_; }
  const DifferentialForm& operator()(std::size_t i, std::size_t j) const { return forms_.at(i * n_ + j); }
  RationalFunction component(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<DifferentialForm> forms_;
};

ConnectionForms connection_forms(const Coframe& c);

/// d theta^i + Gamma^i_j ^ theta^j for each i; all zero for a torsion-free connection.
std::vector<DifferentialForm> torsion_residual(const ConnectionForms& gamma, const Coframe& c);
/// g_ik Gamma^k_j + g_jk Gamma^k_i for each pair i <= j.
std::vector<DifferentialForm> metricity_residual(const ConnectionForms& gamma, const Coframe& c);

/// Curvature 2-forms Omega^i_j = d Gamma^i_j + Gamma^i_k ^ Gamma^k_j = 1/2 R^i_jkl theta^k ^ theta^l.
class RiemannTensor {
 public:
  RiemannTensor(std::size_t n, std::vector<DifferentialForm> omega, Matrix metric);

  std::size_t dimension() const noexcept { return n_; }
  const DifferentialForm& form(std::size_t i, std::size_t j) const { return omega_.at(i * n_ + j); }
  /// R^i_jkl for any k, l.
  RationalFunction up(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  /// R_ijkl = g_im R^m_jkl.
  RationalFunction down(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  const Matrix& metric() const noexcept { return g_; }
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<DifferentialForm> omega_;
  Matrix g_;
};

RiemannTensor riemann(const ConnectionForms& gamma, const Coframe& c);

/// Cyclic sum R^i_jkl + R^i_klj + R^i_ljk over all index tuples; zero entries omitted.
std::vector<RationalFunction> first_bianchi_residual(const RiemannTensor& r);

/// Lowered Weyl tensor. Components are computed on demand, one antisymmetric
/// (ij, kl) block at a time, and memoized; copies share the memo.
class WeylComponents {
 public:
  WeylComponents(RiemannTensor r, Matrix metric, Matrix metric_inverse);

  std::size_t dimension() const noexcept { return state_->n; }
  RationalFunction operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  const Matrix& metric() const noexcept { return state_->g; }
  const Matrix& metric_inverse() const noexcept { return state_->ginv; }
  const Matrix& ricci() const noexcept { return state_->ricci; }
  const Matrix& schouten() const noexcept { return state_->schouten; }
  const RationalFunction& scalar_curvature() const noexcept { return state_->scalar; }

  /// Fills every block; true iff all components vanish.
  bool is_zero() const;
  /// g^{ik} W_ijkl for all j, l (row-major n x n); all zero for a Weyl tensor.
  std::vector<RationalFunction> traces() const;

 private:
  struct State {
    std::size_t n;
    RiemannTensor r;
    Matrix g;
    Matrix ginv;
    Matrix ricci;
    Matrix schouten;
    RationalFunction scalar;
    std::mutex mutex;
    std::vector<std::optional<RationalFunction>> memo;  // blocks i<j, k<l
  };
  RationalFunction block(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  std::shared_ptr<State> state_;
};

WeylComponents weyl(const RiemannTensor& r, const Matrix& g, const Matrix& g_inverse);

/// C(zeta) = A1 + 4 A2 zeta + 6 A3 zeta^2 + 4 A4 zeta^3 + A5 zeta^4.
struct CartanQuartic {
  std::array<RationalFunction, 5> a;

  const RationalFunction& A(int k) const { return a.at(static_cast<std::size_t>(k - 1)); }
  bool is_zero() const;
  RationalFunction polynomial() const;  // in the coordinate symbol "zeta"
  static symcore::Symbol zeta();
};

/// A1 = W_4114, A2 = W_4124, A3 = W_4125, A4 = W_4225, A5 = W_5225 (one-based).
CartanQuartic cartan_quartic(const WeylComponents& w);

/// Every stage of the curvature computation for one coframe.
struct CurvatureResult {
  ConnectionForms connection;
  RiemannTensor riemann;
  WeylComponents weyl;
  CartanQuartic quartic;
};

CurvatureResult run_curvature(const Coframe& c);

}  // namespace cartan235::curvature
