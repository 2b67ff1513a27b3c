#include "cartan235/curvature/curvature.hpp"

#include "cartan235/error.hpp"

namespace cartan235::curvature {

using exterior::wedge;
using Mask = DifferentialForm::Mask;
using symcore::Rational;

namespace {

Mask pair_mask(std::size_t k, std::size_t l) { return (Mask{1} << k) | (Mask{1} << l); }

// Coefficient of theta^k ^ theta^l (any order) in a 2-form.
RationalFunction pair_component(const DifferentialForm& f, std::size_t k, std::size_t l) {
  if (k == l) return RationalFunction();
  RationalFunction v = f.component(pair_mask(k, l));
  return k < l ? v : -v;
}

}  // namespace

RationalFunction ConnectionForms::component(std::size_t i, std::size_t j, std::size_t k) const {
  return (*this)(i, j).component(Mask{1} << k);
}

bool ConnectionForms::is_zero() const {
  for (const auto& f : forms_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

ConnectionForms connection_forms(const Coframe& c) {
  const std::size_t n = c.dimension();
  const auto& s = c.structure();
  const Matrix& g = c.metric();
  const Matrix& ginv = c.metric_inverse();
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };

  std::vector<RationalFunction> d(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d[idx(i, j, k)] = pair_component(s[i], j, k);
    }
  }
  std::vector<RationalFunction> low(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      if (g(i, m).is_zero()) continue;
      for (std::size_t jk = 0; jk < n * n; ++jk) {
        const auto& v = d[m * n * n + jk];
        if (!v.is_zero()) low[i * n * n + jk] += g(i, m) * v;
      }
    }
  }
  // Gamma_ijk = (D_ijk + D_jki - D_kij) / 2
  const RationalFunction half(Rational(1, 2));
  std::vector<RationalFunction> gl(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction v = low[idx(i, j, k)] + low[idx(j, k, i)] - low[idx(k, i, j)];
        if (!v.is_zero()) gl[idx(i, j, k)] = half * v;
      }
    }
  }
  std::vector<DifferentialForm> forms;
  forms.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DifferentialForm f(c.frame_chart(), 1);
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction v;
        for (std::size_t m = 0; m < n; ++m) {
          if (!ginv(i, m).is_zero() && !gl[idx(m, j, k)].is_zero()) v += ginv(i, m) * gl[idx(m, j, k)];
        }
        f.set_component(Mask{1} << k, v);
      }
      forms.push_back(std::move(f));
    }
  }
  return ConnectionForms(n, std::move(forms));
}

std::vector<DifferentialForm> torsion_residual(const ConnectionForms& gamma, const Coframe& c) {
  const std::size_t n = c.dimension();
  std::vector<DifferentialForm> out;
  for (std::size_t i = 0; i < n; ++i) {
    DifferentialForm r = c.structure()[i];
    for (std::size_t j = 0; j < n; ++j) r += wedge(gamma(i, j), DifferentialForm::basis(c.frame_chart(), j));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DifferentialForm> metricity_residual(const ConnectionForms& gamma, const Coframe& c) {
  const std::size_t n = c.dimension();
  const Matrix& g = c.metric();
  std::vector<DifferentialForm> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      DifferentialForm r(c.frame_chart(), 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (!g(i, k).is_zero()) r += g(i, k) * gamma(k, j);
        if (!g(j, k).is_zero()) r += g(j, k) * gamma(k, i);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RiemannTensor::RiemannTensor(std::size_t n, std::vector<DifferentialForm> omega, Matrix metric)
    : n_(n), omega_(std::move(omega)), g_(std::move(metric)) {}

RationalFunction RiemannTensor::up(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  return pair_component(form(i, j), k, l);
}

RationalFunction RiemannTensor::down(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  RationalFunction v;
  for (std::size_t m = 0; m < n_; ++m) {
    if (!g_(i, m).is_zero()) v += g_(i, m) * up(m, j, k, l);
  }
  return v;
}

bool RiemannTensor::is_zero() const {
  for (const auto& f : omega_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

RiemannTensor riemann(const ConnectionForms& gamma, const Coframe& c) {
  const std::size_t n = c.dimension();
  std::vector<DifferentialForm> omega;
  omega.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DifferentialForm o = exterior::frame_exterior_derivative(gamma(i, j), c);
      for (std::size_t k = 0; k < n; ++k) {
        if (gamma(i, k).is_zero() || gamma(k, j).is_zero()) continue;
        o += wedge(gamma(i, k), gamma(k, j));
      }
      omega.push_back(std::move(o));
    }
  }
  return RiemannTensor(n, std::move(omega), c.metric());
}

std::vector<RationalFunction> first_bianchi_residual(const RiemannTensor& r) {
  const std::size_t n = r.dimension();
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          RationalFunction v = r.up(i, j, k, l) + r.up(i, k, l, j) + r.up(i, l, j, k);
          if (!v.is_zero()) out.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

WeylComponents::WeylComponents(RiemannTensor r, Matrix metric, Matrix metric_inverse) {
  const std::size_t n = r.dimension();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "Weyl tensor needs dimension at least 3");
  state_ = std::make_shared<State>(n, std::move(r), std::move(metric), std::move(metric_inverse), Matrix(n, n),
                                   Matrix(n, n), RationalFunction());
  State& st = *state_;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      RationalFunction v;
      for (std::size_t i = 0; i < n; ++i) v += st.r.up(i, j, i, l);
      st.ricci(j, l) = v;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!st.ginv(j, l).is_zero() && !st.ricci(j, l).is_zero()) st.scalar += st.ginv(j, l) * st.ricci(j, l);
    }
  }
  // P = (Ric - s g / (2(n-1))) / (n-2)
  const long nn = static_cast<long>(n);
  const RationalFunction s_term = st.scalar * RationalFunction(Rational(1, 2 * (nn - 1)));
  const RationalFunction inv = RationalFunction(Rational(1, nn - 2));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      RationalFunction v = st.ricci(j, l);
      if (!st.g(j, l).is_zero()) v -= s_term * st.g(j, l);
      st.schouten(j, l) = inv * v;
    }
  }
  st.memo.resize(n * n * n * n);
}

RationalFunction WeylComponents::block(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  State& st = *state_;
  const std::size_t n = st.n;
  const std::size_t key = ((i * n + j) * n + k) * n + l;
  {
    std::lock_guard lock(st.mutex);
    if (st.memo[key]) return *st.memo[key];
  }
  const Matrix& g = st.g;
  const Matrix& p = st.schouten;
  RationalFunction v = st.r.down(i, j, k, l);
  auto kn = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (!g(a, b).is_zero() && !p(c, d).is_zero()) return g(a, b) * p(c, d);
    return RationalFunction();
  };
  v -= kn(i, k, j, l) - kn(i, l, j, k) - kn(j, k, i, l) + kn(j, l, i, k);
  std::lock_guard lock(st.mutex);
  if (!st.memo[key]) st.memo[key] = v;
  return *st.memo[key];
}

RationalFunction WeylComponents::operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  const std::size_t n = state_->n;
  if (i >= n || j >= n || k >= n || l >= n) throw Error(ErrorCode::InvalidArgument, "Weyl index out of range");
  if (i == j || k == l) return RationalFunction();
  bool negate = false;
  if (i > j) {
    std::swap(i, j);
    negate = !negate;
  }
  if (k > l) {
    std::swap(k, l);
    negate = !negate;
  }
  RationalFunction v = block(i, j, k, l);
  return negate ? -v : v;
}

bool WeylComponents::is_zero() const {
  const std::size_t n = state_->n;
  bool zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          if (!block(i, j, k, l).is_zero()) zero = false;
        }
      }
    }
  }
  return zero;
}

std::vector<RationalFunction> WeylComponents::traces() const {
  const std::size_t n = state_->n;
  const Matrix& ginv = state_->ginv;
  std::vector<RationalFunction> out(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      RationalFunction v;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!ginv(i, k).is_zero()) v += ginv(i, k) * (*this)(i, j, k, l);
        }
      }
      out[j * n + l] = std::move(v);
    }
  }
  return out;
}

WeylComponents weyl(const RiemannTensor& r, const Matrix& g, const Matrix& g_inverse) {
  return WeylComponents(r, g, g_inverse);
}

// ---------------------------------------------------------------------------

symcore::Symbol CartanQuartic::zeta() { return symcore::Symbol::coordinate("zeta"); }

bool CartanQuartic::is_zero() const {
  for (const auto& v : a) {
    if (!v.is_zero()) return false;
  }
  return true;
}

RationalFunction CartanQuartic::polynomial() const {
  static const long binomial[5] = {1, 4, 6, 4, 1};
  const RationalFunction z(zeta());
  RationalFunction out;
  RationalFunction power(1);
  for (std::size_t k = 0; k < 5; ++k) {
    if (!a[k].is_zero()) out += RationalFunction(binomial[k]) * a[k] * power;
    power *= z;
  }
  return out;
}

CartanQuartic cartan_quartic(const WeylComponents& w) {
  if (w.dimension() != 5) throw Error(ErrorCode::InvalidArgument, "Cartan quartic needs a 5-dimensional Weyl tensor");
  return CartanQuartic{{w(3, 0, 0, 3), w(3, 0, 1, 3), w(3, 0, 1, 4), w(3, 1, 1, 4), w(4, 1, 1, 4)}};
}

CurvatureResult run_curvature(const Coframe& c) {
  ConnectionForms gamma = connection_forms(c);
  RiemannTensor r = riemann(gamma, c);
  WeylComponents w = weyl(r, c.metric(), c.metric_inverse());
  CartanQuartic q = cartan_quartic(w);
  return CurvatureResult{std::move(gamma), std::move(r), std::move(w), std::move(q)};
}

}  // namespace cartan235::curvature
