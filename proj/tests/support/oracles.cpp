// Copyright 2026 The qzoo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qzoo::testing {

namespace {

std::array<CMatrix, 4> paulis() {
  std::array<CMatrix, 4> s;
  s[0] = CMatrix::Identity(2, 2);
  s[1] = CMatrix::Zero(2, 2);
  s[1](0, 1) = s[1](1, 0) = 1.0;
  s[2] = CMatrix::Zero(2, 2);
  s[2](0, 1) = Complex(0.0, -1.0);
  s[2](1, 0) = Complex(0.0, 1.0);
  s[3] = CMatrix::Zero(2, 2);
  s[3](0, 0) = 1.0;
  s[3](1, 1) = -1.0;
  return s;
}

CMatrix kron2(const CMatrix& x, const CMatrix& y) {
  CMatrix out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = x(i, j) * y;
  }
  return out;
}

double h_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

std::array<double, 3> bloch(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace

double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h += h_term(x);
  return h;
}

std::vector<double> hermitian_eigenvalues_via_real(const CMatrix& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r << h.real(), -h.imag(), h.imag(), h.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < 2 * n; i += 2) out.push_back(solver.eigenvalues()[i]);
  return out;
}

PauliForm pauli_form(const CMatrix& rho) {
  const auto s = paulis();
  PauliForm f;
  for (int i = 0; i < 3; ++i) {
    f.a[i] = (rho * kron2(s[i + 1], s[0])).trace().real();
    f.b[i] = (rho * kron2(s[0], s[i + 1])).trace().real();
    for (int j = 0; j < 3; ++j) f.c[i][j] = (rho * kron2(s[i + 1], s[j + 1])).trace().real();
  }
  double h = 0.0;
  for (double x : hermitian_eigenvalues_via_real(rho)) h += h_term(std::max(0.0, x));
  f.entropy = h;
  return f;
}

double bloch_dephasing_gap(const PauliForm& f, double theta_a, double phi_a, double theta_b,
                           double phi_b) {
  const auto na = bloch(theta_a, phi_a);
  const auto nb = bloch(theta_b, phi_b);
  double an = 0.0, bn = 0.0, cnn = 0.0;
  for (int i = 0; i < 3; ++i) {
    an += f.a[i] * na[i];
    bn += f.b[i] * nb[i];
    for (int j = 0; j < 3; ++j) cnn += na[i] * f.c[i][j] * nb[j];
  }
  double h = 0.0;
  for (int s : {1, -1}) {
    for (int t : {1, -1}) h += h_term(0.25 * (1.0 + s * an + t * bn + s * t * cnn));
  }
  return h - f.entropy;
}

GridMinimum grid_minimum(const CMatrix& rho, double coarse, double fine, std::size_t refine) {
  const PauliForm f = pauli_form(rho);
  const double pi = std::numbers::pi;
  const auto theta_steps = static_cast<int>(std::lround(pi / coarse));
  const auto phi_steps = static_cast<int>(std::lround(2.0 * pi / coarse));

  struct Point {
    double value;
    std::array<double, 4> angles;
  };
  std::vector<std::array<double, 2>> directions;
  for (int i = 0; i <= theta_steps; ++i) {
    for (int j = 0; j < phi_steps; ++j) directions.push_back({i * coarse, j * coarse});
  }
  GridMinimum out;
  std::vector<Point> best;  // kept sorted, size <= refine
  for (const auto& da : directions) {
    for (const auto& db : directions) {
      const double v = bloch_dephasing_gap(f, da[0], da[1], db[0], db[1]);
      ++out.evaluations;
      if (best.size() < refine || v < best.back().value) {
        Point p{v, {da[0], da[1], db[0], db[1]}};
        best.insert(std::upper_bound(best.begin(), best.end(), p,
                                     [](const Point& x, const Point& y) { return x.value < y.value; }),
                    p);
        if (best.size() > refine) best.pop_back();
      }
    }
  }

  out.value = best.front().value;
  out.angles = best.front().angles;
  const auto half = static_cast<int>(std::lround(coarse / fine));
  for (const auto& p : best) {
    auto axis = [&](double centre, bool is_theta) {
      std::vector<double> xs;
      for (int k = -half; k <= half; ++k) {
        const double x = centre + k * fine;
        if (is_theta && (x < -1e-12 || x > pi + 1e-12)) continue;
        xs.push_back(x);
      }
      return xs;
    };
    const auto ta = axis(p.angles[0], true), pa = axis(p.angles[1], false);
    const auto tb = axis(p.angles[2], true), pb = axis(p.angles[3], false);
    for (double a0 : ta) {
      for (double a1 : pa) {
        for (double b0 : tb) {
          for (double b1 : pb) {
            const double v = bloch_dephasing_gap(f, a0, a1, b0, b1);
            ++out.evaluations;
            if (v < out.value) {
              out.value = v;
              out.angles = {a0, a1, b0, b1};
            }
          }
        }
      }
    }
  }
  return out;
}

CMatrix naive_partial_trace(const CMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<bool> kept(n, false);
  std::size_t out_dim = 1;
  for (std::size_t k : keep) {
    kept[k] = true;
    out_dim *= dims[k];
  }
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(n);
    for (std::size_t k = n; k-- > 0;) {
      d[k] = idx % dims[k];
      idx /= dims[k];
    }
    return d;
  };
  auto reduced_index = [&](const std::vector<std::size_t>& d) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (kept[k]) r = r * dims[k] + d[k];
    }
    return r;
  };
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits(i);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits(j);
      bool traced_equal = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (!kept[k] && di[k] != dj[k]) traced_equal = false;
      }
      if (!traced_equal) continue;
      out(static_cast<Eigen::Index>(reduced_index(di)), static_cast<Eigen::Index>(reduced_index(dj))) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

CMatrix random_local_unitary(const DimensionProfile& profile, Rng& rng) {
  CMatrix u = CMatrix::Identity(1, 1);
  for (std::size_t d : profile.dims()) {
    const CMatrix f = haar_unitary(d, rng);
    CMatrix next(u.rows() * f.rows(), u.cols() * f.cols());
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = u(i, j) * f;
      }
    }
    u = std::move(next);
  }
  return u;
}

DensityMatrix random_classical_state(const DimensionProfile& profile, Rng& rng) {
  const CMatrix u = random_local_unitary(profile, rng);
  const auto p = random_probabilities(profile.total(), rng);
  RVector diag(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) diag[static_cast<Eigen::Index>(i)] = p[i];
  const CMatrix m = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
  return validate_density(m, profile);
}

DensityMatrix random_state(const DimensionProfile& profile, Rng& rng) {
  return validate_density(random_density_matrix(profile.total(), rng), profile);
}

DensityMatrix conjugate(const DensityMatrix& rho, const CMatrix& u) {
  return validate_density(u * rho.matrix() * u.adjoint(), rho.profile());
}

}  // namespace qzoo::testing
