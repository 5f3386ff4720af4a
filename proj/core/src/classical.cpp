// Copyright 2026 The procmat Authors
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

#include "procmat/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace procmat {

namespace {

std::array<int, 4> decode(const LabSystems& s, int index) {
  std::array<int, 4> out{};
  const auto dims = s.dims();
  for (int f = 3; f >= 0; --f) {
    out[f] = index % dims[f];
    index /= dims[f];
  }
  return out;
}

// Composite index with every factor outside `mask` set to zero.
int project(const LabSystems& s, std::array<int, 4> idx, unsigned mask) {
  for (int f = 0; f < 4; ++f) {
    if (!(mask & (1u << f))) idx[f] = 0;
  }
  return s.composite_index(idx[0], idx[1], idx[2], idx[3]);
}

double scale_of(const RealVector& v) { return std::max(1.0, v.cwiseAbs().maxCoeff()); }

void check_forbidden(const std::array<RealVector, 16>& comps, double tol, const char* who) {
  for (TermType t : all_term_types()) {
    if (classify_type(t) != TermClass::forbidden) continue;
    const double weight = comps[t.mask()].cwiseAbs().maxCoeff();
    if (weight > tol) {
      std::ostringstream os;
      os << who << ": forbidden term type " << t.name() << " present (max " << weight << ")";
      throw InvalidProcessError(os.str());
    }
  }
}

RealVector random_simplex(int n, Rng& rng) {
  std::exponential_distribution<double> exp(1.0);
  RealVector p(n);
  for (int i = 0; i < n; ++i) p[i] = exp(rng);
  return p / p.sum();
}

}  // namespace

std::array<RealVector, 16> type_components(const LabSystems& s, const RealVector& f) {
  const int dim = s.total();
  if (f.size() != dim) throw DimensionError("type_components: vector does not match systems");
  const auto dims = s.dims();

  // g[T](x): mean of f over the factors outside T, with those in T fixed.
  std::array<RealVector, 16> g;
  for (unsigned t = 0; t < 16; ++t) {
    int kept = 1;
    for (int k = 0; k < 4; ++k) {
      if (t & (1u << k)) kept *= dims[k];
    }
    RealVector sums = RealVector::Zero(dim);
    for (int x = 0; x < dim; ++x) sums[project(s, decode(s, x), t)] += f[x];
    g[t].resize(dim);
    for (int x = 0; x < dim; ++x) {
      g[t][x] = sums[project(s, decode(s, x), t)] * kept / dim;
    }
  }

  // Moebius inversion over the subset lattice.
  std::array<RealVector, 16> comps;
  for (unsigned m = 0; m < 16; ++m) {
    comps[m] = RealVector::Zero(dim);
    for (unsigned t = m;; t = (t - 1) & m) {
      const int sign = (std::popcount(m ^ t) % 2 == 0) ? 1 : -1;
      comps[m] += sign * g[t];
      if (t == 0) break;
    }
  }
  return comps;
}

// ---------------------------------------------------------------------------

ClassicalProcess::ClassicalProcess(LabSystems systems, RealVector diag, double tol)
    : systems_(systems), diag_(std::move(diag)) {
  if (diag_.size() != systems_.total()) {
    throw DimensionError("ClassicalProcess: diagonal has " + std::to_string(diag_.size()) +
                         " entries, systems need " + std::to_string(systems_.total()));
  }
  if (!diag_.allFinite()) throw InvalidProcessError("ClassicalProcess: non-finite entry");
  if (diag_.minCoeff() < -tol * scale_of(diag_)) {
    throw InvalidProcessError("ClassicalProcess: negative entry");
  }
  const double target = systems_.output_dimension();
  if (std::abs(diag_.sum() - target) > tol * target) {
    std::ostringstream os;
    os << "ClassicalProcess: trace " << diag_.sum() << " differs from " << target;
    throw InvalidProcessError(os.str());
  }
  const RealVector f = diag_ * static_cast<double>(systems_.a1 * systems_.b1);
  check_forbidden(type_components(systems_, f), tol * scale_of(f), "ClassicalProcess");
}

ClassicalProcess ClassicalProcess::from_process(const ProcessMatrix& w, double tol) {
  const ComplexMatrix& m = w.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  RealVector diag(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const bool off = r != c && std::abs(m(r, c)) > tol * scale;
      if (off || std::abs(m(r, c).imag()) > tol * scale) {
        throw InvalidProcessError("ClassicalProcess: matrix is not real diagonal in the pointer basis");
      }
    }
    diag[r] = m(r, r).real();
  }
  return ClassicalProcess(w.systems(), std::move(diag), tol);
}

ProcessMatrix ClassicalProcess::to_process() const {
  return ProcessMatrix(systems_, diag_.cast<Complex>().asDiagonal().toDenseMatrix());
}

// ---------------------------------------------------------------------------

ClassicalOperation::ClassicalOperation(int d_in, int outcomes, int d_out, std::vector<double> p,
                                       double tol)
    : d_in_(d_in), outcomes_(outcomes), d_out_(d_out), p_(std::move(p)) {
  if (d_in < 1 || outcomes < 1 || d_out < 1) {
    throw DimensionError("ClassicalOperation: dimensions must be positive");
  }
  if (p_.size() != static_cast<std::size_t>(d_in) * outcomes * d_out) {
    throw DimensionError("ClassicalOperation: table size does not match dimensions");
  }
  for (int in = 0; in < d_in_; ++in) {
    double total = 0.0;
    for (int j = 0; j < outcomes_; ++j) {
      for (int out = 0; out < d_out_; ++out) {
        const double v = (*this)(in, j, out);
        if (!(v >= -tol && v <= 1.0 + tol)) {
          throw InvalidMapError("ClassicalOperation: entry outside [0, 1]");
        }
        total += v;
      }
    }
    if (std::abs(total - 1.0) > tol) {
      throw InvalidMapError("ClassicalOperation: probabilities for input " + std::to_string(in) +
                            " do not sum to 1");
    }
  }
}

ClassicalOperation ClassicalOperation::identity(int d) {
  std::vector<double> p(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i) * d + i] = 1.0;
  return ClassicalOperation(d, 1, d, std::move(p));
}

ClassicalOperation ClassicalOperation::measurement(int d) {
  std::vector<double> p(static_cast<std::size_t>(d) * d * d, 0.0);
  for (int i = 0; i < d; ++i) p[(static_cast<std::size_t>(i) * d + i) * d + i] = 1.0;
  return ClassicalOperation(d, d, d, std::move(p));
}

ClassicalOperation ClassicalOperation::binary_symmetric(double flip) {
  return ClassicalOperation(2, 1, 2, {1.0 - flip, flip, flip, 1.0 - flip});
}

std::vector<CPMap> classical_to_cj(const ClassicalOperation& op) {
  std::vector<CPMap> maps;
  for (int j = 0; j < op.outcomes(); ++j) {
    ComplexMatrix cj = ComplexMatrix::Zero(op.d_in() * op.d_out(), op.d_in() * op.d_out());
    for (int in = 0; in < op.d_in(); ++in) {
      for (int out = 0; out < op.d_out(); ++out) {
        const int k = in * op.d_out() + out;
        cj(k, k) = op(in, j, out);
      }
    }
    maps.emplace_back(op.d_in(), op.d_out(), std::move(cj));
  }
  return maps;
}

Instrument classical_instrument(const ClassicalOperation& op) {
  return Instrument(classical_to_cj(op));
}

// ---------------------------------------------------------------------------

CausalDecomposition decompose(const ClassicalProcess& w, double tol) {
  const LabSystems& s = w.systems();
  const int dim = s.total();
  const double ab = s.a1 * s.b1;
  const RealVector f = w.diag() * ab;
  const auto comps = type_components(s, f);
  check_forbidden(comps, tol * scale_of(f), "decompose");

  RealVector sigma_1 = RealVector::Zero(dim);
  RealVector sigma_2 = RealVector::Zero(dim);
  for (TermType t : all_term_types()) {
    switch (classify_type(t)) {
      case TermClass::non_signalling:
      case TermClass::a_to_b:
        sigma_1 += comps[t.mask()];
        break;
      case TermClass::b_to_a:
        sigma_2 += comps[t.mask()];
        break;
      default:
        break;
    }
  }
  // The constant part; one for a normalized process.
  const double c0 = comps[0][0];

  const double m = (sigma_1 + sigma_2).minCoeff();
  if (m < -c0 - tol || m > tol) {
    std::ostringstream os;
    os << "decompose: minimum " << m << " outside [-1, 0]";
    throw InvalidProcessError(os.str());
  }

  CausalDecomposition out{.q = 0.0,
                          .w_b_not_before_a = w.to_process(),
                          .w_a_not_before_b = w.to_process(),
                          .m = m,
                          .sigma_1 = sigma_1,
                          .sigma_2 = sigma_2};
  out.kappa_1 = sigma_1.array() - m;
  out.kappa_2 = sigma_2;
  RealVector k1 = out.kappa_1;
  RealVector k2 = out.kappa_2;
  out.m1_tilde.resize(s.a1, s.b1);
  out.m2_tilde.resize(s.a1, s.b1);

  for (int i = 0; i < s.a1; ++i) {
    for (int k = 0; k < s.b1; ++k) {
      double m1 = std::numeric_limits<double>::infinity();
      double m2 = m1;
      for (int j = 0; j < s.a2; ++j) {
        for (int l = 0; l < s.b2; ++l) {
          const int x = s.composite_index(i, j, k, l);
          m1 = std::min(m1, k1[x]);
          m2 = std::min(m2, k2[x]);
        }
      }
      out.m1_tilde(i, k) = m1;
      out.m2_tilde(i, k) = m2;
      double shift = 0.0;  // added to k1, removed from k2
      if (m1 < 0.0) {
        shift = -m1;
      } else if (m2 < 0.0) {
        shift = m2;
      }
      if (shift == 0.0) continue;
      ++out.shifts;
      for (int j = 0; j < s.a2; ++j) {
        for (int l = 0; l < s.b2; ++l) {
          const int x = s.composite_index(i, j, k, l);
          k1[x] += shift;
          k2[x] -= shift;
        }
      }
    }
  }
  out.kappa_sum_residual = ((k1 + k2) - (out.kappa_1 + out.kappa_2)).cwiseAbs().maxCoeff();
  out.kappa_1_tilde = k1;
  out.kappa_2_tilde = k2;

  const RealVector rho_1 = k1.array() + (c0 + m);
  const RealVector& rho_2 = k2;
  const double tr_1 = rho_1.sum();
  const double tr_2 = rho_2.sum();
  out.q = std::clamp(tr_1 / dim, 0.0, 1.0);

  const double out_dim = s.output_dimension();
  const double empty = 1e-12 * dim;
  auto component = [&](const RealVector& rho, double tr) {
    const RealVector d = tr > empty ? RealVector(rho * (out_dim / tr))
                                    : RealVector(RealVector::Constant(dim, 1.0 / ab));
    return ClassicalProcess(s, d, std::max(tol, 1e-9)).to_process();
  };
  out.w_b_not_before_a = component(rho_1, tr_1);
  out.w_a_not_before_b = component(rho_2, tr_2);

  const ComplexMatrix recombined =
      out.q * out.w_b_not_before_a.matrix() + (1.0 - out.q) * out.w_a_not_before_b.matrix();
  out.recombination_residual = max_abs_difference(recombined, w.to_process().matrix());
  return out;
}

// ---------------------------------------------------------------------------

ClassicalProcess random_classical_process(const LabSystems& s, Rng& rng) {
  const int dim = s.total();
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // A first: p(i) T(k | i, j). B first: p(k) T(i | k, l).
  RealVector w1(dim), w2(dim);
  const RealVector pa = random_simplex(s.a1, rng);
  const RealVector pb = random_simplex(s.b1, rng);
  std::vector<RealVector> ta(s.a1 * s.a2), tb(s.b1 * s.b2);
  for (auto& t : ta) t = random_simplex(s.b1, rng);
  for (auto& t : tb) t = random_simplex(s.a1, rng);
  for (int x = 0; x < dim; ++x) {
    const auto [i, j, k, l] = decode(s, x);
    w1[x] = pa[i] * ta[i * s.a2 + j][k];
    w2[x] = pb[k] * tb[k * s.b2 + l][i];
  }
  const double q = unit(rng);
  const RealVector base = q * w1 + (1.0 - q) * w2;

  // Allowed, traceless perturbation in both signalling directions.
  std::normal_distribution<double> normal;
  RealVector noise(dim);
  for (int x = 0; x < dim; ++x) noise[x] = normal(rng);
  const auto comps = type_components(s, noise);
  RealVector pert = RealVector::Zero(dim);
  for (TermType t : all_term_types()) {
    const TermClass c = classify_type(t);
    if (c != TermClass::identity && c != TermClass::forbidden) pert += comps[t.mask()];
  }
  const double norm = pert.cwiseAbs().maxCoeff();
  if (norm > 0.0) pert /= norm * s.a1 * s.b1;

  for (int attempt = 0; attempt < 64; ++attempt) {
    const RealVector candidate = base + unit(rng) * pert;
    if (candidate.minCoeff() >= 0.0) return ClassicalProcess(s, candidate);
  }
  return ClassicalProcess(s, base);
}

}  // namespace procmat
