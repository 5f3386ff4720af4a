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

#include "procmat/hs_expansion.hpp"

#include <cmath>
#include <sstream>

namespace procmat {

HSBasis::HSBasis(int d) : d_(d) {
  if (d < 1) throw DimensionError("HSBasis: dimension must be positive");
  elements_.push_back(identity(d));
  // Gell-Mann matrices have Tr(l_a l_b) = 2 delta_ab.
  const double scale = std::sqrt(d / 2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      elements_.push_back(scale * sym);
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -1.0);
      anti(k, j) = Complex(0.0, 1.0);
      elements_.push_back(scale * anti);
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -l * norm;
    elements_.push_back(scale * diag);
  }
}

TermType TermType::of(const std::array<int, 4>& index) {
  std::uint8_t mask = 0;
  for (int f = 0; f < 4; ++f) {
    if (index[f] != 0) mask |= static_cast<std::uint8_t>(1u << f);
  }
  return TermType(mask);
}

TermType TermType::parse(const std::string& name) {
  if (name == "1") return TermType(0);
  static constexpr const char* labels[] = {"A1", "A2", "B1", "B2"};
  std::uint8_t mask = 0;
  std::size_t pos = 0;
  int last = -1;
  while (pos < name.size()) {
    bool matched = false;
    for (int f = 0; f < 4; ++f) {
      if (name.compare(pos, 2, labels[f]) == 0) {
        if (f <= last) throw std::invalid_argument("TermType: factors out of order in " + name);
        mask |= static_cast<std::uint8_t>(1u << f);
        last = f;
        pos += 2;
        matched = true;
        break;
      }
    }
    if (!matched) throw std::invalid_argument("TermType: cannot parse " + name);
  }
  if (mask == 0) throw std::invalid_argument("TermType: empty name");
  return TermType(mask);
}

std::string TermType::name() const {
  if (mask_ == 0) return "1";
  static constexpr const char* labels[] = {"A1", "A2", "B1", "B2"};
  std::string out;
  for (int f = 0; f < 4; ++f) {
    if (mask_ & (1u << f)) out += labels[f];
  }
  return out;
}

TermClass classify_type(TermType t) {
  constexpr std::uint8_t A1 = 1, A2 = 2, B1 = 4, B2 = 8;
  switch (t.mask()) {
    case 0:
      return TermClass::identity;
    case A1:
    case B1:
    case A1 | B1:
      return TermClass::non_signalling;
    case A2 | B1:
    case A1 | A2 | B1:
      return TermClass::a_to_b;
    case A1 | B2:
    case A1 | B1 | B2:
      return TermClass::b_to_a;
    default:
      return TermClass::forbidden;
  }
}

const char* to_string(TermClass c) {
  switch (c) {
    case TermClass::identity: return "identity";
    case TermClass::non_signalling: return "non-signalling";
    case TermClass::a_to_b: return "A-to-B";
    case TermClass::b_to_a: return "B-to-A";
    case TermClass::forbidden: return "forbidden";
  }
  return "?";
}

std::array<TermType, 16> all_term_types() {
  std::array<TermType, 16> out;
  for (std::uint8_t m = 0; m < 16; ++m) out[m] = TermType(m);
  return out;
}

HSTermReport::HSTermReport(LabSystems systems, std::vector<double> coefficients)
    : systems_(systems), coefficients_(std::move(coefficients)) {
  const auto dims = systems_.dims();
  for (int f = 0; f < 4; ++f) extents_[f] = dims[f] * dims[f];
  const std::size_t expected = static_cast<std::size_t>(systems_.total()) * systems_.total();
  if (coefficients_.size() != expected) {
    throw DimensionError("HSTermReport: coefficient count does not match systems");
  }
}

double HSTermReport::coefficient(int mu, int nu, int la, int ga) const {
  return coefficients_[((static_cast<std::size_t>(mu) * extents_[1] + nu) * extents_[2] + la) *
                           extents_[3] +
                       ga];
}

namespace {

template <typename Fn>
void for_each_index(const std::array<int, 4>& extents, Fn&& fn) {
  std::size_t flat = 0;
  for (int mu = 0; mu < extents[0]; ++mu)
    for (int nu = 0; nu < extents[1]; ++nu)
      for (int la = 0; la < extents[2]; ++la)
        for (int ga = 0; ga < extents[3]; ++ga) fn(std::array<int, 4>{mu, nu, la, ga}, flat++);
}

}  // namespace

std::vector<HSTerm> HSTermReport::terms(double cutoff) const {
  std::vector<HSTerm> out;
  for_each_index(extents_, [&](const std::array<int, 4>& idx, std::size_t flat) {
    if (std::abs(coefficients_[flat]) >= cutoff) out.push_back({idx, coefficients_[flat]});
  });
  return out;
}

double HSTermReport::weight(TermType t) const {
  double w = 0.0;
  for_each_index(extents_, [&](const std::array<int, 4>& idx, std::size_t flat) {
    if (TermType::of(idx) == t) w += coefficients_[flat] * coefficients_[flat];
  });
  return w;
}

std::vector<TermType> HSTermReport::present_types(double cutoff) const {
  std::array<bool, 16> seen{};
  for_each_index(extents_, [&](const std::array<int, 4>& idx, std::size_t flat) {
    if (std::abs(coefficients_[flat]) >= cutoff) seen[TermType::of(idx).mask()] = true;
  });
  std::vector<TermType> out;
  for (std::uint8_t m = 0; m < 16; ++m) {
    if (seen[m]) out.emplace_back(m);
  }
  return out;
}

HSTermReport expand(const ComplexMatrix& w, const LabSystems& systems) {
  const int dim = systems.total();
  if (w.rows() != dim || w.cols() != dim) {
    std::ostringstream os;
    os << "expand: matrix is " << w.rows() << "x" << w.cols() << " but systems ("
       << systems.to_string() << ") need " << dim << "x" << dim;
    throw DimensionError(os.str());
  }
  if (!is_hermitian(w)) throw NotHermitianError("expand: input is not Hermitian");

  const auto dims = systems.dims();
  const std::array<HSBasis, 4> bases{HSBasis(dims[0]), HSBasis(dims[1]), HSBasis(dims[2]),
                                     HSBasis(dims[3])};
  // digits[f][r] = local index of factor f inside composite index r.
  std::array<std::vector<int>, 4> digits;
  for (int f = 0; f < 4; ++f) digits[f].resize(dim);
  for (int r = 0; r < dim; ++r) {
    int rest = r;
    for (int f = 3; f >= 0; --f) {
      digits[f][r] = rest % dims[f];
      rest /= dims[f];
    }
  }

  // Only the nonzero entries of W contribute.
  struct Entry {
    int r, c;
    Complex value;
  };
  std::vector<Entry> entries;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (w(r, c) != Complex(0.0, 0.0)) entries.push_back({r, c, w(r, c)});
    }
  }

  const std::array<int, 4> extents{dims[0] * dims[0], dims[1] * dims[1], dims[2] * dims[2],
                                   dims[3] * dims[3]};
  std::vector<double> coefficients(static_cast<std::size_t>(dim) * dim, 0.0);
  for_each_index(extents, [&](const std::array<int, 4>& idx, std::size_t flat) {
    Complex acc = 0.0;
    for (const auto& e : entries) {
      // Tr[W K] = sum_{r,c} W_rc K_cr
      Complex k = 1.0;
      for (int f = 0; f < 4 && k != Complex(0.0, 0.0); ++f) {
        k *= bases[f][idx[f]](digits[f][e.c], digits[f][e.r]);
      }
      acc += e.value * k;
    }
    coefficients[flat] = acc.real() / dim;
  });
  return HSTermReport(systems, std::move(coefficients));
}

ComplexMatrix reconstruct(const HSTermReport& report) {
  const auto& systems = report.systems();
  const auto dims = systems.dims();
  const std::array<HSBasis, 4> bases{HSBasis(dims[0]), HSBasis(dims[1]), HSBasis(dims[2]),
                                     HSBasis(dims[3])};
  ComplexMatrix out = ComplexMatrix::Zero(systems.total(), systems.total());
  for (const auto& term : report.terms(0.0)) {
    if (term.coefficient == 0.0) continue;
    const auto& i = term.index;
    out += term.coefficient * kron({bases[0][i[0]], bases[1][i[1]], bases[2][i[2]],
                                    bases[3][i[3]]});
  }
  return out;
}

StructuralVerdict classify_validity(const HSTermReport& report, double cutoff) {
  StructuralVerdict v;
  const auto& s = report.systems();
  v.identity_coefficient = report.coefficient(0, 0, 0, 0);
  v.normalization_residual = std::abs(v.identity_coefficient - 1.0 / (s.a1 * s.b1));
  for (TermType t : report.present_types(cutoff)) {
    switch (classify_type(t)) {
      case TermClass::forbidden:
        v.forbidden.push_back({t, report.weight(t)});
        break;
      case TermClass::a_to_b:
        v.signals_a_to_b = true;
        break;
      case TermClass::b_to_a:
        v.signals_b_to_a = true;
        break;
      default:
        break;
    }
  }
  v.accept = v.forbidden.empty() && v.normalization_residual <= cutoff;
  return v;
}

}  // namespace procmat
