// Copyright 2026 The qscocycle Authors
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

#include "qsc/semigroups.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qsc/error.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;
using Key = std::vector<std::uint64_t>;

void push_vector(Key& key, const CVector& v) {
  key.push_back(static_cast<std::uint64_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) {
    key.push_back(std::bit_cast<std::uint64_t>(v(i).real()));
    key.push_back(std::bit_cast<std::uint64_t>(v(i).imag()));
  }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector basis_or_zero(std::size_t dim_k, std::size_t alpha) {
  CVector v = CVector::Zero(static_cast<Index>(dim_k));
  if (alpha > 0) v(static_cast<Index>(alpha - 1)) = 1.0;
  return v;
}

}  // namespace

GeneratorSlice g_generator(const BlockGenerator& f, const CVector& c, const CVector& d) {
  const CMatrix comp = component(f, c, d);
  GeneratorSlice slice{c, d, comp, comp};
  const Complex shift_g = chi(c, d);
  const Complex shift_h = inner(c, d);
  slice.G.diagonal().array() -= shift_g;
  slice.H.diagonal().array() += shift_h;
  return slice;
}

struct SemigroupFamily::Cache {
  mutable std::shared_mutex mutex;
  std::map<Key, CMatrix> entries;
};

SemigroupFamily::SemigroupFamily(BlockGenerator source)
    : source_(std::move(source)), cache_(std::make_unique<Cache>()) {}
SemigroupFamily::~SemigroupFamily() = default;
SemigroupFamily::SemigroupFamily(SemigroupFamily&&) noexcept = default;
SemigroupFamily& SemigroupFamily::operator=(SemigroupFamily&&) noexcept = default;

CMatrix SemigroupFamily::lookup(Kind kind, const CVector& c, const CVector& d, double t) const {
  if (!(t >= 0.0)) throw DomainError("semigroup: time must be non-negative");
  const auto h = static_cast<Index>(source_.dim_h());
  if (t == 0.0) {
    // still validate the noise vectors
    (void)component(source_, c, d);
    return CMatrix::Identity(h, h);
  }
  Key key;
  key.reserve(4 + 2 * static_cast<std::size_t>(c.size() + d.size()));
  key.push_back(static_cast<std::uint64_t>(kind));
  push_vector(key, c);
  push_vector(key, d);
  key.push_back(std::bit_cast<std::uint64_t>(t));
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->entries.find(key); it != cache_->entries.end()) return it->second;
  }
  const GeneratorSlice slice = g_generator(source_, c, d);
  CMatrix value = mat_exp(t * (kind == Kind::kQ ? slice.G : slice.H));
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->entries.emplace(std::move(key), std::move(value));
  return it->second;
}

CMatrix SemigroupFamily::q(const CVector& c, const CVector& d, double t) const {
  return lookup(Kind::kQ, c, d, t);
}

CMatrix SemigroupFamily::p(const CVector& c, const CVector& d, double t) const {
  return lookup(Kind::kP, c, d, t);
}

std::size_t SemigroupFamily::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->entries.size();
}

CMatrix q_semigroup(const SemigroupFamily& family, const CVector& c, const CVector& d, double t) {
  return family.q(c, d, t);
}

CMatrix p_semigroup(const SemigroupFamily& family, const CVector& c, const CVector& d, double t) {
  return family.p(c, d, t);
}

SemigroupFamily dual_family(const BlockGenerator& f) { return SemigroupFamily(f.adjoint()); }

CoordinateMatrix::CoordinateMatrix(std::size_t dim_k, std::size_t dim_h)
    : dim_k_(dim_k),
      entries_((dim_k + 1) * (dim_k + 1),
               CMatrix::Zero(static_cast<Index>(dim_h), static_cast<Index>(dim_h))) {}

CoordinateMatrix coords_from_f(const BlockGenerator& f) {
  const std::size_t m = f.dim_k();
  CoordinateMatrix g(m, f.dim_h());
  for (std::size_t alpha = 0; alpha <= m; ++alpha) {
    for (std::size_t beta = 0; beta <= m; ++beta) {
      g(alpha, beta) = g_generator(f, basis_or_zero(m, alpha), basis_or_zero(m, beta)).G;
    }
  }
  return g;
}

CoordinateMatrix coords_to_f(const CoordinateMatrix& g) {
  const std::size_t m = g.dim_k();
  const auto h = g(0, 0).rows();
  for (std::size_t alpha = 0; alpha <= m; ++alpha) {
    for (std::size_t beta = 0; beta <= m; ++beta) {
      if (g(alpha, beta).rows() != h || g(alpha, beta).cols() != h) {
        throw DimensionError("coords_to_f: coordinate entries have inconsistent shapes");
      }
    }
  }
  const CMatrix ident = CMatrix::Identity(h, h);
  CoordinateMatrix f(m, static_cast<std::size_t>(h));
  const CMatrix& g00 = g(0, 0);
  f(0, 0) = g00;
  for (std::size_t i = 1; i <= m; ++i) {
    f(i, 0) = g(i, 0) - g00 + 0.5 * ident;
    f(0, i) = g(0, i) - g00 + 0.5 * ident;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      f(i, j) = g(i, j) - g(i, 0) - g(0, j) + g00;
      if (i == j) f(i, j) -= ident;
    }
  }
  return f;
}

CoordinateMatrix components_of(const BlockGenerator& f) {
  const std::size_t m = f.dim_k();
  CoordinateMatrix out(m, f.dim_h());
  const auto h = static_cast<Index>(f.dim_h());
  out(0, 0) = f.K();
  for (std::size_t i = 1; i <= m; ++i) {
    out(i, 0) = f.L_block(i - 1);
    out(0, i) = f.M_block(i - 1);
    for (std::size_t j = 1; j <= m; ++j) {
      out(i, j) = f.C_block(i - 1, j - 1);
      if (i == j) out(i, j) -= CMatrix::Identity(h, h);
    }
  }
  return out;
}

BlockGenerator generator_from_components(const CoordinateMatrix& components) {
  const std::size_t m = components.dim_k();
  const auto h = components(0, 0).rows();
  const Index hk = h * static_cast<Index>(m);
  CMatrix l(hk, h);
  CMatrix mm(h, hk);
  CMatrix c(hk, hk);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto bi = static_cast<Index>(i - 1) * h;
    l.block(bi, 0, h, h) = components(i, 0);
    mm.block(0, bi, h, h) = components(0, i);
    for (std::size_t j = 1; j <= m; ++j) {
      const auto bj = static_cast<Index>(j - 1) * h;
      c.block(bi, bj, h, h) = components(i, j);
      if (i == j) c.block(bi, bj, h, h) += CMatrix::Identity(h, h);
    }
  }
  return BlockGenerator::assemble(components(0, 0), std::move(l), std::move(mm), std::move(c),
                                  static_cast<std::size_t>(h), m);
}

CMatrix heisenberg_markov_generator(const BlockGenerator& f) {
  const auto h = static_cast<Index>(f.dim_h());
  const CMatrix ident = CMatrix::Identity(h, h);
  CMatrix out = kron(ident, f.K().adjoint()) + kron(f.K().transpose(), ident);
  for (std::size_t i = 0; i < f.dim_k(); ++i) {
    const CMatrix li = f.L_block(i);
    out += kron(li.transpose(), li.adjoint());
  }
  return out;
}

CMatrix heisenberg_markov_semigroup(const BlockGenerator& f, const CMatrix& x, double t) {
  if (!(t >= 0.0)) throw DomainError("heisenberg_markov_semigroup: time must be non-negative");
  const auto h = static_cast<Index>(f.dim_h());
  if (x.rows() != h || x.cols() != h) {
    throw DimensionError("heisenberg_markov_semigroup: observable is not dim_h x dim_h");
  }
  const CVector vec = Eigen::Map<const CVector>(x.data(), h * h);
  const CVector evolved = mat_exp(t * heisenberg_markov_generator(f)) * vec;
  return Eigen::Map<const CMatrix>(evolved.data(), h, h);
}

}  // namespace qsc
