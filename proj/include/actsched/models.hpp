// Copyright 2026 The Authors.
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

#ifndef ACTSCHED_MODELS_HPP_
#define ACTSCHED_MODELS_HPP_

// Benchmark systems: the fixed 8-state example, consensus dynamics on random
// geometric graphs, and zero-order-hold swing dynamics of a small grid.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"
#include "actsched/random.hpp"
#include "actsched/system.hpp"

namespace actsched {

// Lower-triangular-plus-last-column 8-state system. With bmin set, only
// inputs 1, 2 and 8 are present (B = diag(1,1,0,0,0,0,0,1)).
inline LtiSystem Example1System(bool bmin = false) {
  Matrix a(8, 8);
  // clang-format off
  a << 1,    0,    0,   0, 0, 0, 0, -3.5,
       0,    2,    0,   0, 0, 0, 0, -3,
       0,    0,    3,   0, 0, 0, 0, -2.5,
       0.75, 0.5,  0,   4, 0, 0, 0,  1.625,
       0,    0.75, 0.5, 0, 5, 0, 0,  1.375,
       1.25, 0,    0.75, 0, 0, 6, 0, 1.5,
       1.5,  1.25, 1,   0, 0, 0, 7,  2.25,
       0,    0,    0,   0, 0, 0, 0,  8;
  // clang-format on
  Matrix b = Matrix::Identity(8, 8);
  if (bmin) {
    for (int i = 2; i < 7; ++i) b(i, i) = 0.0;
  }
  return LtiSystem(a, b);
}

struct GeometricGraph {
  Matrix positions;  // n x 2, unit square
  double radius = 0.0;
  Matrix laplacian;
};

// Closed-ball adjacency: u ~ v iff |p_u - p_v| <= radius.
inline GeometricGraph MakeGeometricGraph(Matrix positions, double radius) {
  if (positions.cols() != 2 || positions.rows() < 1) {
    throw DimensionError("positions must be n x 2 with n >= 1");
  }
  if (!(radius > 0.0)) throw DimensionError("radius must be positive");
  const Eigen::Index n = positions.rows();
  GeometricGraph g{std::move(positions), radius, Matrix::Zero(n, n)};
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = u + 1; v < n; ++v) {
      if ((g.positions.row(u) - g.positions.row(v)).norm() <= radius) {
        g.laplacian(u, v) = g.laplacian(v, u) = -1.0;
        g.laplacian(u, u) += 1.0;
        g.laplacian(v, v) += 1.0;
      }
    }
  }
  return g;
}

// Points drawn as (x, y) pairs in node order from Rng(seed).
inline GeometricGraph RandomGeometricGraph(int n, double radius,
                                           std::uint64_t seed) {
  if (n < 1) throw DimensionError("graph needs at least one node");
  Rng rng(seed);
  Matrix pos(n, 2);
  for (int i = 0; i < n; ++i) {
    pos(i, 0) = rng.Uniform();
    pos(i, 1) = rng.Uniform();
  }
  return MakeGeometricGraph(std::move(pos), radius);
}

inline int ConnectedComponents(const GeometricGraph& g) {
  const int n = static_cast<int>(g.laplacian.rows());
  std::vector<int> label(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v != u && g.laplacian(u, v) != 0.0 && label[v] < 0) {
          label[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

// A = I - L / n, every node an input.
inline LtiSystem ConsensusSystem(const GeometricGraph& g) {
  const Eigen::Index n = g.laplacian.rows();
  return LtiSystem(Matrix::Identity(n, n) - g.laplacian / static_cast<double>(n),
                   Matrix::Identity(n, n));
}

struct SwingParameters {
  Vector inertia;
  Vector damping;
  Matrix laplacian;  // weighted coupling, symmetric with zero row sums
  double sample_time = 0.2;
};

// Laplacian of a weighted undirected edge list on n nodes.
inline Matrix EdgeLaplacian(int n,
                            const std::vector<std::pair<int, int>>& edges,
                            double weight = 1.0) {
  Matrix l = Matrix::Zero(n, n);
  for (auto [u, v] : edges) {
    l(u, v) -= weight;
    l(v, u) -= weight;
    l(u, u) += weight;
    l(v, v) += weight;
  }
  return l;
}

// Ten generators with unit inertia and damping 0.1, coupled by a ring plus
// the five diameters (i, i + 5) as a stand-in for the reduced 10-machine
// network, sampled every 0.2 s.
inline SwingParameters DefaultSwingParameters() {
  constexpr int kGenerators = 10;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < kGenerators; ++i) edges.emplace_back(i, (i + 1) % kGenerators);
  for (int i = 0; i < kGenerators / 2; ++i) edges.emplace_back(i, i + kGenerators / 2);
  return {Vector::Ones(kGenerators), Vector::Constant(kGenerators, 0.1),
          EdgeLaplacian(kGenerators, edges), 0.2};
}

// Path of n generators, all parameters one.
inline SwingParameters ChainSwingParameters(int generators,
                                            double sample_time = 0.2) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < generators; ++i) edges.emplace_back(i, i + 1);
  return {Vector::Ones(generators), Vector::Ones(generators),
          EdgeLaplacian(generators, edges), sample_time};
}

// Continuous pair (A_c, B_c) with state [theta; omega].
inline std::pair<Matrix, Matrix> SwingContinuous(const SwingParameters& p) {
  const Eigen::Index g = p.inertia.size();
  if (g < 1 || p.damping.size() != g || p.laplacian.rows() != g ||
      p.laplacian.cols() != g) {
    throw DimensionError("swing parameters have inconsistent sizes");
  }
  // Zero damping is allowed so the undamped double integrator is expressible.
  if ((p.inertia.array() <= 0.0).any() || (p.damping.array() < 0.0).any()) {
    throw DimensionError("inertia must be positive and damping nonnegative");
  }
  const Vector minv = p.inertia.cwiseInverse();
  Matrix ac = Matrix::Zero(2 * g, 2 * g);
  ac.topRightCorner(g, g).setIdentity();
  ac.bottomLeftCorner(g, g) = -(minv.asDiagonal() * p.laplacian);
  ac.bottomRightCorner(g, g) =
      Vector(-(minv.array() * p.damping.array())).asDiagonal();
  Matrix bc = Matrix::Zero(2 * g, g);
  bc.bottomRows(g) = minv.asDiagonal();
  return {ac, bc};
}

// exp(dt [A_c B_c; 0 0]) = [A B; 0 I].
inline LtiSystem ZeroOrderHold(const Matrix& ac, const Matrix& bc, double dt) {
  if (!(dt > 0.0)) throw DimensionError("sample time must be positive");
  const Eigen::Index n = ac.rows();
  const Eigen::Index m = bc.cols();
  Matrix aug = Matrix::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = ac;
  aug.topRightCorner(n, m) = bc;
  const Matrix e = (dt * aug).exp();
  return LtiSystem(e.topLeftCorner(n, n), e.topRightCorner(n, m));
}

inline LtiSystem SwingSystem(const SwingParameters& p) {
  const auto [ac, bc] = SwingContinuous(p);
  return ZeroOrderHold(ac, bc, p.sample_time);
}

}  // namespace actsched

#endif  // ACTSCHED_MODELS_HPP_
