#include "gsopt/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gsopt::kernels {

namespace {
// Below this many touched elements the fork/join overhead dominates.
constexpr long kParallelGrain = 1 << 15;

constexpr int kColTile = 256;
}  // namespace

namespace serial {

void matvec(const Matrix& A, std::span<const double> x, std::span<double> out) {
  const int m = A.rows(), n = A.cols();
  for (int i = 0; i < m; ++i) {
    const double* ai = A.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += ai[j] * x[j];
    out[i] = acc;
  }
}

// Column tiles keep the row-major accesses contiguous while every out[j]
// still accumulates over i in ascending order (same order as the par variant).
void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out) {
  const int m = A.rows(), n = A.cols();
  for (int j0 = 0; j0 < n; j0 += kColTile) {
    const int j1 = std::min(j0 + kColTile, n);
    for (int j = j0; j < j1; ++j) out[j] = 0.0;
    for (int i = 0; i < m; ++i) {
      const double* ai = A.row(i);
      const double wi = w[i];
      for (int j = j0; j < j1; ++j) out[j] += ai[j] * wi;
    }
  }
}

void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out) {
  const int q = part.num_groups();
  for (int g = 0; g < q; ++g) {
    double acc = 0.0;
    for (int idx : part.indices(g)) acc += x[idx] * x[idx];
    out[g] = std::sqrt(acc);
  }
}

void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out) {
  const int q = part.num_groups();
  for (int g = 0; g < q; ++g) {
    const auto idx = part.indices(g);
    double acc = 0.0;
    for (int i : idx) acc += v[i] * v[i];
    const double nrm = std::sqrt(acc);
    const double t = thresholds[g];
    if (nrm > t) {
      const double scale = 1.0 - t / nrm;
      for (int i : idx) out[i] = scale * v[i];
    } else {
      for (int i : idx) out[i] = 0.0;
    }
  }
}

}  // namespace serial

namespace par {

void matvec(const Matrix& A, std::span<const double> x, std::span<double> out) {
  const int m = A.rows(), n = A.cols();
  const double* xp = x.data();
  double* op = out.data();
#pragma omp parallel for schedule(static) if (static_cast<long>(m) * n >= kParallelGrain)
  for (int i = 0; i < m; ++i) {
    const double* ai = A.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += ai[j] * xp[j];
    op[i] = acc;
  }
}

void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out) {
  const int m = A.rows(), n = A.cols();
  const double* wp = w.data();
  double* op = out.data();
  const int num_tiles = (n + kColTile - 1) / kColTile;
#pragma omp parallel for schedule(static) if (static_cast<long>(m) * n >= kParallelGrain)
  for (int t = 0; t < num_tiles; ++t) {
    const int j0 = t * kColTile;
    const int j1 = std::min(j0 + kColTile, n);
    for (int j = j0; j < j1; ++j) op[j] = 0.0;
    for (int i = 0; i < m; ++i) {
      const double* ai = A.row(i);
      const double wi = wp[i];
      for (int j = j0; j < j1; ++j) op[j] += ai[j] * wi;
    }
  }
}

void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out) {
  const int q = part.num_groups();
  const double* xp = x.data();
  double* op = out.data();
#pragma omp parallel for schedule(static) if (static_cast<long>(part.n()) >= kParallelGrain)
  for (int g = 0; g < q; ++g) {
    double acc = 0.0;
    for (int idx : part.indices(g)) acc += xp[idx] * xp[idx];
    op[g] = std::sqrt(acc);
  }
}

void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out) {
  const int q = part.num_groups();
  const double* vp = v.data();
  double* op = out.data();
#pragma omp parallel for schedule(static) if (static_cast<long>(part.n()) >= kParallelGrain)
  for (int g = 0; g < q; ++g) {
    const auto idx = part.indices(g);
    double acc = 0.0;
    for (int i : idx) acc += vp[i] * vp[i];
    const double nrm = std::sqrt(acc);
    const double t = thresholds[g];
    if (nrm > t) {
      const double scale = 1.0 - t / nrm;
      for (int i : idx) op[i] = scale * vp[i];
    } else {
      for (int i : idx) op[i] = 0.0;
    }
  }
}

}  // namespace par

void matvec(const Matrix& A, std::span<const double> x, std::span<double> out) {
  par::matvec(A, x, out);
}

void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out) {
  par::matvec_transpose(A, w, out);
}

void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out) {
  par::group_norms(x, part, out);
}

void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out) {
  par::group_soft_threshold_sweep(v, thresholds, part, out);
}

}  // namespace gsopt::kernels
