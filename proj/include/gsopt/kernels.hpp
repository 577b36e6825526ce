#pragma once

#include <span>

#include "gsopt/dense.hpp"
#include "gsopt/partition.hpp"

// Data-parallel inner loops of the solver. Each kernel exists twice: a plain
// serial reference under kernels::serial and an OpenMP variant under
// kernels::par. Both accumulate in the same index order, so they produce
// identical results; the unqualified entry points dispatch on problem size.
// tools/kernel_bench compares the two.

namespace gsopt::kernels {

namespace serial {
/// out = A x
void matvec(const Matrix& A, std::span<const double> x, std::span<double> out);
/// out = A' w
void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out);
/// out_g = || x restricted to group g ||
void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out);
/// Per group g: out_{G_g} = (1 - t_g/||v_{G_g}||) v_{G_g} if ||v_{G_g}|| > t_g, else 0.
void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out);
}  // namespace serial

namespace par {
void matvec(const Matrix& A, std::span<const double> x, std::span<double> out);
void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out);
void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out);
void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out);
}  // namespace par

void matvec(const Matrix& A, std::span<const double> x, std::span<double> out);
void matvec_transpose(const Matrix& A, std::span<const double> w, std::span<double> out);
void group_norms(std::span<const double> x, const GroupPartition& part, std::span<double> out);
void group_soft_threshold_sweep(std::span<const double> v, std::span<const double> thresholds,
                                const GroupPartition& part, std::span<double> out);

}  // namespace gsopt::kernels
