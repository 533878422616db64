#pragma once

#include <Eigen/Core>

namespace cyclefog::detail {

template <typename S>
using CMap = Eigen::Map<
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename S>
using MMap =
    Eigen::Map<Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

// C[M,N] = op_a(A) * op_b(B), optionally accumulating into C. Raw pointers
// are row-major; transposed operands are stored as (K,M) / (N,K).
template <typename S>
void gemm(int m, int n, int k, const S* a, bool ta, const S* b, bool tb, S* c,
          bool accumulate) {
  MMap<S> cm(c, m, n);
  auto run = [&](const auto& am, const auto& bm) {
    if (accumulate)
      cm.noalias() += am * bm;
    else
      cm.noalias() = am * bm;
  };
  if (!ta && !tb)
    run(CMap<S>(a, m, k), CMap<S>(b, k, n));
  else if (ta && !tb)
    run(CMap<S>(a, k, m).transpose(), CMap<S>(b, k, n));
  else if (!ta && tb)
    run(CMap<S>(a, m, k), CMap<S>(b, n, k).transpose());
  else
    run(CMap<S>(a, k, m).transpose(), CMap<S>(b, n, k).transpose());
}

}  // namespace cyclefog::detail
