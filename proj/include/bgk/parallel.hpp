//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file parallel.hpp
//  \brief static-partition parallel_for over index ranges
//
// Workers write to disjoint index ranges only; reductions stay sequential so results
// are byte-identical no matter how many threads run. BGK_THREADS caps the worker count.

#ifndef BGK_PARALLEL_HPP_
#define BGK_PARALLEL_HPP_

#include <functional>

namespace bgk {

// Number of workers: min(hardware_concurrency, BGK_THREADS if set), at least 1.
int worker_count();

// Apply fn(i) for i in [begin, end). Each worker owns one contiguous chunk.
// Small ranges run inline to avoid thread spawn overhead.
void parallel_for(int begin, int end, const std::function<void(int)> &fn);

}  // namespace bgk

#endif  // BGK_PARALLEL_HPP_
