// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace switchsim {

// Worker-pool size: min(hardware_concurrency, SWITCHSIM_THREADS). Never 0.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work is handed out in contiguous chunks; the
// caller must make iterations independent. Results must be written to
// per-index slots so the output is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Chunked variant: fn(begin, end) over a fixed, scheduling-independent
// partition, so per-chunk accumulators merge deterministically.
void parallel_for_chunks(std::size_t n, std::size_t chunk,
                         const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace switchsim
