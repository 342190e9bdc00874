// Copyright 2026 The kgon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KGON_PARALLEL_HPP_
#define KGON_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace kgon {

// Number of workers for internal parallel loops. Reads KGON_THREADS on every
// call (a positive integer caps parallelism); otherwise the hardware
// concurrency.
std::size_t WorkerCount();

// Runs body(i) for every i in [0, count). Bodies must only write to state
// owned by their own index; callers merge results in index order, which makes
// the outcome independent of the worker count. If bodies throw, the exception from
// the lowest index is rethrown after all of them have run.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kgon

#endif  // KGON_PARALLEL_HPP_
