// Copyright 2026 The qbecc Authors
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

#ifndef QBECC_PARALLEL_H
#define QBECC_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qbecc {

/// Resolves a requested worker count: 0 means hardware concurrency.
inline size_t resolve_workers(size_t requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(i, worker) for i in [0, count) on up to `workers` threads, handing
/// out indices dynamically. The first exception thrown is rethrown.
template <typename Body>
void parallel_for(size_t count, size_t workers, Body &&body) {
    workers = std::min(resolve_workers(workers), std::max<size_t>(count, 1));
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            body(i, size_t{0});
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](size_t worker) {
        try {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                body(i, worker);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = count;
        }
    };
    std::vector<std::thread> threads;
    for (size_t w = 1; w < workers; w++) {
        threads.emplace_back(run, w);
    }
    run(0);
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace qbecc

#endif
