// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "srlab/errors.hpp"
#include "srlab/experiments/experiments.hpp"

namespace srlab::experiments::detail {

// Stream tags keep the experiments' random streams disjoint.
inline constexpr std::uint64_t kTagBiasTable = 0x62696173;
inline constexpr std::uint64_t kTagIntegrate = 0x696e7467;
inline constexpr std::uint64_t kTagXSweep = 0x78737770;
inline constexpr std::uint64_t kTagNSweep = 0x6e737770;
inline constexpr std::uint64_t kTagVerify = 0x76657269;

inline std::uint64_t mode_id(SRMode m) { return static_cast<std::uint64_t>(m); }

/// "srlab <version> command=<c> key=value ..." for the CSV comment line.
/// Only settings that influence the output are echoed.
std::string provenance(const ExperimentConfig& cfg);

std::string join_modes(const std::vector<SRMode>& modes);
std::string join_ints(const std::vector<int>& values);
std::string describe_failure(const std::string& where, const std::exception& e);

/// Runs f() and returns NaN with `failure` set when cfg is permissive and
/// f throws a range error; rethrows otherwise.
template <class F>
double guarded(const ExperimentConfig& cfg, const std::string& where, std::string& failure, F&& f) {
    if (!cfg.permissive) {
        return f();
    }
    try {
        return f();
    } catch (const RangeError& e) {
        failure = describe_failure(where, e);
    } catch (const SubnormalOrSpecial& e) {
        failure = describe_failure(where, e);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

/// The sample modes of cfg, or `fallback` when none were given.
std::vector<SRMode> modes_or(const ExperimentConfig& cfg, std::vector<SRMode> fallback);

/// Calls f(i) for i in [0, n) on up to `workers` threads. Each index is
/// handled exactly once; results must be written to slot i by the caller.
/// The first exception thrown by any task is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = n;
                }
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace srlab::experiments::detail
