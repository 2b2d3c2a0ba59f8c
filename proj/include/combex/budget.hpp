#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace combex {

enum class Outcome {
    Proven,       // search completed, value exact
    Budget,       // limit hit, value is a bound only
    Infeasible,   // no object with the required property exists
};

struct SearchBudget {
    double time_limit_s = 60.0;
    std::optional<uint64_t> node_limit;
    int threads = 1;
    uint64_t seed = 0;
};

// Shared stop condition for a running search. Cheap to poll: the time check
// only fires every 1024 node ticks.
class SearchClock {
  public:
    explicit SearchClock(const SearchBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Counts one search node; returns true if the search must stop.
    bool tick() {
        uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget_.node_limit && n > *budget_.node_limit) {
            stopped_.store(true, std::memory_order_relaxed);
            return true;
        }
        if ((n & 1023) == 0 && elapsed_s() > budget_.time_limit_s) {
            stopped_.store(true, std::memory_order_relaxed);
            return true;
        }
        return stopped_.load(std::memory_order_relaxed);
    }

    bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
    uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

    double elapsed_s() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double>(d).count();
    }
    long long elapsed_ms() const { return static_cast<long long>(elapsed_s() * 1000.0); }

  private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
};

}  // namespace combex
