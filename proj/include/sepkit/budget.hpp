#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "sepkit/errors.hpp"

namespace sepkit {

// Optional bound on an exact search. Exceeding it raises resource_error;
// a budgeted search never returns a wrong answer.
struct SearchBudget {
    std::optional<std::int64_t> max_nodes;
    std::optional<double> max_ms;
};

class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Call once per search node; cheap except for a periodic clock read.
    void tick() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
            throw resource_error("search budget exceeded: node limit");
        if (budget_.max_ms && (nodes_ & 1023) == 0) {
            auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (ms > *budget_.max_ms) throw resource_error("search budget exceeded: time limit");
        }
    }

    std::int64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t nodes_ = 0;
};

}  // namespace sepkit
