#pragma once

#include <chrono>
#include <optional>

#include "domstab/errors.hpp"

namespace domstab {

/// Cooperative time limit. Default-constructed deadlines never expire.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline after(std::chrono::milliseconds budget) {
        Deadline d;
        d.limit_ = Clock::now() + budget;
        return d;
    }

    bool unlimited() const noexcept { return !limit_.has_value(); }

    bool expired() const { return limit_ && Clock::now() >= *limit_; }

    void check() const {
        if (expired())
            throw BudgetExceeded("time budget exceeded");
    }

private:
    std::optional<Clock::time_point> limit_;
};

} // namespace domstab
