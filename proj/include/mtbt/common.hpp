#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtbt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Contract violation on the caller's side (bad parameters, mismatched rings).
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The computation cannot be carried out at the requested truncation; the
// caller should raise N, M or the Laurent window and retry.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (a check that should be impossible to trip).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Cooperative cancellation for long computations. All heavy loops poll this.
class CancelToken {
  public:
    void cancel() { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const { return flag_.load(std::memory_order_relaxed); }
    void check() const {
        if (cancelled()) throw std::runtime_error("cancelled");
    }

  private:
    std::atomic<bool> flag_{false};
};

inline CancelToken &never_cancel() {
    static CancelToken tok;
    return tok;
}

} // namespace mtbt
