#pragma once

#include "wreal/error.hpp"
#include "wreal/rat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wreal {

/// Cost guard for the explosive paths: Riemann sample counts and inversion
/// grids are predicted before running and refused over the cap.
struct CostGuard {
    std::int64_t max_riemann_samples = 100'000'000;   // 1e8
    std::int64_t max_grid_points = 10'000'000;        // 1e7
};

CostGuard& cost_guard();  // thread-local, mutable

/// Predicted cost must fit an int64 and the cap; returns it as int64.
std::int64_t check_samples(const Int& n, const std::string& what);
std::int64_t check_grid(const Int& n, const std::string& what);

/// Witness-cost tracing: engines report (e, d(e), sample/grid counts) here
/// when a sink is installed (the CLI's --trace-witnesses).
struct TraceEvent {
    std::string engine;
    Int e;
    Int d_e;
    Int work;  // S or grid size
};

struct TraceSink {
    virtual ~TraceSink() = default;
    virtual void on_event(const TraceEvent& ev) = 0;
};

TraceSink*& trace_sink();  // thread-local pointer, may be null
void trace(const std::string& engine, const Int& e, const Int& d_e, const Int& work);

/// RAII sink installer.
class ScopedTrace {
public:
    explicit ScopedTrace(TraceSink* s) : prev_(trace_sink()) { trace_sink() = s; }
    ~ScopedTrace() { trace_sink() = prev_; }

private:
    TraceSink* prev_;
};

}  // namespace wreal
