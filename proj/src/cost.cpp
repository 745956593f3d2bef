#include "wreal/cost.hpp"

namespace wreal {

CostGuard& cost_guard() {
    thread_local CostGuard g;
    return g;
}

static std::int64_t check(const Int& n, std::int64_t cap, const std::string& what) {
    if (!n.fits_slong_p() || n.get_si() > cap) {
        std::string shown = n.fits_slong_p() ? std::to_string(n.get_si()) : n.get_str();
        fail(ErrKind::cost_exceeded, what + ": predicted work " + shown + " exceeds cap " + std::to_string(cap),
             n.fits_slong_p() ? n.get_si() : INT64_MAX);
    }
    return n.get_si();
}

std::int64_t check_samples(const Int& n, const std::string& what) {
    return check(n, cost_guard().max_riemann_samples, what);
}

std::int64_t check_grid(const Int& n, const std::string& what) {
    return check(n, cost_guard().max_grid_points, what);
}

TraceSink*& trace_sink() {
    thread_local TraceSink* sink = nullptr;
    return sink;
}

void trace(const std::string& engine, const Int& e, const Int& d_e, const Int& work) {
    if (TraceSink* s = trace_sink()) s->on_event(TraceEvent{engine, e, d_e, work});
}

}  // namespace wreal
