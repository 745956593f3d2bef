#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreal {

enum class ErrKind {
    insufficient_effort,  // an effort-bounded search gave up
    domain,               // point not locatable in the declared region, pole, bad shape
    cost_exceeded,        // predicted work over the configured cap
    missing_witness,      // a required beta/gamma/kappa was absent
    unsupported,          // primitive or shape not in the catalog
    parse,                // expression / cell syntax
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string msg, std::int64_t cost = 0)
        : std::runtime_error(std::move(msg)), kind(kind), predicted_cost(cost) {}
    ErrKind kind;
    std::int64_t predicted_cost;  // set for cost_exceeded
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg, std::int64_t cost = 0) {
    throw Error(k, msg, cost);
}

}  // namespace wreal
