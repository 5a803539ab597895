#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rankin/banach.hpp"
#include "rankin/bounds.hpp"
#include "rankin/errors.hpp"
#include "rankin/optimizer.hpp"
#include "rankin/verify.hpp"

namespace rankin::cli {

/// FNV-1a 64 of the exact bytes consumed, rendered as "fnv1a64:<16 hex>".
std::string digest(std::string_view bytes);

/// Fields shared by every report. Reports are pure functions of these plus
/// the payload; wall_time_ms is the only field allowed to vary between
/// identical invocations.
struct RunMeta {
    std::string command;
    std::string input_digest;
    double wall_time_ms = 0.0;
    bool json = false;
};

std::string render_bound(const RunMeta& meta, const BoundReport& report,
                         std::size_t atoms);

std::string render_verify(const RunMeta& meta, const CoherenceReport& coh,
                          const DecompositionReport& dec, double implied_floor,
                          std::size_t atoms, std::size_t dim);

std::string render_verify_functional(const RunMeta& meta,
                                     const FunctionalCoherenceReport& report,
                                     std::size_t atoms, std::size_t dim, double p);

std::string render_precondition(const RunMeta& meta, const PreconditionError& err);

std::string render_optimize(const RunMeta& meta, const OptimizerResult& result,
                            const OptimizerConfig& cfg, std::size_t atoms,
                            std::size_t dim, const std::string& out_path);

std::string render_make(const RunMeta& meta, const std::string& generator,
                        std::size_t atoms, std::size_t dim, const std::string& out_path);

}  // namespace rankin::cli
