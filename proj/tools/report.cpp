#include "report.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rankin/io.hpp"
#include "rankin/version.hpp"

namespace rankin::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double x) { return io::format_double(x); }

// aligned "key: value" lines at a given indent
class TextBlock {
public:
    explicit TextBlock(int indent) : indent_(indent) {}

    void add(std::string_view key, std::string_view value) {
        rows_.emplace_back(std::string(key), std::string(value));
        width_ = std::max(width_, key.size() + 1);
    }
    // keeps char literals away from the bool overload
    void add(std::string_view key, const char* value) {
        add(key, std::string_view(value));
    }
    void add(std::string_view key, double value) { add(key, fmt(value)); }
    void add(std::string_view key, std::size_t value) { add(key, std::to_string(value)); }
    void add(std::string_view key, bool value) {
        add(key, value ? std::string_view("true") : std::string_view("false"));
    }

    void emit(std::ostringstream& out) const {
        for (const auto& [key, value] : rows_) {
            out << std::string(indent_, ' ') << key << ":"
                << std::string(width_ - key.size(), ' ') << value << "\n";
        }
    }

private:
    int indent_;
    std::size_t width_ = 0;
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string render(const RunMeta& meta, const std::string& kind,
                   const std::function<void(TextBlock&)>& fill_text,
                   const std::function<void(ordered_json&)>& fill_json) {
    if (meta.json) {
        ordered_json doc;
        doc["tool"] = "rankin";
        doc["version"] = kVersion;
        doc["command"] = meta.command;
        doc["input_digest"] = meta.input_digest;
        doc["wall_time_ms"] = meta.wall_time_ms;
        ordered_json payload;
        payload["kind"] = kind;
        fill_json(payload);
        doc["report"] = std::move(payload);
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    TextBlock head(0);
    head.add("tool", std::string("rankin ") + kVersion);
    head.add("command", meta.command);
    head.add("input-digest", meta.input_digest);
    head.add("wall-time-ms", meta.wall_time_ms);
    head.add("report", kind);
    head.emit(out);
    TextBlock body(2);
    fill_text(body);
    body.emit(out);
    return out.str();
}

std::string witness_text(const std::pair<std::size_t, std::size_t>& w) {
    return "(" + std::to_string(w.first) + ", " + std::to_string(w.second) + ")";
}

}  // namespace

std::string digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string render_bound(const RunMeta& meta, const BoundReport& report,
                         std::size_t atoms) {
    return render(
        meta, "bound",
        [&](TextBlock& b) {
            b.add("atoms", atoms);
            b.add("diagonal-mass", report.diagonal_mass);
            b.add("offdiagonal-mass", report.offdiagonal_mass);
            b.add("coherence-bound", report.coherence_bound);
            b.add("distance-bound", report.distance_bound);
        },
        [&](ordered_json& j) {
            j["atoms"] = atoms;
            j["diagonal_mass"] = report.diagonal_mass;
            j["offdiagonal_mass"] = report.offdiagonal_mass;
            j["coherence_bound"] = report.coherence_bound;
            j["distance_bound"] = report.distance_bound;
        });
}

std::string render_verify(const RunMeta& meta, const CoherenceReport& coh,
                          const DecompositionReport& dec, double implied_floor,
                          std::size_t atoms, std::size_t dim) {
    return render(
        meta, "verify",
        [&](TextBlock& b) {
            b.add("atoms", atoms);
            b.add("dim", dim);
            b.add("coherence", coh.coherence);
            b.add("witness", witness_text(coh.witness));
            b.add("min-distance-sq", coh.min_distance_sq);
            b.add("coherence-bound", coh.coherence_bound);
            b.add("distance-bound", coh.distance_bound);
            b.add("slack", coh.slack);
            b.add("tolerance", coh.tolerance);
            b.add("satisfied", coh.satisfied);
            b.add("decomposition-total", dec.total);
            b.add("decomposition-diag", dec.diag_part);
            b.add("decomposition-offdiag", dec.offdiag_part);
            b.add("decomposition-residual", dec.residual);
            b.add("implied-coherence-floor", implied_floor);
        },
        [&](ordered_json& j) {
            j["atoms"] = atoms;
            j["dim"] = dim;
            j["coherence"] = coh.coherence;
            j["witness"] = {coh.witness.first, coh.witness.second};
            j["min_distance_sq"] = coh.min_distance_sq;
            j["coherence_bound"] = coh.coherence_bound;
            j["distance_bound"] = coh.distance_bound;
            j["slack"] = coh.slack;
            j["tolerance"] = coh.tolerance;
            j["satisfied"] = coh.satisfied;
            j["decomposition"] = {{"total", dec.total},
                                  {"diag_part", dec.diag_part},
                                  {"offdiag_part", dec.offdiag_part},
                                  {"residual", dec.residual}};
            j["implied_coherence_floor"] = implied_floor;
        });
}

std::string render_verify_functional(const RunMeta& meta,
                                     const FunctionalCoherenceReport& report,
                                     std::size_t atoms, std::size_t dim, double p) {
    return render(
        meta, "verify-functional",
        [&](TextBlock& b) {
            b.add("atoms", atoms);
            b.add("dim", dim);
            b.add("p", p);
            b.add("coherence", report.coherence);
            b.add("witness", witness_text(report.witness));
            b.add("coherence-bound", report.coherence_bound);
            b.add("slack", report.slack);
            b.add("tolerance", report.tolerance);
            b.add("satisfied", report.satisfied);
            b.add("integral-condition", report.integral_condition);
            b.add("pointwise-condition-ok", report.pointwise_condition_ok);
        },
        [&](ordered_json& j) {
            j["atoms"] = atoms;
            j["dim"] = dim;
            j["p"] = p;
            j["coherence"] = report.coherence;
            j["witness"] = {report.witness.first, report.witness.second};
            j["coherence_bound"] = report.coherence_bound;
            j["slack"] = report.slack;
            j["tolerance"] = report.tolerance;
            j["satisfied"] = report.satisfied;
            j["integral_condition"] = report.integral_condition;
            j["pointwise_condition_ok"] = report.pointwise_condition_ok;
        });
}

std::string render_precondition(const RunMeta& meta, const PreconditionError& err) {
    return render(
        meta, "precondition-violation",
        [&](TextBlock& b) {
            b.add("message", err.what());
            for (const auto& item : err.items()) {
                b.add(item.condition, fmt(item.violation) + "  " + item.detail);
            }
        },
        [&](ordered_json& j) {
            j["message"] = err.what();
            ordered_json items = ordered_json::array();
            for (const auto& item : err.items()) {
                items.push_back({{"condition", item.condition},
                                 {"violation", item.violation},
                                 {"detail", item.detail}});
            }
            j["violations"] = std::move(items);
        });
}

std::string render_optimize(const RunMeta& meta, const OptimizerResult& result,
                            const OptimizerConfig& cfg, std::size_t atoms,
                            std::size_t dim, const std::string& out_path) {
    const char* cert = result.certificate == Certificate::equality_certified
                           ? "equality-certified"
                           : "gap-positive";
    return render(
        meta, "optimize",
        [&](TextBlock& b) {
            b.add("atoms", atoms);
            b.add("dim", dim);
            b.add("seed", static_cast<std::size_t>(cfg.seed));
            b.add("restarts", cfg.restarts);
            b.add("max-iters", cfg.max_iters);
            b.add("threads", static_cast<std::size_t>(cfg.threads));
            b.add("achieved-coherence", result.achieved_coherence);
            b.add("coherence-bound", result.bound);
            b.add("gap", result.gap);
            b.add("certificate", cert);
            b.add("best-restart", result.best_restart);
            b.add("out", out_path.empty() ? "(none)" : out_path);
            for (const auto& t : result.traces) {
                b.add("restart-" + std::to_string(t.restart),
                      std::to_string(t.iterations) + " iters, smoothed " +
                          fmt(t.final_smoothed) + ", coherence " +
                          fmt(t.final_coherence));
            }
        },
        [&](ordered_json& j) {
            j["atoms"] = atoms;
            j["dim"] = dim;
            j["seed"] = cfg.seed;
            j["restarts"] = cfg.restarts;
            j["max_iters"] = cfg.max_iters;
            j["threads"] = cfg.threads;
            j["achieved_coherence"] = result.achieved_coherence;
            j["coherence_bound"] = result.bound;
            j["gap"] = result.gap;
            j["certificate"] = cert;
            j["best_restart"] = result.best_restart;
            j["out"] = out_path;
            ordered_json trace = ordered_json::array();
            for (const auto& t : result.traces) {
                trace.push_back({{"restart", t.restart},
                                 {"iterations", t.iterations},
                                 {"final_smoothed", t.final_smoothed},
                                 {"final_coherence", t.final_coherence}});
            }
            j["trace"] = std::move(trace);
        });
}

std::string render_make(const RunMeta& meta, const std::string& generator,
                        std::size_t atoms, std::size_t dim,
                        const std::string& out_path) {
    return render(
        meta, "make",
        [&](TextBlock& b) {
            b.add("generator", generator);
            b.add("atoms", atoms);
            if (dim > 0) b.add("dim", dim);
            b.add("out", out_path);
        },
        [&](ordered_json& j) {
            j["generator"] = generator;
            j["atoms"] = atoms;
            if (dim > 0) j["dim"] = dim;
            j["out"] = out_path;
        });
}

}  // namespace rankin::cli
