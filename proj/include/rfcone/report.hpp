#pragma once

// Analysis reports: named outputs with provenance and claim verdicts,
// rendered as JSON or as a plain table.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace rfcone::report {

using Json = nlohmann::ordered_json;

enum class Status { verified, conjectural, undecided, failed };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::conjectural: return "conjectural";
        case Status::undecided: return "undecided";
        case Status::failed: return "failed";
    }
    return "failed";
}

/// Rounds to 12 significant digits; non-finite values pass through.
inline double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json number(double x) {
    if (!std::isfinite(x)) return Json(nullptr);
    return Json(round12(x));
}

struct Output {
    std::string name;
    double value;
    std::string provenance;
    std::optional<double> target;
    std::optional<double> tolerance;

    std::optional<double> deviation() const {
        if (!target) return std::nullopt;
        return std::abs(value - *target);
    }
    bool within_tolerance() const { return !target || !tolerance || *deviation() <= *tolerance; }
};

struct VerdictEntry {
    std::string claim;
    Status status;
    std::optional<double> margin;
};

class AnalysisReport {
public:
    explicit AnalysisReport(std::string pipeline) : pipeline_(std::move(pipeline)) {}

    const std::string& pipeline() const { return pipeline_; }

    template <class V>
    void input(const std::string& key, V value) {
        if constexpr (std::is_floating_point_v<V>)
            inputs_[key] = number(value);
        else
            inputs_[key] = value;
    }

    /// Computed quantity without a reference value.
    Output& output(const std::string& name, double value, std::string provenance = "computed") {
        outputs_.push_back({name, value, std::move(provenance), std::nullopt, std::nullopt});
        return outputs_.back();
    }

    /// Computed quantity compared against a published value.
    Output& output(const std::string& name, double value, double target, double tolerance,
                   std::string provenance = "computed vs published") {
        outputs_.push_back({name, value, std::move(provenance), target, tolerance});
        return outputs_.back();
    }

    /// A claim resting on a conjectural input is never reported as verified.
    void verdict(std::string claim, Status status, std::optional<double> margin = std::nullopt,
                 bool depends_on_conjectural = false) {
        if (depends_on_conjectural && status == Status::verified) status = Status::conjectural;
        verdicts_.push_back({std::move(claim), status, margin});
    }

    /// verified when the output with this name is within its tolerance, failed otherwise.
    void check(const std::string& claim, const Output& o) {
        verdict(claim, o.within_tolerance() ? Status::verified : Status::failed,
                o.tolerance ? std::optional<double>(*o.tolerance - *o.deviation()) : std::nullopt);
    }

    void set_runtime_ms(double ms) { runtime_ms_ = ms; }

    const std::vector<Output>& outputs() const { return outputs_; }
    const std::vector<VerdictEntry>& verdicts() const { return verdicts_; }

    const Output* find(const std::string& name) const {
        for (const auto& o : outputs_)
            if (o.name == name) return &o;
        return nullptr;
    }

    bool any_failed() const {
        for (const auto& v : verdicts_)
            if (v.status == Status::failed) return true;
        return false;
    }

    Json to_json() const {
        Json j;
        j["pipeline"] = pipeline_;
        j["inputs"] = inputs_.is_null() ? Json::object() : inputs_;
        Json outs = Json::object();
        for (const auto& o : outputs_) {
            Json e;
            e["value"] = number(o.value);
            e["tolerance"] = o.tolerance ? number(*o.tolerance) : Json(nullptr);
            e["target"] = o.target ? number(*o.target) : Json(nullptr);
            e["deviation"] = o.target ? number(*o.deviation()) : Json(nullptr);
            e["provenance"] = o.provenance;
            outs[o.name] = e;
        }
        j["outputs"] = outs;
        Json vs = Json::array();
        for (const auto& v : verdicts_) {
            Json e;
            e["claim"] = v.claim;
            e["status"] = to_string(v.status);
            e["margin"] = v.margin ? number(*v.margin) : Json(nullptr);
            vs.push_back(e);
        }
        j["verdicts"] = vs;
        j["runtime_ms"] = number(runtime_ms_);
        return j;
    }

    void write_table(std::ostream& os) const {
        os << "pipeline: " << pipeline_ << '\n';
        if (!inputs_.is_null())
            for (const auto& [k, v] : inputs_.items()) os << "  input " << k << " = " << v.dump() << '\n';
        os << std::left << std::setw(34) << "quantity" << std::setw(22) << "value" << std::setw(18) << "target"
           << "deviation\n";
        for (const auto& o : outputs_) {
            os << std::setw(34) << o.name << std::setw(22) << fmt(o.value) << std::setw(18)
               << (o.target ? fmt(*o.target) : std::string("-")) << (o.target ? fmt(*o.deviation()) : "-") << '\n';
        }
        for (const auto& v : verdicts_) {
            os << '[' << to_string(v.status) << "] " << v.claim;
            if (v.margin) os << " (margin " << fmt(*v.margin) << ')';
            os << '\n';
        }
        os << "runtime_ms: " << fmt(runtime_ms_) << '\n';
    }

private:
    static std::string fmt(double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    std::string pipeline_;
    Json inputs_;
    std::vector<Output> outputs_;
    std::vector<VerdictEntry> verdicts_;
    double runtime_ms_ = 0.0;
};

}  // namespace rfcone::report
