#include "mpeda/io.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>

namespace mpeda {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Exact values stay exact as decimal strings; doubles go out as numbers.
ordered_json number(double v) { return v == 0.0 ? 0.0 : v; }
ordered_json number(const Rational& v) { return format_number(v); }

template <Scalar T>
ordered_json step_json(const GridStep<T>& step) {
    ordered_json j;
    j["h"] = number(step.h());
    j["mode"] = std::string(to_string(step.mode()));
    if constexpr (std::same_as<T, Rational>) {
        j["numerator"] = boost::multiprecision::numerator(step.h()).str();
        j["denominator"] = boost::multiprecision::denominator(step.h()).str();
    }
    return j;
}

template <Scalar T>
ordered_json ellipse_json(const EllipseSpec<T>& ellipse) {
    return {{"a", number(ellipse.a())}, {"b", number(ellipse.b())}};
}

template <Scalar T>
ordered_json errors_json(const ErrorReport<T>& report, bool per_point) {
    ordered_json j;
    j["total_iterations"] = report.total_iterations;
    j["mean_geometric"] = report.mean_geometric;
    j["max_geometric"] = report.max_geometric;
    j["mean_algebraic"] = report.mean_algebraic;
    j["max_algebraic"] = report.max_algebraic;
    if (per_point) {
        ordered_json points = ordered_json::array();
        for (const auto& e : report.per_point) {
            points.push_back({{"x", number(e.point.x)},
                              {"y", number(e.point.y)},
                              {"algebraic_residual", e.algebraic_residual},
                              {"geometric_distance", e.geometric_distance}});
        }
        j["per_point"] = std::move(points);
    }
    return j;
}

std::string_view seed_name(SeedPolicy policy) {
    return policy == SeedPolicy::kLastR1Point ? "last-r1-point" : "one-row-below";
}

ordered_json summary_json(const TradeoffSummary& s) {
    return {{"iterations_increase_as_h_decreases", s.iterations_increase},
            {"mean_error_decreases_as_h_decreases", s.mean_error_decreases},
            {"max_error_decreases_as_h_decreases", s.max_error_decreases},
            {"tradeoff_holds", s.holds()}};
}

}  // namespace

template <Scalar T>
void emit_trace_json(const QuadrantTrace<T>& trace, std::ostream& out) {
    const IterationCount count = iteration_count(trace);
    ordered_json doc;
    doc["ellipse"] = ellipse_json(trace.ellipse);
    doc["step"] = step_json(trace.step);
    doc["r2_seed"] = std::string(seed_name(trace.seed_policy));
    doc["transition_index"] = trace.transition_index;
    doc["iterations"] = {{"r1", count.r1_steps}, {"r2", count.r2_steps}, {"total", count.total()}};

    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"region", std::string(to_string(s.region))},
                         {"i", s.before.i},
                         {"j", s.before.j},
                         {"x", number(s.before.x)},
                         {"y", number(s.before.y)},
                         {"p", number(s.p_before)},
                         {"i_next", s.after.i},
                         {"j_next", s.after.j},
                         {"x_next", number(s.after.x)},
                         {"y_next", number(s.after.y)},
                         {"p_next", number(s.p_after)},
                         {"lhs", number(s.lhs)},
                         {"rhs", number(s.rhs)}});
    }
    doc["steps"] = std::move(steps);
    doc["errors"] = errors_json(error_report(trace), true);
    out << doc.dump(2) << '\n';
}

template <Scalar T>
void emit_error_reports(std::span<const ErrorReport<T>> reports, TableFormat format,
                        std::ostream& out) {
    const TradeoffSummary summary = summarize_tradeoff(reports);
    if (format == TableFormat::kJson) {
        ordered_json doc;
        doc["ellipse"] = reports.empty() ? ordered_json() : ellipse_json(reports.front().ellipse);
        ordered_json list = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json j;
            j["step"] = step_json(r.step);
            j["errors"] = errors_json(r, false);
            list.push_back(std::move(j));
        }
        doc["reports"] = std::move(list);
        doc["summary"] = summary_json(summary);
        out << doc.dump(2) << '\n';
    } else {
        out << "h,mode,total_iterations,mean_geometric,max_geometric,mean_algebraic,max_algebraic\n";
        for (const auto& r : reports) {
            out << format_number(r.step.h()) << ',' << to_string(r.step.mode()) << ','
                << r.total_iterations << ',' << format_number(r.mean_geometric) << ','
                << format_number(r.max_geometric) << ',' << format_number(r.mean_algebraic)
                << ',' << format_number(r.max_algebraic) << '\n';
        }
        auto yes_no = [](bool v) { return v ? "yes" : "no"; };
        out << '\n'
            << "# iterations increase as h decreases: " << yes_no(summary.iterations_increase)
            << '\n'
            << "# mean geometric error decreases as h decreases: "
            << yes_no(summary.mean_error_decreases) << '\n'
            << "# max geometric error decreases as h decreases: "
            << yes_no(summary.max_error_decreases) << '\n'
            << "# trade-off " << (summary.holds() ? "confirmed" : "refuted") << '\n';
    }
    if (!out) throw std::runtime_error("failed to write error reports");
}

#define MPEDA_INSTANTIATE_REPORT(T)                                                           \
    template void emit_trace_json<T>(const QuadrantTrace<T>&, std::ostream&);                 \
    template void emit_error_reports<T>(std::span<const ErrorReport<T>>, TableFormat,         \
                                        std::ostream&);

MPEDA_INSTANTIATE_REPORT(double)
MPEDA_INSTANTIATE_REPORT(Rational)

#undef MPEDA_INSTANTIATE_REPORT

}  // namespace mpeda
