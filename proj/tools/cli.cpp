#include "cli.hpp"

#include "mpeda/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace mpeda::cli {

namespace {

struct RunConfig {
    std::string a;
    std::string b;
    std::vector<std::string> h_list;
    std::string mode = "float";
    std::string format;  // csv|json for tables, pgm|svg for render
    std::string out;
    bool published_layout = false;
    std::string r2_seed = "last";

    SeedPolicy seed_policy() const {
        return r2_seed == "below" ? SeedPolicy::kOneRowBelow : SeedPolicy::kLastR1Point;
    }
};

enum class Command { kTrace, kCompare, kRender };

// Everything the command needs, validated before any output is produced.
template <Scalar T>
struct Validated {
    EllipseSpec<T> ellipse;
    std::vector<GridStep<T>> steps;
};

template <Scalar T>
GridStep<T> parse_step(const std::string& text) {
    if constexpr (std::same_as<T, Rational>) {
        if (auto frac = parse_fraction_literal(text)) {
            return GridStep<T>::from_fraction(frac->numerator, frac->denominator);
        }
    }
    return GridStep<T>(parse_number<T>(text));
}

template <Scalar T>
Validated<T> validate(const RunConfig& config) {
    EllipseSpec<T> ellipse(parse_number<T>(config.a), parse_number<T>(config.b));
    std::vector<GridStep<T>> steps;
    for (const auto& text : config.h_list) {
        steps.push_back(parse_step<T>(text));
        check_compatible(ellipse, steps.back());
    }
    return {std::move(ellipse), std::move(steps)};
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw std::runtime_error("write failed");
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

TableFormat table_format(const std::string& name) {
    return name == "json" ? TableFormat::kJson : TableFormat::kCsv;
}

template <Scalar T>
int execute(Command command, const RunConfig& config, std::ostream& out) {
    Validated<T> input = validate<T>(config);
    const TraceOptions options{config.seed_policy()};

    switch (command) {
        case Command::kTrace: {
            auto trace = trace_quadrant(input.ellipse, input.steps.front(), options);
            Sink sink(config.out, out);
            emit_trace_table(trace, table_format(config.format), sink.get(),
                             TableOptions{config.published_layout});
            sink.finish();
            break;
        }
        case Command::kCompare: {
            auto reports = compare_steps<T>(input.ellipse, input.steps, options);
            Sink sink(config.out, out);
            emit_error_reports<T>(reports, table_format(config.format), sink.get());
            sink.finish();
            break;
        }
        case Command::kRender: {
            auto trace = trace_quadrant(input.ellipse, input.steps.front(), options);
            render_comparison(trace, config.format == "pgm" ? RenderFormat::kPgm : RenderFormat::kSvg,
                              config.out);
            break;
        }
    }
    return kExitOk;
}

void add_common_options(CLI::App& sub, RunConfig& config) {
    sub.add_option("--a", config.a, "semi-major axis (must exceed b)")->required();
    sub.add_option("--b", config.b, "semi-minor axis")->required();
    sub.add_option("--h", config.h_list, "grid step(s), comma separated; fractions like 1/10 allowed")
        ->required()
        ->delimiter(',');
    sub.add_option("--mode", config.mode, "arithmetic: float (default) or exact")
        ->check(CLI::IsMember({"float", "exact"}));
    sub.add_option("--r2-seed", config.r2_seed,
                   "R2 seed: last (last R1 point, default) or below (one row lower)")
        ->check(CLI::IsMember({"last", "below"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalised midpoint ellipse drawing: traces, error comparison, renderings",
                 "mpeda"};
    app.set_help_flag("--help", "print this help message and exit");  // -h clashes with --h
    app.require_subcommand(1);

    RunConfig config;
    std::optional<Command> command;

    auto* trace = app.add_subcommand("trace", "decision-parameter trace of the first quadrant");
    add_common_options(*trace, config);
    trace->add_option("--format", config.format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    trace->add_option("--out", config.out, "output file (default: stdout)");
    trace->add_flag("--published-layout", config.published_layout,
                    "split R1/R2 into separate blocks with the published column headers");
    trace->callback([&] { command = Command::kTrace; });

    auto* compare = app.add_subcommand("compare", "error and iteration comparison across steps");
    add_common_options(*compare, config);
    compare->add_option("--format", config.format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    compare->add_option("--out", config.out, "output file (default: stdout)");
    compare->callback([&] { command = Command::kCompare; });

    auto* render = app.add_subcommand("render", "exact curve versus generated points");
    add_common_options(*render, config);
    render->add_option("--format", config.format, "svg (default) or pgm")
        ->check(CLI::IsMember({"svg", "pgm"}))
        ->default_val("svg");
    render->add_option("--out", config.out, "output image path")->required();
    render->callback([&] { command = Command::kRender; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*command != Command::kCompare && config.h_list.size() != 1) {
        err << "error: " << (*command == Command::kTrace ? "trace" : "render")
            << " takes exactly one --h value\n";
        return kExitUsage;
    }

    try {
        if (config.mode == "exact") {
            return execute<Rational>(*command, config, out);
        }
        return execute<double>(*command, config, out);
    } catch (const ValidationError& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace mpeda::cli
