#include "mpeda/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mpeda {

namespace {

constexpr std::string_view kPaperHeader =
    "x,y,P'_k,x_{k+1},y_{k+1},P'_{k+1},2b^2x_{k+1},2a^2y_{k+1}";
constexpr std::string_view kCsvHeader =
    "x,y,P'_k,x_{k+1},y_{k+1},P'_{k+1},2b^2x_{k+1},2a^2y_{k+1},region";

template <Scalar T>
void write_row_values(const TraceRow<T>& row, std::ostream& out) {
    out << format_number(row.x) << ',' << format_number(row.y) << ',' << format_number(row.p)
        << ',' << format_number(row.x_next) << ',' << format_number(row.y_next) << ','
        << format_number(row.p_next) << ',' << format_number(row.lhs) << ','
        << format_number(row.rhs);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

Region parse_region(std::string_view text) {
    if (text == "R1") return Region::kR1;
    if (text == "R2") return Region::kR2;
    throw std::runtime_error("unknown region '" + std::string(text) + "'");
}

template <Scalar T>
void emit_csv(const QuadrantTrace<T>& trace, std::ostream& out, TableOptions options) {
    if (!options.published_layout) {
        out << kCsvHeader << '\n';
        for (const auto& s : trace.steps) {
            write_row_values(to_row(s), out);
            out << ',' << to_string(s.region) << '\n';
        }
        return;
    }
    Region block = Region::kR1;
    out << kPaperHeader << '\n';
    for (const auto& s : trace.steps) {
        if (s.region != block) {
            block = s.region;
            out << '\n' << kPaperHeader << '\n';
        }
        write_row_values(to_row(s), out);
        out << '\n';
    }
}

}  // namespace

std::string_view trace_csv_header() { return kCsvHeader; }

template <Scalar T>
TraceRow<T> to_row(const TraceStep<T>& step) {
    return {step.before.x, step.before.y, step.p_before, step.after.x, step.after.y,
            step.p_after,  step.lhs,      step.rhs,      step.region};
}

// Defined in json_export.cpp.
template <Scalar T>
void emit_trace_json(const QuadrantTrace<T>& trace, std::ostream& out);

template <Scalar T>
void emit_trace_table(const QuadrantTrace<T>& trace, TableFormat format, std::ostream& out,
                      TableOptions options) {
    if (format == TableFormat::kJson) {
        emit_trace_json(trace, out);
    } else {
        emit_csv(trace, out, options);
    }
    if (!out) throw std::runtime_error("failed to write trace table");
}

template <Scalar T>
std::vector<TraceRow<T>> parse_trace_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("trace table: unexpected header '" + line + "'");
    }
    std::vector<TraceRow<T>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 9) {
            throw std::runtime_error("trace table line " + std::to_string(line_no) +
                                     ": expected 9 fields");
        }
        try {
            rows.push_back({parse_number<T>(fields[0]), parse_number<T>(fields[1]),
                            parse_number<T>(fields[2]), parse_number<T>(fields[3]),
                            parse_number<T>(fields[4]), parse_number<T>(fields[5]),
                            parse_number<T>(fields[6]), parse_number<T>(fields[7]),
                            parse_region(fields[8])});
        } catch (const std::exception& e) {
            throw std::runtime_error("trace table line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    return rows;
}

#define MPEDA_INSTANTIATE_TABLE(T)                                                             \
    template TraceRow<T> to_row<T>(const TraceStep<T>&);                                       \
    template void emit_trace_table<T>(const QuadrantTrace<T>&, TableFormat, std::ostream&,     \
                                      TableOptions);                                           \
    template std::vector<TraceRow<T>> parse_trace_table<T>(std::istream&);

MPEDA_INSTANTIATE_TABLE(double)
MPEDA_INSTANTIATE_TABLE(Rational)

#undef MPEDA_INSTANTIATE_TABLE

}  // namespace mpeda
