#pragma once

// Trace tables (CSV / JSON), error report output, and comparison renderings.

#include "mpeda/analysis.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mpeda {

enum class TableFormat : std::uint8_t { kCsv, kJson };
enum class RenderFormat : std::uint8_t { kPgm, kSvg };

struct TableOptions {
    /// Two CSV blocks (R1, then R2) separated by a blank line, with the
    /// published table headers and no region column.
    bool published_layout = false;
};

/// One trace row as written to / read from a table.
template <Scalar T>
struct TraceRow {
    T x{}, y{}, p{};
    T x_next{}, y_next{}, p_next{};
    T lhs{}, rhs{};
    Region region = Region::kR1;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

template <Scalar T>
TraceRow<T> to_row(const TraceStep<T>& step);

/// Header of the default CSV layout.
std::string_view trace_csv_header();

/// CSV: header plus one row per step. JSON: an object with "ellipse", "step",
/// "steps" and "errors" keys. Exact-mode numbers are exact decimals (JSON
/// strings); float-mode numbers are shortest round-trip decimals.
template <Scalar T>
void emit_trace_table(const QuadrantTrace<T>& trace, TableFormat format, std::ostream& out,
                      TableOptions options = {});

/// Reads back a default-layout CSV trace. Throws std::runtime_error on a
/// malformed header or row.
template <Scalar T>
std::vector<TraceRow<T>> parse_trace_table(std::istream& in);

/// One line (CSV) or object (JSON) per report, followed by the trade-off summary.
template <Scalar T>
void emit_error_reports(std::span<const ErrorReport<T>> reports, TableFormat format,
                        std::ostream& out);

/// Grey-level raster, row-major from the top-left corner.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int col, int row) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

inline constexpr std::uint8_t kInk = 0;
inline constexpr std::uint8_t kPaper = 255;

/// ceil(a/h + 2) x ceil(b/h + 2) raster, one pixel per grid step, offset one
/// pixel from the left and bottom edges, emitted points inked.
template <Scalar T>
Raster rasterize(const QuadrantTrace<T>& trace);

void write_pgm(const Raster& raster, std::ostream& out);

/// Exact quarter ellipse (512-sample polyline) against the emitted staircase.
template <Scalar T>
void write_svg(const QuadrantTrace<T>& trace, std::ostream& out);

/// Writes the rendering to `path`. Throws std::runtime_error when the file
/// cannot be written.
template <Scalar T>
void render_comparison(const QuadrantTrace<T>& trace, RenderFormat format,
                       const std::filesystem::path& path);

}  // namespace mpeda
