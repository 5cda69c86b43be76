#include "mpeda/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mpeda {

namespace {

constexpr int kCurveSamples = 512;
constexpr double kPlotWidth = 640.0;
constexpr double kMargin = 48.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

template <Scalar T>
int ceil_to_int(const T& v) {
    if constexpr (std::same_as<T, double>) {
        return static_cast<int>(std::ceil(v));
    } else {
        BigInt n = boost::multiprecision::numerator(v);
        BigInt d = boost::multiprecision::denominator(v);
        BigInt c = n / d + (n % d != 0 ? 1 : 0);
        return c.template convert_to<int>();
    }
}

}  // namespace

template <Scalar T>
Raster rasterize(const QuadrantTrace<T>& trace) {
    const T& h = trace.step.h();
    Raster r;
    r.width = ceil_to_int(T(trace.ellipse.a() / h + 2));
    r.height = ceil_to_int(T(trace.ellipse.b() / h + 2));
    r.pixels.assign(static_cast<std::size_t>(r.width) * r.height, kPaper);

    // Column 1 is x = 0; row 1 from the bottom is the lowest lattice row.
    const std::int64_t bottom = last_row(trace.ellipse, trace.step);
    for (const auto& p : trace.points) {
        std::int64_t col = 1 + p.i;
        std::int64_t row_from_bottom = 1 + (bottom - p.j);
        std::int64_t row = r.height - 1 - row_from_bottom;
        if (col < 0 || col >= r.width || row < 0 || row >= r.height) {
            throw std::logic_error("emitted point falls outside the raster");
        }
        r.pixels[static_cast<std::size_t>(row) * r.width + static_cast<std::size_t>(col)] = kInk;
    }
    return r;
}

void write_pgm(const Raster& raster, std::ostream& out) {
    out << "P5\n" << raster.width << ' ' << raster.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(raster.pixels.data()),
              static_cast<std::streamsize>(raster.pixels.size()));
}

template <Scalar T>
void write_svg(const QuadrantTrace<T>& trace, std::ostream& out) {
    const double a = to_double(trace.ellipse.a());
    const double b = to_double(trace.ellipse.b());
    const double h = to_double(trace.step.h());
    const double extent_x = a + h;
    const double extent_y = b + h;
    const double scale = kPlotWidth / extent_x;
    const double width = kPlotWidth + 2 * kMargin;
    const double height = extent_y * scale + 2 * kMargin;

    auto px = [&](double x) { return fixed(kMargin + x * scale); };
    auto py = [&](double y) { return fixed(kMargin + (extent_y - y) * scale); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width)
        << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' '
        << fixed(height) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out << "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(extent_x)
        << "\" y2=\"" << py(0) << "\"/>\n"
        << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
        << "\" y2=\"" << py(extent_y) << "\"/>\n";
    for (int k = 1; k <= static_cast<int>(std::floor(extent_x)); ++k) {
        out << "    <line x1=\"" << px(k) << "\" y1=\"" << py(0) << "\" x2=\"" << px(k)
            << "\" y2=\"" << fixed(kMargin + extent_y * scale + 4) << "\"/>\n";
    }
    for (int k = 1; k <= static_cast<int>(std::floor(extent_y)); ++k) {
        out << "    <line x1=\"" << fixed(kMargin - 4) << "\" y1=\"" << py(k) << "\" x2=\""
            << px(0) << "\" y2=\"" << py(k) << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <polyline id=\"exact\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (int k = 0; k < kCurveSamples; ++k) {
        double t = (std::numbers::pi / 2) * k / (kCurveSamples - 1);
        if (k) out << ' ';
        out << px(a * std::cos(t)) << ',' << py(b * std::sin(t));
    }
    out << "\"/>\n";

    out << "  <polyline id=\"staircase\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 3\" points=\"";
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        if (k) out << ' ';
        out << px(to_double(trace.points[k].x)) << ',' << py(to_double(trace.points[k].y));
    }
    out << "\"/>\n";

    const double lx = width - kMargin - 220;
    out << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n"
        << "    <line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(kMargin) << "\" x2=\""
        << fixed(lx + 30) << "\" y2=\"" << fixed(kMargin)
        << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n"
        << "    <text x=\"" << fixed(lx + 38) << "\" y=\"" << fixed(kMargin + 5)
        << "\">exact ellipse</text>\n"
        << "    <line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(kMargin + 22) << "\" x2=\""
        << fixed(lx + 30) << "\" y2=\"" << fixed(kMargin + 22)
        << "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n"
        << "    <text x=\"" << fixed(lx + 38) << "\" y=\"" << fixed(kMargin + 27)
        << "\">midpoint, h = " << format_number(trace.step.h()) << "</text>\n"
        << "  </g>\n"
        << "</svg>\n";
}

template <Scalar T>
void render_comparison(const QuadrantTrace<T>& trace, RenderFormat format,
                       const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    if (format == RenderFormat::kPgm) {
        write_pgm(rasterize(trace), file);
    } else {
        write_svg(trace, file);
    }
    file.flush();
    if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

#define MPEDA_INSTANTIATE_RENDER(T)                                                      \
    template Raster rasterize<T>(const QuadrantTrace<T>&);                               \
    template void write_svg<T>(const QuadrantTrace<T>&, std::ostream&);                  \
    template void render_comparison<T>(const QuadrantTrace<T>&, RenderFormat,            \
                                       const std::filesystem::path&);

MPEDA_INSTANTIATE_RENDER(double)
MPEDA_INSTANTIATE_RENDER(Rational)

#undef MPEDA_INSTANTIATE_RENDER

}  // namespace mpeda
