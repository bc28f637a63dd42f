#include "starrad/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace starrad {

namespace {

constexpr double kCanvasW = 800.0;
constexpr double kCanvasH = 640.0;
constexpr double kPad = 60.0;

struct Box {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    void grow(Complex w) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    }
};

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

struct Mapper {
    Box box;
    double scale = 1.0;
    double cx = 0.0, cy = 0.0;

    explicit Mapper(Box b) : box(b) {
        const double w = std::max(box.xmax - box.xmin, 1e-9);
        const double h = std::max(box.ymax - box.ymin, 1e-9);
        scale = std::min((kCanvasW - 2.0 * kPad) / w, (kCanvasH - 2.0 * kPad) / h);
        cx = 0.5 * (box.xmin + box.xmax);
        cy = 0.5 * (box.ymin + box.ymax);
    }
    double px(double x) const { return kCanvasW / 2.0 + (x - cx) * scale; }
    double py(double y) const { return kCanvasH / 2.0 - (y - cy) * scale; }
};

void append_polyline(std::ostringstream& os, const Mapper& m,
                     const std::vector<Complex>& pts, const char* color,
                     bool close) {
    os << "  <polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (const Complex& w : pts)
        os << fmt(m.px(w.real())) << "," << fmt(m.py(w.imag())) << " ";
    if (close && !pts.empty())
        os << fmt(m.px(pts.front().real())) << "," << fmt(m.py(pts.front().imag()));
    os << "\"/>\n";
}

std::vector<Complex> image_circle(FunctionId id, double r, int n) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n;
        pts.push_back(eval_logderiv(id, std::polar(r, theta)));
    }
    return pts;
}

}  // namespace

std::string render_region_plot(ClassId cls, const TargetRegion& region, int samples) {
    const double radius = closed_form_radius(cls, region);
    const FunctionId id = extremal_function(cls);
    const bool sharp = radius_is_sharp(cls, region.tag);

    const std::vector<Complex> curve_half = image_circle(id, 0.5 * radius, samples);
    const std::vector<Complex> curve_full = image_circle(id, radius, samples);
    const std::vector<Complex> boundary =
        boundary_points(region, std::max(512, samples));

    Box box;
    box.xmin = box.xmax = curve_full.front().real();
    box.ymin = box.ymax = curve_full.front().imag();
    for (const Complex& w : curve_full) box.grow(w);
    for (const Complex& w : curve_half) box.grow(w);
    box.grow(Complex{1.0, 0.0});
    const double mx = 0.3 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    box.xmin -= mx;
    box.xmax += mx;
    box.ymin -= mx;
    box.ymax += mx;
    const Mapper m(box);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasW
       << "\" height=\"" << kCanvasH << "\" viewBox=\"0 0 " << kCanvasW << " "
       << kCanvasH << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes through the origin, when visible
    os << "  <line x1=\"" << fmt(m.px(box.xmin)) << "\" y1=\"" << fmt(m.py(0.0))
       << "\" x2=\"" << fmt(m.px(box.xmax)) << "\" y2=\"" << fmt(m.py(0.0))
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << fmt(m.px(0.0)) << "\" y1=\"" << fmt(m.py(box.ymin))
       << "\" x2=\"" << fmt(m.px(0.0)) << "\" y2=\"" << fmt(m.py(box.ymax))
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    const bool closed_boundary = region.tag != RegionTag::HalfPlane &&
                                 region.tag != RegionTag::Parabolic;
    append_polyline(os, m, boundary, "#1f77b4", closed_boundary);
    append_polyline(os, m, curve_half, "#2ca02c", true);
    append_polyline(os, m, curve_full, "#d62728", true);

    if (sharp) {
        const double sign = designated_touch_sign(cls, region.tag);
        const Complex w_star = eval_logderiv(id, Complex{sign * radius, 0.0});
        os << "  <circle cx=\"" << fmt(m.px(w_star.real())) << "\" cy=\""
           << fmt(m.py(w_star.imag()))
           << "\" r=\"4\" fill=\"#d62728\" stroke=\"black\"/>\n";
    }

    os << "  <text x=\"" << kPad << "\" y=\"30\" font-family=\"sans-serif\" "
          "font-size=\"16\">"
       << class_name(cls) << " / " << region_name(region.tag);
    if (region.tag == RegionTag::HalfPlane) os << " (alpha = " << region.alpha << ")";
    os << ", R = " << fmt(radius) << "</text>\n";
    os << "  <text x=\"" << kPad << "\" y=\"52\" font-family=\"sans-serif\" "
          "font-size=\"12\" fill=\"#555555\">"
       << "boundary (blue), image of |z| = R/2 (green), |z| = R (red)"
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace starrad
