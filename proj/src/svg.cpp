#include "seasonwarp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace seasonwarp::svg {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// 1-2-5 tick spacing giving roughly `target` intervals.
double nice_step(double span, int target) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    const double f = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
    return f * mag;
}

std::string tick_label(double v) {
    char buf[32];
    if (std::abs(v) >= 1000.0 || v == std::floor(v)) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.2g", v);
    }
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

// Light-to-dark blue ramp for t in [0, 1].
std::string ramp(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(247 - t * (247 - 8)));
    const int g = static_cast<int>(std::lround(251 - t * (251 - 48)));
    const int b = static_cast<int>(std::lround(255 - t * (255 - 107)));
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::set_metadata(const Json& metadata) { metadata_ = escape_xml(metadata.dump()); }

void Document::rect(double x, double y, double w, double h, const std::string& fill,
                    const std::string& extra) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
             num(h) + "\" fill=\"" + fill + "\"" + (extra.empty() ? "" : " " + extra) + "/>\n";
}

void Document::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                    double width, const std::string& extra) {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
             num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"" +
             (extra.empty() ? "" : " " + extra) + "/>\n";
}

void Document::polyline(const std::vector<std::pair<double, double>>& points,
                        const std::string& stroke, double width) {
    std::string pts;
    for (const auto& [x, y] : points) {
        if (!pts.empty()) pts.push_back(' ');
        pts += num(x) + "," + num(y);
    }
    body_ += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(width) + "\" stroke-linejoin=\"round\"/>\n";
}

void Document::text(double x, double y, const std::string& content, double size,
                    const std::string& anchor, const std::string& extra) {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
             "\" text-anchor=\"" + anchor + "\"" + (extra.empty() ? "" : " " + extra) + ">" +
             escape_xml(content) + "</text>\n";
}

std::string Document::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width_) +
           "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) +
           "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
    if (!metadata_.empty()) out += "<metadata>" + metadata_ + "</metadata>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
           "\" fill=\"#ffffff\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

double Panel::px(double x) const {
    const double span = x_max - x_min;
    return left + (span > 0 ? (x - x_min) / span : 0.5) * width;
}

double Panel::py(double y) const {
    const double span = y_max - y_min;
    return top + height - (span > 0 ? (y - y_min) / span : 0.5) * height;
}

void draw_chart(Document& doc, Panel panel, const ChartSpec& chart) {
    double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
    for (const auto& s : chart.series) {
        for (const double x : s.x) x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
        for (const double y : s.y) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    }
    if (!std::isnan(chart.reference_y)) {
        y_lo = std::min(y_lo, chart.reference_y);
        y_hi = std::max(y_hi, chart.reference_y);
    }
    if (!std::isfinite(x_lo)) x_lo = 0, x_hi = 1;
    if (!std::isfinite(y_lo)) y_lo = 0, y_hi = 1;
    if (y_hi == y_lo) y_lo -= 1, y_hi += 1;
    const double y_step = nice_step(y_hi - y_lo, 5);
    panel.x_min = x_lo;
    panel.x_max = x_hi;
    panel.y_min = std::floor(y_lo / y_step) * y_step;
    panel.y_max = std::ceil(y_hi / y_step) * y_step;

    doc.rect(panel.left, panel.top, panel.width, panel.height, "#fafafa",
             "stroke=\"#888888\" stroke-width=\"1\"");
    for (double y = panel.y_min; y <= panel.y_max + y_step * 1e-9; y += y_step) {
        doc.line(panel.left, panel.py(y), panel.left + panel.width, panel.py(y), "#e0e0e0");
        doc.text(panel.left - 6, panel.py(y) + 4, tick_label(y), 10, "end");
    }
    const double x_step = nice_step(x_hi - x_lo, 8);
    for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + x_step * 1e-9; x += x_step) {
        doc.line(panel.px(x), panel.top + panel.height, panel.px(x), panel.top + panel.height + 4,
                 "#888888");
        doc.text(panel.px(x), panel.top + panel.height + 16, tick_label(x), 10, "middle");
    }
    if (!std::isnan(chart.reference_y)) {
        doc.line(panel.left, panel.py(chart.reference_y), panel.left + panel.width,
                 panel.py(chart.reference_y), "#555555", 1.0, "stroke-dasharray=\"4 3\"");
    }
    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const auto& s = chart.series[k];
        std::vector<std::pair<double, double>> pts;
        for (std::size_t t = 0; t < std::min(s.x.size(), s.y.size()); ++t) {
            pts.emplace_back(panel.px(s.x[t]), panel.py(s.y[t]));
        }
        const std::string color = s.color.empty() ? kPalette[k % 6] : s.color;
        doc.polyline(pts, color);
        const double ly = panel.top + 14 + 16 * static_cast<double>(k);
        doc.line(panel.left + panel.width - 150, ly - 4, panel.left + panel.width - 130, ly - 4,
                 color, 2.5);
        doc.text(panel.left + panel.width - 125, ly, s.label, 11);
    }
    doc.text(panel.left + panel.width / 2, panel.top - 8, chart.title, 14, "middle",
             "font-weight=\"bold\"");
    doc.text(panel.left + panel.width / 2, panel.top + panel.height + 32, chart.x_label, 11,
             "middle");
    const double yl_x = panel.left - 48;
    const double yl_y = panel.top + panel.height / 2;
    doc.text(yl_x, yl_y, chart.y_label, 11, "middle",
             "transform=\"rotate(-90 " + num(yl_x) + " " + num(yl_y) + ")\"");
}

std::string line_chart(const ChartSpec& chart, const Json& metadata, double width, double height) {
    Document doc(width, height);
    doc.set_metadata(metadata);
    draw_chart(doc, Panel{80, 40, width - 110, height - 90}, chart);
    return doc.str();
}

std::string stacked_charts(const std::vector<ChartSpec>& charts, const Json& metadata, double width,
                           double panel_height) {
    const double slot = panel_height + 30;
    Document doc(width, slot * static_cast<double>(charts.size()) + 20);
    doc.set_metadata(metadata);
    for (std::size_t k = 0; k < charts.size(); ++k) {
        const double top = 40 + slot * static_cast<double>(k);
        draw_chart(doc, Panel{80, top, width - 110, panel_height - 60}, charts[k]);
    }
    return doc.str();
}

std::string dtw_pair_plot(const std::string& title, const dtw::Matrix& cumulative,
                          const dtw::DtwResult& result, const std::string& first_label,
                          const std::string& second_label, const Json& metadata) {
    const double width = 1100, height = 520;
    Document doc(width, height);
    doc.set_metadata(metadata);
    doc.text(width / 2, 24, title, 16, "middle", "font-weight=\"bold\"");

    const auto n = static_cast<std::size_t>(cumulative.rows());
    const auto m = static_cast<std::size_t>(cumulative.cols());
    const double size = 400;
    const double left = 70, top = 60;
    const double cw = size / static_cast<double>(m);
    const double ch = size / static_cast<double>(n);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double v = cumulative(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (std::isfinite(v)) lo = std::min(lo, std::log1p(v)), hi = std::max(hi, std::log1p(v));
        }
    }
    // Row i is drawn from the bottom so (1, 1) sits in the lower-left corner.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double v = cumulative(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            const std::string fill =
                std::isfinite(v) ? ramp(hi > lo ? (std::log1p(v) - lo) / (hi - lo) : 0.0) : "#d9d9d9";
            doc.rect(left + cw * static_cast<double>(j),
                     top + size - ch * static_cast<double>(i + 1), cw + 0.05, ch + 0.05, fill);
        }
    }
    std::vector<std::pair<double, double>> path;
    for (const auto& step : result.path.steps) {
        path.emplace_back(left + cw * (static_cast<double>(step.j) - 0.5),
                          top + size - ch * (static_cast<double>(step.i) - 0.5));
    }
    doc.polyline(path, "#ff7f0e", 2.0);
    doc.rect(left, top, size, size, "none", "stroke=\"#555555\" stroke-width=\"1\"");
    doc.text(left + size / 2, top + size + 24, second_label + " week", 11, "middle");
    const double yl_x = left - 30, yl_y = top + size / 2;
    doc.text(yl_x, yl_y, first_label + " week", 11, "middle",
             "transform=\"rotate(-90 " + num(yl_x) + " " + num(yl_y) + ")\"");
    doc.text(left + size / 2, top - 8, "Warping path over cumulative cost", 12, "middle");

    char summary[160];
    std::snprintf(summary, sizeof summary, "total cost %.2f | mean cost %.2f | path length %zu",
                  result.total_cost, result.mean_cost, result.path_length);
    doc.text(width / 2, height - 12, summary, 12, "middle");

    ChartSpec warped;
    warped.title = "Warped (time-aligned) series";
    warped.x_label = "alignment step";
    warped.y_label = "value";
    std::vector<double> steps(result.path_length);
    for (std::size_t k = 0; k < steps.size(); ++k) steps[k] = static_cast<double>(k + 1);
    warped.series.push_back({first_label, steps, result.warped_pair[0], kPalette[0]});
    warped.series.push_back({second_label, steps, result.warped_pair[1], kPalette[1]});
    draw_chart(doc, Panel{580, top, 490, size}, warped);
    return doc.str();
}

}  // namespace seasonwarp::svg
