#pragma once

#include <limits>
#include <string>
#include <vector>

#include "seasonwarp/dtw.hpp"
#include "seasonwarp/json.hpp"

namespace seasonwarp::svg {

/// Minimal SVG 1.1 writer. Coordinates are printed with two decimals so the
/// output is byte-stable.
class Document {
public:
    Document(double width, double height);

    /// Stored verbatim (XML-escaped) in a <metadata> element.
    void set_metadata(const Json& metadata);

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& extra = {});
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0, const std::string& extra = {});
    void polyline(const std::vector<std::pair<double, double>>& points, const std::string& stroke,
                  double width = 1.5);
    void text(double x, double y, const std::string& content, double size = 12.0,
              const std::string& anchor = "start", const std::string& extra = {});

    [[nodiscard]] std::string str() const;

private:
    double width_;
    double height_;
    std::string metadata_;
    std::string body_;
};

/// Axis-aligned plotting area with data-to-pixel mapping.
struct Panel {
    double left = 0, top = 0, width = 0, height = 0;
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;

    [[nodiscard]] double px(double x) const;
    [[nodiscard]] double py(double y) const;
};

struct LineSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<LineSeries> series;
    /// Horizontal reference line (e.g. index 100); NaN disables it.
    double reference_y = std::numeric_limits<double>::quiet_NaN();
};

/// Draws axes, ticks, lines and a legend into `panel` on `doc`.
void draw_chart(Document& doc, Panel panel, const ChartSpec& chart);

[[nodiscard]] std::string line_chart(const ChartSpec& chart, const Json& metadata,
                                     double width = 900, double height = 420);

/// Several charts stacked vertically in one document.
[[nodiscard]] std::string stacked_charts(const std::vector<ChartSpec>& charts, const Json& metadata,
                                         double width = 1000, double panel_height = 320);

/// Left: cumulative-cost heat map with the warping path. Right: the two
/// series resampled along the path.
[[nodiscard]] std::string dtw_pair_plot(const std::string& title, const dtw::Matrix& cumulative,
                                        const dtw::DtwResult& result, const std::string& first_label,
                                        const std::string& second_label, const Json& metadata);

}  // namespace seasonwarp::svg
