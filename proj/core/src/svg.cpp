#include "ceplane/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ceplane/errors.hpp"

namespace ceplane {

namespace {

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string px(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string fixed(double value, int digits) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    return buffer;
}

// Maps data coordinates into a pixel rectangle; y grows upward in data space.
struct Frame {
    double left, top, width, height;
    double x_min, x_max, y_min, y_max;

    double x(double value) const { return left + (value - x_min) / (x_max - x_min) * width; }
    double y(double value) const {
        return top + height - (value - y_min) / (y_max - y_min) * height;
    }
};

void append_line(std::string& svg, double x1, double y1, double x2, double y2,
                 const std::string& style) {
    svg += "<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" +
           px(y2) + "\" " + style + "/>\n";
}

void append_text(std::string& svg, double x, double y, const std::string& text,
                 const std::string& attributes) {
    svg += "<text x=\"" + px(x) + "\" y=\"" + px(y) + "\" font-family=\"sans-serif\" " +
           attributes + ">" + escape_xml(text) + "</text>\n";
}

constexpr const char* kAxisStyle = "stroke=\"#333333\" stroke-width=\"1\"";
constexpr const char* kGridStyle = "stroke=\"#dddddd\" stroke-width=\"0.5\"";

}  // namespace

std::string group_color(std::size_t group_index) {
    // Golden-angle hue walk keeps consecutive groups far apart on the wheel.
    double hue = std::fmod(static_cast<double>(group_index) * 137.50776405003785, 360.0);
    double s = 0.62;
    double v = 0.82;
    double hp = hue / 60.0;
    int sector = static_cast<int>(hp) % 6;
    double f = hp - std::floor(hp);
    double p = v * (1.0 - s);
    double q = v * (1.0 - f * s);
    double t = v * (1.0 - (1.0 - f) * s);
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    switch (sector) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    char buffer[8];
    std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x", static_cast<int>(std::lround(r * 255)),
                  static_cast<int>(std::lround(g * 255)),
                  static_cast<int>(std::lround(b * 255)));
    return buffer;
}

std::string render_plane_svg(std::span<const WindowResult> windows, std::size_t group_size,
                             std::span<const BaselineBand> bands,
                             const ComplexityEnvelope& envelope) {
    if (windows.empty()) {
        throw empty_input_error("no windows to render");
    }
    if (envelope.samples.empty()) {
        throw invalid_input_error("envelope has no samples");
    }
    std::vector<WindowGroup> groups = group_windows(windows, group_size);

    double max_c = 0.0;
    for (const EnvelopeSample& sample : envelope.samples) {
        max_c = std::max(max_c, sample.c_max);
    }
    for (const WindowResult& window : windows) {
        max_c = std::max(max_c, window.point.complexity);
    }
    for (const BaselineBand& band : bands) {
        max_c = std::max(max_c, band.mean_c + band.std_c);
    }
    // Head-room to the next multiple of 0.05 keeps tick labels exact.
    double y_max = (std::floor(max_c / 0.05) + 1.0) * 0.05;

    const double width = 900.0;
    const double height = 640.0;
    Frame frame{70.0, 40.0, 600.0, 540.0, 0.0, 1.0, 0.0, y_max};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
           px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
    svg += "<rect width=\"" + px(width) + "\" height=\"" + px(height) + "\" fill=\"#ffffff\"/>\n";
    append_text(svg, frame.left + frame.width / 2.0, 24.0, "Complexity-entropy causality plane",
                "font-size=\"16\" text-anchor=\"middle\" fill=\"#111111\"");

    // Grid and ticks.
    for (int i = 0; i <= 10; ++i) {
        double h = static_cast<double>(i) / 10.0;
        double x = frame.x(h);
        append_line(svg, x, frame.top, x, frame.top + frame.height, kGridStyle);
        append_line(svg, x, frame.top + frame.height, x, frame.top + frame.height + 5.0,
                    kAxisStyle);
        append_text(svg, x, frame.top + frame.height + 20.0, fixed(h, 1),
                    "font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\"");
    }
    int y_ticks = static_cast<int>(std::lround(y_max / 0.05));
    for (int i = 0; i <= y_ticks; ++i) {
        double c = static_cast<double>(i) * 0.05;
        double y = frame.y(c);
        append_line(svg, frame.left, y, frame.left + frame.width, y, kGridStyle);
        append_line(svg, frame.left - 5.0, y, frame.left, y, kAxisStyle);
        append_text(svg, frame.left - 9.0, y + 4.0, fixed(c, 2),
                    "font-size=\"11\" text-anchor=\"end\" fill=\"#333333\"");
    }
    append_line(svg, frame.left, frame.top + frame.height, frame.left + frame.width,
                frame.top + frame.height, kAxisStyle);
    append_line(svg, frame.left, frame.top, frame.left, frame.top + frame.height, kAxisStyle);
    append_text(svg, frame.left + frame.width / 2.0, height - 18.0,
                "normalized permutation entropy H",
                "font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\"");
    svg += "<text x=\"20\" y=\"" + px(frame.top + frame.height / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "fill=\"#111111\" transform=\"rotate(-90 20 " + px(frame.top + frame.height / 2.0) +
           ")\">statistical complexity C</text>\n";

    // Envelope bounds.
    auto polyline = [&](bool upper, const char* style) {
        svg += "<polyline fill=\"none\" ";
        svg += style;
        svg += " points=\"";
        for (std::size_t i = 0; i < envelope.samples.size(); ++i) {
            const EnvelopeSample& sample = envelope.samples[i];
            if (i > 0) {
                svg += ' ';
            }
            svg += px(frame.x(sample.h)) + "," +
                   px(frame.y(upper ? sample.c_max : sample.c_min));
        }
        svg += "\"/>\n";
    };
    polyline(true, "stroke=\"#444444\" stroke-width=\"1.2\"");
    polyline(false, "stroke=\"#444444\" stroke-width=\"1.2\" stroke-dasharray=\"5,3\"");

    // Window points, one color per consecutive group.
    for (const WindowGroup& group : groups) {
        std::string color = group_color(group.group_index);
        for (std::size_t i = group.first; i < group.first + group.count; ++i) {
            svg += "<circle cx=\"" + px(frame.x(windows[i].point.entropy_normalized)) +
                   "\" cy=\"" + px(frame.y(windows[i].point.complexity)) +
                   "\" r=\"3\" fill=\"" + color + "\" fill-opacity=\"0.8\"/>\n";
        }
    }

    // Baseline bands as mean +/- 1 std crosses.
    for (const BaselineBand& band : bands) {
        const std::string style = "stroke=\"#d62728\" stroke-width=\"1.5\"";
        append_line(svg, frame.x(band.mean_h - band.std_h), frame.y(band.mean_c),
                    frame.x(band.mean_h + band.std_h), frame.y(band.mean_c), style);
        append_line(svg, frame.x(band.mean_h), frame.y(band.mean_c - band.std_c),
                    frame.x(band.mean_h), frame.y(band.mean_c + band.std_c), style);
        svg += "<circle cx=\"" + px(frame.x(band.mean_h)) + "\" cy=\"" +
               px(frame.y(band.mean_c)) + "\" r=\"2.5\" fill=\"#d62728\"/>\n";
        append_text(svg, frame.x(band.mean_h), frame.y(band.mean_c) - 8.0,
                    "fBm " + fixed(band.hurst, 2),
                    "font-size=\"11\" text-anchor=\"middle\" fill=\"#d62728\"");
    }

    // Legend: one swatch per group, window index ranges.
    double legend_x = frame.left + frame.width + 20.0;
    double legend_y = frame.top + 10.0;
    append_text(svg, legend_x, legend_y - 2.0, "window groups",
                "font-size=\"12\" fill=\"#111111\"");
    for (const WindowGroup& group : groups) {
        double y = legend_y + 10.0 + static_cast<double>(group.group_index) * 16.0;
        svg += "<rect class=\"legend-swatch\" x=\"" + px(legend_x) + "\" y=\"" + px(y) +
               "\" width=\"11\" height=\"11\" fill=\"" + group_color(group.group_index) +
               "\"/>\n";
        std::size_t last = group.first + group.count - 1;
        append_text(svg, legend_x + 16.0, y + 9.5,
                    "windows " + std::to_string(group.first) + "-" + std::to_string(last),
                    "font-size=\"10\" fill=\"#333333\"");
    }

    svg += "</svg>\n";
    return svg;
}

std::string render_timeline_svg(std::span<const WindowResult> windows,
                                std::span<const EventAnnotation> events,
                                std::vector<std::string>* warnings) {
    if (windows.empty()) {
        throw empty_input_error("no windows to render");
    }
    bool dated = true;
    for (const WindowResult& window : windows) {
        if (!window.end_date) {
            dated = false;
            break;
        }
    }

    // X positions: end-date serials when every window carries one, otherwise
    // plain window indices (events then cannot be placed).
    std::vector<double> xs(windows.size());
    for (std::size_t i = 0; i < windows.size(); ++i) {
        xs[i] = dated ? static_cast<double>(date_serial(*windows[i].end_date))
                      : static_cast<double>(windows[i].window_index);
    }
    double x_min = *std::min_element(xs.begin(), xs.end());
    double x_max = *std::max_element(xs.begin(), xs.end());
    if (x_min == x_max) {
        x_min -= 1.0;
        x_max += 1.0;
    }

    double h_min = 1.0;
    double h_max = 0.0;
    for (const WindowResult& window : windows) {
        h_min = std::min(h_min, window.point.entropy_normalized);
        h_max = std::max(h_max, window.point.entropy_normalized);
    }
    double y_min = std::max(0.0, h_min - 0.02);
    double y_max = std::min(1.0, h_max + 0.02);
    if (y_max - y_min < 0.01) {
        y_min = std::max(0.0, y_min - 0.01);
        y_max = std::min(1.0, y_max + 0.01);
    }

    const double width = 900.0;
    const double height = 420.0;
    Frame frame{70.0, 40.0, 790.0, 290.0, x_min, x_max, y_min, y_max};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
           px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
    svg += "<rect width=\"" + px(width) + "\" height=\"" + px(height) + "\" fill=\"#ffffff\"/>\n";
    append_text(svg, frame.left + frame.width / 2.0, 24.0, "Permutation entropy over time",
                "font-size=\"16\" text-anchor=\"middle\" fill=\"#111111\"");

    // Y ticks: five even divisions.
    for (int i = 0; i <= 5; ++i) {
        double value = y_min + (y_max - y_min) * static_cast<double>(i) / 5.0;
        double y = frame.y(value);
        append_line(svg, frame.left, y, frame.left + frame.width, y, kGridStyle);
        append_line(svg, frame.left - 5.0, y, frame.left, y, kAxisStyle);
        append_text(svg, frame.left - 9.0, y + 4.0, fixed(value, 3),
                    "font-size=\"11\" text-anchor=\"end\" fill=\"#333333\"");
    }
    // X ticks: up to six evenly spaced windows labeled by end date (or index).
    std::size_t tick_count = std::min<std::size_t>(6, windows.size());
    for (std::size_t t = 0; t < tick_count; ++t) {
        std::size_t i = tick_count == 1 ? 0 : t * (windows.size() - 1) / (tick_count - 1);
        double x = frame.x(xs[i]);
        append_line(svg, x, frame.top, x, frame.top + frame.height, kGridStyle);
        append_line(svg, x, frame.top + frame.height, x, frame.top + frame.height + 5.0,
                    kAxisStyle);
        std::string label = dated ? format_date(*windows[i].end_date)
                                  : std::to_string(windows[i].window_index);
        append_text(svg, x, frame.top + frame.height + 20.0, label,
                    "font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\"");
    }
    append_line(svg, frame.left, frame.top + frame.height, frame.left + frame.width,
                frame.top + frame.height, kAxisStyle);
    append_line(svg, frame.left, frame.top, frame.left, frame.top + frame.height, kAxisStyle);
    append_text(svg, frame.left + frame.width / 2.0, height - 14.0,
                dated ? "window end date" : "window index",
                "font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\"");
    svg += "<text x=\"20\" y=\"" + px(frame.top + frame.height / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "fill=\"#111111\" transform=\"rotate(-90 20 " + px(frame.top + frame.height / 2.0) +
           ")\">normalized permutation entropy H</text>\n";

    // Event markers before the entropy curve so the curve stays on top.
    for (const EventAnnotation& event : events) {
        if (!dated) {
            if (warnings != nullptr) {
                warnings->push_back("event '" + event.label +
                                    "' skipped: windows carry no dates");
            }
            continue;
        }
        double x_value = static_cast<double>(date_serial(event.date));
        if (x_value < x_min || x_value > x_max) {
            if (warnings != nullptr) {
                warnings->push_back("event '" + event.label + "' (" + format_date(event.date) +
                                    ") outside the analyzed range, marker skipped");
            }
            continue;
        }
        double x = frame.x(x_value);
        append_line(svg, x, frame.top, x, frame.top + frame.height,
                    "stroke=\"#9467bd\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
        svg += "<text x=\"" + px(x + 4.0) + "\" y=\"" + px(frame.top + 10.0) +
               "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#9467bd\" "
               "transform=\"rotate(90 " + px(x + 4.0) + " " + px(frame.top + 10.0) + ")\">" +
               escape_xml(event.label) + "</text>\n";
    }

    std::string points;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (i > 0) {
            points += ' ';
        }
        points += px(frame.x(xs[i])) + "," + px(frame.y(windows[i].point.entropy_normalized));
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"" + points +
           "\"/>\n";
    for (std::size_t i = 0; i < windows.size(); ++i) {
        svg += "<circle cx=\"" + px(frame.x(xs[i])) + "\" cy=\"" +
               px(frame.y(windows[i].point.entropy_normalized)) +
               "\" r=\"2\" fill=\"#1f77b4\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace ceplane
