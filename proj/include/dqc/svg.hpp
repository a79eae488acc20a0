#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace dqc {

// Minimal SVG line/scatter renderer for the emitted CSV tables. Convenience
// output only; never read back.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add_line(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
        series_.push_back({pts, color, false});
    }

    void add_scatter(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
        series_.push_back({pts, color, true});
    }

    void write(const std::string& path) const {
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (const auto& s : series_)
            for (const auto& [x, y] : s.pts) {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        if (xmin > xmax) { xmin = 0; xmax = 1; }
        if (ymin > ymax) { ymin = 0; ymax = 1; }
        if (xmax == xmin) { xmax += 1; }
        if (ymax == ymin) { ymax += 1; }

        const double w = 640, h = 480, ml = 70, mr = 20, mt = 40, mb = 50;
        auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
        auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

        std::ofstream out(path);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
            << title_ << "</text>\n";

        // axes with end-point tick labels
        out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
            << h - mb << "\" stroke=\"black\"/>\n"
            << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
            << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel_ << "</text>\n";
        out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
            << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
            << (mt + h - mb) / 2 << ")\">" << ylabel_ << "</text>\n";
        out << "<text x=\"" << ml << "\" y=\"" << h - mb + 16 << "\" font-size=\"11\">"
            << fmt(xmin) << "</text>\n"
            << "<text x=\"" << w - mr << "\" y=\"" << h - mb + 16
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(xmax) << "</text>\n"
            << "<text x=\"" << ml - 6 << "\" y=\"" << h - mb << "\" text-anchor=\"end\" font-size=\"11\">"
            << fmt(ymin) << "</text>\n"
            << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax) << "</text>\n";

        for (const auto& s : series_) {
            if (s.scatter) {
                for (const auto& [x, y] : s.pts)
                    out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
                        << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
            } else {
                out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
                for (const auto& [x, y] : s.pts) out << px(x) << "," << py(y) << " ";
                out << "\"/>\n";
            }
        }
        out << "</svg>\n";
    }

  private:
    struct Series {
        std::vector<std::pair<double, double>> pts;
        std::string color;
        bool scatter;
    };

    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return buf;
    }

    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
};

}  // namespace dqc
