#include "fanoku/plot.hpp"

#include "fanoku/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fanoku {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kMargin = 50;
constexpr int kSamples = 240;

std::string num(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

class Canvas {
public:
    explicit Canvas(const PlotSpec& s)
        : x0_(to_double(s.xmin)), x1_(to_double(s.xmax)), y0_(to_double(s.ymin)), y1_(to_double(s.ymax)) {}

    double px(double x) const { return kMargin + (x - x0_) / (x1_ - x0_) * (kWidth - 2 * kMargin); }
    double py(double y) const { return kHeight - kMargin - (y - y0_) / (y1_ - y0_) * (kHeight - 2 * kMargin); }

    std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style) const {
        std::string s = "<polyline fill=\"none\" " + style + " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += num(px(pts[i].first)) + "," + num(py(pts[i].second));
        }
        return s + "\"/>\n";
    }

    std::string polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) const {
        std::string s = "<polygon " + style + " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += num(px(pts[i].first)) + "," + num(py(pts[i].second));
        }
        return s + "\"/>\n";
    }

    std::string dot(double x, double y, const std::string& fill, const std::string& label) const {
        std::string s = "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" + fill + "\"/>\n";
        if (!label.empty()) {
            s += "<text x=\"" + num(px(x) + 5) + "\" y=\"" + num(py(y) - 5) + "\" font-size=\"12\">" + escape(label) +
                 "</text>\n";
        }
        return s;
    }

    double x0() const { return x0_; }
    double x1() const { return x1_; }
    double y0() const { return y0_; }
    double y1() const { return y1_; }

private:
    double x0_, x1_, y0_, y1_;
};

std::vector<std::pair<double, double>> sample(double a, double b, auto f) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= kSamples; ++i) {
        const double x = a + (b - a) * i / kSamples;
        pts.emplace_back(x, f(x));
    }
    return pts;
}

std::string axes(const Canvas& c, const std::string& xname, const std::string& yname) {
    std::string s;
    s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kWidth - 2 * kMargin) +
         "\" height=\"" + num(kHeight - 2 * kMargin) + "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double x = c.x0() + (c.x1() - c.x0()) * i / 4;
        const double y = c.y0() + (c.y1() - c.y0()) * i / 4;
        s += "<text x=\"" + num(c.px(x)) + "\" y=\"" + num(kHeight - kMargin + 16) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + num(std::round(x * 1e6) / 1e6) + "</text>\n";
        s += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(c.py(y) + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">" + num(std::round(y * 1e6) / 1e6) + "</text>\n";
    }
    s += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 10) + "\" font-size=\"13\" text-anchor=\"middle\">" +
         xname + "</text>\n";
    s += "<text x=\"14\" y=\"" + num(kHeight / 2) + "\" font-size=\"13\">" + yname + "</text>\n";
    return s;
}

}  // namespace

PlotSpec PlotSpec::defaults(Plane plane) {
    PlotSpec s;
    s.plane = plane;
    if (plane == Plane::sq) {
        s.xmin = Rational(-2);
        s.xmax = Rational(3, 2);
        s.ymin = Rational(-1, 2);
        s.ymax = Rational(2);
    }
    return s;
}

std::string render_svg(const PlotSpec& spec) {
    if (!(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax)) throw InvalidInput("empty viewport");
    const Canvas c(spec);
    const bool ab = spec.plane == Plane::alphabeta;
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    s += "<defs><clipPath id=\"plot\"><rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
         num(kWidth - 2 * kMargin) + "\" height=\"" + num(kHeight - 2 * kMargin) + "\"/></clipPath></defs>\n";
    if (!spec.title.empty()) {
        s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" + escape(spec.title) +
             "</text>\n";
    }
    s += "<g clip-path=\"url(#plot)\">\n";

    if (spec.region_V) {
        const std::string style = "fill=\"#cfe0ff\" fill-opacity=\"0.7\" stroke=\"#5b7fc7\" stroke-width=\"1\"";
        if (ab) {
            s += c.polygon({{-1, 0}, {-0.5, 0.5}, {0, 0}}, style);
        } else {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : sample(-1, 0, [](double x) { return x * x / 2; })) pts.push_back(p);
            for (const auto& p : sample(0, -1, [](double x) { return x >= -0.5 ? x * x : x * x + x + 0.5; }))
                pts.push_back(p);
            s += c.polygon(pts, style);
        }
    }
    if (!ab && spec.parabola) {
        s += c.polyline(sample(c.x0(), c.x1(), [](double x) { return x * x / 2; }),
                        "stroke=\"#000\" stroke-width=\"1.5\"");
    }

    for (const Wall& w : spec.walls) {
        const std::string style = "stroke=\"#c0392b\" stroke-width=\"1.5\"";
        const double cb = to_double(w.center_beta);
        if (w.kind == WallKind::vertical) {
            s += c.polyline({{cb, c.y0()}, {cb, c.y1()}}, style);
        } else if (w.kind == WallKind::semicircle && !w.degenerate()) {
            const double r = std::sqrt(to_double(w.radius2));
            if (ab) {
                std::vector<std::pair<double, double>> pts;
                for (int i = 0; i <= kSamples; ++i) {
                    const double t = std::numbers::pi * i / kSamples;
                    pts.emplace_back(cb + r * std::cos(t), r * std::sin(t));
                }
                s += c.polyline(pts, style);
            } else {
                // alpha^2 + (beta - c)^2 = r^2 becomes q = c s + (r^2 - c^2)/2
                const double k = (to_double(w.radius2) - cb * cb) / 2;
                s += c.polyline({{c.x0(), cb * c.x0() + k}, {c.x1(), cb * c.x1() + k}}, style);
            }
        }
    }

    for (const auto& [a, b] : spec.chords) {
        const auto hits = parabola_chord(a, b);
        const double ax = to_double(a.s), ay = to_double(a.q), bx = to_double(b.s), by = to_double(b.q);
        std::vector<std::pair<double, double>> seg{{ax, ay}, {bx, by}};
        if (hits) {
            for (const auto& h : *hits) seg.emplace_back(h.s.approx(), h.q.approx());
        }
        std::sort(seg.begin(), seg.end());
        s += c.polyline({seg.front(), seg.back()}, "stroke=\"#27ae60\" stroke-width=\"1.2\" stroke-dasharray=\"5,3\"");
        if (hits) {
            for (const auto& h : *hits) s += c.dot(h.s.approx(), h.q.approx(), "#27ae60", "");
        }
    }

    for (const PlotPoint& p : spec.points) {
        const double y = ab ? std::sqrt(std::max(0.0, to_double(p.y))) : to_double(p.y);
        s += c.dot(to_double(p.x), y, "#222", p.label);
    }
    s += "</g>\n";
    s += ab ? axes(c, "beta", "alpha") : axes(c, "s", "q");
    s += "</svg>\n";
    return s;
}

}  // namespace fanoku
