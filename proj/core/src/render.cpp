#include "backlimit/render.hpp"

#include <cstdio>
#include <sstream>

#include "backlimit/backward.hpp"

namespace backlimit {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;
constexpr double kPlot = kSize - 2 * kMargin;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Escapes the few characters an exact label could contain.
std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

struct Frame {
    Rat lo, hi;
    [[nodiscard]] double sx(const Rat& x) const { return kMargin + ((x - lo) / (hi - lo)).to_double() * kPlot; }
    [[nodiscard]] double sy(const Rat& y) const {
        return kMargin + kPlot - ((y - lo) / (hi - lo)).to_double() * kPlot;
    }
};

void open_svg(std::ostringstream& os, const std::string& title) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\"" << num(kSize)
       << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(kSize) << "\">\n";
    os << "<title>" << esc(title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(kSize) << "\" height=\"" << num(kSize) << "\" fill=\"white\"/>\n";
}

void axes_and_graph(std::ostringstream& os, const PLMap& f, const Frame& fr) {
    const Rat& lo = fr.lo;
    const Rat& hi = fr.hi;
    os << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kPlot)
       << "\" height=\"" << num(kPlot) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line class=\"diagonal\" x1=\"" << num(fr.sx(lo)) << "\" y1=\"" << num(fr.sy(lo)) << "\" x2=\""
       << num(fr.sx(hi)) << "\" y2=\"" << num(fr.sy(hi))
       << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    os << "<polyline class=\"graph\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& b : f.breakpoints()) {
        if (!first) os << ' ';
        first = false;
        os << num(fr.sx(b.x)) << ',' << num(fr.sy(b.y));
    }
    os << "\"/>\n";
    for (const auto& b : f.breakpoints()) {
        os << "<circle cx=\"" << num(fr.sx(b.x)) << "\" cy=\"" << num(fr.sy(b.y))
           << "\" r=\"3\" fill=\"black\"><title>(" << b.x.to_string() << ", " << b.y.to_string()
           << ")</title></circle>\n";
    }
    os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kSize - kMargin / 2) << "\" font-size=\"12\">"
       << esc(lo.to_string()) << "</text>\n";
    os << "<text x=\"" << num(kSize - kMargin) << "\" y=\"" << num(kSize - kMargin / 2)
       << "\" font-size=\"12\" text-anchor=\"end\">" << esc(hi.to_string()) << "</text>\n";
}

}  // namespace

std::string render_graph(const PLMap& f) {
    std::ostringstream os;
    open_svg(os, "graph " + map_digest(f));
    axes_and_graph(os, f, Frame{f.domain().lo, f.domain().hi});
    os << "</svg>\n";
    return os.str();
}

std::string render_cobweb(const PLMap& f, const Rat& x, std::size_t n) {
    const Frame fr{f.domain().lo, f.domain().hi};
    Rat cur = x;
    std::ostringstream path;
    path << num(fr.sx(cur)) << ',' << num(fr.sy(f.domain().lo));
    for (std::size_t i = 0; i < n; ++i) {
        const Rat next = eval(f, cur);
        path << ' ' << num(fr.sx(cur)) << ',' << num(fr.sy(next));
        path << ' ' << num(fr.sx(next)) << ',' << num(fr.sy(next));
        cur = next;
    }
    std::ostringstream os;
    open_svg(os, "cobweb " + map_digest(f) + " x=" + x.to_string() + " n=" + std::to_string(n));
    axes_and_graph(os, f, fr);
    os << "<polyline class=\"cobweb\" fill=\"none\" stroke=\"firebrick\" stroke-width=\"1\" points=\""
       << path.str() << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_preimage_tree(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap) {
    const PreimageTree tree = preimage_tree(f, x, depth, node_cap);
    const bool labels = depth <= kLabelDepthMax;
    const double row = depth == 0 ? 0.0 : kPlot / static_cast<double>(depth);
    const Frame fr{f.domain().lo, f.domain().hi};
    auto ry = [&](std::size_t n) { return kMargin + row * static_cast<double>(n); };

    std::ostringstream os;
    open_svg(os, "preimage tree " + map_digest(f) + " x=" + x.to_string() + " depth=" + std::to_string(depth));
    os << "<g class=\"edges\" stroke=\"gray\" stroke-width=\"1\">\n";
    for (std::size_t n = 1; n < tree.levels.size(); ++n) {
        for (const auto& node : tree.levels[n]) {
            const auto& parent = tree.levels[n - 1][node.parent];
            os << "<line x1=\"" << num(fr.sx(parent.value)) << "\" y1=\"" << num(ry(n - 1)) << "\" x2=\""
               << num(fr.sx(node.value)) << "\" y2=\"" << num(ry(n)) << "\"/>\n";
        }
    }
    os << "</g>\n<g class=\"nodes\">\n";
    for (std::size_t n = 0; n < tree.levels.size(); ++n) {
        for (const auto& node : tree.levels[n]) {
            os << "<circle class=\"level-" << n << "\" cx=\"" << num(fr.sx(node.value)) << "\" cy=\"" << num(ry(n))
               << "\" r=\"" << (labels ? "3" : "1") << "\" fill=\"black\"/>\n";
            if (labels) {
                os << "<text x=\"" << num(fr.sx(node.value) + 4) << "\" y=\"" << num(ry(n) - 4)
                   << "\" font-size=\"10\">" << esc(node.value.to_string()) << "</text>\n";
            }
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace backlimit
