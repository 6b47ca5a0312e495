#include "recimap/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace recimap {

namespace {

// Grayscale cycle matching the usual two-row diagrams (25/75/50/black).
const char* kPalette[4] = {"#bfbfbf", "#404040", "#808080", "#000000"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const std::string& style) {
    out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
        << fmt(y2) << "\" " << style << "/>\n";
}

void text(std::ostringstream& out, double x, double y, const std::string& content) {
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
        << "\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\">" << content
        << "</text>\n";
}

std::string svg_open(double width, double height) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    return out.str();
}

}  // namespace

std::string render_two_row(const PAMap& m, const std::vector<std::string>& labels,
                           const TwoRowOptions& opts) {
    if (m.branches().size() > 26) throw std::invalid_argument("render_two_row: more than 26 branches");
    if (labels.size() < m.branches().size())
        throw std::invalid_argument("render_two_row: not enough labels");

    const double W = opts.width;
    const double H = opts.height;
    const double y_top = H * 0.3;
    const double y_bot = H * 0.7;
    const double tick = H * 0.1;
    const auto px = [W](const Scalar& v) { return to_double(v) * W; };

    std::ostringstream out;
    out << svg_open(W, H);

    // Tick marks at the domain and image breakpoints.
    for (const auto& br : m.branches()) {
        line(out, px(br.domain.lo), y_top - tick, px(br.domain.lo), y_top + tick,
             "stroke=\"#000000\" stroke-width=\"1\"");
    }
    const auto& dom = m.domain_support().intervals();
    line(out, px(dom.back().hi), y_top - tick, px(dom.back().hi), y_top + tick,
         "stroke=\"#000000\" stroke-width=\"1\"");
    for (const auto& br : m.branches()) {
        const Interval img = br.image();
        line(out, px(img.lo), y_bot - tick, px(img.lo), y_bot + tick,
             "stroke=\"#000000\" stroke-width=\"1\"");
        line(out, px(img.hi), y_bot - tick, px(img.hi), y_bot + tick,
             "stroke=\"#000000\" stroke-width=\"1\"");
    }

    // Branch segments, one shade per branch, same shade on both rows.
    for (std::size_t i = 0; i < m.branches().size(); ++i) {
        const auto& br = m.branches()[i];
        const char* color = kPalette[i % 4];
        const Interval img = br.image();
        line(out, px(br.domain.lo), y_top, px(br.domain.hi), y_top,
             std::string("stroke=\"") + color + "\" stroke-width=\"6\"");
        line(out, px(img.lo), y_bot, px(img.hi), y_bot,
             std::string("stroke=\"") + color + "\" stroke-width=\"6\"");
    }

    // Parts of the hull never reached by the map are dashed.
    const Interval hull(dom.front().lo, dom.back().hi);
    const IntervalSet unreached = set_difference(IntervalSet(hull), m.image_support());
    for (const auto& gap : unreached.intervals()) {
        line(out, px(gap.lo), y_bot, px(gap.hi), y_bot,
             "stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
    }

    for (std::size_t i = 0; i < m.branches().size(); ++i) {
        const auto& br = m.branches()[i];
        const Interval img = br.image();
        const double mid_top = (px(br.domain.lo) + px(br.domain.hi)) / 2;
        const double mid_bot = (px(img.lo) + px(img.hi)) / 2;
        text(out, mid_top, y_top - tick - 4, labels[i]);
        text(out, mid_bot, y_bot + tick + 14, labels[i]);
    }

    out << "</svg>\n";
    return out.str();
}

void validate_suspension(const SuspensionData& data) {
    const std::size_t k = data.iet.lengths.size();
    if (data.zeta.size() != k)
        throw std::invalid_argument("suspension: zeta size does not match interval count");
    if (k < 2) throw std::invalid_argument("suspension: degenerate flat polygon (need >= 2 intervals)");
    if (data.iet.permutation.size() != k)
        throw std::invalid_argument("suspension: permutation size does not match interval count");
    for (std::size_t i = 0; i < k; ++i) {
        if (data.zeta[i].first != data.iet.lengths[i])
            throw std::invalid_argument("suspension: re(zeta) must equal the interval lengths");
    }
    std::vector<bool> seen(k, false);
    for (std::size_t rank : data.iet.permutation) {
        if (rank >= k || seen[rank])
            throw std::invalid_argument("suspension: permutation is not a bijection");
        seen[rank] = true;
    }
    std::vector<std::size_t> interval_of_rank(k);
    for (std::size_t i = 0; i < k; ++i) interval_of_rank[data.iet.permutation[i]] = i;

    Scalar im_sum;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        im_sum += data.zeta[i].second;
        if (!(im_sum.sign() > 0))
            throw std::invalid_argument("suspension: top broken line must stay strictly above the base");
    }
    im_sum = Scalar(0);
    for (std::size_t r = 0; r + 1 < k; ++r) {
        im_sum += data.zeta[interval_of_rank[r]].second;
        if (!(im_sum.sign() < 0))
            throw std::invalid_argument("suspension: bottom broken line must stay strictly below the base");
    }
}

std::string render_suspension(const SuspensionData& data) {
    validate_suspension(data);
    const std::size_t k = data.iet.lengths.size();
    std::vector<std::size_t> interval_of_rank(k);
    for (std::size_t i = 0; i < k; ++i) interval_of_rank[data.iet.permutation[i]] = i;

    // Vertices of the two broken lines, in exact arithmetic first.
    std::vector<std::pair<Scalar, Scalar>> top{{Scalar(0), Scalar(0)}}, bot{{Scalar(0), Scalar(0)}};
    for (std::size_t i = 0; i < k; ++i) {
        top.emplace_back(top.back().first + data.zeta[i].first,
                         top.back().second + data.zeta[i].second);
    }
    for (std::size_t r = 0; r < k; ++r) {
        const auto& z = data.zeta[interval_of_rank[r]];
        bot.emplace_back(bot.back().first + z.first, bot.back().second + z.second);
    }

    const double xscale = 600.0;
    const double yscale = 100.0;
    const double margin = 20.0;
    double im_min = 0.0, im_max = 0.0;
    for (const auto& v : top) im_max = std::max(im_max, to_double(v.second));
    for (const auto& v : bot) im_min = std::min(im_min, to_double(v.second));
    const double W = to_double(top.back().first) * xscale + 2 * margin;
    const double H = (im_max - im_min) * yscale + 2 * margin;
    const double y0 = margin + im_max * yscale;
    const auto px = [&](const Scalar& re) { return margin + to_double(re) * xscale; };
    const auto py = [&](const Scalar& im) { return y0 - to_double(im) * yscale; };

    std::ostringstream out;
    out << svg_open(W, H);

    // Filled polygon: top line forward, bottom line backward.
    out << "<path d=\"M " << fmt(px(top[0].first)) << " " << fmt(py(top[0].second));
    for (std::size_t i = 1; i < top.size(); ++i)
        out << " L " << fmt(px(top[i].first)) << " " << fmt(py(top[i].second));
    for (std::size_t i = bot.size(); i-- > 0;)
        out << " L " << fmt(px(bot[i].first)) << " " << fmt(py(bot[i].second));
    out << " Z\" fill=\"#f0f0f0\" stroke=\"none\"/>\n";

    // Base segment of the interval exchange.
    line(out, px(Scalar(0)), py(Scalar(0)), px(top.back().first), py(Scalar(0)),
         "stroke=\"#000000\" stroke-width=\"1\"");

    // Identified segments share a stroke shade.
    for (std::size_t i = 0; i < k; ++i) {
        const char* color = kPalette[i % 4];
        line(out, px(top[i].first), py(top[i].second), px(top[i + 1].first), py(top[i + 1].second),
             std::string("stroke=\"") + color + "\" stroke-width=\"4\"");
    }
    for (std::size_t r = 0; r < k; ++r) {
        const char* color = kPalette[interval_of_rank[r] % 4];
        line(out, px(bot[r].first), py(bot[r].second), px(bot[r + 1].first), py(bot[r + 1].second),
             std::string("stroke=\"") + color + "\" stroke-width=\"4\"");
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_maharam(const MaharamSystem& sysM, int level_lo, int level_hi) {
    if (level_lo > level_hi) throw std::invalid_argument("render_maharam: empty level range");
    const int rows = level_hi - level_lo + 1;
    const double row_gap = 90.0;
    const double margin = 30.0;
    const double W = 700.0;
    const double H = rows * row_gap + 2 * margin;
    const double usable = W - 2 * margin - 80.0;

    // Level n is drawn with width proportional to rho^{-n}; the lowest
    // (widest) requested level fills the usable width.
    const double rho = to_double(sysM.base.rho);
    const auto scale_of = [&](int n) { return usable * std::pow(rho, level_lo - n); };
    const auto row_y = [&](int n) { return margin + (level_hi - n) * row_gap + row_gap / 2; };

    std::ostringstream out;
    out << svg_open(W, H);
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#000000\"/></marker></defs>\n";

    const double x0 = margin + 80.0;
    for (int n = level_hi; n >= level_lo; --n) {
        const double y = row_y(n);
        const double sc = scale_of(n);
        text(out, margin + 30.0, y + 4, "n=" + std::to_string(n));
        for (std::size_t i = 0; i < sysM.base.F.branches().size(); ++i) {
            const auto& br = sysM.base.F.branches()[i];
            const double lo = x0 + to_double(br.domain.lo) * sc;
            const double hi = x0 + to_double(br.domain.hi) * sc;
            line(out, lo, y - 6, lo, y + 6, "stroke=\"#000000\" stroke-width=\"1\"");
            line(out, lo, y, hi, y, std::string("stroke=\"") + kPalette[i % 4] + "\" stroke-width=\"5\"");
        }
        line(out, x0 + sc, y - 6, x0 + sc, y + 6, "stroke=\"#000000\" stroke-width=\"1\"");
    }

    for (int n = level_hi; n >= level_lo; --n) {
        for (const auto& br : sysM.base.F.branches()) {
            const bool up = br.slope == sysM.base.rho;
            const int target = n + (up ? 1 : -1);
            if (target < level_lo || target > level_hi) continue;
            const Interval img = br.image();
            const double x_from =
                x0 + (to_double(br.domain.lo) + to_double(br.domain.hi)) / 2 * scale_of(n);
            const double x_to = x0 + (to_double(img.lo) + to_double(img.hi)) / 2 * scale_of(target);
            const double y_from = row_y(n) + (up ? -8.0 : 8.0);
            const double y_to = row_y(target) + (up ? 12.0 : -12.0);
            line(out, x_from, y_from, x_to, y_to,
                 "stroke=\"#000000\" stroke-width=\"0.8\" marker-end=\"url(#arrow)\"");
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace recimap
