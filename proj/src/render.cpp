#include "tiltwall/render.hpp"

#include <cmath>
#include <cstdio>

namespace tiltwall {

namespace {

double approx(const Rat& x) {
    double num = std::strtod(x.num().to_string().c_str(), nullptr);
    double den = std::strtod(x.den().to_string().c_str(), nullptr);
    return num / den;
}

double approx(const QuadIrr& q) {
    return approx(q.rational_part()) +
           approx(q.radical_coeff()) * std::sqrt(static_cast<double>(q.radicand()));
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string render_walls_svg(const ChernChar& v, const std::vector<WallLocus>& walls,
                             const RenderOptions& opts) {
    // Collect beta extent.
    double beta_min = -1.0, beta_max = 1.0, alpha_max = 1.0;
    auto widen = [&](double lo, double hi, double top) {
        if (lo < beta_min) beta_min = lo;
        if (hi > beta_max) beta_max = hi;
        if (top > alpha_max) alpha_max = top;
    };
    for (const auto& w : walls) {
        if (const auto* s = std::get_if<Semicircle>(&w)) {
            double c = approx(s->center), r = std::sqrt(approx(s->radius_sq));
            widen(c - r, c + r, r);
        } else if (const auto* vert = std::get_if<VerticalWall>(&w)) {
            widen(approx(vert->beta) - 1.0, approx(vert->beta) + 1.0, 1.0);
        }
    }
    bool has_mu = !v.r().is_zero();
    double mu_val = 0.0;
    if (has_mu) {
        mu_val = approx(Rat(v.c(), v.r()));
        widen(mu_val - 0.5, mu_val + 0.5, 1.0);
    }
    double b_lo = 0, b_hi = 0;
    bool has_beta_pm = false;
    if (has_mu && delta(v).sign() >= 0) {
        auto [lo, hi] = beta_pm(v);
        b_lo = approx(lo);
        b_hi = approx(hi);
        has_beta_pm = true;
        widen(b_lo - 0.5, b_hi + 0.5, 1.0);
    }
    beta_min -= 0.5;
    beta_max += 0.5;
    alpha_max *= 1.15;

    const double w_px = opts.width, h_px = opts.height, margin = 34.0;
    double sx = (w_px - 2 * margin) / (beta_max - beta_min);
    double sy = (h_px - 2 * margin) / alpha_max;
    auto X = [&](double beta) { return margin + (beta - beta_min) * sx; };
    auto Y = [&](double alpha) { return h_px - margin - alpha * sy; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(opts.width) + "\" height=\"" + std::to_string(opts.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!opts.title.empty())
        svg += "<text x=\"" + num(w_px / 2) + "\" y=\"18\" text-anchor=\"middle\" "
               "font-family=\"monospace\" font-size=\"13\">" + opts.title + "</text>\n";
    // axes
    svg += "<line x1=\"" + num(X(beta_min)) + "\" y1=\"" + num(Y(0)) + "\" x2=\"" +
           num(X(beta_max)) + "\" y2=\"" + num(Y(0)) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(X(0)) + "\" y1=\"" + num(Y(0)) + "\" x2=\"" + num(X(0)) +
           "\" y2=\"" + num(Y(alpha_max)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(X(beta_max) - 12) + "\" y=\"" + num(Y(0) + 14) +
           "\" font-family=\"monospace\" font-size=\"11\">b</text>\n";
    svg += "<text x=\"" + num(X(0) + 4) + "\" y=\"" + num(Y(alpha_max) + 12) +
           "\" font-family=\"monospace\" font-size=\"11\">a</text>\n";
    // integer ticks
    for (long long t = static_cast<long long>(std::ceil(beta_min)); t <= beta_max; ++t) {
        svg += "<line x1=\"" + num(X(t)) + "\" y1=\"" + num(Y(0) - 3) + "\" x2=\"" + num(X(t)) +
               "\" y2=\"" + num(Y(0) + 3) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(X(t)) + "\" y=\"" + num(Y(0) + 16) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"9\">" +
               std::to_string(t) + "</text>\n";
    }
    // walls
    for (const auto& w : walls) {
        if (const auto* s = std::get_if<Semicircle>(&w)) {
            double c = approx(s->center), r = std::sqrt(approx(s->radius_sq));
            svg += "<path d=\"M " + num(X(c - r)) + " " + num(Y(0)) + " A " + num(r * sx) + " " +
                   num(r * sy) + " 0 0 1 " + num(X(c + r)) + " " + num(Y(0)) +
                   "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
        } else if (const auto* vert = std::get_if<VerticalWall>(&w)) {
            svg += "<line x1=\"" + num(X(approx(vert->beta))) + "\" y1=\"" + num(Y(0)) +
                   "\" x2=\"" + num(X(approx(vert->beta))) + "\" y2=\"" + num(Y(alpha_max)) +
                   "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
        }
    }
    // vertical wall at mu
    if (has_mu)
        svg += "<line x1=\"" + num(X(mu_val)) + "\" y1=\"" + num(Y(0)) + "\" x2=\"" +
               num(X(mu_val)) + "\" y2=\"" + num(Y(alpha_max)) +
               "\" stroke=\"firebrick\" stroke-dasharray=\"5,3\"/>\n";
    // beta_+- markers
    if (has_beta_pm) {
        for (double b : {b_lo, b_hi}) {
            svg += "<circle cx=\"" + num(X(b)) + "\" cy=\"" + num(Y(0)) +
                   "\" r=\"3\" fill=\"firebrick\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tiltwall
