#pragma once

#include <sstream>
#include <string>

#include "charvar/document.hpp"

namespace charvar {
namespace detail {

inline std::string fmt(double v) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << v;
    return out.str();
}

class SvgBuilder {
public:
    explicit SvgBuilder(int rank) : scale_(720.0 / rank) {
        body_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
              << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" "
                 "height=\"760\" viewBox=\"-20 -20 760 760\">\n"
              << "  <rect x=\"0\" y=\"0\" width=\"720\" height=\"720\" "
                 "fill=\"none\" stroke=\"#000\" stroke-width=\"3\"/>\n";
    }

    double scale() const { return scale_; }

    void separator(double x) {
        body_ << "  <line x1=\"" << fmt(x * scale_) << "\" y1=\"0\" x2=\""
              << fmt(x * scale_) << "\" y2=\"720\" stroke=\"#999\" "
                 "stroke-dasharray=\"6 6\"/>\n";
    }

    void square(double x, double y, int size, const std::string& label,
                const std::string& superscript) {
        const double side = size * scale_;
        body_ << "  <rect x=\"" << fmt(x * scale_) << "\" y=\"" << fmt(y * scale_)
              << "\" width=\"" << fmt(side) << "\" height=\"" << fmt(side)
              << "\" fill=\"#eee\" stroke=\"#333\"/>\n";
        if (side < 14.0) return; // too small to label legibly
        const double font = std::min(28.0, std::max(10.0, side * 0.35));
        body_ << "  <text x=\"" << fmt(x * scale_ + side / 2) << "\" y=\""
              << fmt(y * scale_ + side / 2) << "\" font-size=\"" << fmt(font)
              << "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
                 "font-family=\"sans-serif\">"
              << label;
        if (!superscript.empty())
            body_ << "<tspan baseline-shift=\"super\" font-size=\""
                  << fmt(font * 0.6) << "\">" << superscript << "</tspan>";
        body_ << "</text>\n";
    }

    void dashed_box(double x, double y, double w, double h) {
        body_ << "  <rect x=\"" << fmt(x * scale_) << "\" y=\"" << fmt(y * scale_)
              << "\" width=\"" << fmt(w * scale_) << "\" height=\""
              << fmt(h * scale_)
              << "\" fill=\"none\" stroke=\"#000\" stroke-dasharray=\"8 6\"/>\n";
    }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    double scale_;
    std::ostringstream body_;
};

} // namespace detail

/// Renders a configuration as a standalone SVG: the r x r frame, column
/// separators, and one shaded labeled square per part. Overlapping
/// configurations also get the dashed mu x nu box between the two big
/// squares.
inline std::string render_svg(const ConfigDocument& doc) {
    if (doc.kind == ConfigDocument::Kind::Gl) {
        const auto& cfg = *doc.gl;
        detail::SvgBuilder svg(cfg.rank);
        double x = 0;
        for (int i = 0; i < 3; ++i) {
            if (i) svg.separator(x);
            double y = 0;
            for (int part : cfg.columns[i].parts()) {
                svg.square(x, y, part, std::to_string(part), "");
                y += part;
            }
            x += cfg.widths[i];
        }
        return svg.finish();
    }
    if (doc.kind == ConfigDocument::Kind::Quad) {
        const auto& cfg = *doc.quad;
        detail::SvgBuilder svg(cfg.rank);
        double x = 0;
        for (int i = 0; i < 3; ++i) {
            if (i) svg.separator(x);
            double y = 0;
            for (const auto& part : cfg.columns[i].parts) {
                svg.square(x, y, part.size, std::to_string(part.size),
                           std::string(1, kind_letter(part.kind)));
                y += part.size;
            }
            x += cfg.columns[i].width;
        }
        return svg.finish();
    }
    if (doc.kind == ConfigDocument::Kind::QuadOverlapping) {
        const auto& cfg = *doc.overlapping;
        detail::SvgBuilder svg(cfg.rank);
        const auto& free = cfg.columns[static_cast<std::size_t>(cfg.free_column())];
        const auto& left = cfg.columns[static_cast<std::size_t>(cfg.overlap[0])];
        const auto& right = cfg.columns[static_cast<std::size_t>(cfg.overlap[1])];
        const int e_left = left.sizes_of(PartKind::e)[0];
        const int e_right = right.sizes_of(PartKind::e)[0];

        double y = 0;
        for (const auto& part : free.parts) {
            svg.square(0, y, part.size, std::to_string(part.size),
                       std::string(1, kind_letter(part.kind)));
            y += part.size;
        }
        svg.separator(free.width);

        // Left overlap column: big square on top, the rest below it.
        const double lx = free.width;
        svg.square(lx, 0, e_left, std::to_string(e_left), "e");
        y = e_left;
        bool skipped = false;
        for (const auto& part : left.parts) {
            if (!skipped && part.kind == PartKind::e && part.size == e_left) {
                skipped = true;
                continue;
            }
            svg.square(lx, y, part.size, std::to_string(part.size),
                       std::string(1, kind_letter(part.kind)));
            y += part.size;
        }

        // Right overlap column: the rest from the top, big square at bottom.
        const double rx = cfg.rank - right.width;
        y = 0;
        skipped = false;
        for (const auto& part : right.parts) {
            if (!skipped && part.kind == PartKind::e && part.size == e_right) {
                skipped = true;
                continue;
            }
            svg.square(rx, y, part.size, std::to_string(part.size),
                       std::string(1, kind_letter(part.kind)));
            y += part.size;
        }
        svg.square(cfg.rank - e_right, cfg.rank - e_right, e_right,
                   std::to_string(e_right), "e");

        const double nu = cfg.rank - e_left - e_right;
        svg.dashed_box(cfg.rank - e_right, e_left, cfg.mu, nu);
        return svg.finish();
    }
    throw Error("diagrams are defined for configuration documents only");
}

} // namespace charvar
