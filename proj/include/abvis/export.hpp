#pragma once

#include "abvis/cutproject.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace abvis {

// One exported point: exact coefficients (a1, b1, a2, b2), real projections
// to 12 significant digits, visibility as 0/1.
struct PointRecord {
    mpz_class a1, b1, a2, b2;
    double x = 0.0, y = 0.0;
    bool visible = false;
};

// Enumerates, classifies and projects a set into exportable records.
// `internal_space` swaps in the internal-space (conjugate / star) coordinates.
std::vector<PointRecord> records_for(const SetSpec& spec, bool internal_space = false);

// schema: a1,b1,a2,b2,x,y,visible
void write_csv(std::ostream& os, const std::vector<PointRecord>& records);

// strict reader for the schema above; throws std::runtime_error on malformed input
std::vector<PointRecord> read_csv(std::istream& is);

struct SvgOptions {
    double extent = 1.0;        // half-width of the plotted square, data units
    bool window_outline = false; // draw the W_A octagon (internal-space plots)
    int size_px = 800;
};

// One SVG document; visible points as filled circles of class "vis",
// invisible as class "invis".
std::string svg_scatter(const std::vector<PointRecord>& records, const SvgOptions& opt);

} // namespace abvis
