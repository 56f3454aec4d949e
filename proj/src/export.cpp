#include "abvis/export.hpp"

#include "abvis/visibility.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace abvis {

namespace {

std::string fmt12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::vector<PointRecord> records_for(const SetSpec& spec, bool internal_space)
{
    std::vector<PointRecord> out;
    switch (spec.variant) {
    case Variant::B:
    case Variant::Aprime:
    case Variant::A:
    case Variant::Scaled: {
        std::vector<LatticePoint> pts = enumerate_points(spec);
        const double scale = projection_scale(spec);
        out.reserve(pts.size());
        for (const LatticePoint& p : pts) {
            PointRecord r;
            r.a1 = p.x1.a();
            r.b1 = p.x1.b();
            r.a2 = p.x2.a();
            r.b2 = p.x2.b();
            if (internal_space) {
                r.x = p.conj1().to_double();
                r.y = p.conj2().to_double();
            } else {
                r.x = scale * p.xd();
                r.y = scale * p.yd();
            }
            if (spec.variant == Variant::B)
                r.visible = classify_b(p).visible;
            else if (spec.variant == Variant::Aprime || spec.variant == Variant::A)
                r.visible = classify_aprime(p).visible;
            out.push_back(std::move(r));
        }
        break;
    }
    case Variant::Zd: {
        if (spec.zd_dim != 2)
            throw std::invalid_argument("records_for: only 2-d integer lattices export");
        for (const ZdPoint& n : enumerate_zd(2, spec.region, spec.radius, spec.cap)) {
            PointRecord r;
            r.a1 = static_cast<long>(n[0]);
            r.b1 = 0;
            r.a2 = static_cast<long>(n[1]);
            r.b2 = 0;
            r.x = static_cast<double>(n[0]);
            r.y = static_cast<double>(n[1]);
            r.visible = zd_visible(n, 2);
            out.push_back(std::move(r));
        }
        break;
    }
    case Variant::ComplexAB: {
        for (const ComplexPoint& p : enumerate_complex(spec.radius, spec.cap)) {
            PointRecord r;
            r.a1 = p.x1.a();
            r.b1 = p.x1.b();
            r.a2 = p.x2.a();
            r.b2 = p.x2.b();
            if (internal_space) {
                // star image conj(x1) + conj(x2) * zeta^3
                const double h = std::numbers::sqrt2 / 2.0;
                double c1 = p.x1.conj().to_double(), c2 = p.x2.conj().to_double();
                r.x = c1 - c2 * h;
                r.y = c2 * h;
            } else {
                r.x = p.re();
                r.y = p.im();
            }
            out.push_back(std::move(r));
        }
        break;
    }
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<PointRecord>& records)
{
    os << "a1,b1,a2,b2,x,y,visible\n";
    for (const PointRecord& r : records) {
        os << r.a1.get_str() << ',' << r.b1.get_str() << ',' << r.a2.get_str() << ','
           << r.b2.get_str() << ',' << fmt12(r.x) << ',' << fmt12(r.y) << ','
           << (r.visible ? 1 : 0) << '\n';
    }
}

std::vector<PointRecord> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "a1,b1,a2,b2,x,y,visible")
        throw std::runtime_error("read_csv: missing or unexpected header");
    std::vector<PointRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string f[7];
        for (int i = 0; i < 7; ++i)
            if (!std::getline(ss, f[i], i < 6 ? ',' : '\n'))
                throw std::runtime_error("read_csv: short row: " + line);
        PointRecord r;
        r.a1 = mpz_class(f[0]);
        r.b1 = mpz_class(f[1]);
        r.a2 = mpz_class(f[2]);
        r.b2 = mpz_class(f[3]);
        r.x = std::stod(f[4]);
        r.y = std::stod(f[5]);
        if (f[6] != "0" && f[6] != "1")
            throw std::runtime_error("read_csv: bad visible flag: " + f[6]);
        r.visible = f[6] == "1";
        out.push_back(std::move(r));
    }
    return out;
}

std::string svg_scatter(const std::vector<PointRecord>& records, const SvgOptions& opt)
{
    const double ext = opt.extent > 0 ? opt.extent : 1.0;
    const int px = opt.size_px;
    const double s = px / (2.0 * ext);
    auto X = [&](double x) { return (x + ext) * s; };
    auto Y = [&](double y) { return (ext - y) * s; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\""
       << px << "\" viewBox=\"0 0 " << px << " " << px << "\">\n"
       << "<style>.vis{fill:#1f6fb4;}" << ".invis{fill:#d0d4da;}"
       << ".win{fill:none;stroke:#c03428;stroke-width:1.5;}</style>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opt.window_outline) {
        // W_A octagon: vertices (+-(2+sqrt2)/2, +-sqrt2/2) and swapped
        const double c = (2.0 + std::numbers::sqrt2) / 2.0;
        const double d = std::numbers::sqrt2 / 2.0;
        const double vx[8] = {c, d, -d, -c, -c, -d, d, c};
        const double vy[8] = {d, c, c, d, -d, -c, -c, -d};
        os << "<polygon class=\"win\" points=\"";
        for (int i = 0; i < 8; ++i)
            os << fmt12(X(vx[i])) << ',' << fmt12(Y(vy[i])) << (i < 7 ? " " : "");
        os << "\"/>\n";
    }

    const double rdot = std::max(1.0, s * ext / 220.0);
    for (const PointRecord& r : records) {
        os << "<circle class=\"" << (r.visible ? "vis" : "invis") << "\" cx=\""
           << fmt12(X(r.x)) << "\" cy=\"" << fmt12(Y(r.y)) << "\" r=\"" << fmt12(rdot)
           << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace abvis
