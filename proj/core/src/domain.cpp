#include "legendrian/domain.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "legendrian/errors.hpp"

namespace legendrian {

namespace {

std::vector<double> parse_numbers(const std::string& body, std::size_t expected) {
    std::vector<double> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("bad number '" + item + "' in domain spec");
        }
    }
    if (out.size() != expected)
        throw InvalidInput("domain spec expects " + std::to_string(expected) + " numbers");
    return out;
}

}  // namespace

DomainSpec DomainSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput("domain spec missing ':'");
    std::string kind = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (kind == "rect") {
        auto v = parse_numbers(body, 4);
        return rect(v[0], v[1], v[2], v[3]);
    }
    if (kind == "disk") {
        auto v = parse_numbers(body, 3);
        return disk(v[0], v[1], v[2]);
    }
    if (kind == "annulus") {
        auto v = parse_numbers(body, 4);
        return annulus(v[0], v[1], v[2], v[3]);
    }
    throw InvalidInput("unknown domain kind '" + kind + "'");
}

DomainSpec DomainSpec::rect(double x0, double x1, double y0, double y1) {
    if (!(x0 < x1 && y0 < y1)) throw InvalidInput("degenerate rectangle");
    DomainSpec d;
    d.kind = Kind::rect;
    d.x0 = x0; d.x1 = x1; d.y0 = y0; d.y1 = y1;
    return d;
}

DomainSpec DomainSpec::disk(double cx, double cy, double r) {
    if (!(r > 0)) throw InvalidInput("disk radius must be positive");
    DomainSpec d;
    d.kind = Kind::disk;
    d.cx = cx; d.cy = cy; d.r0 = 0; d.r1 = r;
    return d;
}

DomainSpec DomainSpec::annulus(double cx, double cy, double r0, double r1) {
    if (!(0 < r0 && r0 < r1)) throw InvalidInput("annulus radii must satisfy 0 < r0 < r1");
    DomainSpec d;
    d.kind = Kind::annulus;
    d.cx = cx; d.cy = cy; d.r0 = r0; d.r1 = r1;
    return d;
}

bool DomainSpec::contains(double x, double y) const {
    switch (kind) {
        case Kind::rect:
            return x >= x0 && x <= x1 && y >= y0 && y <= y1;
        case Kind::disk: {
            double dx = x - cx, dy = y - cy;
            return dx * dx + dy * dy <= r1 * r1;
        }
        case Kind::annulus: {
            double dx = x - cx, dy = y - cy;
            double d2 = dx * dx + dy * dy;
            return d2 >= r0 * r0 && d2 <= r1 * r1;
        }
    }
    return false;
}

std::array<double, 4> DomainSpec::bounding_box() const {
    if (kind == Kind::rect) return {x0, x1, y0, y1};
    return {cx - r1, cx + r1, cy - r1, cy + r1};
}

std::string DomainSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::rect:
            os << "rect:" << x0 << "," << x1 << "," << y0 << "," << y1;
            break;
        case Kind::disk:
            os << "disk:" << cx << "," << cy << "," << r1;
            break;
        case Kind::annulus:
            os << "annulus:" << cx << "," << cy << "," << r0 << "," << r1;
            break;
    }
    return os.str();
}

}  // namespace legendrian
