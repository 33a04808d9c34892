#pragma once

// Planar sampling domains.  Grammar:
//   rect:x0,x1,y0,y1 | disk:cx,cy,r | annulus:cx,cy,r0,r1

#include <array>
#include <string>

namespace legendrian {

struct DomainSpec {
    enum class Kind { rect, disk, annulus };
    Kind kind = Kind::rect;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;  // rect bounds
    double cx = 0, cy = 0, r0 = 0, r1 = 1;  // disk/annulus

    static DomainSpec parse(const std::string& text);
    static DomainSpec rect(double x0, double x1, double y0, double y1);
    static DomainSpec disk(double cx, double cy, double r);
    static DomainSpec annulus(double cx, double cy, double r0, double r1);

    bool contains(double x, double y) const;
    std::array<double, 4> bounding_box() const;  // x0, x1, y0, y1
    std::string str() const;
};

}  // namespace legendrian
