#include "funk/common.hpp"

#include <cmath>
#include <map>

namespace funk {

bool Tolerances::set(const std::string& key, double value) {
    static const std::map<std::string, double Tolerances::*> fields = {
        {"boundary", &Tolerances::boundary},
        {"direction", &Tolerances::direction},
        {"face", &Tolerances::face},
        {"geometry", &Tolerances::geometry},
        {"determinant", &Tolerances::determinant},
        {"point", &Tolerances::point},
        {"rank", &Tolerances::rank},
        {"align_defect", &Tolerances::align_defect},
        {"geodesic", &Tolerances::geodesic},
        {"parallel", &Tolerances::parallel},
        {"line", &Tolerances::line},
        {"area", &Tolerances::area},
        {"zero_clamp", &Tolerances::zero_clamp},
    };
    auto it = fields.find(key);
    if (it == fields.end()) return false;
    this->*(it->second) = value;
    return true;
}

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::NotInterior: return "point not interior";
        case ErrorCode::NotOnBoundary: return "point not on boundary";
        case ErrorCode::Degenerate: return "degenerate configuration";
        case ErrorCode::Singular: return "singular map";
        case ErrorCode::Containment: return "containment violated";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::Parse: return "parse error";
    }
    return "unknown error";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool all_finite(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i))) return false;
    }
    return true;
}

}  // namespace funk
