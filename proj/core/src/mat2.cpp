#include "sliderule/mat2.hpp"

#include <ostream>

namespace sliderule {

std::ostream& operator<<(std::ostream& os, const RealMat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

std::ostream& operator<<(std::ostream& os, const ComplexMat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace sliderule
