#include "hcz/gaussian.hpp"

#include <stdexcept>

namespace hcz {

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("inverse of zero Gaussian rational");
    return {re / n, -im / n};
}

std::string GaussianRational::str() const {
    if (im == 0) return re.get_str();
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = im.get_str() + "i";
    if (re == 0) return imag;
    if (imag[0] == '-') return re.get_str() + imag;
    return re.get_str() + "+" + imag;
}

}  // namespace hcz
