#pragma once

#include <cstdint>

#include "oresme/laurent.hpp"

namespace oresme {

/// 2x2 matrix over Laurent polynomials.
struct Mat2 {
    LaurentPoly e11, e12, e21, e22;

    static Mat2 identity();

    LaurentPoly det() const { return e11 * e22 - e12 * e21; }

    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
    }
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);

/// Square-and-multiply; m^0 is the identity.
Mat2 mat_pow(const Mat2& m, std::uint64_t n);

/// Companion matrix [[1, -x^-2], [1, 0]] of the three-term recurrence.
Mat2 companion_matrix();

} // namespace oresme
