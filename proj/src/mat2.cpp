#include "oresme/mat2.hpp"

namespace oresme {

Mat2 Mat2::identity() {
    LaurentPoly one = LaurentPoly::constant(Rational(1));
    return Mat2{one, LaurentPoly::zero(), LaurentPoly::zero(), one};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return Mat2{
        a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
        a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22,
    };
}

Mat2 mat_pow(const Mat2& m, std::uint64_t n) {
    Mat2 result = Mat2::identity();
    Mat2 base = m;
    while (n > 0) {
        if (n & 1) {
            result = mat_mul(result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = mat_mul(base, base);
        }
    }
    return result;
}

Mat2 companion_matrix() {
    return Mat2{
        LaurentPoly::constant(Rational(1)), LaurentPoly::monomial(Rational(-1), -2),
        LaurentPoly::constant(Rational(1)), LaurentPoly::zero(),
    };
}

} // namespace oresme
