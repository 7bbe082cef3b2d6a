#include "spaceform/space_form.hpp"

namespace spaceform {

void SpaceFormSpec::validate() const {
    if (n_dim < 2)
        throw ValidationError("sphere dimension must be >= 2");
    if (p_order < 2)
        throw ValidationError("deck element order must be >= 2");
    if (n_dim % 2 == 0 && p_order != 2)
        throw ValidationError("even-dimensional space forms only admit order 2");
}

int betti(const SpaceFormSpec& spec, long q) {
    if (q < 0)
        throw ValidationError("degree must be >= 0");
    if (q % 2 != 0)
        return 0;
    long n = spec.n_dim;
    // The doubled degrees: j(n-1) for odd n, 2j(n-1) for even n, j >= 1.
    long step = (n % 2 == 1) ? n - 1 : 2 * (n - 1);
    if (q >= step && q % step == 0)
        return 2;
    return 1;
}

std::vector<long> poincare_coeffs(const SpaceFormSpec& spec, long q_max) {
    if (q_max < 0)
        throw ValidationError("degree must be >= 0");
    long n = spec.n_dim;
    // Numerator 1 - t^a over denominator (1 - t^2)(1 - t^b):
    // odd n = 2k+1: a = 2k+2, b = 2k; even n = 2k: a = 4k, b = 4k-2.
    long a, b;
    if (n % 2 == 1) {
        long k = (n - 1) / 2;
        a = 2 * k + 2;
        b = 2 * k;
    } else {
        long k = n / 2;
        a = 4 * k;
        b = 4 * k - 2;
    }
    std::vector<long> num(q_max + 1, 0), den(q_max + 1, 0);
    num[0] = 1;
    if (a <= q_max)
        num[a] = -1;
    den[0] = 1;
    if (2 <= q_max)
        den[2] -= 1;
    if (b <= q_max)
        den[b] -= 1;
    if (2 + b <= q_max)
        den[2 + b] += 1;
    // c_i = num_i - sum_{j=1}^{i} den_j * c_{i-j}  (den_0 = 1).
    std::vector<long> c(q_max + 1, 0);
    for (long i = 0; i <= q_max; ++i) {
        long acc = num[i];
        for (long j = 1; j <= i; ++j)
            if (den[j] != 0)
                acc -= den[j] * c[i - j];
        c[i] = acc;
    }
    return c;
}

Rational average_betti(const SpaceFormSpec& spec) {
    long n = spec.n_dim;
    if (n % 2 == 1)
        return Rational(n + 1, 2 * (n - 1));
    return Rational(n, 2 * (n - 1));
}

} // namespace spaceform
