#pragma once

#include <random>
#include <vector>

#include "afspin/clifford.hpp"
#include "afspin/spin.hpp"

namespace afspin::testing {

using E2 = CliffordElement<QSqrt2>;
using Spin2 = SpinElement<QSqrt2>;

inline QSqrt2 random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), coin(0, 2);
    Rational a(num(rng), den(rng));
    Rational b = coin(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(0);
    return QSqrt2(a, b);
}

/// Sparse random element of C_n with up to max_terms terms.
inline E2 random_element(std::mt19937& rng, int n, int max_terms = 4)
{
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<unsigned> mask(0, (1u << n) - 1);
    E2 x(n);
    int k = terms(rng);
    for (int i = 0; i < k; ++i)
        x.add_term(mask(rng), random_scalar(rng));
    return x;
}

inline E2 sqrt2_inv() { return E2::scalar(4, QSqrt2(Rational(0), Rational(1, 2))); }

/// Naive oracle: reduce the word e_{w1} e_{w2} ... by adjacent swaps and e_i e_i = -1.
inline std::pair<int, unsigned> rewrite_word(std::vector<int> w)
{
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                sign = -sign;
                changed = true;
                break;
            }
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    unsigned mask = 0;
    for (int i : w)
        mask |= 1u << (i - 1);
    return {sign, mask};
}

/// Spin element built from a signed permutation preimage.
inline Spin2 random_spin(std::mt19937& rng, const std::vector<SignedPermMatrix>& so4)
{
    std::uniform_int_distribution<std::size_t> pick(0, so4.size() - 1);
    return preimage_signed_perm<QSqrt2>(so4[pick(rng)]).first;
}

} // namespace afspin::testing
