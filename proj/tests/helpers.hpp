#pragma once

#include <initializer_list>
#include <vector>

#include <binforms/fields.hpp>
#include <binforms/forms.hpp>

namespace testutil {

using binforms::BinaryForm;
using binforms::Fp;
using binforms::Poly;
using binforms::Rat;

inline BinaryForm<Rat> qform(std::initializer_list<long long> coeffs) {
    std::vector<Rat> c;
    for (long long x : coeffs) c.emplace_back(x);
    const int deg = static_cast<int>(c.size()) - 1;
    return BinaryForm<Rat>(deg, std::move(c));
}

inline BinaryForm<Fp> pform(long long p, std::initializer_list<long long> coeffs) {
    std::vector<Fp> c;
    for (long long x : coeffs) c.emplace_back(x, p);
    const int deg = static_cast<int>(c.size()) - 1;
    return BinaryForm<Fp>(deg, std::move(c));
}

inline Poly<Rat> qpoly(std::initializer_list<long long> coeffs) {
    std::vector<Rat> c;
    for (long long x : coeffs) c.emplace_back(x);
    return Poly<Rat>(std::move(c));
}

// linear form X0 - r*X1
inline BinaryForm<Rat> qroot(long long r) { return qform({1, -r}); }

}  // namespace testutil
