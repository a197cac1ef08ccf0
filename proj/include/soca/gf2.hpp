/*
   Copyright 2026 The soca-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Word-packed GF(2)[X] arithmetic for polynomials of degree < 64 (bit i = coeff of X^i).
// Used by the hot loops of the linear counts; the generic Polynomial is the reference.

#ifndef SOCA_GF2_HPP
#define SOCA_GF2_HPP

#include <bit>
#include <cstdint>

#include "soca/errors.hpp"
#include "soca/polynomial.hpp"

namespace soca::gf2 {

using Packed = std::uint64_t;

inline int degree(Packed a) noexcept { return static_cast<int>(std::bit_width(a)) - 1; }

inline Packed mod(Packed a, Packed m) noexcept {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
    return a;
}

inline Packed gcd(Packed a, Packed b) noexcept {
    while (b) {
        const Packed r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline Packed pack(const Polynomial& p) {
    if (!p.field().is_binary()) throw PreconditionError("packing requires a GF(2) polynomial");
    if (p.degree() >= 64) throw PreconditionError("packed GF(2) polynomials are limited to degree < 64");
    Packed out = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i]) out |= Packed{1} << i;
    return out;
}

inline Polynomial unpack(Packed a) {
    std::vector<Element> v;
    for (int i = 0; i <= degree(a); ++i) v.push_back(static_cast<Element>((a >> i) & 1));
    return Polynomial(Field(), std::move(v));
}

}  // namespace soca::gf2

#endif
