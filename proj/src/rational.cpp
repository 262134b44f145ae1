/*
   Copyright 2026 The fareyflow authors

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

#include "fareyflow/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fareyflow {

namespace mp = boost::multiprecision;

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("fraction with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::operator+(const Fraction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Fraction Fraction::operator-(const Fraction& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

Fraction Fraction::operator*(const Fraction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num_ == 0) {
        throw std::domain_error("division by zero fraction");
    }
    return {num_ * o.den_, den_ * o.num_};
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Fraction::to_double() const {
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::string Fraction::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Fraction make_fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("fraction with zero denominator");
    }
    Fraction f(num, den);
    if (f.is_negative()) {
        throw std::domain_error("negative concentration value: " + f.str());
    }
    return f;
}

FareySeq farey_sequence(int m) {
    if (m < 1) {
        throw std::invalid_argument("farey order must be >= 1");
    }
    FareySeq seq;
    seq.order = m;
    seq.elems.emplace_back(0, 1);
    // Next-term recurrence: given consecutive a/b, c/d, the successor is
    // (k*c - a)/(k*d - b) with k = (m + b) / d.
    BigInt a = 0, b = 1, c = 1, d = m;
    while (c <= m) {
        seq.elems.emplace_back(c, d);
        BigInt k = (m + b) / d;
        BigInt c2 = k * c - a;
        BigInt d2 = k * d - b;
        a = c;
        b = d;
        c = c2;
        d = d2;
    }
    return seq;
}

FareySeq farey_sequence_enumerated(int m) {
    if (m < 1) {
        throw std::invalid_argument("farey order must be >= 1");
    }
    FareySeq seq;
    seq.order = m;
    for (std::int64_t q = 1; q <= m; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            if (mp::gcd(BigInt(p), BigInt(q)) == 1) {
                seq.elems.emplace_back(p, q);
            }
        }
    }
    std::sort(seq.elems.begin(), seq.elems.end());
    return seq;
}

bool farey_neighbors_check(const std::vector<Fraction>& elems) {
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        const Fraction& lo = elems[i];
        const Fraction& hi = elems[i + 1];
        if (lo.den() * hi.num() - lo.num() * hi.den() != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace fareyflow
