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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fareyflow {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Concentration factors live in [0,1]; use make_fraction() to construct
/// those with domain validation. The raw constructor admits negative values
/// because approximation errors (chosen - target) are signed.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}

    /// Normalizes sign into the numerator and divides out the gcd.
    /// Throws std::domain_error if den == 0.
    Fraction(BigInt num, BigInt den);

    Fraction(std::int64_t num, std::int64_t den) : Fraction(BigInt(num), BigInt(den)) {}

    static Fraction zero() { return {}; }
    static Fraction one() { return {1, 1}; }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    Fraction abs() const { return is_negative() ? Fraction(-num_, den_) : *this; }

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;  ///< throws on division by zero
    Fraction operator-() const { return {-num_, den_}; }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Fraction& o) const;

    double to_double() const;

    /// "p/q", or just "p" when q == 1.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

/// Validated constructor for CF values. Rejects a zero denominator and any
/// negative value; the device only realizes concentrations in [0,1].
Fraction make_fraction(const BigInt& num, const BigInt& den);

/// Farey sequence of order m: all irreducible p/q in [0,1] with q <= m,
/// strictly ascending from 0/1 to 1/1.
struct FareySeq {
    int order = 1;
    std::vector<Fraction> elems;
};

/// Generates F_m with the classical next-term recurrence. Throws on m < 1.
FareySeq farey_sequence(int m);

/// Same sequence by enumerating every p/q and sorting; used as the second
/// route for cross-checking the recurrence.
FareySeq farey_sequence_enumerated(int m);

/// True iff every consecutive pair p/q, r/s satisfies q*r - p*s = 1.
bool farey_neighbors_check(const std::vector<Fraction>& elems);
inline bool farey_neighbors_check(const FareySeq& seq) { return farey_neighbors_check(seq.elems); }

}  // namespace fareyflow
