// Copyright 2026 The symcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcomp {

/// Exact unsigned integer wide enough for every count handled by the
/// library (set-partition multiplicities overflow 64 bits near n = 20).
using wide_uint = unsigned __int128;

inline wide_uint checked_add(wide_uint a, wide_uint b) {
    wide_uint r = a + b;
    if (r < a) throw std::overflow_error("combinatorics: 128-bit addition overflow");
    return r;
}

inline wide_uint checked_mul(wide_uint a, wide_uint b) {
    if (a != 0 && b > static_cast<wide_uint>(-1) / a)
        throw std::overflow_error("combinatorics: 128-bit multiplication overflow");
    return a * b;
}

inline std::string to_string(wide_uint v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline double to_double(wide_uint v) {
    return static_cast<double>(static_cast<long double>(v));
}

/// C(n, k), exact. Returns 0 for k < 0 or k > n. Overflow is reported via
/// std::overflow_error, never wrapped.
inline wide_uint binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    wide_uint r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step, so the division is exact.
        r = checked_mul(r, static_cast<wide_uint>(n - k + i)) / static_cast<wide_uint>(i);
    }
    return r;
}

inline wide_uint factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    wide_uint r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<wide_uint>(i));
    return r;
}

/// A multiset of m positive block sizes, sorted non-decreasingly, summing
/// to n. Identifies an unordered m-way split of n qubits by sizes only.
struct PartitionShape {
    std::vector<int> blocks;

    PartitionShape() = default;
    explicit PartitionShape(std::vector<int> b) : blocks(std::move(b)) {
        if (blocks.empty()) throw std::invalid_argument("PartitionShape: empty block list");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i] < 1)
                throw std::invalid_argument("PartitionShape: block sizes must be positive");
            if (i > 0 && blocks[i - 1] > blocks[i])
                throw std::invalid_argument("PartitionShape: blocks must be sorted non-decreasingly");
        }
    }

    int n() const {
        int s = 0;
        for (int b : blocks) s += b;
        return s;
    }
    int m() const { return static_cast<int>(blocks.size()); }

    bool operator==(const PartitionShape& o) const { return blocks == o.blocks; }
    bool operator<(const PartitionShape& o) const { return blocks < o.blocks; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(blocks[i]);
        }
        return s + ")";
    }
};

/// Number of integer partitions of n into exactly m positive parts,
/// via p_m(n) = p_m(n-m) + p_{m-1}(n-1) with p_0(0) = 1.
inline wide_uint partition_count(int n, int m) {
    if (m < 0 || n < 0) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    if (m > n) return 0;
    // DP over (n, m); small table, n <= a few hundred in practice.
    std::vector<std::vector<wide_uint>> p(static_cast<std::size_t>(n) + 1,
                                          std::vector<wide_uint>(static_cast<std::size_t>(m) + 1, 0));
    p[0][0] = 1;
    for (int nn = 1; nn <= n; ++nn)
        for (int mm = 1; mm <= m && mm <= nn; ++mm) {
            wide_uint a = (nn - mm >= 0) ? p[nn - mm][mm] : 0;
            p[nn][mm] = checked_add(a, p[nn - 1][mm - 1]);
        }
    return p[n][m];
}

/// All block-size multisets of n into m positive parts, in lexicographic
/// order, e.g. partitions(6,3) = {(1,1,4), (1,2,3), (2,2,2)}.
inline std::vector<PartitionShape> partitions(int n, int m) {
    if (m < 1 || m > n)
        throw std::invalid_argument("partitions: require 1 <= m <= n");
    std::vector<PartitionShape> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int rem, int lo) -> void {
        int left = m - static_cast<int>(cur.size());
        if (left == 0) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        // remaining parts are >= v each, so v can be at most rem/left
        for (int v = lo; v <= rem / left; ++v) {
            cur.push_back(v);
            self(self, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

/// f(lambda): the number of set partitions of {1..n} into m unlabeled
/// blocks whose size multiset equals lambda,
///   f = n! / (prod_i lambda_i!) / (prod_j mu_j!)
/// with mu_j the multiplicities of the distinct block sizes.
inline wide_uint multiplicity(const PartitionShape& shape) {
    // n! / prod(lambda_i!) as a product of binomials keeps intermediates exact
    // and no larger than the final multinomial.
    wide_uint f = 1;
    int used = 0;
    for (int b : shape.blocks) {
        used += b;
        f = checked_mul(f, binomial(used, b));
    }
    // divide by mu_j! for repeated block sizes (exact)
    int run = 1;
    for (std::size_t i = 1; i <= shape.blocks.size(); ++i) {
        if (i < shape.blocks.size() && shape.blocks[i] == shape.blocks[i - 1]) {
            ++run;
        } else {
            f /= factorial(run);
            run = 1;
        }
    }
    return f;
}

/// Stirling number of the second kind S(n, m).
inline wide_uint stirling2(int n, int m) {
    if (m < 1 || m > n)
        throw std::invalid_argument("stirling2: require 1 <= m <= n");
    // S(n, m) = m S(n-1, m) + S(n-1, m-1)
    std::vector<wide_uint> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int nn = 1; nn <= n; ++nn) {
        for (int mm = std::min(m, nn); mm >= 1; --mm) {
            wide_uint t = checked_mul(static_cast<wide_uint>(mm), row[mm]);
            row[mm] = checked_add(t, row[mm - 1]);
        }
        row[0] = 0;
    }
    return row[m];
}

/// f(k, n-k) for bipartitions keyed by the smaller side k.
inline wide_uint bipartition_multiplicity(int n, int k) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("bipartition_multiplicity: require 1 <= k <= n/2");
    wide_uint f = binomial(n, k);
    if (2 * k == n) f /= 2;
    return f;
}

inline int ceil_log2(int x) {
    if (x < 1) throw std::invalid_argument("ceil_log2: positive argument required");
    int r = 0;
    int v = 1;
    while (v < x) {
        v *= 2;
        ++r;
    }
    return r;
}

}  // namespace symcomp
