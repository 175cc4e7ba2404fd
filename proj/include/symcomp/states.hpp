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

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "symcomp/combinatorics.hpp"

namespace symcomp {

using cplx = std::complex<double>;

/// An n-qubit permutation-invariant pure state given as a normalized
/// superposition of Dicke states over a small set of Hamming weights.
struct WeightedDickeState {
    int n = 0;
    std::vector<int> support;       // sorted distinct weights in [0, n]
    std::vector<cplx> amplitudes;   // unit l2 norm, first non-zero entry real >= 0

    int weight_count() const { return static_cast<int>(support.size()); }

    /// Same amplitudes on the reflected support k -> n-k (bit-flip image).
    WeightedDickeState reflected() const {
        WeightedDickeState r;
        r.n = n;
        r.support.resize(support.size());
        r.amplitudes.resize(amplitudes.size());
        for (std::size_t i = 0; i < support.size(); ++i) {
            r.support[support.size() - 1 - i] = n - support[i];
            r.amplitudes[support.size() - 1 - i] = amplitudes[i];
        }
        return r;
    }
};

namespace detail {

inline void canonicalize_phase(std::vector<cplx>& amps) {
    for (const cplx& a : amps) {
        if (std::abs(a) > 0) {
            cplx rot = std::conj(a) / std::abs(a);
            for (cplx& b : amps) b *= rot;
            break;
        }
    }
}

}  // namespace detail

/// Normalized weighted superposition over the given distinct weights.
inline WeightedDickeState make_weighted(int n, std::vector<int> support,
                                        std::vector<cplx> amplitudes) {
    if (n < 1) throw std::invalid_argument("make_weighted: n must be positive");
    if (support.empty() || support.size() != amplitudes.size())
        throw std::invalid_argument("make_weighted: support/amplitude size mismatch");
    // sort by weight, keep amplitude association
    std::vector<std::size_t> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    WeightedDickeState s;
    s.n = n;
    for (std::size_t i : order) {
        if (support[i] < 0 || support[i] > n)
            throw std::invalid_argument("make_weighted: weight out of [0, n]");
        if (!s.support.empty() && s.support.back() == support[i])
            throw std::invalid_argument("make_weighted: duplicate weight");
        s.support.push_back(support[i]);
        s.amplitudes.push_back(amplitudes[i]);
    }
    double nrm = 0;
    for (const cplx& a : s.amplitudes) nrm += std::norm(a);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-300) throw std::invalid_argument("make_weighted: zero amplitude vector");
    // already-normalized input stays bit-identical, so store/load is a fixed point
    if (std::abs(nrm - 1.0) > 1e-13)
        for (cplx& a : s.amplitudes) a /= nrm;
    detail::canonicalize_phase(s.amplitudes);
    return s;
}

/// The Dicke state |D_k^(n)>.
inline WeightedDickeState make_dicke(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("make_dicke: weight out of [0, n]");
    return make_weighted(n, {k}, {cplx(1.0, 0.0)});
}

/// Comb state: uniform superposition over weights n/2 + l*s for
/// l = -L..L, with L the largest integer keeping every weight in [0, n].
/// For odd n the center weight is floor(n/2).
inline WeightedDickeState make_comb(int n, int s) {
    if (s < 1) throw std::invalid_argument("make_comb: step must be >= 1");
    int center = n / 2;
    int max_up = (n - center) / s;
    int max_down = center / s;
    int L = std::min(max_up, max_down);
    std::vector<int> support;
    std::vector<cplx> amps;
    for (int l = -L; l <= L; ++l) {
        support.push_back(center + l * s);
        amps.emplace_back(1.0, 0.0);
    }
    return make_weighted(n, support, amps);
}

/// Full 2^n statevector, big-endian: basis index = sum_q bit_q 2^(n-1-q).
inline Eigen::VectorXcd to_statevector(const WeightedDickeState& s) {
    if (s.n > 15) throw std::runtime_error("to_statevector: n > 15 exceeds memory guard");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1LL << s.n);
    for (std::size_t i = 0; i < s.support.size(); ++i) {
        double scale = 1.0 / std::sqrt(to_double(binomial(s.n, s.support[i])));
        cplx a = s.amplitudes[i] * scale;
        for (long long x = 0; x < v.size(); ++x)
            if (std::popcount(static_cast<unsigned long long>(x)) == s.support[i]) v[x] = a;
    }
    return v;
}

/// Coefficient tensor of a state in the product of block-local Dicke
/// bases; dense row-major with shape (lambda_1+1, ..., lambda_m+1).
struct BlockTensor {
    std::vector<int> dims;
    std::vector<cplx> data;

    int modes() const { return static_cast<int>(dims.size()); }
    std::size_t size() const { return data.size(); }

    std::size_t flat_index(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            f = f * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(idx[i]);
        return f;
    }
    cplx& at(const std::vector<int>& idx) { return data[flat_index(idx)]; }
    const cplx& at(const std::vector<int>& idx) const { return data[flat_index(idx)]; }

    double norm() const {
        double s = 0;
        for (const cplx& c : data) s += std::norm(c);
        return std::sqrt(s);
    }
};

/// Block-local Dicke decomposition: entry (j_1..j_m) carries
/// alpha_i sqrt(prod_b C(lambda_b, j_b) / C(n, k_i)) whenever sum_b j_b = k_i.
inline BlockTensor block_tensor(const WeightedDickeState& s, const PartitionShape& shape) {
    if (shape.n() != s.n)
        throw std::invalid_argument("block_tensor: partition does not sum to the state size");
    BlockTensor t;
    t.dims.reserve(shape.blocks.size());
    std::size_t total = 1;
    for (int b : shape.blocks) {
        t.dims.push_back(b + 1);
        total *= static_cast<std::size_t>(b + 1);
    }
    t.data.assign(total, cplx(0, 0));

    std::vector<int> idx(t.dims.size(), 0);
    for (std::size_t f = 0; f < total; ++f) {
        int wsum = 0;
        for (int j : idx) wsum += j;
        for (std::size_t i = 0; i < s.support.size(); ++i) {
            if (wsum != s.support[i]) continue;
            double num = 1.0;
            for (std::size_t b = 0; b < idx.size(); ++b)
                num *= to_double(binomial(shape.blocks[b], idx[b]));
            t.data[f] = s.amplitudes[i] *
                        std::sqrt(num / to_double(binomial(s.n, s.support[i])));
        }
        // advance mixed-radix index
        for (int b = static_cast<int>(idx.size()) - 1; b >= 0; --b) {
            if (++idx[b] < t.dims[b]) break;
            idx[b] = 0;
        }
    }
    return t;
}

// --- JSON serialization: {n, support:[int], amplitudes:[[re,im],...]} ---

inline nlohmann::json to_json(const WeightedDickeState& s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const cplx& a : s.amplitudes) amps.push_back({a.real(), a.imag()});
    return nlohmann::json{{"n", s.n}, {"support", s.support}, {"amplitudes", amps}};
}

inline WeightedDickeState state_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<int> support = j.at("support").get<std::vector<int>>();
    std::vector<cplx> amps;
    for (const auto& p : j.at("amplitudes")) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("state_from_json: amplitude entries must be [re, im]");
        amps.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return make_weighted(n, std::move(support), std::move(amps));
}

}  // namespace symcomp
