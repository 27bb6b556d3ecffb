#pragma once

// Linear algebra over F_p and linear codes given by a generator matrix.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "block_space.hpp"
#include "caps.hpp"
#include "errors.hpp"

namespace posetblock {

using Matrix = std::vector<std::vector<int>>;

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline int inverse_mod(int a, int p) {
    // Fermat: a^(p-2)
    long long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

struct RowEchelon {
    Matrix rows;              // nonzero rows only, reduced
    std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form over F_p.
inline RowEchelon rref(Matrix m, int p, int cols) {
    RowEchelon out;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const int inv = inverse_mod(m[r][c], p);
        for (auto& v : m[r]) v = static_cast<int>(static_cast<long long>(v) * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const int f = m[i][c];
            for (int j = 0; j < cols; ++j)
                m[i][j] = static_cast<int>(((m[i][j] - static_cast<long long>(f) * m[r][j]) % p + p) % p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline int rank_mod(const Matrix& m, int p, int cols) {
    return static_cast<int>(rref(m, p, cols).rows.size());
}

/// Basis of {x : M x^T = 0}, one row per free column.
inline Matrix nullspace(const Matrix& m, int p, int cols) {
    const RowEchelon e = rref(m, p, cols);
    std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = static_cast<int>(i);
    Matrix basis;
    for (int f = 0; f < cols; ++f) {
        if (pivot_row[f] != -1) continue;
        std::vector<int> v(static_cast<std::size_t>(cols), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = (p - e.rows[i][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

class LinearCode {
public:
    /// Rows of `generator` may be dependent; they are reduced and zero rows dropped.
    LinearCode(int q, int N, const Matrix& generator) : q_(q), N_(N) {
        if (!is_prime(q)) throw NonPrimeError("linear codes need a prime alphabet, got q = " + std::to_string(q));
        if (N < 1) throw BoundsError("code length must be positive");
        for (const auto& row : generator) {
            if (static_cast<int>(row.size()) != N)
                throw DimensionError("generator row has length " + std::to_string(row.size()) +
                                     ", expected " + std::to_string(N));
            for (int v : row)
                if (v < 0 || v >= q)
                    throw BoundsError("generator entry " + std::to_string(v) + " outside [0," +
                                      std::to_string(q) + ")");
        }
        RowEchelon e = rref(generator, q, N);
        G_ = std::move(e.rows);
        pivots_ = std::move(e.pivots);
    }

    static LinearCode whole_space(int q, int N) {
        Matrix id(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
        for (int i = 0; i < N; ++i) id[i][i] = 1;
        return LinearCode(q, N, id);
    }
    static LinearCode zero_code(int q, int N) { return LinearCode(q, N, {}); }

    int q() const { return q_; }
    int length() const { return N_; }
    int dimension() const { return static_cast<int>(G_.size()); }
    const Matrix& generator() const { return G_; }
    const std::vector<int>& pivots() const { return pivots_; }
    BigInt size() const { return ipow(q_, static_cast<std::uint64_t>(dimension())); }

    /// Parity-check matrix: rows span the dual code.
    Matrix parity_check() const { return nullspace(G_, q_, N_); }

    /// rank of the generator restricted to the given coordinates
    int rank_on(const std::vector<int>& coords) const {
        Matrix sub;
        for (const auto& row : G_) {
            std::vector<int> r;
            r.reserve(coords.size());
            for (int c : coords) r.push_back(row[c]);
            sub.push_back(std::move(r));
        }
        return rank_mod(sub, q_, static_cast<int>(coords.size()));
    }

    /// Codeword for the message u (length k).
    BlockVector encode(const std::vector<int>& u) const {
        std::vector<Symbol> x(static_cast<std::size_t>(N_), 0);
        for (std::size_t i = 0; i < G_.size(); ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < N_; ++j)
                x[j] = static_cast<Symbol>((x[j] + static_cast<long long>(u[i]) * G_[i][j]) % q_);
        }
        return BlockVector(std::move(x));
    }

    /// All q^k codewords, messages in odometer order (last message symbol fastest).
    std::vector<BlockVector> codewords(const Caps& caps = {}) const {
        const int k = dimension();
        if (pow_saturating(q_, k) > caps.max_codewords)
            throw ExplosionError("code has " + std::to_string(q_) + "^" + std::to_string(k) +
                                 " codewords, over the cap of " + std::to_string(caps.max_codewords));
        std::vector<BlockVector> out;
        out.reserve(pow_saturating(q_, k));
        std::vector<int> u(static_cast<std::size_t>(k), 0);
        std::vector<Symbol> x(static_cast<std::size_t>(N_), 0);
        while (true) {
            out.emplace_back(x);
            int pos = k - 1;
            while (pos >= 0 && u[pos] == q_ - 1) {
                u[pos] = 0;
                // q_-1 -> 0 is one more step of +1
                for (int j = 0; j < N_; ++j) x[j] = static_cast<Symbol>((x[j] + G_[pos][j]) % q_);
                --pos;
            }
            if (pos < 0) break;
            ++u[pos];
            for (int j = 0; j < N_; ++j) x[j] = static_cast<Symbol>((x[j] + G_[pos][j]) % q_);
        }
        return out;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.q_ == b.q_ && a.N_ == b.N_ && a.G_ == b.G_;
    }

private:
    int q_;
    int N_;
    Matrix G_;
    std::vector<int> pivots_;
};

/// Coordinates (0-indexed) belonging to the blocks in `blocks`.
inline std::vector<int> coordinates_of(const LabelMap& pi, Mask blocks) {
    std::vector<int> out;
    for (int i : elements_of(blocks))
        for (int c = 0; c < pi.length(i); ++c) out.push_back(pi.offset(i) + c);
    return out;
}

}  // namespace posetblock
