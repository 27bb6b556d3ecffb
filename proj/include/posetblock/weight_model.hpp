#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace posetblock {

/// Integer weight w on Z_q with w(0)=0 and w(a)>0 otherwise.
///
/// Symmetry w(a)=w(q-a) and subadditivity are not required by the distribution
/// formulas; violations are recorded in `warnings()` since the induced distance
/// may then fail to be a metric.
class WeightModel {
public:
    WeightModel() = default;

    int q() const { return static_cast<int>(table_.size()); }
    int operator()(std::uint32_t a) const { return table_[a]; }
    const std::vector<int>& table() const { return table_; }
    int min_weight() const { return m_w_; }  // m_w
    int max_weight() const { return M_w_; }  // M_w

    /// |D_r| for 0 <= r <= M_w.
    std::int64_t class_size(int r) const {
        if (r < 0 || r > M_w_) return 0;
        return class_sizes_[static_cast<std::size_t>(r)];
    }
    const std::vector<std::int64_t>& class_sizes() const { return class_sizes_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::string& name() const { return name_; }

    bool is_hamming() const { return M_w_ == 1; }

    /// w = p * Hamming for some p > 0.
    bool is_scaled_hamming() const { return m_w_ == M_w_; }

    friend bool operator==(const WeightModel& a, const WeightModel& b) {
        return a.table_ == b.table_;
    }

    static WeightModel from_table(std::vector<int> table, std::string name) {
        const auto q = table.size();
        if (q < 2) throw BoundsError("alphabet size must be at least 2");
        if (table[0] != 0) throw InvalidWeightError("weight of 0 must be 0");
        for (std::size_t a = 1; a < q; ++a)
            if (table[a] <= 0)
                throw InvalidWeightError("weight of nonzero symbol " + std::to_string(a) +
                                         " must be positive");
        WeightModel w;
        w.table_ = std::move(table);
        w.name_ = std::move(name);
        w.M_w_ = *std::max_element(w.table_.begin(), w.table_.end());
        w.m_w_ = *std::min_element(w.table_.begin() + 1, w.table_.end());
        w.class_sizes_.assign(static_cast<std::size_t>(w.M_w_) + 1, 0);
        for (int v : w.table_) ++w.class_sizes_[static_cast<std::size_t>(v)];
        for (std::size_t a = 1; a < q; ++a) {
            if (w.table_[a] != w.table_[q - a]) {
                w.warnings_.push_back("weight is not symmetric: w(" + std::to_string(a) +
                                      ") != w(" + std::to_string(q - a) + ")");
                break;
            }
        }
        for (std::size_t a = 1; a < q; ++a) {
            for (std::size_t b = 1; b < q; ++b) {
                if (w.table_[(a + b) % q] > w.table_[a] + w.table_[b]) {
                    w.warnings_.push_back("weight is not subadditive: w(" +
                                          std::to_string(a) + "+" + std::to_string(b) +
                                          ") > w(" + std::to_string(a) + ")+w(" +
                                          std::to_string(b) + ")");
                    a = q;
                    break;
                }
            }
        }
        return w;
    }

private:
    std::vector<int> table_;
    std::vector<std::int64_t> class_sizes_;
    std::vector<std::string> warnings_;
    std::string name_;
    int m_w_ = 0;
    int M_w_ = 0;
};

inline WeightModel lee_weight(int q) {
    if (q < 2) throw BoundsError("alphabet size must be at least 2");
    std::vector<int> t(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) t[a] = std::min(a, q - a);
    return WeightModel::from_table(std::move(t), "lee");
}

inline WeightModel hamming_weight(int q) {
    if (q < 2) throw BoundsError("alphabet size must be at least 2");
    std::vector<int> t(static_cast<std::size_t>(q), 1);
    t[0] = 0;
    return WeightModel::from_table(std::move(t), "hamming");
}

inline WeightModel custom_weight(int q, std::vector<int> table) {
    if (q < 2) throw BoundsError("alphabet size must be at least 2");
    if (static_cast<int>(table.size()) != q)
        throw InvalidWeightError("weight table has " + std::to_string(table.size()) +
                                 " entries, expected " + std::to_string(q));
    return WeightModel::from_table(std::move(table), "custom");
}

/// |D_r^k|: number of k-blocks whose largest symbol weight is exactly r.
inline BigInt block_class_size(const WeightModel& w, int r, int k) {
    if (r < 0 || r > w.max_weight())
        throw BoundsError("weight class " + std::to_string(r) + " outside [0, " +
                          std::to_string(w.max_weight()) + "]");
    if (k < 1) throw BoundsError("block length must be positive");
    if (r == 0) return 1;
    std::int64_t upto = 0;
    for (int i = 0; i < r; ++i) upto += w.class_size(i);
    return ipow(upto + w.class_size(r), static_cast<std::uint64_t>(k)) -
           ipow(upto, static_cast<std::uint64_t>(k));
}

/// Memo of |D_r^k| over 0 <= r <= M_w and 1 <= k <= max_k.
class BlockClassTable {
public:
    BlockClassTable(const WeightModel& w, int max_k) : M_w_(w.max_weight()) {
        table_.resize(static_cast<std::size_t>(max_k) + 1);
        for (int k = 1; k <= max_k; ++k)
            for (int r = 0; r <= M_w_; ++r) table_[k].push_back(block_class_size(w, r, k));
    }
    const BigInt& operator()(int r, int k) const { return table_[k][r]; }

private:
    int M_w_;
    std::vector<std::vector<BigInt>> table_;
};

}  // namespace posetblock
