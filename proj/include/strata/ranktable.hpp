#ifndef STRATA_RANKTABLE_HPP
#define STRATA_RANKTABLE_HPP

#include <stdexcept>
#include <vector>

namespace strata {

// Table of corner ranks of an m x m matrix, 1-indexed: entry (i,j) for
// i,j in [1,m]. get() extends by the zero border get(0,j) = get(i,0) = 0,
// which is how every rank-table recursion wants to read it.
class RankTable {
public:
    RankTable() : m_(0) {}
    explicit RankTable(int m) : m_(m) {
        if (m < 0) throw std::invalid_argument("RankTable: negative size");
        t_.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    }

    int size() const { return m_; }

    void set(int i, int j, int v) {
        check(i, j);
        t_[idx(i, j)] = v;
    }

    int at(int i, int j) const {
        check(i, j);
        return t_[idx(i, j)];
    }

    // zero-border read, valid for i,j in [0,m]
    int get(int i, int j) const {
        if (i == 0 || j == 0) {
            if (i < 0 || j < 0 || i > m_ || j > m_)
                throw std::invalid_argument("RankTable: index out of range");
            return 0;
        }
        return at(i, j);
    }

    bool operator==(const RankTable& o) const { return m_ == o.m_ && t_ == o.t_; }
    bool operator!=(const RankTable& o) const { return !(*this == o); }

private:
    int m_;
    std::vector<int> t_;
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i - 1) * m_ + (j - 1);
    }
    void check(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > m_)
            throw std::invalid_argument("RankTable: index out of range");
    }
};

} // namespace strata

#endif
