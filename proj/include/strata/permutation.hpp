#ifndef STRATA_PERMUTATION_HPP
#define STRATA_PERMUTATION_HPP

#include <strata/qmatrix.hpp>
#include <strata/ranktable.hpp>

#include <string>
#include <utility>
#include <vector>

namespace strata {

// Permutation of [1..m] in one-line notation. w(i) is 1-based.
class Permutation {
public:
    Permutation() {}
    explicit Permutation(std::vector<int> oneline);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const;

    const std::vector<int>& oneline() const { return w_; }
    Permutation inverse() const;
    int length() const;          // number of inversions
    std::vector<int> descents() const; // positions i with w(i) > w(i+1)
    std::string str() const;     // digit string if m <= 9, else comma separated

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator!=(const Permutation& o) const { return w_ != o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

    static Permutation identity(int m);
    static Permutation longest(int m); // m, m-1, ..., 1
    static Permutation transposition(int m, int a, int b);
    static Permutation adjacent(int m, int i); // s_i = (i, i+1)

private:
    std::vector<int> w_;
};

// (compose(f, g))(i) = f(g(i))
Permutation compose(const Permutation& f, const Permutation& g);

// M(i, w(i)) = 1 in 1-based terms, all other entries 0
QMatrix permutation_matrix(const Permutation& w);

// r_w(i, j) = #{k <= i : w(k) <= j}
RankTable perm_rank_table(const Permutation& w);

std::vector<Permutation> all_permutations(int m);

// Rank-n partial permutation data: a set of matrix positions (r, c) in
// [1..n] x [1..n] with all rows distinct and all columns distinct.
class PartialPermutation {
public:
    PartialPermutation(int n, std::vector<std::pair<int, int>> ones);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(ones_.size()); }
    const std::vector<std::pair<int, int>>& ones() const { return ones_; }

    bool operator==(const PartialPermutation& o) const {
        return n_ == o.n_ && ones_ == o.ones_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> ones_; // sorted by row
};

QMatrix partial_perm_matrix(const PartialPermutation& p);

std::vector<PartialPermutation> all_partial_permutations(int n);

} // namespace strata

#endif
