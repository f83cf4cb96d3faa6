#include <strata/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strata {

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
    int m = static_cast<int>(w_.size());
    std::vector<char> seen(m + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > m || seen[v])
            throw std::invalid_argument("Permutation: not a permutation of [1..m]");
        seen[v] = 1;
    }
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size())
        throw std::invalid_argument("Permutation: index out of range");
    return w_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> v(w_.size());
    for (int i = 1; i <= size(); ++i) v[w_[i - 1] - 1] = i;
    return Permutation(v);
}

int Permutation::length() const {
    int ell = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (w_[i] > w_[j]) ++ell;
    return ell;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (w_[i - 1] > w_[i]) d.push_back(i);
    return d;
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (size() > 9 && i > 0) s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::longest(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return Permutation(v);
}

Permutation Permutation::transposition(int m, int a, int b) {
    if (a < 1 || a > m || b < 1 || b > m || a == b)
        throw std::invalid_argument("transposition: bad indices");
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[a - 1], v[b - 1]);
    return Permutation(v);
}

Permutation Permutation::adjacent(int m, int i) {
    if (i < 1 || i >= m)
        throw std::invalid_argument("adjacent: index out of range");
    return transposition(m, i, i + 1);
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(f.size());
    for (int i = 1; i <= f.size(); ++i) v[i - 1] = f(g(i));
    return Permutation(v);
}

QMatrix permutation_matrix(const Permutation& w) {
    int m = w.size();
    QMatrix p(m, m);
    for (int i = 1; i <= m; ++i) p.at(i - 1, w(i) - 1) = 1;
    return p;
}

RankTable perm_rank_table(const Permutation& w) {
    int m = w.size();
    RankTable r(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            r.set(i, j, r.get(i - 1, j) + (w(i) <= j ? 1 : 0));
    return r;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

PartialPermutation::PartialPermutation(int n, std::vector<std::pair<int, int>> ones)
    : n_(n), ones_(std::move(ones)) {
    if (n < 0) throw std::invalid_argument("PartialPermutation: negative n");
    std::sort(ones_.begin(), ones_.end());
    std::vector<char> row(n + 1, 0), col(n + 1, 0);
    for (auto [r, c] : ones_) {
        if (r < 1 || r > n || c < 1 || c > n)
            throw std::invalid_argument("PartialPermutation: position out of range");
        if (row[r] || col[c])
            throw std::invalid_argument("PartialPermutation: repeated row or column");
        row[r] = col[c] = 1;
    }
}

QMatrix partial_perm_matrix(const PartialPermutation& p) {
    QMatrix m(p.n(), p.n());
    for (auto [r, c] : p.ones()) m.at(r - 1, c - 1) = 1;
    return m;
}

std::vector<PartialPermutation> all_partial_permutations(int n) {
    std::vector<PartialPermutation> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> colUsed(n + 1, 0);
    // row by row, each row either skipped or matched to a free column
    auto rec = [&](auto&& self, int row) -> void {
        if (row > n) {
            out.push_back(PartialPermutation(n, cur));
            return;
        }
        self(self, row + 1);
        for (int c = 1; c <= n; ++c) {
            if (colUsed[c]) continue;
            colUsed[c] = 1;
            cur.push_back({row, c});
            self(self, row + 1);
            cur.pop_back();
            colUsed[c] = 0;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(),
              [](const PartialPermutation& a, const PartialPermutation& b) {
                  if (a.rank() != b.rank()) return a.rank() < b.rank();
                  return a.ones() < b.ones();
              });
    return out;
}

} // namespace strata
