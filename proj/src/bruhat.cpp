#include <strata/bruhat.hpp>

#include <algorithm>
#include <stdexcept>

namespace strata {

DiagramData diagram_and_essential(const Permutation& w) {
    int m = w.size();
    Permutation winv = w.inverse();
    DiagramData d;
    std::vector<std::vector<char>> in(m + 2, std::vector<char>(m + 2, 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (j < w(i) && winv(j) > i) {
                d.diagram.push_back({i, j});
                in[i][j] = 1;
            }
    for (auto [i, j] : d.diagram)
        if (!in[i + 1][j] && !in[i][j + 1]) d.essential.push_back({i, j});
    return d;
}

/*
 * u <= w holds iff the northwest one counts satisfy r_u >= r_w everywhere
 * (the identity has the largest table).  Viewing that as "P_w obeys the
 * lower bounds of u's table", the conditions at the essential boxes of u
 * imply all the others, so only those get compared.  Note it is the lower
 * element's essential set that matters here.
 */
bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size())
        throw std::invalid_argument("bruhat_leq: size mismatch");
    DiagramData dd = diagram_and_essential(u);
    if (dd.essential.empty()) return true; // empty diagram: u is the identity
    RankTable ru = perm_rank_table(u), rw = perm_rank_table(w);
    for (auto [i, j] : dd.essential)
        if (ru.at(i, j) < rw.at(i, j)) return false;
    return true;
}

Permutation bigrassmannian(int i, int j, int r, int m) {
    if (!(std::max(0, i + j - m) <= r && r < std::min(i, j)))
        throw std::invalid_argument("bigrassmannian: parameters out of range");
    std::vector<int> w;
    for (int v = 1; v <= r; ++v) w.push_back(v);
    for (int v = j + 1; v <= j + (i - r); ++v) w.push_back(v);
    std::vector<char> used(m + 1, 0);
    for (int v : w) used[v] = 1;
    for (int v = 1; v <= m; ++v)
        if (!used[v]) w.push_back(v);
    return Permutation(w);
}

std::vector<Permutation> all_bigrassmannians(int m) {
    std::vector<Permutation> out;
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j)
            for (int r = std::max(0, i + j - m); r < std::min(i, j); ++r)
                out.push_back(bigrassmannian(i, j, r, m));
    return out;
}

std::vector<Permutation> max_bigrassmannians_below(const Permutation& w) {
    DiagramData dd = diagram_and_essential(w);
    RankTable r = perm_rank_table(w);
    std::vector<Permutation> out;
    for (auto [i, j] : dd.essential)
        out.push_back(bigrassmannian(i, j, r.at(i, j), w.size()));
    return out;
}

/*
 * Covering moves: swapping the entries of w at positions a < b with
 * w(a) > w(b) drops the length by exactly one iff no position strictly
 * between them holds a value strictly between w(b) and w(a).
 */
std::vector<Permutation> lower_covers(const Permutation& w) {
    int m = w.size();
    std::vector<Permutation> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (w(a) <= w(b)) continue;
            bool blocked = false;
            for (int k = a + 1; k < b && !blocked; ++k)
                if (w(b) < w(k) && w(k) < w(a)) blocked = true;
            if (blocked) continue;
            std::vector<int> v = w.oneline();
            std::swap(v[a - 1], v[b - 1]);
            out.push_back(Permutation(v));
        }
    return out;
}

std::vector<Permutation> upper_covers(const Permutation& w) {
    int m = w.size();
    std::vector<Permutation> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (w(a) >= w(b)) continue;
            bool blocked = false;
            for (int k = a + 1; k < b && !blocked; ++k)
                if (w(a) < w(k) && w(k) < w(b)) blocked = true;
            if (blocked) continue;
            std::vector<int> v = w.oneline();
            std::swap(v[a - 1], v[b - 1]);
            out.push_back(Permutation(v));
        }
    return out;
}

int BruhatPoset::index_of(const Permutation& w) const {
    auto it = index_.find(w.oneline());
    return it == index_.end() ? -1 : it->second;
}

void BruhatPoset::rebuild_index() {
    index_.clear();
    for (size_t k = 0; k < elements.size(); ++k)
        index_[elements[k].oneline()] = static_cast<int>(k);
}

BruhatPoset order_ideal(const std::vector<Permutation>& generators) {
    if (generators.empty())
        throw std::invalid_argument("order_ideal: no generators");
    int m = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != m)
            throw std::invalid_argument("order_ideal: generator size mismatch");

    // precompute generator tables so the sweep over S_m stays cheap; the
    // binding boxes are the candidate's own essential set
    std::vector<RankTable> grt;
    for (const auto& g : generators) grt.push_back(perm_rank_table(g));

    BruhatPoset p;
    for (const auto& w : all_permutations(m)) {
        RankTable rw = perm_rank_table(w);
        DiagramData dd = diagram_and_essential(w);
        for (size_t t = 0; t < generators.size(); ++t) {
            bool below = true;
            for (auto [i, j] : dd.essential)
                if (rw.at(i, j) < grt[t].at(i, j)) {
                    below = false;
                    break;
                }
            if (below) {
                p.elements.push_back(w);
                break;
            }
        }
    }
    std::sort(p.elements.begin(), p.elements.end(),
              [](const Permutation& a, const Permutation& b) {
                  int la = a.length(), lb = b.length();
                  if (la != lb) return la < lb;
                  return a < b;
              });
    p.rebuild_index();
    for (size_t t = 0; t < p.elements.size(); ++t)
        for (const auto& u : lower_covers(p.elements[t])) {
            int s = p.index_of(u);
            if (s < 0)
                throw std::runtime_error("order_ideal: ideal not downward closed");
            p.covers.push_back({s, static_cast<int>(t)});
        }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

} // namespace strata
