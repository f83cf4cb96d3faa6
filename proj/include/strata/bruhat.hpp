#ifndef STRATA_BRUHAT_HPP
#define STRATA_BRUHAT_HPP

#include <strata/permutation.hpp>

#include <map>
#include <utility>
#include <vector>

namespace strata {

// u <= w in Bruhat order on S_m
bool bruhat_leq(const Permutation& u, const Permutation& w);

struct DiagramData {
    std::vector<std::pair<int, int>> diagram;   // Rothe diagram boxes, row major
    std::vector<std::pair<int, int>> essential; // southeast corners of the diagram
};
DiagramData diagram_and_essential(const Permutation& w);

// The biGrassmannian permutation in S_m whose unique essential box is
// (i, j) with northwest rank r there: 1..r, then j+1..j+(i-r), then the
// rest ascending.  Requires max(0, i+j-m) <= r < min(i, j).
Permutation bigrassmannian(int i, int j, int r, int m);

std::vector<Permutation> all_bigrassmannians(int m);

// maximal biGrassmannian permutations below w: one per essential box
std::vector<Permutation> max_bigrassmannians_below(const Permutation& w);

std::vector<Permutation> lower_covers(const Permutation& w);
std::vector<Permutation> upper_covers(const Permutation& w);

class BruhatPoset {
public:
    std::vector<Permutation> elements;       // sorted by length, then one line
    std::vector<std::pair<int, int>> covers; // index pairs (lower, upper)

    int index_of(const Permutation& w) const; // -1 when absent
    void rebuild_index();

private:
    std::map<std::vector<int>, int> index_;
};

// every permutation below at least one generator, with covering relations
BruhatPoset order_ideal(const std::vector<Permutation>& generators);

} // namespace strata

#endif
