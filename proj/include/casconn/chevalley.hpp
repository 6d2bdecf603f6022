#pragma once

#include "casconn/rootsys.hpp"

#include <map>
#include <utility>
#include <vector>

namespace casconn {

// Chevalley structure constants N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}
// for roots a, b, a+b. Signs are fixed by the extraspecial-pair rule over
// the (height, lex) order of R+: for each non-simple positive gamma, the
// pair (alpha, gamma - alpha) with alpha minimal gets N = +(p+1); all other
// constants follow from the standard triangle and four-root identities.
//
// Roots are addressed by signed indices: +(k+1) means pos_root(k), -(k+1)
// its negative.
class ChevalleyData {
public:
    static ChevalleyData build(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }

    // N_{a,b} for signed root indices; requires a+b to be a root.
    long long sc(int sa, int sb) const;

    // Is a+b a root? (signed indices; a+b == 0 does not count)
    bool sum_is_root(int sa, int sb) const;
    int sum_index(int sa, int sb) const;  // signed index of a+b, 0 if not a root

    // For non-simple positive gamma: gamma = alpha_i + delta with (alpha_i, delta)
    // the extraspecial pair; returns (simple index i, positive-root index of delta).
    std::pair<int, int> defining_pair(int k) const;

    // Length of the alpha-string below beta: max{ m : beta - m*alpha is a root }.
    int string_down(int s_alpha, int s_beta) const;

private:
    const RootSystem* rs_ = nullptr;
    std::map<std::pair<int, int>, long long> pos_pairs_;  // key (i<j) by root index, N(gamma_i, gamma_j)
    std::vector<std::pair<int, int>> defining_;

    RootVec signed_vec(int s) const;
    long long pos_pair(int i, int j) const;  // N over positive roots by index, any order
};

} // namespace casconn
