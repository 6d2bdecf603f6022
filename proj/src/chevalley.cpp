#include "casconn/chevalley.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace casconn {

namespace {

RootVec add(const RootVec& a, const RootVec& b, int sign_b) {
    RootVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + sign_b * b[i];
    return c;
}

bool all_zero(const RootVec& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

RootVec ChevalleyData::signed_vec(int s) const {
    RootVec v = rs_->pos_root(std::abs(s) - 1);
    if (s < 0)
        for (auto& x : v) x = -x;
    return v;
}

int ChevalleyData::sum_index(int sa, int sb) const {
    RootVec v = add(signed_vec(sa), signed_vec(sb), 1);
    if (all_zero(v)) return 0;
    int k = rs_->pos_root_index(v);
    if (k >= 0) return k + 1;
    for (auto& x : v) x = -x;
    k = rs_->pos_root_index(v);
    return k >= 0 ? -(k + 1) : 0;
}

bool ChevalleyData::sum_is_root(int sa, int sb) const { return sum_index(sa, sb) != 0; }

int ChevalleyData::string_down(int s_alpha, int s_beta) const {
    RootVec alpha = signed_vec(s_alpha);
    RootVec cur = signed_vec(s_beta);
    int p = 0;
    while (true) {
        cur = add(cur, alpha, -1);
        if (all_zero(cur) || !rs_->is_root(cur)) break;
        ++p;
    }
    return p;
}

std::pair<int, int> ChevalleyData::defining_pair(int k) const {
    if (defining_[k].first < 0) throw std::invalid_argument("defining_pair: root is simple");
    return defining_[k];
}

ChevalleyData ChevalleyData::build(const RootSystem& rs) {
    ChevalleyData cd;
    cd.rs_ = &rs;
    const int m = rs.num_pos_roots();
    cd.defining_.assign(m, {-1, -1});

    // norm2 of an arbitrary root vector
    auto norm2 = [&](const RootVec& v) {
        QVec q(v.begin(), v.end());
        return rs.inner_root_coords(q, q);
    };

    // Mixed-sign constants reduced to the positive table (which is filled in
    // increasing height of the sum, so lookups stay within computed range).
    // N(u, -v) with u, v positive root indices and u - v a root:
    //   d = u - v in R+ : N(u,-v) =  (d,d)/(u,u) * N(d, v)
    //   d = v - u in R+ : N(u,-v) = -(d,d)/(v,v) * N(u, d)
    std::function<Rat(int, int)> n_pos_neg = [&](int u, int v) -> Rat {
        RootVec d = add(rs.pos_root(u), rs.pos_root(v), -1);
        int kd = rs.pos_root_index(d);
        if (kd >= 0)
            return norm2(d) / rs.root_norm2(u) * Rat(cd.pos_pair(kd, v));
        for (auto& x : d) x = -x;
        kd = rs.pos_root_index(d);
        if (kd < 0) throw std::logic_error("n_pos_neg: difference is not a root");
        return -norm2(d) / rs.root_norm2(v) * Rat(cd.pos_pair(u, kd));
    };

    // Fill positive special pairs, height by height.
    for (int k = 0; k < m; ++k) {
        if (rs.height(k) == 1) continue;
        const RootVec& gamma = rs.pos_root(k);
        // Extraspecial pair: minimal alpha in (height, lex) order with gamma - alpha in R+.
        int a_idx = -1, b_idx = -1;
        for (int a = 0; a < m; ++a) {
            RootVec d = add(gamma, rs.pos_root(a), -1);
            int b = rs.pos_root_index(d);
            if (b >= 0) {
                a_idx = a;
                b_idx = b;
                break;
            }
        }
        if (a_idx < 0) throw std::logic_error("no extraspecial pair found");
        // Minimal roots of height 1 are simple, so a_idx names a simple root.
        int simple_i = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (rs.pos_root(a_idx)[j] == 1 && rs.height(a_idx) == 1) { simple_i = j; break; }
        cd.defining_[k] = {simple_i, b_idx};

        int p = cd.string_down(a_idx + 1, b_idx + 1);
        cd.pos_pairs_[{std::min(a_idx, b_idx), std::max(a_idx, b_idx)}] =
            (a_idx < b_idx ? p + 1 : -(p + 1));

        // Remaining special pairs (xi, eta) with xi + eta = gamma via the
        // four-root identity on (alpha, beta, -xi, -eta):
        //   N(a,b)N(-x,-y)/(g,g) + N(b,-x)N(a,-y)/(b-x,b-x) + N(-x,a)N(b,-y)/(a-x,a-x) = 0
        Rat ng = rs.root_norm2(k);
        for (int x = 0; x < m; ++x) {
            if (x == a_idx) continue;
            RootVec d = add(gamma, rs.pos_root(x), -1);
            int y = rs.pos_root_index(d);
            if (y < 0 || y < x) continue;  // handle each unordered pair once, x <= y
            if (x == b_idx) continue;      // same unordered pair as extraspecial
            Rat t2 = 0, t3 = 0;
            RootVec bx = add(rs.pos_root(b_idx), rs.pos_root(x), -1);
            if (rs.is_root(bx))
                t2 = n_pos_neg(b_idx, x) * n_pos_neg(a_idx, y) / norm2(bx);
            RootVec ax = add(rs.pos_root(a_idx), rs.pos_root(x), -1);
            if (rs.is_root(ax))
                t3 = -n_pos_neg(x, a_idx) * n_pos_neg(b_idx, y) / norm2(ax);
            // term1 = N(a,b) * (-N(x,y)) / (g,g); solve for N(x,y):
            Rat nab = Rat(cd.pos_pair(a_idx, b_idx));
            Rat nxy = ng * (t2 + t3) / nab;
            if (boost::multiprecision::denominator(nxy) != 1)
                throw std::logic_error("non-integral structure constant");
            long long val = nxy.template convert_to<long long>();
            int ps = cd.string_down(x + 1, y + 1);
            if (std::abs(val) != ps + 1)
                throw std::logic_error("structure constant fails |N| = p+1");
            cd.pos_pairs_[{std::min(x, y), std::max(x, y)}] = (x < y ? val : -val);
        }
    }
    return cd;
}

long long ChevalleyData::pos_pair(int i, int j) const {
    auto it = pos_pairs_.find({std::min(i, j), std::max(i, j)});
    if (it == pos_pairs_.end()) throw std::logic_error("unknown positive pair");
    return i < j ? it->second : -it->second;
}

long long ChevalleyData::sc(int sa, int sb) const {
    if (sum_index(sa, sb) == 0) throw std::invalid_argument("sc: sum is not a root");
    if (sa > 0 && sb > 0) return pos_pair(sa - 1, sb - 1);
    if (sa < 0 && sb < 0) return -pos_pair(-sa - 1, -sb - 1);
    // Mixed signs: reduce via the triangle identity, mirroring build().
    auto norm2 = [&](const RootVec& v) {
        QVec q(v.begin(), v.end());
        return rs_->inner_root_coords(q, q);
    };
    auto mixed = [&](int u, int v) -> Rat {  // N(gamma_u, -gamma_v)
        RootVec d = add(rs_->pos_root(u), rs_->pos_root(v), -1);
        int kd = rs_->pos_root_index(d);
        if (kd >= 0) return norm2(d) / rs_->root_norm2(u) * Rat(pos_pair(kd, v));
        for (auto& x : d) x = -x;
        kd = rs_->pos_root_index(d);
        return -norm2(d) / rs_->root_norm2(v) * Rat(pos_pair(u, kd));
    };
    Rat r = (sa > 0) ? mixed(sa - 1, -sb - 1) : -mixed(sb - 1, -sa - 1);
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error("non-integral mixed structure constant");
    return r.template convert_to<long long>();
}

} // namespace casconn
