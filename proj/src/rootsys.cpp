#include "casconn/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace casconn {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::G: return "G";
    }
    return "?";
}

std::string RootSystem::label() const { return series_name(series_) + std::to_string(rank_); }

RootSystem RootSystem::build(const std::string& type_label) {
    if (type_label.size() < 2) throw std::invalid_argument("root system label too short: " + type_label);
    char c = type_label[0];
    int rank = std::stoi(type_label.substr(1));
    Series s;
    switch (c) {
        case 'A': case 'a': s = Series::A; break;
        case 'B': case 'b': s = Series::B; break;
        case 'C': case 'c': s = Series::C; break;
        case 'D': case 'd': s = Series::D; break;
        case 'G': case 'g': s = Series::G; break;
        case 'E': case 'F': case 'e': case 'f':
            throw std::invalid_argument("series " + std::string(1, c) + " is not enabled in this build");
        default:
            throw std::invalid_argument("unknown series letter in label: " + type_label);
    }
    return build(s, rank);
}

RootSystem RootSystem::build(Series series, int rank) {
    switch (series) {
        case Series::A:
            if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
            break;
        case Series::B:
        case Series::C:
            if (rank < 2) throw std::invalid_argument("B_n/C_n require n >= 2");
            break;
        case Series::D:
            if (rank < 4) throw std::invalid_argument("D_n requires n >= 4");
            break;
        case Series::G:
            if (rank != 2) throw std::invalid_argument("G series only has rank 2");
            break;
    }

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    const int n = rank;
    QMat g(n, n);

    // Gram matrices with short roots normalized to squared length 2.
    auto chain = [&](const Rat& diag, const Rat& off) {
        for (int i = 0; i < n; ++i) g(i, i) = diag;
        for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = off;
    };
    switch (series) {
        case Series::A:
            chain(2, -1);
            break;
        case Series::B:  // alpha_n short
            chain(4, -2);
            g(n - 1, n - 1) = 2;
            break;
        case Series::C:  // alpha_n long
            chain(2, -1);
            g(n - 1, n - 1) = 4;
            g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
            break;
        case Series::D:
            chain(2, -1);
            g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
            g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
            break;
        case Series::G:  // Perroud labelling: alpha_1 long, alpha_2 short
            g(0, 0) = 6;
            g(1, 1) = 2;
            g(0, 1) = g(1, 0) = -3;
            break;
    }
    rs.gram_ = g;

    QMat cart(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cart(i, j) = Rat(2) * g(i, j) / g(i, i);
    rs.cartan_ = cart;
    rs.cartan_inv_ = inverse(cart);

    rs.generate_roots();
    return rs;
}

RootSystem build_root_system(Series series, int rank) { return RootSystem::build(series, rank); }

long long RootSystem::cartan_entry(int i, int j) const {
    return cartan_(i, j).template convert_to<long long>();
}

Rat RootSystem::inner_root_coords(const QVec& x, const QVec& y) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (x[i] != 0 && y[j] != 0) s += x[i] * y[j] * gram_(i, j);
    return s;
}

void RootSystem::generate_roots() {
    const int n = rank_;
    std::set<RootVec> known;
    std::vector<RootVec> frontier;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        known.insert(e);
        frontier.push_back(e);
    }
    auto pairing_with_coroot = [&](const RootVec& r, int i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) s += Rat(r[j]) * cartan_(i, j);
        return s.template convert_to<long long>();
    };
    // Height-by-height closure: r + alpha_i is a root iff the alpha_i-string
    // through r extends upward, i.e. p - <r, alpha_i^vee> >= 1.
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < n; ++i) {
                long long pair = pairing_with_coroot(r, i);
                int p = 0;
                RootVec down = r;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
                    if (zero || !known.count(down)) break;
                    ++p;
                }
                if (p - pair >= 1) {
                    RootVec up = r;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    pos_roots_.assign(known.begin(), known.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const RootVec& a, const RootVec& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });

    for (size_t k = 0; k < pos_roots_.size(); ++k) {
        index_[pos_roots_[k]] = static_cast<int>(k);
        int h = 0;
        for (int x : pos_roots_[k]) h += x;
        heights_.push_back(h);
        QVec q(pos_roots_[k].begin(), pos_roots_[k].end());
        norms_.push_back(inner_root_coords(q, q));
    }

    // Coroot coordinates: c_i = 2 (varpi_i, gamma) / (gamma, gamma), always integral.
    // (varpi_i, gamma) = sum_j (A^{-1})_{ji} * ... computed via fundamental pairing below:
    // <varpi_i, gamma^vee> = c_i and <alpha_j, gamma^vee> = 2(alpha_j,gamma)/(gamma,gamma),
    // so c = A^{-T} applied to the vector of root pairings. Equivalent direct route:
    for (size_t k = 0; k < pos_roots_.size(); ++k) {
        const RootVec& r = pos_roots_[k];
        QVec rq(r.begin(), r.end());
        // gamma^vee = 2 gamma / (gamma,gamma); express over alpha_j^vee = 2 alpha_j/(alpha_j,alpha_j):
        // gamma^vee = sum_j c_j alpha_j^vee with c_j = r_j * (alpha_j,alpha_j)/(gamma,gamma).
        std::vector<long long> c(rank_);
        for (int j = 0; j < rank_; ++j) {
            Rat cj = Rat(r[j]) * gram_(j, j) / norms_[k];
            if (boost::multiprecision::denominator(cj) != 1)
                throw std::logic_error("non-integral coroot coordinate");
            c[j] = cj.template convert_to<long long>();
        }
        coroots_.push_back(std::move(c));
    }

    // Sanity: |R+| matches the closed form per type.
    size_t expect = 0;
    switch (series_) {
        case Series::A: expect = static_cast<size_t>(rank_) * (rank_ + 1) / 2; break;
        case Series::B:
        case Series::C: expect = static_cast<size_t>(rank_) * rank_; break;
        case Series::D: expect = static_cast<size_t>(rank_) * (rank_ - 1); break;
        case Series::G: expect = 6; break;
    }
    if (pos_roots_.size() != expect) throw std::logic_error("positive root count mismatch");
}

int RootSystem::pos_root_index(const RootVec& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RootVec& r) const {
    if (index_.count(r)) return true;
    RootVec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    return index_.count(neg) > 0;
}

Rat RootSystem::pairing_fund(const QVec& mu_fund, int k) const {
    Rat s = 0;
    const auto& c = coroots_[k];
    for (int j = 0; j < rank_; ++j)
        if (c[j] != 0) s += Rat(c[j]) * mu_fund[j];
    return s;
}

QVec RootSystem::fund_from_root(const QVec& root_coords) const {
    return cartan_.apply(root_coords);
}

QVec RootSystem::root_from_fund(const QVec& fund_coords) const {
    return cartan_inv_.apply(fund_coords);
}

QVec RootSystem::fund_from_gl(const QVec& gl) const {
    if (series_ != Series::A) throw std::invalid_argument("gl coordinates require type A");
    if (static_cast<int>(gl.size()) != rank_ + 1)
        throw std::invalid_argument("gl coordinate length must be rank+1");
    QVec f(rank_);
    for (int i = 0; i < rank_; ++i) f[i] = gl[i] - gl[i + 1];
    return f;
}

QVec RootSystem::gl_from_fund(const QVec& fund) const {
    if (series_ != Series::A) throw std::invalid_argument("gl coordinates require type A");
    QVec w(rank_ + 1, Rat(0));
    for (int i = rank_ - 1; i >= 0; --i) w[i] = w[i + 1] + fund[i];
    return w;
}

Weight RootSystem::convert(const Weight& w, WeightBasis target) const {
    if (w.basis == target) return w;
    QVec fund;
    switch (w.basis) {
        case WeightBasis::FundamentalWeight: fund = w.coords; break;
        case WeightBasis::SimpleRoot: fund = fund_from_root(w.coords); break;
        case WeightBasis::GlEuclidean: fund = fund_from_gl(w.coords); break;
    }
    Weight out;
    out.basis = target;
    switch (target) {
        case WeightBasis::FundamentalWeight: out.coords = fund; break;
        case WeightBasis::SimpleRoot: out.coords = root_from_fund(fund); break;
        case WeightBasis::GlEuclidean: out.coords = gl_from_fund(fund); break;
    }
    return out;
}

QVec RootSystem::reflect_fund(int i, const QVec& mu) const {
    // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i ; in fundamental coordinates
    // the j-th entry picks up -mu_i * <alpha_i, alpha_j^vee>.
    QVec r = mu;
    const Rat& mi = mu[i];
    if (mi == 0) return r;
    for (int j = 0; j < rank_; ++j) r[j] -= mi * cartan_(j, i);
    return r;
}

std::pair<int, int> RootSystem::reflect_pos_root(int i, int k) const {
    const RootVec& r = pos_roots_[k];
    Rat pair = 0;
    for (int j = 0; j < rank_; ++j)
        if (r[j] != 0) pair += Rat(r[j]) * cartan_(i, j);
    RootVec img = r;
    img[i] -= pair.template convert_to<long long>();
    auto it = index_.find(img);
    if (it != index_.end()) return {it->second, 1};
    RootVec neg(img.size());
    for (size_t t = 0; t < img.size(); ++t) neg[t] = -img[t];
    it = index_.find(neg);
    if (it == index_.end()) throw std::logic_error("reflection left the root system");
    return {it->second, -1};
}

std::vector<QVec> RootSystem::weyl_orbit(const QVec& mu_fund) const {
    std::set<QVec> seen{mu_fund};
    std::vector<QVec> frontier{mu_fund};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rank_; ++i) {
                QVec im = reflect_fund(i, w);
                if (seen.insert(im).second) next.push_back(im);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::set<std::vector<std::string>> RootSystem::weyl_orbit_keys(const QVec& mu_fund) const {
    std::set<std::vector<std::string>> out;
    for (const auto& w : weyl_orbit(mu_fund)) {
        std::vector<std::string> key;
        key.reserve(w.size());
        for (const auto& x : w) key.push_back(to_string(x));
        out.insert(std::move(key));
    }
    return out;
}

BigInt RootSystem::weyl_dimension(const QVec& lambda) const {
    for (const auto& x : lambda) {
        if (x < 0) throw std::invalid_argument("weyl_dimension: weight not dominant");
        if (boost::multiprecision::denominator(x) != 1)
            throw std::invalid_argument("weyl_dimension: weight not integral");
    }
    QVec rho = rho_fund();
    Rat dim = 1;
    for (int k = 0; k < num_pos_roots(); ++k) {
        QVec lr(rank_);
        for (int j = 0; j < rank_; ++j) lr[j] = lambda[j] + rho[j];
        dim *= pairing_fund(lr, k) / pairing_fund(rho, k);
    }
    if (boost::multiprecision::denominator(dim) != 1)
        throw std::logic_error("weyl_dimension: non-integral result");
    return boost::multiprecision::numerator(dim);
}

BigInt RootSystem::kostant_partition(const RootVec& beta) const {
    for (int x : beta)
        if (x < 0) throw std::invalid_argument("kostant_partition: negative coordinate");
    std::map<std::pair<RootVec, int>, BigInt> memo;
    std::function<BigInt(RootVec, int)> count = [&](RootVec b, int k) -> BigInt {
        bool zero = std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
        if (zero) return 1;
        if (k >= num_pos_roots()) return 0;
        auto key = std::make_pair(b, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        RootVec cur = b;
        while (true) {
            total += count(cur, k + 1);
            bool ok = true;
            for (int j = 0; j < rank_; ++j) {
                cur[j] -= pos_roots_[k][j];
                if (cur[j] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo[key] = total;
        return total;
    };
    return count(beta, 0);
}

std::vector<Rank2Subsystem> RootSystem::rank2_subsystems() const {
    std::vector<Rank2Subsystem> out;
    if (rank_ < 2) return out;
    const int m = num_pos_roots();
    std::set<std::vector<int>> seen;
    auto rank_of_triple = [&](int a, int b, int c) {
        QMat t(3, rank_);
        for (int j = 0; j < rank_; ++j) {
            t(0, j) = pos_roots_[a][j];
            t(1, j) = pos_roots_[b][j];
            t(2, j) = pos_roots_[c][j];
        }
        return rank(t);
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            // Skip proportional pairs (cannot happen within R+ of a reduced system).
            std::vector<int> plane;
            for (int c = 0; c < m; ++c) {
                if (c == a || c == b)
                    plane.push_back(c);
                else if (rank_of_triple(a, b, c) == 2)
                    plane.push_back(c);
            }
            if (!seen.insert(plane).second) continue;
            Rank2Subsystem s;
            s.pos_roots = plane;
            switch (plane.size()) {
                case 2: s.type = "A1xA1"; break;
                case 3: s.type = "A2"; break;
                case 4: s.type = "B2"; break;
                case 6: s.type = "G2"; break;
                default: throw std::logic_error("impossible rank-2 subsystem size");
            }
            out.push_back(std::move(s));
        }
    return out;
}

int RootSystem::braid_order(int i, int j) const {
    if (i == j) return 1;
    long long prod = cartan_entry(i, j) * cartan_entry(j, i);
    switch (prod) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
    }
    throw std::logic_error("invalid Cartan product");
}

} // namespace casconn
