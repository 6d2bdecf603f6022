#pragma once

#include "casconn/linalg.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace casconn {

enum class Series { A, B, C, D, G };

std::string series_name(Series s);

// Coordinates of a root over the simple roots (always integers).
using RootVec = std::vector<int>;

enum class WeightBasis { SimpleRoot, FundamentalWeight, GlEuclidean };

// A weight in one of three coordinate systems. Conversions are exact and
// round-trip; GlEuclidean is only meaningful for type A and is normalized
// to last coordinate zero when produced from fundamental coordinates.
struct Weight {
    QVec coords;
    WeightBasis basis = WeightBasis::FundamentalWeight;
};

struct Rank2Subsystem {
    std::vector<int> pos_roots;  // indices into RootSystem::pos_root, maximal in their plane
    std::string type;            // "A1xA1" | "A2" | "B2" | "G2"
};

// Root datum of a simple Lie algebra. Roots are stored in simple-root
// integer coordinates; the Gram matrix carries the geometry, normalized so
// short roots have squared length 2. For G2 we follow Perroud's labelling
// (alpha_1 long, alpha_2 short), which sections of the classification code
// depend on: varpi_1 is then the adjoint weight and varpi_2 the 7-dim one.
class RootSystem {
public:
    static RootSystem build(Series series, int rank);
    static RootSystem build(const std::string& type_label);  // e.g. "A3", "G2"

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::string label() const;

    const QMat& gram() const { return gram_; }      // (alpha_i, alpha_j)
    const QMat& cartan() const { return cartan_; }  // a_ij = <alpha_j, alpha_i^vee>
    long long cartan_entry(int i, int j) const;

    int num_pos_roots() const { return static_cast<int>(pos_roots_.size()); }
    const RootVec& pos_root(int k) const { return pos_roots_[k]; }
    const std::vector<RootVec>& pos_roots() const { return pos_roots_; }
    int height(int k) const { return heights_[k]; }
    Rat root_norm2(int k) const { return norms_[k]; }

    // Index of a positive root given in simple-root coordinates, -1 if absent.
    int pos_root_index(const RootVec& r) const;
    bool is_root(const RootVec& r) const;  // of either sign

    // Inner product of vectors in simple-root coordinates.
    Rat inner_root_coords(const QVec& x, const QVec& y) const;

    // Coroot of positive root k over the simple coroots (integer entries).
    const std::vector<long long>& coroot(int k) const { return coroots_[k]; }

    // <mu, gamma_k^vee> for mu in fundamental coordinates.
    Rat pairing_fund(const QVec& mu_fund, int k) const;

    // Coordinate conversions.
    QVec fund_from_root(const QVec& root_coords) const;
    QVec root_from_fund(const QVec& fund_coords) const;
    QVec fund_from_gl(const QVec& gl_coords) const;   // type A only
    QVec gl_from_fund(const QVec& fund_coords) const; // type A only, last entry 0
    Weight convert(const Weight& w, WeightBasis target) const;

    // Simple reflection on fundamental coordinates.
    QVec reflect_fund(int i, const QVec& mu_fund) const;

    // Image root index and sign of s_i(pos_root(k)): returns (index, +1/-1).
    std::pair<int, int> reflect_pos_root(int i, int k) const;

    std::set<std::vector<std::string>> weyl_orbit_keys(const QVec& mu_fund) const;
    std::vector<QVec> weyl_orbit(const QVec& mu_fund) const;

    // Weyl dimension formula; lambda dominant integral in fundamental coords.
    BigInt weyl_dimension(const QVec& lambda_fund) const;

    // Kostant partition count of beta (nonnegative simple-root coordinates).
    BigInt kostant_partition(const RootVec& beta) const;

    std::vector<Rank2Subsystem> rank2_subsystems() const;

    // Order m_ij of s_i s_j in W.
    int braid_order(int i, int j) const;

    QVec rho_fund() const { return QVec(rank_, Rat(1)); }

private:
    Series series_;
    int rank_;
    QMat gram_, cartan_, cartan_inv_;
    std::vector<RootVec> pos_roots_;
    std::vector<int> heights_;
    std::vector<Rat> norms_;
    std::vector<std::vector<long long>> coroots_;
    std::map<RootVec, int> index_;

    void generate_roots();
};

RootSystem build_root_system(Series series, int rank);

} // namespace casconn
