#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "centra/factor.hpp"
#include "centra/linalg.hpp"
#include "centra/subspace.hpp"

namespace centra {

// Dimension sequence d_j = dim ker(pi^j(T)), j = 0..s, truncated at the
// first stabilized value. Stays in Q throughout: pi^j(T) = pi(T)^j.
struct KernelFiltration {
    ZPoly factor;
    std::vector<int> dims;  // dims[0] = 0, strictly increasing, last = stable value

    int stabilization_index() const { return int(dims.size()) - 1; }
    int dim_at(int j) const {
        if (j < 0) return 0;
        return j < int(dims.size()) ? dims[j] : dims.back();
    }
    // Number of blocks of size exactly j per root: second difference / deg.
    int blocks_of_size(int j) const {
        int second = (dim_at(j) - dim_at(j - 1)) - (dim_at(j + 1) - dim_at(j));
        return second / factor.degree();
    }
};

inline KernelFiltration kernel_filtration(const QMatrix& t, const ZPoly& pi) {
    t.require_square();
    if (pi.degree() < 1) throw std::invalid_argument("factor must be non-constant");
    KernelFiltration kf;
    kf.factor = pi;
    kf.dims = {0};
    QMatrix base = pi.eval(t);
    QMatrix power = QMatrix::identity(t.rows());
    while (true) {
        power = power * base;
        int d = kernel_basis(power).dim();
        if (d == kf.dims.back()) break;
        if (d < kf.dims.back()) throw std::logic_error("kernel filtration decreased");
        kf.dims.push_back(d);
        if (d == t.rows()) break;
    }
    if (kf.dims.size() == 1)
        throw std::invalid_argument("polynomial is not a factor of the characteristic polynomial");
    // Divisibility by deg(pi) and concavity of increments are structural for
    // irreducible factors; enforce them.
    int prev_inc = -1;
    for (std::size_t j = 1; j < kf.dims.size(); ++j) {
        int inc = kf.dims[j] - kf.dims[j - 1];
        if (kf.dims[j] % pi.degree() != 0) throw std::logic_error("filtration not divisible by deg");
        if (prev_inc >= 0 && inc > prev_inc) throw std::logic_error("filtration increments grew");
        prev_inc = inc;
    }
    return kf;
}

// Per irreducible factor of chi_T: block sizes per root, recovered from the
// kernel filtration without leaving Q.
struct FactorProfile {
    ZPoly factor;
    int multiplicity = 0;  // multiplicity of the factor in chi
    KernelFiltration filtration;
    std::vector<int> block_counts;  // block_counts[j-1] = #blocks of size j per root

    std::vector<int> block_sizes_desc() const {
        std::vector<int> sizes;
        for (int j = int(block_counts.size()); j >= 1; --j)
            for (int k = 0; k < block_counts[j - 1]; ++k) sizes.push_back(j);
        return sizes;
    }
    int total_blocks() const {
        int n = 0;
        for (int b : block_counts) n += b;
        return n;
    }
};

struct BlockProfile {
    int n = 0;
    std::vector<FactorProfile> factors;
};

inline BlockProfile block_profile(const QMatrix& t) {
    t.require_square();
    if (det(t).is_zero()) throw std::invalid_argument("matrix must be invertible");
    BlockProfile bp;
    bp.n = t.rows();
    Factorization chi = factor_z(char_poly(t).prim);
    int total = 0;
    for (const auto& [pi, mult] : chi.factors) {
        FactorProfile fp;
        fp.factor = pi;
        fp.multiplicity = mult;
        fp.filtration = kernel_filtration(t, pi);
        int s = fp.filtration.stabilization_index();
        for (int j = 1; j <= s; ++j) {
            int b = fp.filtration.blocks_of_size(j);
            if (b < 0) throw std::logic_error("negative block count");
            fp.block_counts.push_back(b);
        }
        for (int j = 1; j <= s; ++j) total += pi.degree() * j * fp.block_counts[j - 1];
        bp.factors.push_back(std::move(fp));
    }
    if (total != bp.n) throw std::logic_error("block profile does not account for the full space");
    return bp;
}

// The trichotomy: abelian iff chi = mu; contains a non-abelian free subgroup
// iff some factor has two blocks of the same size per root (second
// difference of the filtration at least 2 deg); polycyclic otherwise.
struct TitsClass {
    enum class Tag { Abelian, ContainsFree, Polycyclic };
    struct Evidence {
        enum class Kind { ChiEqualsMu, RepeatedBlockSize, DistinctBlockSizes };
        Kind kind = Kind::ChiEqualsMu;
        ZPoly factor;            // for the two non-abelian kinds
        int j = 0;               // the size witnessing b_j >= 2
        std::vector<int> sizes;  // distinct sizes, descending, for polycyclic
    };
    Tag tag = Tag::Abelian;
    Evidence evidence;
    BlockProfile profile;  // empty for the abelian fast path

    std::string tag_name() const {
        switch (tag) {
            case Tag::Abelian: return "abelian";
            case Tag::ContainsFree: return "contains-free";
            default: return "polycyclic";
        }
    }
};

inline TitsClass classify(const QMatrix& t) {
    t.require_square();
    if (det(t).is_zero()) throw std::invalid_argument("matrix must be invertible");
    TitsClass result;
    ZPolyScaled chi = char_poly(t);
    ZPolyScaled mu = min_poly(t);
    if (chi.prim == mu.prim) {
        result.tag = TitsClass::Tag::Abelian;
        result.evidence.kind = TitsClass::Evidence::Kind::ChiEqualsMu;
        return result;
    }
    result.profile = block_profile(t);
    for (const FactorProfile& fp : result.profile.factors) {
        for (int j = 1; j <= int(fp.block_counts.size()); ++j) {
            if (fp.block_counts[j - 1] >= 2) {
                result.tag = TitsClass::Tag::ContainsFree;
                result.evidence.kind = TitsClass::Evidence::Kind::RepeatedBlockSize;
                result.evidence.factor = fp.factor;
                result.evidence.j = j;
                return result;
            }
        }
    }
    for (const FactorProfile& fp : result.profile.factors) {
        if (fp.total_blocks() >= 2) {
            result.tag = TitsClass::Tag::Polycyclic;
            result.evidence.kind = TitsClass::Evidence::Kind::DistinctBlockSizes;
            result.evidence.factor = fp.factor;
            result.evidence.sizes = fp.block_sizes_desc();
            return result;
        }
    }
    throw std::logic_error("chi != mu but every factor has a single block");
}

// Generalized eigenspace decomposition: one component per irreducible factor.
struct PrimaryComponent {
    ZPoly factor;
    int multiplicity = 0;
    Subspace subspace;       // ker(pi^mult(T))
    QMatrix restriction;     // matrix of T on the component in its basis

    PrimaryComponent() : subspace(0) {}
};

inline std::vector<PrimaryComponent> primary_components(const QMatrix& t) {
    t.require_square();
    if (det(t).is_zero()) throw std::invalid_argument("matrix must be invertible");
    Factorization chi = factor_z(char_poly(t).prim);
    std::vector<PrimaryComponent> comps;
    int total = 0;
    for (const auto& [pi, mult] : chi.factors) {
        PrimaryComponent pc;
        pc.factor = pi;
        pc.multiplicity = mult;
        pc.subspace = kernel_basis(pi.eval(t).pow(mult));
        auto r = solve(pc.subspace.basis(), t * pc.subspace.basis());
        if (!r) throw std::logic_error("component is not T-invariant");
        pc.restriction = *r;
        total += pc.subspace.dim();
        comps.push_back(std::move(pc));
    }
    if (total != t.rows()) throw std::logic_error("components do not fill the space");
    return comps;
}

}  // namespace centra
