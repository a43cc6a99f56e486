#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "centra/profile.hpp"
#include "testutil.hpp"

using namespace centra;
using testutil::companion;
using testutil::qm;
using testutil::zp;

namespace {

// Planted profile: for each irreducible factor, a list of block sizes. The
// block for (pi, size j) is the companion matrix of pi^j, whose filtration
// for pi grows by deg(pi) for exactly j steps.
struct Planted {
    std::vector<std::pair<ZPoly, std::vector<int>>> blocks;

    QMatrix build(std::mt19937_64* rng = nullptr) const {
        std::vector<QMatrix> diag;
        for (const auto& [pi, sizes] : blocks)
            for (int s : sizes) {
                ZPoly power = ZPoly::constant(1);
                for (int i = 0; i < s; ++i) power = power * pi;
                diag.push_back(companion(power));
            }
        QMatrix j = block_diag(diag);
        if (!rng) return j;
        QMatrix v = testutil::random_unimodular(*rng, j.rows());
        return v * j * inverse(v);
    }

    TitsClass::Tag expected_class() const {
        bool repeated = false, multiple = false;
        for (const auto& [pi, sizes] : blocks) {
            std::map<int, int> count;
            for (int s : sizes) ++count[s];
            if (sizes.size() >= 2) multiple = true;
            for (const auto& [s, c] : count)
                if (c >= 2) repeated = true;
        }
        if (repeated) return TitsClass::Tag::ContainsFree;
        return multiple ? TitsClass::Tag::Polycyclic : TitsClass::Tag::Abelian;
    }
};

}  // namespace

TEST_CASE("kernel filtration worked examples") {
    QMatrix t = block_diag({jordan_block(Rat(1), 2), jordan_block(Rat(1), 1)});
    KernelFiltration kf = kernel_filtration(t, zp({-1, 1}));
    CHECK(kf.dims == std::vector<int>{0, 2, 3});
    CHECK(kf.stabilization_index() == 2);

    kf = kernel_filtration(QMatrix::identity(2), zp({-1, 1}));
    CHECK(kf.dims == std::vector<int>{0, 2});

    QMatrix two_rot = block_diag({companion(zp({1, 0, 1})), companion(zp({1, 0, 1}))});
    kf = kernel_filtration(two_rot, zp({1, 0, 1}));
    CHECK(kf.dims == std::vector<int>{0, 4});
    CHECK(kf.blocks_of_size(1) == 2);  // two size-1 blocks per root

    CHECK_THROWS_AS(kernel_filtration(QMatrix::identity(2), zp({-2, 1})),
                    std::invalid_argument);
}

TEST_CASE("filtration stabilizes at the multiplicity in the minimal polynomial") {
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 25; ++iter) {
        Planted plan;
        int s1 = 1 + int(rng() % 3), s2 = 1 + int(rng() % 2);
        plan.blocks = {{zp({-1, 1}), {s1, s2}}};
        QMatrix t = plan.build(&rng);
        KernelFiltration kf = kernel_filtration(t, zp({-1, 1}));
        Factorization mu = factor_z(min_poly(t).prim);
        int mult_in_mu = 0;
        for (const auto& [f, m] : mu.factors)
            if (f == zp({-1, 1})) mult_in_mu = m;
        CHECK(kf.stabilization_index() == mult_in_mu);
    }
}

TEST_CASE("block profile worked examples") {
    BlockProfile bp = block_profile(QMatrix::identity(3));
    REQUIRE(bp.factors.size() == 1);
    CHECK(bp.factors[0].factor == zp({-1, 1}));
    CHECK(bp.factors[0].block_sizes_desc() == std::vector<int>{1, 1, 1});

    QMatrix t = block_diag({jordan_block(Rat(1), 2), jordan_block(Rat(1), 1)});
    bp = block_profile(t);
    REQUIRE(bp.factors.size() == 1);
    CHECK(bp.factors[0].block_sizes_desc() == std::vector<int>{2, 1});

    bp = block_profile(companion(zp({1, 0, 1})));
    REQUIRE(bp.factors.size() == 1);
    CHECK(bp.factors[0].factor == zp({1, 0, 1}));
    CHECK(bp.factors[0].block_sizes_desc() == std::vector<int>{1});
}

TEST_CASE("classify worked examples") {
    CHECK(classify(QMatrix::identity(2)).tag == TitsClass::Tag::ContainsFree);
    TitsClass abelian = classify(companion(zp({-2, 0, 0, 1})));
    CHECK(abelian.tag == TitsClass::Tag::Abelian);
    CHECK(abelian.evidence.kind == TitsClass::Evidence::Kind::ChiEqualsMu);

    QMatrix t = block_diag({jordan_block(Rat(2), 2), jordan_block(Rat(2), 1)});
    TitsClass poly = classify(t);
    CHECK(poly.tag == TitsClass::Tag::Polycyclic);
    CHECK(poly.evidence.sizes == std::vector<int>{2, 1});

    CHECK_THROWS_AS(classify(QMatrix::zero(2, 2)), std::invalid_argument);
}

TEST_CASE("classify agrees with chi = mu in both directions") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + int(rng() % 4);
        QMatrix t = testutil::random_matrix(rng, n, n, -3, 3);
        if (det(t).is_zero()) continue;
        bool chimu = char_poly(t).prim == min_poly(t).prim;
        CHECK((classify(t).tag == TitsClass::Tag::Abelian) == chimu);
    }
}

TEST_CASE("planted profiles are recovered exactly") {
    std::mt19937_64 rng(2025);
    std::vector<ZPoly> pool = {zp({-1, 1}), zp({-2, 1}), zp({1, 1}), zp({1, 0, 1}),
                               zp({-1, -1, 1})};
    for (int iter = 0; iter < 60; ++iter) {
        Planted plan;
        int nfac = 1 + int(rng() % 2);
        std::vector<int> chosen;
        int total = 0;
        for (int f = 0; f < nfac; ++f) {
            int pick;
            do pick = int(rng() % pool.size());
            while (std::find(chosen.begin(), chosen.end(), pick) != chosen.end());
            chosen.push_back(pick);
            const ZPoly& pi = pool[pick];
            std::vector<int> sizes;
            int blocks = 1 + int(rng() % 2);
            for (int b = 0; b < blocks && total + pi.degree() <= 6; ++b) {
                int s = 1 + int(rng() % 2);
                while (total + s * pi.degree() > 6 && s > 1) --s;
                if (total + s * pi.degree() > 6) break;
                sizes.push_back(s);
                total += s * pi.degree();
            }
            if (!sizes.empty()) plan.blocks.emplace_back(pi, sizes);
        }
        if (plan.blocks.empty()) continue;
        QMatrix t = plan.build(&rng);
        BlockProfile bp = block_profile(t);
        REQUIRE(bp.factors.size() == plan.blocks.size());
        for (const auto& [pi, sizes] : plan.blocks) {
            bool found = false;
            for (const FactorProfile& fp : bp.factors) {
                if (fp.factor != pi) continue;
                found = true;
                std::vector<int> want = sizes;
                std::sort(want.rbegin(), want.rend());
                CHECK(fp.block_sizes_desc() == want);
            }
            CHECK(found);
        }
        CHECK(classify(t).tag == plan.expected_class());
    }
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + int(rng() % 3);
        QMatrix t = testutil::random_matrix(rng, n, n, -3, 3);
        if (det(t).is_zero()) continue;
        QMatrix v = testutil::random_unimodular(rng, n);
        CHECK(classify(v * t * inverse(v)).tag == classify(t).tag);
    }
}

TEST_CASE("filtration concavity and divisibility on random inputs") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + int(rng() % 4);
        QMatrix t = testutil::random_matrix(rng, n, n, -3, 3);
        if (det(t).is_zero()) continue;
        Factorization chi = factor_z(char_poly(t).prim);
        for (const auto& [pi, mult] : chi.factors) {
            KernelFiltration kf = kernel_filtration(t, pi);
            int prev_inc = -1;
            for (std::size_t j = 1; j < kf.dims.size(); ++j) {
                int inc = kf.dims[j] - kf.dims[j - 1];
                CHECK(kf.dims[j] % pi.degree() == 0);
                CHECK(inc > 0);
                if (prev_inc >= 0) CHECK(inc <= prev_inc);
                prev_inc = inc;
            }
        }
    }
}

TEST_CASE("primary components") {
    QMatrix diag12 = qm({{1, 0}, {0, 2}});
    auto comps = primary_components(diag12);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].subspace.dim() == 1);
    CHECK(comps[1].subspace.dim() == 1);

    QMatrix t = block_diag({jordan_block(Rat(1), 2), jordan_block(Rat(3), 1)});
    comps = primary_components(t);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        if (c.factor == zp({-1, 1})) CHECK(c.subspace.dim() == 2);
        else {
            CHECK(c.factor == zp({-3, 1}));
            CHECK(c.subspace.dim() == 1);
        }
    }

    QMatrix mixed = block_diag({companion(zp({1, 0, 1})), jordan_block(Rat(5), 1)});
    comps = primary_components(mixed);
    REQUIRE(comps.size() == 2);
    // canonical factor order puts x-5 before x^2+1 (degree then coefficients)
    std::vector<int> dims = {comps[0].subspace.dim(), comps[1].subspace.dim()};
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 2});
}

TEST_CASE("primary components fill the space and meet trivially") {
    std::mt19937_64 rng(60);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + int(rng() % 4);
        QMatrix t = testutil::random_matrix(rng, n, n, -3, 3);
        if (det(t).is_zero()) continue;
        auto comps = primary_components(t);
        int total = 0;
        for (const auto& c : comps) {
            total += c.subspace.dim();
            // restriction matches T on the component
            CHECK(c.subspace.basis() * c.restriction == t * c.subspace.basis());
            ZPolyScaled chi_r = char_poly(c.restriction);
            Factorization f = factor_z(chi_r.prim);
            REQUIRE(f.factors.size() == 1);
            CHECK(f.factors[0].first == c.factor);
        }
        CHECK(total == n);
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                CHECK(intersect(comps[a].subspace, comps[b].subspace).dim() == 0);
    }
}
