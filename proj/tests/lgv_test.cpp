#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hankel_lab/lgv.hpp"

namespace hankel_lab {
namespace {

const Poly kL = Poly::one_plus_t();

Budget default_budget() { return Budget{}; }

std::vector<std::string> words(const std::vector<SchroederPath>& family) {
    std::vector<std::string> out;
    for (const auto& p : family) out.push_back(p.to_string());
    return out;
}

bool has_family(const PathFamilyModel& m, const std::vector<std::string>& wanted) {
    bool found = false;
    for_each_family(m, default_budget(), [&](const std::vector<SchroederPath>& fam) {
        if (words(fam) == wanted) found = true;
    });
    return found;
}

TEST(EnumerateFamilies, SmallModels) {
    EXPECT_EQ(enumerate_families({Model::Pi, 1, 1, std::nullopt}, default_budget()), kL);
    EXPECT_EQ(enumerate_families({Model::Pi, 0, 1, std::nullopt}, default_budget()), (Poly{1}));
    EXPECT_EQ(enumerate_families({Model::PiStar, 1, 1, 1}, default_budget()), kL);
    EXPECT_EQ(enumerate_families({Model::Pi, 0, 0, std::nullopt}, default_budget()), (Poly{1}));
}

TEST(EnumerateFamilies, PictureFamiliesExist) {
    // innermost path first
    EXPECT_TRUE(has_family({Model::Pi, 1, 3, std::nullopt}, {"L", "UUDLD", "UUULLDDD"}));
    EXPECT_TRUE(has_family({Model::Pi, 0, 3, std::nullopt}, {"", "ULD", "UUUDLDD"}));
    EXPECT_TRUE(has_family({Model::Pi, 1, 3, 2}, {"L", "UUDLD", "UUULLLDDD"}));
    EXPECT_TRUE(has_family({Model::PiStar, 1, 3, 2}, {"L", "UUDLD", "UUULLLDDD"}));
    // touches the forbidden point (5,0)
    EXPECT_FALSE(has_family({Model::PiStar, 1, 3, 2}, {"L", "UUDLD", "UUULLDDDUD"}));
    EXPECT_TRUE(has_family({Model::Pi, 1, 3, 2}, {"L", "UUDLD", "UUULLDDDUD"}));
    // these two share the vertex (0,1)
    EXPECT_FALSE(has_family({Model::Pi, 0, 2, std::nullopt}, {"", "ULD"}) &&
                 has_family({Model::Pi, 0, 2, std::nullopt}, {"", "UDUD"}));
}

TEST(EnumerateFamilies, WeightOfPictureFamilies) {
    bool saw_t4 = false;
    for_each_family({Model::Pi, 1, 3, std::nullopt}, default_budget(), [&](const std::vector<SchroederPath>& fam) {
        std::size_t levels = 0;
        for (const auto& p : fam) levels += p.level_steps();
        if (levels == 4) saw_t4 = true;
    });
    EXPECT_TRUE(saw_t4);
    EXPECT_GT(enumerate_families({Model::Pi, 1, 3, std::nullopt}, default_budget()).coeff(4), 0);
    EXPECT_GT(enumerate_families({Model::PiStar, 1, 3, 2}, default_budget()).coeff(5), 0);
}

TEST(EnumerateFamilies, FamiliesAreValidAndDisjoint) {
    for (auto model : {Model::Pi, Model::Omega})
        for (int k = 0; k <= 1; ++k)
            for (int n = 1; n <= 3; ++n)
                for (int i = -1; i <= n; ++i) {
                    const PathFamilyModel m{model, k, n, i < 0 ? std::nullopt : std::optional<int>(i)};
                    const auto ends = endpoints(m);
                    std::size_t count = 0;
                    for_each_family(m, default_budget(), [&](const std::vector<SchroederPath>& fam) {
                        ++count;
                        std::set<LatticePoint> seen;
                        for (std::size_t j = 0; j < fam.size(); ++j) {
                            ASSERT_TRUE(fam[j].respects(kind_of(model)));
                            ASSERT_EQ(fam[j].start, ends[j].first);
                            ASSERT_EQ(fam[j].end(), ends[j].second);
                            for (auto pt : fam[j].points()) ASSERT_TRUE(seen.insert(pt).second);
                        }
                    });
                    EXPECT_EQ(Integer(count), eval_at(enumerate_families(m, default_budget()), 1));
                }
}

TEST(VerifyLgv, Examples) {
    const auto pi12 = verify_lgv({Model::Pi, 1, 2, std::nullopt}, default_budget());
    EXPECT_TRUE(pi12.pass);
    EXPECT_EQ(pi12.lhs, pow(kL, 3));
    const auto om02 = verify_lgv({Model::Omega, 0, 2, std::nullopt}, default_budget());
    EXPECT_TRUE(om02.pass);
    EXPECT_EQ(om02.lhs, kL);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(enumerate_families({Model::Pi, 0, n, 0}, default_budget()), hankel_det(Family::H, 1, n));
}

TEST(VerifyLgv, AllModelsUpToThree) {
    for (auto model : {Model::Pi, Model::Omega})
        for (int k = 0; k <= 1; ++k)
            for (int n = 0; n <= 3; ++n) {
                EXPECT_TRUE(verify_lgv({model, k, n, std::nullopt}, default_budget()).pass);
                for (int i = 0; i <= n; ++i) EXPECT_TRUE(verify_lgv({model, k, n, i}, default_budget()).pass);
            }
}

TEST(VerifyLgv, FamilySizeFourBehindBudget) {
    const PathFamilyModel m{Model::Omega, 0, 4, std::nullopt};
    EXPECT_THROW(enumerate_families(m, default_budget()), CapExceeded);
    Budget wide;
    wide.max_family_size = 4;
    EXPECT_TRUE(verify_lgv(m, wide).pass);
}

TEST(VerifyLgv, Errors) {
    EXPECT_THROW(enumerate_families({Model::PiStar, 0, 2, 1}, default_budget()), InvalidModel);
    EXPECT_THROW(enumerate_families({Model::PiStar, 1, 2, 0}, default_budget()), InvalidModel);
    EXPECT_THROW(enumerate_families({Model::PiStar, 1, 2, std::nullopt}, default_budget()), InvalidModel);
    EXPECT_THROW(enumerate_families({Model::Pi, 0, 2, 3}, default_budget()), IndexOutOfRange);
    EXPECT_THROW(verify_lgv({Model::PiStar, 1, 1, 1}, default_budget()), InvalidModel);
    EXPECT_THROW(enumerate_families({Model::Pi, 4, 1, std::nullopt}, default_budget()), CapExceeded);
    try {
        enumerate_families({Model::Pi, 0, 5, std::nullopt}, default_budget());
        FAIL();
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.cap_flag(), "--max-family-n");
    }
}

TEST(Budget, Parse) {
    const auto b = Budget::from_string("families=4,paths=12,shift=2");
    EXPECT_EQ(b.max_family_size, 4);
    EXPECT_EQ(b.max_path_length, 12u);
    EXPECT_EQ(b.max_family_shift, 2);
    EXPECT_EQ(Budget::from_string("5").max_family_size, 5);
    EXPECT_THROW(Budget::from_string("bogus=1"), std::invalid_argument);
    EXPECT_THROW(Budget::from_string("families=-1"), std::invalid_argument);
}

TEST(KeyLemma1, Enumeration) {
    const auto r = verify_key_lemma_1(1, 1, default_budget());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, kL);
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) EXPECT_TRUE(verify_key_lemma_1(n, i, default_budget()).pass) << n << ' ' << i;
    EXPECT_THROW(verify_key_lemma_1(2, 0, default_budget()), IndexOutOfRange);
    EXPECT_THROW(verify_key_lemma_1(2, 3, default_budget()), IndexOutOfRange);
}

TEST(KeyLemma1, DeterminantForm) {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) EXPECT_TRUE(verify_key_lemma_1_determinant(n, i).pass) << n << ' ' << i;
}

TEST(KeyLemma2, Boundary) {
    const auto r = verify_key_lemma_2(1, 1);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, (Poly{1}));
    EXPECT_EQ(r.rhs, (Poly{1}));
    EXPECT_THROW(verify_key_lemma_2(2, 0), IndexOutOfRange);
}

TEST(KeyLemma2, Bulk) {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) EXPECT_TRUE(verify_key_lemma_2(n, i).pass) << n << ' ' << i;
}

TEST(DeletedHankelLemmas, Bulk) {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) {
            EXPECT_TRUE(verify_deleted_h1_lemma(n, i).pass) << n << ' ' << i;
            EXPECT_TRUE(verify_deleted_h0_lemma(n, i).pass) << n << ' ' << i;
        }
}

} // namespace
} // namespace hankel_lab
