#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "curvedim/cli.hpp"

using curvedim::cli::run;

namespace {

struct CliResult {
    int exit;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        cache_ = (std::filesystem::temp_directory_path() / "curvedim-cli-test-cache.txt").string();
        setenv("CURVEDIM_CACHE", cache_.c_str(), 1);
        std::filesystem::remove(cache_);
    }
    void TearDown() override {
        std::filesystem::remove(cache_);
        unsetenv("CURVEDIM_CACHE");
    }
    std::string cache_;
};

}  // namespace

TEST_F(CliTest, DimHomogeneous) {
    auto r = invoke({"dim", "38", "10", "12"});
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("dim=-1 v=-1 special=false provenance=oracle"), std::string::npos);
}

TEST_F(CliTest, DimQuasiAndMethods) {
    auto quasi = invoke({"dim", "12", "8", "3", "--m0", "9"});
    EXPECT_EQ(quasi.exit, 0);
    EXPECT_NE(quasi.out.find("dim=0"), std::string::npos);

    auto crem = invoke({"dim", "12", "8", "3", "--m0", "9", "--method", "cremona"});
    EXPECT_EQ(crem.exit, 0);
    EXPECT_NE(crem.out.find("provenance=cremona-anchor-d"), std::string::npos);

    auto none = invoke({"dim", "17", "10", "4", "--m0", "11", "--method", "cremona"});
    EXPECT_EQ(none.exit, 3);  // no closed form: undecided under that method

    auto orc = invoke({"dim", "4", "2", "3", "--method", "oracle"});
    EXPECT_EQ(orc.exit, 0);
    EXPECT_NE(orc.out.find("ORACLE 4 0 2 3"), std::string::npos);

    auto deg = invoke({"dim", "12", "15", "3", "--method", "degen"});
    EXPECT_EQ(deg.exit, 0);
    EXPECT_NE(deg.out.find("witness"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({"dim", "12"}).exit, 2);
    EXPECT_EQ(invoke({"frobnicate"}).exit, 2);
    EXPECT_EQ(invoke({}).exit, 2);
    EXPECT_EQ(invoke({"dim", "12", "15", "3", "--method", "sorcery"}).exit, 2);
    EXPECT_EQ(invoke({"--help"}).exit, 0);
}

TEST_F(CliTest, VerifyWitness) {
    auto good = invoke({"verify-witness", "12", "15", "3", "8", "8"});
    EXPECT_EQ(good.exit, 0);
    EXPECT_NE(good.out.find("l0=0 e=0 (validates)"), std::string::npos);

    auto bad = invoke({"verify-witness", "9", "19", "2", "7", "2"});
    EXPECT_EQ(bad.exit, 1);
}

TEST_F(CliTest, CheckSmallMultiplicity) {
    auto r = invoke({"check", "2"});
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("status=Verified"), std::string::npos);
    EXPECT_NE(r.out.find("oracle fallbacks there: 0"), std::string::npos);

    auto five = invoke({"check", "5", "--jobs", "2"});
    EXPECT_EQ(five.exit, 0);
    EXPECT_NE(five.out.find("status=Verified"), std::string::npos);
    EXPECT_NE(five.out.find("oracle fallbacks there: 0"), std::string::npos);
}

TEST_F(CliTest, TableWithSearchFailure) {
    auto csv = invoke({"table", "6", "--format", "csv"});
    EXPECT_EQ(csv.exit, 0);
    EXPECT_NE(csv.out.find("19,10,6,-1,FAIL"), std::string::npos);
}

TEST_F(CliTest, TableRendersAndRoundTrips) {
    auto text = invoke({"table", "2"});
    EXPECT_EQ(text.exit, 0);
    EXPECT_NE(text.out.find("  7  12   2    -1"), std::string::npos);
    // the published m=2 block has four rows
    EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 4);

    auto csv = invoke({"table", "2", "--format", "csv"});
    EXPECT_EQ(csv.exit, 0);
    std::istringstream in(csv.out);
    auto rows = curvedim::cli::parse_csv(in);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].d, 7);
    EXPECT_EQ(rows[0].n, 12);
    EXPECT_EQ(rows[0].v, -1);
    EXPECT_TRUE(rows[0].found);
    // round trip: render the parsed rows and parse again
    std::ostringstream again;
    curvedim::cli::render_rows(again, rows, "csv");
    std::istringstream in2(again.str());
    auto rows2 = curvedim::cli::parse_csv(in2);
    ASSERT_EQ(rows2.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows2[i].d, rows[i].d);
        EXPECT_EQ(rows2[i].n, rows[i].n);
        EXPECT_EQ(rows2[i].v, rows[i].v);
        EXPECT_EQ(rows2[i].found, rows[i].found);
        EXPECT_EQ(rows2[i].a, rows[i].a);
        EXPECT_EQ(rows2[i].b, rows[i].b);
    }
}

TEST_F(CliTest, TableCompare) {
    auto r = invoke({"table", "3", "--compare"});
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("compare: match"), std::string::npos);
}

TEST_F(CliTest, OracleSubcommand) {
    auto r = invoke({"oracle", "38", "0", "10", "12"});
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("ORACLE 38 0 10 12 2147483647 42"), std::string::npos);
    EXPECT_NE(r.out.find("certified"), std::string::npos);

    auto seeded = invoke({"oracle", "3", "0", "9", "1", "--seed", "7", "--trials", "2"});
    EXPECT_EQ(seeded.exit, 0);
    EXPECT_NE(seeded.out.find(" 7 "), std::string::npos);
}

TEST_F(CliTest, CacheLifecycle) {
    auto empty = invoke({"cache"});
    EXPECT_EQ(empty.exit, 0);
    EXPECT_NE(empty.out.find("records: 0"), std::string::npos);

    ASSERT_EQ(invoke({"dim", "12", "15", "3"}).exit, 0);
    auto warm = invoke({"cache"});
    EXPECT_NE(warm.out.find(cache_), std::string::npos);
    EXPECT_EQ(warm.out.find("records: 0"), std::string::npos);

    EXPECT_EQ(invoke({"cache", "--clear"}).exit, 0);
    auto cleared = invoke({"cache"});
    EXPECT_NE(cleared.out.find("records: 0"), std::string::npos);
}
