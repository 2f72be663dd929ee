#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bnint/cli.hpp"
#include "bnint/certificate.hpp"
#include "bnint/erasability.hpp"
#include "bnint/prover.hpp"
#include "bnint/tables.hpp"

using namespace bnint;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("bnint-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CheckExitCodes) {
    auto exc = run({"check", "6", "4", "3"});
    EXPECT_EQ(exc.code, cli::kMathException);
    EXPECT_NE(exc.out.find("exception: (6,4,3)"), std::string::npos);
    auto ok = run({"check", "4", "1", "3"});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_NE(ok.out.find("holds"), std::string::npos);
    auto neg = run({"check", "3", "0", "7"});
    EXPECT_EQ(neg.code, cli::kInputError);
    EXPECT_NE(neg.err.find("no BN-curve exists"), std::string::npos);
    EXPECT_EQ(run({"check", "6", "0", "3", "--char", "2"}).code, cli::kMathException);
    EXPECT_EQ(run({"check", "5", "0", "3", "--char", "4"}).code, cli::kInputError);
}

TEST(Cli, BadInputIsExitOne) {
    EXPECT_EQ(run({}).code, cli::kInputError);
    EXPECT_EQ(run({"check", "6", "4"}).code, cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    EXPECT_EQ(run({"good", "1", "2", "3", "4", "x"}).code, cli::kInputError);
    EXPECT_EQ(run({"verify", "/nonexistent/cert.json"}).code, cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, DeltaAndGood) {
    auto d = run({"delta", "8", "1", "7", "1", "1"});
    EXPECT_EQ(d.code, cli::kOk);
    EXPECT_EQ(d.out, "7/3\n");
    auto dj = run({"--format", "json", "delta", "6", "2", "4", "3", "0"});
    auto j = nlohmann::json::parse(dj.out);
    EXPECT_EQ(Rational::parse(j["delta"].get<std::string>()), Rational(14, 3));
    EXPECT_EQ(tuple_from_json(j["tuple"]), (Tuple{6, 2, 4, 3, 0}));

    auto bad = run({"good", "5", "2", "3", "0", "0"});
    EXPECT_EQ(bad.code, cli::kMathException);
    EXPECT_NE(bad.out.find("not good (XEx)"), std::string::npos);
    auto gj = nlohmann::json::parse(run({"--format", "json", "good", "13", "2", "6", "1", "0"}).out);
    EXPECT_TRUE(gj["good"].get<bool>());
    EXPECT_TRUE(gj["failures"].empty());
}

TEST(Cli, MaxPoints) {
    auto j = nlohmann::json::parse(run({"--format", "json", "max-points", "10", "6", "5"}).out);
    EXPECT_EQ(j["predicted_n"], 12);
    EXPECT_EQ(run({"max-points", "10", "6", "5"}).code, cli::kMathException);
    EXPECT_EQ(run({"max-points", "4", "1", "3"}).code, cli::kOk);
}

TEST(Cli, SporadicDefaultAndVariants) {
    auto def = run({"sporadic"});
    EXPECT_EQ(def.code, cli::kOk);
    EXPECT_NE(def.out.find("30 irreducible / "), std::string::npos);

    auto off = run({"sporadic", "--disable-rule", "master-erasable"});
    EXPECT_EQ(off.code, cli::kMismatch);
    EXPECT_NE(off.err.find("unexpected"), std::string::npos);

    EXPECT_EQ(run({"sporadic", "--rmax", "5"}).code, cli::kOk);
    EXPECT_EQ(run({"sporadic", "--disable-rule", "no-such-rule"}).code, cli::kInputError);
}

TEST(Cli, SporadicJsonRoundTripsAndIgnoresWorkers) {
    auto one = run({"--format", "json", "--workers", "1", "sporadic"});
    auto four = run({"--format", "json", "--workers", "4", "sporadic"});
    EXPECT_EQ(one.out, four.out);
    auto rep = SporadicReport::from_json(nlohmann::json::parse(one.out));
    EXPECT_EQ(rep.irreducible.size(), 30u);

    auto csv1 = run({"--format", "csv", "--workers", "1", "sporadic"});
    auto csv3 = run({"--format", "csv", "--workers", "3", "sporadic"});
    EXPECT_EQ(csv1.out, csv3.out);
}

TEST(Cli, SporadicExpectedFileAndCsvFile) {
    TempDir tmp;
    auto consts = constants_to_json();
    consts["sporadic30"].erase(0);
    {
        std::ofstream(tmp.file("c.json")) << consts.dump();
    }
    auto r = run({"sporadic", "--expected", tmp.file("c.json"), "--csv", tmp.file("all.csv")});
    EXPECT_EQ(r.code, cli::kMismatch);
    auto csv = slurp(tmp.file("all.csv"));
    EXPECT_EQ(csv, run_sporadic_search().to_csv());
}

TEST(Cli, LargeRCoverageJson) {
    auto r = run({"--format", "json", "thm14", "--rmax", "15"});
    EXPECT_EQ(r.code, cli::kOk);
    auto rep = CoverageReport::from_json(nlohmann::json::parse(r.out));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.r_min, 14);
    EXPECT_EQ(rep.r_max, 15);
    EXPECT_EQ(run({"thm14", "--rmax", "13"}).code, cli::kInputError);
}

TEST(Cli, CertifyThenVerify) {
    TempDir tmp;
    auto path = tmp.file("c.json");
    auto c = run({"certify", "13", "2", "6", "1", "0", "--json", path});
    ASSERT_EQ(c.code, cli::kOk) << c.err;
    auto cert = Certificate::from_json(nlohmann::json::parse(slurp(path)));
    EXPECT_EQ(cert.root, (Tuple{13, 2, 6, 1, 0}));
    EXPECT_EQ(run({"verify", path}).code, cli::kOk);

    // break the file and verify again
    auto j = cert.to_json();
    for (auto& n : j["nodes"])
        if (n["justification"].contains("children") && !n["justification"]["children"].empty()) {
            n["justification"]["children"][0][0] = n["justification"]["children"][0][0].get<int>() - 1;
            break;
        }
    std::ofstream(path) << j.dump();
    EXPECT_EQ(run({"verify", path}).code, cli::kMismatch);
}

TEST(Cli, CertifyEdgeCases) {
    auto spor = run({"--format", "json", "certify", "9", "2", "5", "0", "0"});
    ASSERT_EQ(spor.code, cli::kOk);
    auto cert = Certificate::from_json(nlohmann::json::parse(spor.out));
    EXPECT_EQ(cert.nodes.size(), 1u);

    auto bad = run({"certify", "5", "2", "3", "0", "0"});
    EXPECT_EQ(bad.code, cli::kInputError);
    EXPECT_NE(bad.err.find("not good (XEx)"), std::string::npos);

    EXPECT_EQ(run({"certify", "13", "2", "6", "1", "0", "--bound-r", "5"}).code, cli::kInputError);
}

TEST(Cli, ExtraAxiomFileIsHonoured) {
    TempDir tmp;
    std::ofstream(tmp.file("ax.json")) << R"({"axioms":[{"tuple":[6,1,5,3,0],"citation":"hand proof"}]})";
    auto r = run({"--axioms", tmp.file("ax.json"), "certify", "6", "1", "5", "3", "0"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
}

TEST(Cli, Erasable) {
    auto yes = run({"erasable", "--r", "3", "--s", "1,0=1", "--s", "2,1=2", "--brute"});
    EXPECT_EQ(yes.code, cli::kOk) << yes.err;
    auto no = run({"erasable", "--r", "5", "--w", "1,0=1"});
    EXPECT_EQ(no.code, cli::kMathException);
    EXPECT_EQ(run({"erasable", "--r", "5", "--s", "garbage"}).code, cli::kInputError);

    auto j = nlohmann::json::parse(run({"--format", "json", "erasable", "--r", "5", "--s", "2,0=2"}).out);
    EXPECT_TRUE(j["erasable"].get<bool>());
    auto [coll, r] = collection_from_json(j["collection"]);
    EXPECT_EQ(r, 5);
    EXPECT_EQ(coll, (ModCollection{{ModType{2, 0, Strength::Strong}, 2}}));

    TempDir tmp;
    std::ofstream(tmp.file("e.json")) << j["collection"].dump();
    EXPECT_EQ(run({"erasable", "--json", tmp.file("e.json")}).code, cli::kOk);
}

TEST(Cli, DumpConstantsRoundTrips) {
    auto r = run({"dump-constants"});
    ASSERT_EQ(r.code, cli::kOk);
    auto c = constants_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(c.sporadic30, constants().sporadic30);
    EXPECT_EQ(c.xex, constants().xex);
}

TEST(Cli, OutputFileAndConfig) {
    TempDir tmp;
    EXPECT_EQ(run({"--output", tmp.file("d.txt"), "delta", "11", "5", "6", "0", "0"}).code, cli::kOk);
    EXPECT_EQ(slurp(tmp.file("d.txt")), "4\n");

    std::ofstream(tmp.file("cfg.ini")) << "format=json\n";
    auto r = run({"--config", tmp.file("cfg.ini"), "delta", "11", "5", "6", "0", "0"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["delta"], "4");
    auto flag_wins = run({"--config", tmp.file("cfg.ini"), "--format", "plain", "delta", "11", "5", "6", "0", "0"});
    EXPECT_EQ(flag_wins.out, "4\n");
}

TEST(Cli, GlobalFlagsMayFollowTheCommand) {
    auto before = run({"--format", "json", "delta", "8", "1", "7", "1", "1"});
    auto after = run({"delta", "8", "1", "7", "1", "1", "--format", "json"});
    EXPECT_EQ(after.code, cli::kOk) << after.err;
    EXPECT_EQ(after.out, before.out);
}
