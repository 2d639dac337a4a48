#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "milnor/poly_io.hpp"
#include "milnor/serialize.hpp"

using namespace milnor;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("milnor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& body) const {
        std::ofstream(path(name)) << body;
        return path(name);
    }
    static std::string slurp(const std::string& file) {
        std::ifstream in(file);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST(CliHilbert, TernaryCubicTable) {
    const auto r = run({"hilbert", "--n", "2", "--d", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k\ta(k)\tb(k)\n0\t1\t0\n1\t3\t0\n2\t3\t3\n3\t1\t9\tT\n4\t0\t15\n");
}

TEST(CliHilbert, JsonBinaryCubic) {
    const auto r = run({"hilbert", "--n", "1", "--d", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("a"), json::parse("[1,2,1,0]"));
}

TEST(CliHilbert, InvalidArguments) {
    EXPECT_EQ(run({"hilbert", "--n", "0", "--d", "3"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--n", "2", "--d", "1"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--n", "two", "--d", "3"}).code, 2);
    EXPECT_EQ(run({"hilbert", "--n", "2", "--d", "3", "--format", "xml"}).code, 2);
}

TEST(CliParse, UnknownCommandsAndFlags) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"st", "--poly", "x0^3+x1^3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"st", "--poly", "x0^3+x1^"}).code, 2);
    EXPECT_EQ(run({"st", "--poly", "x0^3+x1^2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliST, FermatCubic) {
    const auto r = run({"st", "--poly", "x0^3+x1^3+x2^3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("is_st"), true);
    EXPECT_EQ(doc.at("s"), 3);
    EXPECT_EQ(doc.at("fiber").at("basis"), json::parse(R"(["x0^3","x1^3","x2^3"])"));
}

TEST(CliST, SingularIsPrecondition) {
    EXPECT_EQ(run({"st", "--poly", "x0^3+x1^3+x2^3-3*x0*x1*x2"}).code, 3);
    EXPECT_EQ(run({"fiber", "--poly", "x0^3+x1^3+x2^3-3*x0*x1*x2"}).code, 3);
}

TEST(CliSmooth, Examples) {
    EXPECT_EQ(run({"smooth", "--poly", "x0^3+x1^3+x2^3-3*x0*x1*x2"}).out, "false\n");
    EXPECT_EQ(run({"smooth", "--poly", "x0^3+x1^3+x2^3"}).out, "true\n");
    EXPECT_EQ(json::parse(run({"smooth", "--poly", "x0^3+x1^3+x2^3", "--format", "json"}).out).at("smooth"), true);
}

TEST(CliRandom, Deterministic) {
    const std::vector<std::string> args{"random", "--n", "2", "--d", "4", "--seed", "11", "--non-st"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run({"random", "--n", "2", "--d", "4", "--seed", "12", "--non-st"}).out);
    EXPECT_EQ(run({"random", "--n", "2", "--d", "3", "--seed", "1", "--non-st", "--coeff-bound", "0"}).code, 3);
    EXPECT_EQ(run({"random", "--n", "2", "--d", "3", "--coeff-bound", "-1"}).code, 2);
}

TEST(CliTangentKernel, NonSTQuarticIsInjective) {
    const auto f = run({"random", "--n", "2", "--d", "4", "--seed", "5", "--non-st"}).out;
    const auto r = run({"tangent-kernel", "--poly", f.substr(0, f.size() - 1), "--k", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).at("kernel_dim"), 0);
    EXPECT_EQ(run({"tangent-kernel", "--poly", "x0^3+x1^3+x2^3", "--k", "1"}).code, 2);
}

TEST_F(CliFiles, ReconstructFermatPiece) {
    const auto piece = run({"piece", "--poly", "x0^3+x1^3+x2^3", "--k", "3", "--format", "json"});
    ASSERT_EQ(piece.code, 0);
    const auto e = write("e.json", piece.out);
    const auto r = run({"reconstruct", "--subspace", e, "--d", "3", "--k", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).at("s"), 3);
    EXPECT_EQ(run({"reconstruct", "--subspace", e, "--d", "3", "--k", "2"}).code, 2);
    EXPECT_EQ(run({"reconstruct", "--subspace", e, "--d", "4"}).code, 3);
}

TEST_F(CliFiles, ReconstructRandomQuartic) {
    const auto poly = write("f.txt", run({"random", "--n", "2", "--d", "4", "--seed", "3", "--non-st"}).out);
    const auto f = parse_polynomial(slurp(poly));
    ASSERT_EQ(run({"piece", "--poly", "@" + poly, "--k", "4", "--format", "json", "--out", path("e.json")}).code, 0);
    // The subspace file round-trips through its schema.
    EXPECT_EQ(subspace_from_json(json::parse(slurp(path("e.json")))), jacobian_piece(f, 4));
    const auto r = run({"reconstruct", "--subspace", path("e.json"), "--d", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto fiber = fiber_from_json(json::parse(r.out), 2, 4);
    ASSERT_EQ(fiber.s(), 1u);
    EXPECT_EQ(fiber.basis.front().normalized(), f.normalized());
}

TEST_F(CliFiles, MalformedInputs) {
    const auto bad = write("bad.json", "{\"n\": 2");
    EXPECT_EQ(run({"reconstruct", "--subspace", bad, "--d", "3"}).code, 2);
    EXPECT_EQ(run({"reconstruct", "--subspace", path("missing.json"), "--d", "3"}).code, 2);
    EXPECT_EQ(run({"inverse-system", "--gens", bad}).code, 2);
    EXPECT_EQ(run({"st", "--poly", "@" + path("missing.txt")}).code, 2);
    const auto wrong = write("wrong.json", R"({"n":2,"degree":3,"basis":[["1","2"]]})");
    EXPECT_EQ(run({"reconstruct", "--subspace", wrong, "--d", "3"}).code, 2);
}

TEST_F(CliFiles, GeneratorPipeline) {
    ASSERT_EQ(run({"random", "--n", "2", "--d", "3", "--seed", "2", "--ci", "--format", "json", "--out", path("w.json")}).code, 0);
    const auto w = generators_from_json(json::parse(slurp(path("w.json"))));
    const auto form = run({"inverse-system", "--gens", path("w.json"), "--format", "json"});
    ASSERT_EQ(form.code, 0);
    EXPECT_EQ(associated_form_from_json(json::parse(form.out)).form, associated_form(w).form);

    ASSERT_EQ(run({"ideal-piece", "--gens", path("w.json"), "--k", "3", "--format", "json", "--out", path("i.json")}).code, 0);
    const auto back = run({"recover-gens", "--subspace", path("i.json"), "--d", "3", "--format", "json"});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(generators_from_json(json::parse(back.out)).span(), w.span());

    const auto kernel = run({"tangent-kernel", "--gens", path("w.json"), "--k", "3", "--format", "json"});
    ASSERT_EQ(kernel.code, 0);
    EXPECT_EQ(json::parse(kernel.out).at("kernel_dim"), 0);
    EXPECT_EQ(run({"tangent-kernel", "--gens", path("w.json"), "--poly", "x0^3+x1^3+x2^3", "--k", "3"}).code, 2);

    const auto cone = write("cone.json", R"({"n":2,"d":3,"gens":["x0^2","x0*x1","x0*x2"]})");
    EXPECT_EQ(run({"inverse-system", "--gens", cone}).code, 3);
}

TEST_F(CliFiles, OutputIsByteIdentical) {
    const std::vector<std::string> args{"st", "--poly", "x0^4+x1^4+x2^4+x0*x1*x2^2", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path("st.json")});
    ASSERT_EQ(run(with_out).code, 0);
    EXPECT_EQ(slurp(path("st.json")), run(args).out);
}

TEST(CliSuite, SmallBattery) {
    const auto r = run({"suite", "--n", "2", "--d", "4", "--count", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("passed"), true);
    EXPECT_EQ(doc.at("criteria").size(), 9u);
    EXPECT_EQ(doc.at("criteria")[8].at("status"), "PASS");
    EXPECT_EQ(run({"suite", "--n", "2"}).code, 2);
}

TEST(CliSuite, TinyBudgetStopsEarly) {
    const auto r = run({"suite", "--budget", "0.000001", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.out).at("passed"), false);
}
