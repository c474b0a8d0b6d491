#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "curvesys/serialize.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Run the CLI, capture stdout (stderr goes to /dev/null) and the exit code.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CURVESYS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("generate then verify round-trips for every kind") {
    struct Case {
        const char* args;
        std::size_t expect_n;
    };
    const Case cases[] = {
        {"generate polygon --genus 3", 7},
        {"generate boundary --genus 2 --boundary 3", 20},
        {"generate boundary --genus 1 --boundary 2", 6},
        {"generate closed-lower --genus 4", 27},
        {"generate hyperelliptic --genus 3", 18},
    };
    for (const auto& c : cases) {
        auto path = tmp_file("curvesys_cli_gen.json");
        auto gen = run_cli(std::string(c.args) + " --out " + path.string());
        REQUIRE(gen.status == 0);
        auto sys = curvesys::read_system(path);
        CHECK(sys.size() == c.expect_n);
        auto ver = run_cli("verify " + path.string());
        CHECK(ver.status == 0);
        std::filesystem::remove(path);
    }
}

TEST_CASE("generate reports size and bound") {
    auto res = run_cli("generate polygon --genus 3 --out " + tmp_file("curvesys_p3.json").string());
    REQUIRE(res.status == 0);
    CHECK(res.out.find("N=7") != std::string::npos);
    CHECK(res.out.find("126") != std::string::npos);  // (g-1)(2^{2g}-1) = 126
    std::filesystem::remove(tmp_file("curvesys_p3.json"));
}

TEST_CASE("generate output is byte-identical across runs") {
    auto a = tmp_file("curvesys_a.json"), b = tmp_file("curvesys_b.json");
    REQUIRE(run_cli("generate closed-lower --genus 5 --out " + a.string()).status == 0);
    REQUIRE(run_cli("generate closed-lower --genus 5 --out " + b.string()).status == 0);
    std::ifstream fa(a), fb(b);
    std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK_FALSE(sa.empty());
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("verify flags a hand-edited count and names the pair") {
    auto path = tmp_file("curvesys_edit.json");
    REQUIRE(run_cli("generate polygon --genus 2 --out " + path.string()).status == 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("[\"c01\", \"c02\", 1]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("[\"c01\", \"c02\", 1]").size(), "[\"c01\", \"c02\", 2]");
    std::ofstream(path) << text;

    auto res = run_cli("verify " + path.string() + " --k 1");
    CHECK(res.status == 1);
    CHECK(res.out.find("c01") != std::string::npos);
    CHECK(res.out.find("c02") != std::string::npos);

    auto json = run_cli("verify " + path.string() + " --json");
    CHECK(json.status == 1);
    CHECK(json.out.find("\"ok\": false") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("verify rejects schema violations with status 2") {
    auto path = tmp_file("curvesys_schema.json");
    REQUIRE(run_cli("generate polygon --genus 2 --out " + path.string()).status == 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find(", \"class\": \"1100\"");
    REQUIRE(pos != std::string::npos);
    text.erase(pos, std::string(", \"class\": \"1100\"").size());
    std::ofstream(path) << text;
    CHECK(run_cli("verify " + path.string()).status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("search subcommands report the known extremal values") {
    auto torus = run_cli("search torus --k 1 --bound 5");
    CHECK(torus.status == 0);
    CHECK(torus.out.find("max 3") != std::string::npos);

    auto g2 = run_cli("search genus2");
    CHECK(g2.status == 0);
    CHECK(g2.out.find("max edges 12") != std::string::npos);
    CHECK(g2.out.find("2 isomorphism classes") != std::string::npos);

    auto gf2 = run_cli("search gf2 --genus 2");
    CHECK(gf2.status == 0);
    CHECK(gf2.out.find("max family 5") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
    auto b2 = run_cli("bounds --genus 2");
    CHECK(b2.status == 0);
    CHECK(b2.out.find("N(1,2) = 12 (exact)") != std::string::npos);

    auto b4 = run_cli("bounds --genus 4");
    CHECK(b4.status == 0);
    CHECK(b4.out.find("26 <= N(1,4) <= 765") != std::string::npos);

    auto b21 = run_cli("bounds --genus 2 --boundary 1");
    CHECK(b21.status == 0);
    CHECK(b21.out.find("10 <= N(1,2,1) <= 17") != std::string::npos);
}

TEST_CASE("export-dot") {
    auto path = tmp_file("curvesys_dot_in.json");
    REQUIRE(run_cli("generate polygon --genus 2 --out " + path.string()).status == 0);
    auto res = run_cli("export-dot " + path.string() + " --flavor odd");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("graph odd {", 0) == 0);
    std::size_t edges = 0, pos = 0;
    while ((pos = res.out.find("--", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    CHECK(edges == 10);  // K5
    CHECK(run_cli("export-dot " + path.string() + " --flavor nonsense").status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("verify applies the global upper bound") {
    // 18 curves on S_{2,1} as a 6-regular circulant: every per-pair and
    // degree check passes, but N(1,2,1) <= 12 + 5 = 17.
    curvesys::CurveSystem sys;
    sys.genus = 2;
    sys.boundary = 1;
    sys.k = 1;
    for (int i = 0; i < 18; ++i)
        sys.add_curve({"s" + std::to_string(i / 10) + std::to_string(i % 10), std::nullopt, ""});
    for (std::size_t i = 0; i < 18; ++i)
        for (std::size_t off = 1; off <= 3; ++off) sys.add_intersection(i, (i + off) % 18, 1);
    sys.normalize();
    auto path = tmp_file("curvesys_circulant.json");
    curvesys::write_system(path, sys);
    auto res = run_cli("verify " + path.string());
    CHECK(res.status == 1);
    CHECK(res.out.find("global-upper-bound") != std::string::npos);
    CHECK(res.out.find("FAIL") != std::string::npos);
    // all other checks hold
    CHECK(res.out.find("pass  k-bound") != std::string::npos);
    CHECK(res.out.find("pass  odd-degree-bound") != std::string::npos);
    CHECK(res.out.find("pass  low-degree-bound") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("generate polygon").status == 2);                       // missing --genus
    CHECK(run_cli("generate nonsense --genus 2").status == 2);            // bad kind
    CHECK(run_cli("generate boundary --genus 1 --boundary 0").status == 2);  // redirect
    CHECK(run_cli("generate polygon --genus 0").status == 2);             // bad genus
    CHECK(run_cli("verify /nonexistent/file.json").status == 2);
    CHECK(run_cli("search gf2 --genus 0").status == 2);
    CHECK(run_cli("bounds --genus 0").status == 2);
    CHECK(run_cli("nonsense").status == 2);
}

TEST_CASE("canonical-vectors kind emits bitstrings") {
    auto res = run_cli("generate canonical-vectors --genus 2");
    CHECK(res.status == 0);
    CHECK(res.out == "1100\n0100\n1010\n1001\n1011\n");
}
