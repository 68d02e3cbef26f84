#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* p = std::getenv("TILERED_BIN");
    REQUIRE_MESSAGE(p != nullptr, "TILERED_BIN must point at the cli binary");
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "tilered_cli_test";
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    REQUIRE(out.good());
    out << text;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("rigid subcommand") {
    fs::path dir = scratch();
    RunResult r = run("rigid --d 2 --s 1 --out " + (dir / "rigid.json").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("N=11") != std::string::npos);
    CHECK(r.out.find("|T|=121") != std::string::npos);
    CHECK(fs::exists(dir / "rigid.json"));

    r = run("rigid --d 2 --s 2 --kernel-inline 2,0");
    CHECK(r.code == 0);
    CHECK(r.out.find("N=19") != std::string::npos);
    CHECK(r.out.find("|T|=361") != std::string::npos);
}

TEST_CASE("reduce subcommand") {
    fs::path dir = scratch();
    write_text(dir / "group.json", R"({"d": 2, "relations": [[2, 0]]})");
    write_text(dir / "tiles.json", R"([[[0, 0], [1, 0]]])");
    RunResult r = run("reduce --group " + (dir / "group.json").string() + " --tiles " +
                      (dir / "tiles.json").string() + " --out " +
                      (dir / "red.json").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("N=19") != std::string::npos);
    CHECK(r.out.find("|Ftilde_1|=722") != std::string::npos);
}

TEST_CASE("solve subcommand exit codes") {
    fs::path dir = scratch();
    write_text(dir / "z2.json", R"({"d": 2, "relations": []})");
    write_text(dir / "domino.json", R"([[[0, 0], [1, 0]]])");

    RunResult ok = run("solve --group " + (dir / "z2.json").string() + " --tiles " +
                       (dir / "domino.json").string() +
                       " --period '4,0;0,2' --mode count");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("count=") != std::string::npos);

    // odd torus: a domino cannot tile an odd number of cells
    RunResult none = run("solve --group " + (dir / "z2.json").string() + " --tiles " +
                         (dir / "domino.json").string() + " --period '3,0;0,3'");
    CHECK(none.code == 1);

    RunResult bad = run("solve --group " + (dir / "z2.json").string() + " --tiles " +
                        (dir / "domino.json").string() + " --period '3,0;x'");
    CHECK(bad.code == 2);

    RunResult missing = run("solve --group /nonexistent.json --tiles " +
                            (dir / "domino.json").string() + " --period '2,0;0,2'");
    CHECK(missing.code == 2);

    RunResult noargs = run("solve");
    CHECK(noargs.code == 2);
}

TEST_CASE("solve writes solution files consumable by render") {
    fs::path dir = scratch();
    write_text(dir / "z2.json", R"({"d": 2, "relations": []})");
    write_text(dir / "domino.json", R"([[[0, 0], [1, 0]]])");
    RunResult r = run("solve --group " + (dir / "z2.json").string() + " --tiles " +
                      (dir / "domino.json").string() +
                      " --period '2,0;0,1' --mode all --require-origin --out " +
                      (dir / "sol.json").string());
    CHECK(r.code == 0);

    RunResult svg = run("render --input " + (dir / "sol.json").string() + " --svg " +
                        (dir / "sol.svg").string());
    CHECK(svg.code == 0);
    CHECK(read_text(dir / "sol.svg").find("<svg") != std::string::npos);

    RunResult ascii = run("render --input " + (dir / "sol.json").string() + " --ascii");
    CHECK(ascii.code == 0);
    CHECK_FALSE(ascii.out.empty());
}

TEST_CASE("verify subcommand and its negative control") {
    fs::path dir = scratch();
    write_text(dir / "group.json", R"({"d": 2, "relations": [[2, 0]]})");
    write_text(dir / "single.json", R"([[[0, 0]]])");

    RunResult ok = run("verify --group " + (dir / "group.json").string() + " --tiles " +
                       (dir / "single.json").string() + " --period 0,1");
    CHECK(ok.code == 0);
    CHECK(ok.out.find(", OK") != std::string::npos);

    RunResult bad = run("verify --group " + (dir / "group.json").string() + " --tiles " +
                        (dir / "single.json").string() + " --period 0,1 --corrupt");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("render rejects unusable input") {
    fs::path dir = scratch();
    write_text(dir / "junk.json", R"({"what": 1})");
    CHECK(run("render --input " + (dir / "junk.json").string()).code == 2);
    write_text(dir / "empty.json", "[]");
    CHECK(run("render --input " + (dir / "empty.json").string()).code == 2);
}
