#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" NUMRAD_CLI_PATH "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Workdir {
public:
    Workdir() : dir_(fs::temp_directory_path() / ("numrad_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
        write("a3.json", R"({"n":3,"entries":[[0,0],[1,0],[0,0],[0,0],[0,0],[2,0],[0,0],[0,0],[0,0]]})");
        write("j.json", R"({"n":2,"entries":[[0,0],[1,0],[0,0],[0,0]]})");
        write("d10.json", R"({"n":2,"entries":[[1,0],[0,0],[0,0],[0,0]]})");
        write("zero.json", R"({"n":2,"entries":[[0,0],[0,0],[0,0],[0,0]]})");
        write("bad.json", R"({"n":2,"entries":[[0,0]]})");
    }
    ~Workdir() { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return "\"" + (dir_ / name).string() + "\""; }
    std::string raw(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

private:
    fs::path dir_;
};

std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

double number_after(const std::string& text, const std::string& label) {
    const auto pos = text.find(label);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + label.size()));
}

} // namespace

TEST_CASE("paper-example prints the worked example values") {
    const Run r = run("paper-example");
    CHECK(r.code == 0);
    CHECK(std::abs(number_after(r.out, "ub_thm25(A, alpha=1/2)") - 2.25) <= 1e-12);
    CHECK(std::abs(number_after(r.out, "ub_cor28(A) min_value") - 2.0724) <= 5e-4);
    CHECK(std::abs(number_after(r.out, "w(A)^2") - 1.25) <= 1e-10);
    CHECK(r.out.find("strict improvement                   yes") != std::string::npos);
}

TEST_CASE("eval") {
    const Workdir w;
    const Run cor = run("eval --matrix " + w.path("a3.json") + " --bounds ub_cor28 --json");
    CHECK(cor.code == 0);
    const auto doc = nlohmann::json::parse(cor.out);
    REQUIRE(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["id"] == "ub_cor28");
    CHECK(std::abs(doc["reports"][0]["value"].get<double>() - 2.0724) <= 5e-4);
    CHECK(std::abs(doc["reports"][0]["params"]["alpha"].get<double>() - 0.545) <= 1e-3);

    const Run table = run("eval --matrix " + w.path("a3.json") + " --bounds ub_cor28");
    CHECK(table.code == 0);
    CHECK(table.out.find("alpha* = 0.5449676") != std::string::npos);

    const auto jdoc = nlohmann::json::parse(run("eval --matrix " + w.path("j.json") + " --json").out);
    CHECK(std::abs(jdoc["w"].get<double>() - 0.5) <= 1e-12);
    CHECK(jdoc["passed"] == true);
    int seen = 0;
    for (const auto& rep : jdoc["reports"]) {
        CHECK(rep.contains("anchor"));
        CHECK(rep["pass"] == true);
        if (rep["id"] == "lb_half_norm" || rep["id"] == "ub_yamazaki") {
            CHECK(std::abs(rep["value"].get<double>() - 0.5) <= 1e-12);
            ++seen;
        }
    }
    CHECK(seen == 2);

    const auto zdoc = nlohmann::json::parse(run("eval --matrix " + w.path("zero.json") + " --json").out);
    for (const auto& rep : zdoc["reports"]) CHECK(rep["value"].get<double>() == 0.0);

    CHECK(run("eval --matrix " + w.path("missing.json")).code == 1);
    CHECK(run("eval --matrix " + w.path("bad.json")).code == 1);
    CHECK(run("eval --matrix " + w.path("j.json") + " --bounds nope").code == 1);
    CHECK(run("eval --matrix " + w.path("j.json") + " --r 0.5").code == 1);
    CHECK(run("eval --matrix " + w.path("j.json") + " --second " + w.path("a3.json")).code == 1);
}

TEST_CASE("sweep") {
    const Workdir w;
    const Run theta = run("sweep --matrix " + w.path("d10.json") + " --mode theta --grid 4");
    CHECK(theta.code == 0);
    CHECK(theta.out.rfind("theta,lambda_max\n", 0) == 0);
    const auto rows = parse_csv(theta.out);
    REQUIRE(rows.size() == 4);
    for (int k = 0; k < 4; ++k) {
        const double t = rows[k][0];
        CHECK(std::abs(t - k * M_PI / 2) <= 1e-11);
        CHECK(std::abs(rows[k][1] - std::max(std::cos(t), 0.0)) <= 1e-11);
    }

    for (const auto& row : parse_csv(run("sweep --matrix " + w.path("j.json") + " --mode theta --grid 16").out))
        CHECK(std::abs(row[1] - 0.5) <= 1e-11);

    CHECK(run("sweep --matrix " + w.path("a3.json") + " --mode alpha --grid 1000 --out " + w.path("a.csv")).code == 0);
    std::ifstream in(w.raw("a.csv"));
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("alpha,value\n", 0) == 0);
    const auto curve = parse_csv(text);
    REQUIRE(curve.size() == 1000);
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(curve[i][0] > curve[i - 1][0]);
        if (curve[i][1] < curve[best][1]) best = i;
    }
    // Branch change (curve minimum) next to log_16((1 + sqrt 65)/2).
    CHECK(std::abs(curve[best][0] - 0.54497) <= 1.0 / 999);

    CHECK(run("sweep --matrix " + w.path("j.json") + " --mode beta").code == 1);
    CHECK(run("sweep --matrix " + w.path("j.json") + " --mode theta --grid 8 --out /nonexistent/dir/x.csv").code == 1);
}

TEST_CASE("certify exit codes") {
    const Workdir w;
    const std::string small = "certify --families ginibre,normal --sizes 2,3 --count 1 --r 1,2";
    const Run ok = run(small + " --out " + w.path("ok.json"));
    CHECK(ok.code == 0);
    std::ifstream in(w.raw("ok.json"));
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["passed"] == true);
    CHECK(doc["matrices"] == 4);

    const Run broken = run(small + " --self-test-fail");
    CHECK(broken.code == 2);
    const auto bdoc = nlohmann::json::parse(broken.out);
    CHECK(bdoc["passed"] == false);
    CHECK(bdoc["counterexamples"].size() == 1);

    const Run empty = run("certify --count 0");
    CHECK(empty.code == 0);
    CHECK(nlohmann::json::parse(empty.out)["records"].empty());

    CHECK(run("certify --families bogus").code == 1);
    CHECK(run("certify --r 0.5 --count 1").code == 1);
    CHECK(run("certify --count abc").code == 1);
    CHECK(run("").code == 1);
}

TEST_CASE("NUMRAD_TOL") {
    const Workdir w;
    CHECK(run("eval --matrix " + w.path("j.json"), "NUMRAD_TOL=1e-6").code == 0);
    CHECK(run("eval --matrix " + w.path("j.json"), "NUMRAD_TOL=nonsense").code == 1);
    CHECK(run("eval --matrix " + w.path("j.json"), "NUMRAD_TOL=-1").code == 1);
    const Run cert = run("certify --families normal --sizes 2 --count 1 --summary-only", "NUMRAD_TOL=1e-7");
    CHECK(cert.code == 0);
    CHECK(nlohmann::json::parse(cert.out)["config"]["numrad_tol"] == 1e-7);
}
