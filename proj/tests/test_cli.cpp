#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "c3rigid/graph_io.hpp"
#include "c3rigid/report.hpp"
#include "commands.hpp"
#include "support.hpp"

using namespace c3rigid;
using namespace c3rigid::cli;
using nlohmann::json;

namespace {

const std::string kData = C3RIGID_TEST_DATA;

std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::string_view command, const std::string& file, Options opt = {}) {
    std::ostringstream out, err;
    const int code = run_command(command, kData + "/" + file, opt, out, err);
    return {code, out.str(), err.str()};
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("check exit codes") {
    const Run prism = run("check", "prism.json");
    CHECK(prism.code == 0);
    const json r = json::parse(prism.out);
    CHECK(r["command"] == "check");
    CHECK(r["verdict"]["isostatic"] == true);
    CHECK(r["version"] == std::string(kVersion));
    CHECK(r["input_digest"].get<std::string>().size() == 16);

    const Run k4 = run("check", "k4_c3.json");
    CHECK(k4.code == 1);
    const json reasons = json::parse(k4.out)["verdict"]["reasons"];
    CHECK(std::find(reasons.begin(), reasons.end(), "count") != reasons.end());
    CHECK(std::find(reasons.begin(), reasons.end(), "subgraph_sparsity") != reasons.end());

    const Run bad = run("check", "malformed.json");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("SchemaError") != std::string::npos);

    CHECK(run("check", "missing-file.json").code == 2);
}

TEST_CASE("check without an action reports plain sparsity") {
    const Run k4 = run("check", "k4.json");
    CHECK(k4.code == 1);
    const json r = json::parse(k4.out);
    CHECK_FALSE(r.contains("verdict"));
    CHECK(r["sparsity"]["is_sparse"] == false);
}

TEST_CASE("certify") {
    const Run prism = run("certify", "prism.json");
    CHECK(prism.code == 0);
    const json r = json::parse(prism.out);
    REQUIRE(r["sequence"]["moves"].size() == 1);
    CHECK(r["sequence"]["moves"][0]["kind"] == "DeltaExtension");
    CHECK(r["sequence"]["moves"][0]["anchors"] == json::array({0}));
    CHECK(r["sequence"]["moves"][0]["new"] == json::array({3, 4, 5}));
    CHECK(r["partition_checks"]["all_passed"] == true);
    CHECK(r["replay"]["round_trip"] == true);
    CHECK(r["partition"]["T0"].size() == 3);

    const Run k3 = run("certify", "k3.json");
    CHECK(k3.code == 0);
    const json rk = json::parse(k3.out);
    CHECK(rk["sequence"]["moves"].empty());
    CHECK(rk["partition"]["T0"] == json::array({json::array({0, 1})}));

    const Run k33 = run("certify", "k33.json");
    CHECK(k33.code == 0);
    CHECK(json::parse(k33.out)["sequence"]["moves"].size() == 1);

    CHECK(run("certify", "octahedron.json").code == 1);
    CHECK(run("certify", "k4.json").code == 2);
}

TEST_CASE("realize") {
    Options opt;
    opt.seed = 7;
    const Run generic = run("realize", "prism.json", opt);
    CHECK(generic.code == 0);
    const json r = json::parse(generic.out);
    CHECK(r["verdict"]["rank"] == 9);
    CHECK(r["symmetric"] == true);
    CHECK(r["placement"]["positions"].size() == 6);
    const QSqrt3 x = qsqrt3_from_json(r["placement"]["positions"][0]["x"]);
    CHECK(x.to_double() == doctest::Approx(r["placement"]["positions"][0]["x"]["approx"].get<double>()));

    opt.method = "frame";
    const Run frame = run("realize", "prism.json", opt);
    CHECK(frame.code == 0);
    const json f = json::parse(frame.out);
    CHECK(f["verdict"]["isostatic"] == true);
    CHECK(f["frame_rank"] == 9);
    CHECK_FALSE(f["pull_apart"].empty());

    const Run hub = run("realize", "k13_hub.json");
    CHECK(hub.code == 2);
    CHECK(hub.err.find("FixedVertexPresent") != std::string::npos);
}

TEST_CASE("oracle") {
    const Run prism = run("oracle", "prism.json");
    CHECK(prism.code == 0);
    CHECK(json::parse(prism.out)["agree"] == true);
    const Run k4 = run("oracle", "k4.json");
    CHECK(k4.code == 0);
    const json r = json::parse(k4.out);
    CHECK(r["brute_force"] == false);
    CHECK(r["pebble_game"] == false);
    const Run big = run("oracle", "n20.json");
    CHECK(big.code == 2);
    CHECK(big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("render") {
    const auto dir = std::filesystem::temp_directory_path() / "c3rigid_render_test";
    std::filesystem::create_directories(dir);
    Options opt;
    opt.out = (dir / "prism.svg").string();
    CHECK(run("render", "prism.json", opt).code == 0);
    const std::string svg = read(opt.out);
    CHECK(count(svg, "<circle") == 6);
    CHECK(count(svg, "<line") == 9);
    CHECK(count(svg, "class=\"t0\"") == 3);
    CHECK(count(svg, "class=\"t1\"") == 3);
    CHECK(count(svg, "class=\"t2\"") == 3);
    CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);

    // Coordinates stay inside the margin box.
    const std::regex num("(?:cx|cy|x1|y1|x2|y2)=\"(-?[0-9.]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator(); ++it) {
        const double v = std::stod((*it)[1]);
        CHECK(v >= 40.0 - 1e-9);
        CHECK(v <= 760.0 + 1e-9);
    }

    const std::string again = (dir / "prism2.svg").string();
    opt.out = again;
    CHECK(run("render", "prism.json", opt).code == 0);
    CHECK(read(again) == svg);

    opt.out = (dir / "k3.svg").string();
    CHECK(run("render", "k3.json", opt).code == 0);
    const std::string k3 = read(opt.out);
    CHECK(count(k3, "<circle") == 3);
    CHECK(count(k3, "<line") == 3);

    opt.out = (dir / "octa.svg").string();
    CHECK(run("render", "octahedron.json", opt).code == 0);
    CHECK(count(read(opt.out), "class=\"bar\"") == 12);

    opt.out = "/nonexistent-dir/x/out.svg";
    const Run bad = run("render", "prism.json", opt);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("IoError") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    Options opt;
    opt.seed = 3;
    for (const char* cmd : {"check", "certify", "realize", "oracle"}) {
        const Run a = run(cmd, "prism.json", opt);
        const Run b = run(cmd, "prism.json", opt);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out)["input_digest"] == input_digest(read(kData + "/prism.json")));
    }
}

TEST_CASE("summary output without JSON") {
    Options opt;
    opt.json = false;
    const Run r = run("check", "prism.json", opt);
    CHECK(r.out == "isostatic\n");
}

TEST_CASE("digest") {
    CHECK(input_digest("") == "cbf29ce484222325");
    CHECK(input_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("json round trips") {
    const Move m = make_edge_split(testing::prism(), 0, 1, 3);
    CHECK(move_from_json(json::parse(to_json(m).dump())) == m);
    const QSqrt3 x = QSqrt3::from_fractions(-3, 4, 5, 6);
    CHECK(qsqrt3_from_json(json::parse(to_json(x).dump())) == x);
    TreePartition tp;
    tp.trees[0] = {{0, 1}};
    tp.trees[1] = {{1, 2}};
    tp.trees[2] = {{0, 2}};
    CHECK(partition_from_json(json::parse(to_json(tp).dump())) == tp);
}
