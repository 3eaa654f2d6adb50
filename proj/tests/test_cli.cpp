#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylface/cli.hpp"
#include "weylface/json_io.hpp"

#include <sstream>

using namespace weylface;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("weights command lists the adjoint weights of A2") {
    auto r = run({"weights", "A2", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("7 weights") != std::string::npos);
    CHECK(r.out.find("(1,1)") != std::string::npos);
    CHECK(r.out.find("(0,0)") != std::string::npos);
}

TEST_CASE("faces command reports the hexagon face count") {
    auto r = run({"faces", "A2", "1,1", "--J", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("13 faces") != std::string::npos);
}

TEST_CASE("face-equal matches the frozen examples") {
    auto eq = run({"face-equal", "A2", "1,0", "--I1", "2", "--I2", ""});
    CHECK(eq.code == 0);
    CHECK(eq.out == "equal (criteria a,b,c agree)\n");

    auto ne = run({"face-equal", "A2", "1,0", "--I1", "1", "--I2", ""});
    CHECK(ne.code == 0);
    CHECK(ne.out == "unequal (criteria a,b,c agree)\n");
}

TEST_CASE("exit codes: usage vs domain errors") {
    // malformed type
    CHECK(run({"weights", "A0", "1"}).code == 2);
    // malformed coordinates
    CHECK(run({"weights", "A2", "1,x"}).code == 2);
    CHECK(run({"weights", "A2", "1"}).code == 2);
    // irrational input is unrepresentable; the parser says so
    CHECK(run({"weights", "A2", "1.4142,0"}).code == 2);
    // hypothesis violation: lambda outside the dominant cone
    auto dom = run({"weights", "A2", "-1,0"});
    CHECK(dom.code == 1);
    CHECK(dom.err.find("dominant") != std::string::npos);
    // hypothesis violation: J outside the integral index set
    CHECK(run({"gvm-hull", "A2", "1/2,1", "--J", "1"}).code == 1);
    // unknown command
    CHECK(run({"frobnicate"}).code == 2);
    // no command
    CHECK(run({}).code == 2);
}

TEST_CASE("gvm-hull prints the Verma half-line") {
    auto r = run({"gvm-hull", "A1", "0", "--J", ""});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 points, 1 rays") != std::string::npos);
    CHECK(r.out.find("(-1)") != std::string::npos);
}

TEST_CASE("weakface command verdicts") {
    auto not_weak = run({"weakface", "A1", "2", "--Y", "0"});
    CHECK(not_weak.code == 0);
    CHECK(not_weak.out.find("weak face: no") != std::string::npos);

    auto pos = run({"weakface", "A1", "2", "--Y", "2"});
    CHECK(pos.code == 0);
    CHECK(pos.out.find("weak face: yes") != std::string::npos);
    CHECK(pos.out.find("positive weak face: yes") != std::string::npos);

    auto enumerated = run({"weakface", "A2", "1,1", "--enumerate"});
    CHECK(enumerated.code == 0);
    CHECK(enumerated.out.find("13 weak faces") != std::string::npos);
}

TEST_CASE("truncate and face-weights commands") {
    auto t = run({"truncate", "A2", "1,1", "--I0", "1"});
    CHECK(t.code == 0);
    CHECK(t.out.find("2 weights") != std::string::npos);
    CHECK(t.out.find("(-1,2)") != std::string::npos);

    auto fw = run({"face-weights", "A2", "1,0", "--I0", "1", "--w", "1"});
    CHECK(fw.code == 0);
    CHECK(fw.out.find("finite part: 2 weights") != std::string::npos);

    // an infinite face advertises its subtracted rays instead of truncating
    auto inf = run({"face-weights", "A2", "1,1", "--J", "1", "--I0", "1,2"});
    CHECK(inf.code == 0);
    CHECK(inf.out.find("minus Z_+ combinations of 2 roots") != std::string::npos);

    auto trunc_weak = run({"weakface", "A2", "1,1", "--I0", "1"});
    CHECK(trunc_weak.code == 0);
    CHECK(trunc_weak.out.find("weak face: yes, positive weak face: yes") != std::string::npos);
}

TEST_CASE("maximizer and center commands") {
    auto m = run({"maximizer", "A2", "1,1", "--nu", "0,3"});
    CHECK(m.code == 0);
    CHECK(m.out.find("2 weights") != std::string::npos);

    auto c = run({"center", "A2", "1,1", "--J", "1"});
    CHECK(c.code == 0);
    CHECK(c.out.find("(0,3/2)") != std::string::npos);
    CHECK(c.out.find("a_1/|Y|=1/2") != std::string::npos);
}

TEST_CASE("verify command: clean suite exits zero and reports counts") {
    auto r = run({"verify", "lp", "--types", "A1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 violations") != std::string::npos);
    CHECK(r.out.find("total violations: 0") != std::string::npos);

    auto t2 = run({"verify", "T2", "--types", "A1,A2", "--max-coord", "2"});
    CHECK(t2.code == 0);
    CHECK(t2.out.find("total violations: 0") != std::string::npos);

    auto everything = run({"verify", "all", "--types", "A1", "--max-coord", "1", "--json"});
    CHECK(everything.code == 0);
    json parsed = json::parse(everything.out);
    CHECK(parsed["total_violations"].get<long long>() == 0);
    CHECK(parsed["reports"].size() > 0);

    auto bad = run({"verify", "nosuchsuite"});
    CHECK(bad.code == 2);
}

TEST_CASE("roots command prints the G2 data") {
    auto r = run({"roots", "G2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 positive roots") != std::string::npos);
    auto j = run({"roots", "B2", "--json"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["positive_roots"].size() == 4);
    CHECK(parsed["cartan_matrix"][0][1].get<long long>() == -1);
    CHECK(parsed["cartan_matrix"][1][0].get<long long>() == -2);
}

TEST_CASE("json output round-trips exactly") {
    auto r = run({"weights", "A2", "1,1", "--json"});
    REQUIRE(r.code == 0);
    json parsed = json::parse(r.out);
    WeightSet ws = weight_set_from_json(parsed);
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    CHECK(ws == simple_module_weights(a2, Weight(QVec{Rat(1), Rat(1)})));

    auto hull = run({"gvm-hull", "A2", "1,1", "--J", "1", "--json"});
    REQUIRE(hull.code == 0);
    VPolyhedron p = vpolyhedron_from_json(json::parse(hull.out));
    CHECK(p.points.size() == 2);
    CHECK(p.rays.size() == 2);

    // rationals keep exact p/q form
    auto c = run({"center", "A2", "1,1", "--J", "1", "--json"});
    REQUIRE(c.code == 0);
    json cj = json::parse(c.out);
    CHECK(cj["center"][1].get<std::string>() == "3/2");

    // faces re-parse into equal canonical data
    auto f = run({"faces", "A2", "1,1", "--J", "1,2", "--json"});
    REQUIRE(f.code == 0);
    auto faces = faces_from_json(json::parse(f.out), 2);
    CHECK(faces.size() == 13);
    CHECK(faces_to_json(faces).dump(2) + "\n" == f.out);

    // face weights carry the finite part plus the subtracted ray roots
    auto fw = run({"face-weights", "A2", "1,1", "--J", "1", "--I0", "1,2", "--json"});
    REQUIRE(fw.code == 0);
    json fwj = json::parse(fw.out);
    WeightSet finite = weight_set_from_json(fwj["finite_part"]);
    CHECK(finite.size() == 2);
    CHECK(fwj["subtracted_rays"].size() == 2);

    // weak-face verdicts expose the violating combination exactly
    auto wf = run({"weakface", "A1", "2", "--Y", "0", "--json"});
    REQUIRE(wf.code == 0);
    json wfj = json::parse(wf.out);
    CHECK(wfj["weak"].get<bool>() == false);
    CHECK(wfj["positive"].get<bool>() == false);
    QVec rcoeffs = rat_vec_from_json(wfj["counterexample"]["r"]);
    Rat sum;
    for (const auto& c : rcoeffs) sum += c;
    CHECK(sum == Rat(1));
}

TEST_CASE("identical invocations produce identical bytes") {
    for (auto args : {std::vector<std::string>{"faces", "B2", "1,1", "--J", "1,2"},
                      std::vector<std::string>{"weights", "G2", "1,0", "--json"},
                      std::vector<std::string>{"verify", "L22", "--types", "A2,B2"}}) {
        auto first = run(args);
        auto second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}
