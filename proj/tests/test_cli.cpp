#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dq/quadruples.hpp"
#include "dq/rational.hpp"
#include "dq/serialize.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped, stdout and
// the exit code come back.
Run run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + DQ_CLI_PATH + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& out) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < out.size()) {
        const size_t nl = out.find('\n', pos);
        const size_t end = nl == std::string::npos ? out.size() : nl;
        if (end > pos) lines.push_back(out.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

bool reverifies(const json& qu) {
    const auto cert = dq::verify_quadruple(
        dq::Rational::parse(qu.at("q").get<std::string>()),
        dq::Rational::parse(qu.at("a").get<std::string>()),
        dq::Rational::parse(qu.at("b").get<std::string>()),
        dq::Rational::parse(qu.at("c").get<std::string>()),
        dq::Rational::parse(qu.at("d").get<std::string>()));
    return cert.pass;
}

}  // namespace

TEST_CASE("verify: exit codes and certificates") {
    const Run fermat = run_cli("verify --q 1 1 3 8 120");
    CHECK(fermat.code == 0);
    const json cert = json::parse(fermat.out);
    CHECK(cert.at("pass") == true);
    const std::vector<std::string> roots{"2", "3", "11", "5", "19", "31"};
    CHECK(cert.at("roots") == json(roots));

    const Run dio = run_cli("verify --q 1 1/16 33/16 17/4 105/16");
    CHECK(dio.code == 0);
    CHECK(json::parse(dio.out).at("roots")[0] == "17/16");

    const Run no = run_cli("verify --q 1 1 2 3 4");
    CHECK(no.code == 1);
    const json nocert = json::parse(no.out);
    CHECK(nocert.at("pass") == false);
    CHECK(nocert.at("roots")[0].is_null());

    CHECK(run_cli("verify --q 1 1 x 3 4").code == 2);
    CHECK(run_cli("verify --q 1").code == 2);
    CHECK(run_cli("verify --q 1 1 2 3").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
}

TEST_CASE("family: records, degeneracy, formats") {
    const Run t2 = run_cli("family --q -3 --u -1 --t 2");
    CHECK(t2.code == 0);
    const json rec = json::parse(t2.out);
    CHECK(rec.at("verified") == true);
    CHECK(rec.at("m") == "28");
    CHECK(rec.at("quadruple").at("a") == "402860642/132871921");
    CHECK(rec.at("quadruple").at("b") == "930103447/402860642");
    CHECK(rec.at("quadruple").at("c") == "405916418/131871649");
    CHECK(rec.at("quadruple").at("d") == "263743298/202958209");
    CHECK(reverifies(rec.at("quadruple")));

    const Run t1 = run_cli("family --q -3 --u -1 --t 1");
    CHECK(t1.code == 0);
    const json drec = json::parse(t1.out);
    CHECK(drec.at("degenerate") == true);
    CHECK_FALSE(drec.contains("quadruple"));

    const Run q3 = run_cli("family --q 3 --u 1 --t 4");
    CHECK(q3.code == 0);
    const json q3rec = json::parse(q3.out);
    CHECK(q3rec.at("m") == "13");
    CHECK(reverifies(q3rec.at("quadruple")));

    const Run range = run_cli("family --q -3 --u -1 --t-range 1 3");
    CHECK(range.code == 0);
    const auto lines = lines_of(range.out);
    REQUIRE(lines.size() == 3);
    CHECK(json::parse(lines[0]).at("degenerate") == true);
    CHECK(json::parse(lines[1]).at("verified") == true);
    CHECK(json::parse(lines[2]).at("verified") == true);

    // Invalid parameters throughout → exit 2.
    CHECK(run_cli("family --q -3 --u 0 --t 2").code == 2);
    CHECK(run_cli("family --q -3 --u -1").code == 2);  // no t samples

    const Run csv = run_cli("family --q -3 --u -1 --t-range 1 2 --format csv");
    CHECK(csv.code == 0);
    const auto rows = lines_of(csv.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "t,u,m,a,b,c,d,verified,reason");
    CHECK(rows[1].find(",false,") != std::string::npos);
    CHECK(rows[2].find("402860642/132871921") != std::string::npos);
    CHECK(rows[2].find(",true,") != std::string::npos);
}

TEST_CASE("check-m: verdicts and domain errors") {
    CHECK(run_cli("check-m --q 3 --m 9").code == 2);   // m = q²
    CHECK(run_cli("check-m --q 7 --m 5").code == 2);   // no base point up to default height

    const Run yes = run_cli("check-m --q -3 --m 28 --height 6");
    CHECK(yes.code == 0);
    const json ydoc = json::parse(yes.out);
    CHECK(ydoc.at("base_point") == json{{"x", "1"}, {"y", "2"}});
    CHECK(ydoc.at("verdict").at("status") == "exists");
    CHECK(ydoc.at("partial") == true);
    REQUIRE(ydoc.at("quadruple").is_object());
    CHECK(reverifies(ydoc.at("quadruple")));

    const Run no = run_cli("check-m --q 3 --m 1012 --height 50");
    CHECK(no.code == 1);
    const json ndoc = json::parse(no.out);
    CHECK(ndoc.at("verdict").at("status") == "none_among_supplied");
    CHECK(ndoc.at("quadruple").is_null());
    CHECK(ndoc.at("partial") == true);
    CHECK(ndoc.at("disclaimer").is_string());

    // Supplied points anchor the check when the search bound is too small.
    const std::string path = "/tmp/dq_points_test.json";
    {
        std::ofstream f(path);
        f << R"([{"x":"5","y":"7"}])";
    }
    const Run fromfile = run_cli("check-m --q 3 --m 1012 --height 4 --points " + path);
    CHECK(fromfile.code == 1);
    const json fdoc = json::parse(fromfile.out);
    CHECK(fdoc.at("base_point") == json{{"x", "5"}, {"y", "7"}});
    CHECK(fdoc.at("verdict").at("status") == "none_among_supplied");
    std::remove(path.c_str());

    // Without the file the same bound has nothing to anchor the map.
    CHECK(run_cli("check-m --q 3 --m 1012 --height 4").code == 2);
}

TEST_CASE("search: points, quadruples, determinism") {
    const Run pts = run_cli("search --q 1 --m 2880 --height 40");
    CHECK(pts.code == 0);
    const auto lines = lines_of(pts.out);
    CHECK(lines.size() == 28);
    bool has231 = false;
    for (const auto& l : lines) {
        const json p = json::parse(l);
        has231 = has231 || (p.at("x") == "2" && p.at("y") == "31");
    }
    CHECK(has231);

    const Run one = run_cli("search --q 1 --m 2880 --height 40", "DQ_THREADS=1");
    const Run four = run_cli("search --q 1 --m 2880 --height 40", "DQ_THREADS=4");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == pts.out);

    CHECK(run_cli("search --q 7 --m 0").code == 2);
    CHECK(run_cli("search --q 0 --m 5").code == 2);

    const Run bf = run_cli("search --q 1 --quadruples --int-bound 130");
    CHECK(bf.code == 0);
    bool has_fermat = false;
    for (const auto& l : lines_of(bf.out)) {
        const json qu = json::parse(l);
        CHECK(reverifies(qu));
        has_fermat = has_fermat || (qu.at("a") == "1" && qu.at("b") == "3" &&
                                    qu.at("c") == "8" && qu.at("d") == "120");
    }
    CHECK(has_fermat);

    CHECK(run_cli("search --q 1 --quadruples").code == 2);  // missing bounds
}
