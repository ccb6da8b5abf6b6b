#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GALOIS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(GALOIS_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("closure of C_4 from a file") {
  const auto r = run("closure " + data("c4.grp") + " --k 2 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closure"]["order"] == 8);
  CHECK(j["closed"] == false);
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(nlohmann::json::parse(run("closure " + data("c4.grp") + " --k 2 --format json --timing").out).contains("wall_time"));
}

TEST_CASE("closed group reports closed") {
  const auto r = run("closure " + data("s3.grp") + " --k 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("closed: true") != std::string::npos);
}

TEST_CASE("naive and pruned closures print the same closure section") {
  const auto naive = nlohmann::json::parse(run("closure A_5 --k 4 --algorithm naive --format json").out);
  const auto pruned = nlohmann::json::parse(run("closure A_5 --k 4 --algorithm pruned --format json").out);
  CHECK(naive["closure"].dump() == pruned["closure"].dump());
  CHECK(naive["closure"]["order"] == 120);
}

TEST_CASE("output does not depend on the worker count") {
  for (const char* args : {"closure S_3x_sdS_2 --k 2 --format json", "chain A_4 --format json", "table1 --format json"}) {
    const auto one = run(std::string(args) + " --workers 1");
    const auto three = run(std::string(args) + " --workers 3");
    CHECK(one.out == three.out);
    CHECK(one.code == three.code);
  }
}

TEST_CASE("verify commands") {
  CHECK(run("verify --theorem seress --n 5").code == 0);
  CHECK(run("verify --theorem primitive3 --n 6").code == 0);
  const auto main7 = run("verify --theorem main --n 7 --k 5 --format json");
  CHECK(main7.code == 0);
  const auto j = nlohmann::json::parse(main7.out);
  CHECK(j["groups"].size() == 10);
  CHECK(j["groups"][0]["prediction"]["kind"] == "alternating_times_L");
  CHECK(j["groups"][1]["prediction"]["kind"] == "alternating_times_L");
  CHECK(run("verify --theorem wielandt --n 4").code == 0);
}

TEST_CASE("other commands") {
  CHECK(run("orbit-equiv A_3 S_3 --k 2").out.find("true") != std::string::npos);
  CHECK(run("orbit-equiv A_3 S_3 --k 3").out.find("false") != std::string::npos);
  const auto inv = nlohmann::json::parse(run("invariance " + data("majority3.fun") + " --format json").out);
  CHECK(inv["invariance_group"]["order"] == 6);
  CHECK(run("min-codomain V_4 --k 2").out.find("least codomain size: 3") != std::string::npos);
  CHECK(run("enumerate --n 4").out.find("30 subgroups in 11") != std::string::npos);
  CHECK(run("catalog validate").code == 0);
  CHECK(run("catalog show 'AGL(1,5)'").out.find("degree: 5") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("closure NoSuchGroup --k 2").code == 6);
  CHECK(run("closure /nonexistent/file.grp --k 2").code == 5);
  CHECK(run("closure " + data("bad.grp") + " --k 2").code == 3);
  CHECK(run("closure S_6 --k 2 --algorithm naive --candidate-budget 10").code == 4);
  CHECK(run("closure").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --theorem nonsense --n 3").code == 2);
  CHECK(run("verify --theorem main --n 9 --k 5").code == 7);
  const auto help = run("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("Exit codes") != std::string::npos);
}
