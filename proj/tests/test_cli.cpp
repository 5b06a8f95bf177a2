#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEQLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("cli gen") {
  auto r = run("gen odd-addon --count 5");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n2 13\n3 135\n4 1357\n5 13579\n");
  r = run("gen prime-digital --count 100 --format bfile");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "100 33223");
  r = run("gen nap --t 3 --count 8 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["terms"] ==
        nlohmann::json::array({"1", "2", "4", "5", "10", "11", "13", "14"}));
  r = run("gen erdos-smarandache --count 3 --format csv");
  CHECK(r.out == "index,value\n1,2\n2,3\n3,5\n");
  CHECK(run("gen spds --count 4").out == "1 49\n2 100\n3 144\n4 169\n");
  CHECK(run("gen nary-sieve --count 3 --schedule every-kth").out == "1 1\n2 2\n3 4\n");
  CHECK(run("gen bogus --count 3").code == 2);
  CHECK(run("gen nap --t 2 --count 3").code == 2);
  CHECK(run("gen nary-sieve --schedule nope").code == 2);
  CHECK(run("--format xml gen nap").code == 2);
}

TEST_CASE("cli orbit") {
  auto r = run("orbit digit-multiply --c 7 --start 68");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tail_len"] == 0);
  CHECK(j["cycle"] == nlohmann::json::array({26, 42, 84, 68}));

  j = nlohmann::json::parse(run("orbit subtract-const --c 1 --width 2 --start 52").out);
  CHECK(j["cycle"].size() == 18);
  j = nlohmann::json::parse(run("orbit reverse-subtract --width 3 --start 121").out);
  CHECK(j["cycle"] == nlohmann::json::array({0}));
  // Leading zeros set the width.
  j = nlohmann::json::parse(run("orbit subtract-const --c 1 --start 02").out);
  CHECK(j["width"] == 2);

  CHECK(run("orbit digit-multiply --c 11 --start 68").code == 2);
  CHECK(run("orbit mixed-compose --start 7").code == 2);
  CHECK(run("orbit reverse-subtract --width 2 --start 123").code == 2);
  CHECK(run("orbit spiral --start 12").code == 2);
  CHECK(run("--format bfile orbit reverse-subtract --start 12").code == 2);
}

TEST_CASE("cli census") {
  auto r = run("census reverse-subtract --width 4 --lo 1000 --hi 9999");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["zero_count"] == 182);
  CHECK(j["total"] == 9000);
  CHECK(j["classes"].size() == 4);

  j = nlohmann::json::parse(run("census mixed-compose").out);
  for (const auto& c : j["classes"]) CHECK(c["cycle"].size() > 1);

  const std::string one = run("--jobs 1 census reverse-subtract --width 5").out;
  CHECK(one == run("--jobs 4 census reverse-subtract --width 5").out);
  CHECK(nlohmann::json::parse(one)["zero_count"] == 1820);

  CHECK(run("census reverse-subtract --width 3 --lo 900 --hi 100").code == 2);
  CHECK(run("census reverse-subtract --width 3 --lo 100 --hi 1000").code == 2);
}

TEST_CASE("cli search") {
  auto r = run("search addon-primes --family odd --limit 60");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<int> ranks;
  for (const auto& h : j["hits"]) ranks.push_back(h["rank"]);
  CHECK(ranks == std::vector<int>{2, 10, 16, 34, 49});
  CHECK(j["hits"][1]["digits"] == 15);

  j = nlohmann::json::parse(run("search lucky --digits 2").out);
  CHECK(j["fractions"].size() == 4);
  j = nlohmann::json::parse(run("search factorials --n 288").out);
  CHECK(j["parts"] == nlohmann::json::array({2, 3, 4}));
  j = nlohmann::json::parse(run("search metallic --metallic B --n 2 --count 3").out);
  CHECK(j["rational_root"] == "2");
  CHECK(run("search lipschitz --function S1 --lo 1 --hi 5").code == 2);
  CHECK(run("search nothing").code == 2);
  CHECK(run("search addon-primes --family square").code == 2);
}

TEST_CASE("cli global flags and verify") {
  const std::string path = "cli_out_test.txt";
  std::remove(path.c_str());
  REQUIRE(run("--out " + path + " gen odd-addon --count 2").code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "1 1\n2 13\n");
  std::remove(path.c_str());

  CHECK(run("--seed 7 search addon-primes --limit 20").code == 0);
  CHECK(setenv("SEQLAB_SEED", "12345", 1) == 0);
  CHECK(run("search addon-primes --limit 20").code == 0);
  unsetenv("SEQLAB_SEED");

  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("verify --suite oracles").code == 0);
  CHECK(run("").code == 2);
}
