#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PRIMECONV_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("primeconv_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("convolve") {
  const auto input = write_file("in.txt", "4\n5\n6\n");
  const auto kernel = write_file("k.txt", "1\n2\n3\n");
  const auto delta = write_file("delta.txt", "1\n0\n0\n");
  for (const char* engine : {"direct", "fast-prime", "winograd-two-factor"}) {
    const auto r = run("convolve " + input + " " + kernel + " --engine " + engine);
    CHECK(r.code == 0);
    CHECK(r.out == "31\n31\n28\n");
  }
  CHECK(run("convolve " + input + " " + delta + " --engine direct").out == "4\n5\n6\n");
  CHECK(run("convolve " + input + " " + kernel + " --linear --engine direct").out == "4\n13\n28\n");
  CHECK(run("convolve " + input + " " + kernel + " --linear --pad double --engine direct").out == "4\n13\n28\n");

  const auto cin = write_file("cin.txt", "1 1\n0 0\n0 0\n");
  CHECK(run("convolve " + cin + " " + kernel + " --engine direct").out == "1 1\n2 2\n3 3\n");
}

TEST_CASE("convolve errors") {
  const auto three = write_file("three.txt", "1\n2\n3\n");
  const auto four = write_file("four.txt", "1\n2\n3\n4\n");
  const auto bad = write_file("bad.txt", "1\nx\n");

  auto r = run("convolve " + three + " " + four);
  CHECK(r.code == 2);
  CHECK(r.out.find("has 3 samples") != std::string::npos);
  CHECK(r.out.find("has 4") != std::string::npos);

  CHECK(run("convolve " + bad + " " + three).code == 2);
  CHECK(run("convolve " + four + " " + four + " --require-prime").code == 2);
  CHECK(run("convolve " + four + " " + four + " --engine fast-prime").out.find("composite") != std::string::npos);
  CHECK(run("convolve " + three + " " + three + " --engine fft").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("dft") {
  const auto delta = write_file("dft_delta.txt", "1\n0\n0\n0\n0\n");
  const auto r = run("dft " + delta);
  CHECK(r.code == 0);
  CHECK(r.out == "1 0\n1 0\n1 0\n1 0\n1 0\n");
  CHECK(run("dft " + write_file("dft4.txt", "1\n2\n3\n4\n")).code == 2);
}

TEST_CASE("table, verify and bench") {
  auto t = run("table --sizes 3,5,7,11,13,17,19,23 --engine fast-prime --format csv");
  CHECK(t.code == 0);
  CHECK(t.out.find("\n3,fast-prime,4,") != std::string::npos);
  CHECK(t.out.find("\n23,fast-prime,254,") != std::string::npos);

  auto v1 = run("verify --seed 42 --sizes 2,3,5,7 --trials 10");
  auto v2 = run("verify --seed 42 --sizes 2,3,5,7 --trials 10");
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
  CHECK(run("verify --sizes 5 --trials 3 --inject-fault 1e-3").code == 1);
  CHECK(run("verify --sizes 5 --trials 3 --tol 0").code == 1);

  const auto out = (std::filesystem::temp_directory_path() / "primeconv_cli_bench.json").string();
  CHECK(run("bench --sizes 11 --trials 3 --format json --out " + out).code == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("mult_ratio_fast_vs_direct") != std::string::npos);
  CHECK(run("bench --sizes 11 --trials 2").code == 2);
  CHECK(run("table --sizes 3 --format xml").code == 2);
}
