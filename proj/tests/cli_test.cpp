// Copyright 2026 The tilecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#ifndef TILECODE_CLI_PATH
#error "TILECODE_CLI_PATH must name the built CLI"
#endif

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded
Outcome run(const std::string &args) {
  Outcome r;
  std::string cmd = std::string(TILECODE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, Generate) {
  Outcome r = run("fib generate --gamma 1/2 --lo 0 --hi 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("101011"), std::string::npos);
}

TEST(Cli, SingularGamma) {
  EXPECT_EQ(run("fib generate --gamma 0 --hi 5").code, 2);
  EXPECT_EQ(run("fib generate --gamma 0 --hi 5 --convention left").code, 0);
}

TEST(Cli, Spectrum) {
  Outcome r = run("fib spectrum --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-2 + sqrt(5)"), std::string::npos);
  EXPECT_NE(r.out.find("10"), std::string::npos);
}

TEST(Cli, Recover) {
  Outcome r = run("recover --word 1011??01 --k0 1 --k1 1 --level 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10110101"), std::string::npos);
  EXPECT_EQ(run("recover --word 1?1?0101 --k0 1 --k1 1 --level 3").code, 2);
}

TEST(Cli, CodeVerify) {
  EXPECT_EQ(run("code verify --k0 1 --k1 1 --level 3").code, 0);
  EXPECT_EQ(run("code verify --k0 2 --k1 2 --seeds 1100,1010 --level 2").code, 2);
  EXPECT_EQ(run("code verify --k0 2 --k1 2 --seeds 1100,1010 --level 2 --no-validate").code, 1);
}

TEST(Cli, TileRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "tilecode_cli_test";
  std::filesystem::create_directories(dir);
  std::string json = (dir / "w.json").string(), svg = (dir / "w.svg").string();
  EXPECT_EQ(run("tile --seed wheel --level 2 --out " + json).code, 0);
  Outcome info = run("tile --input " + json + " --lines");
  EXPECT_EQ(info.code, 0);
  EXPECT_NE(info.out.find("matching\tok"), std::string::npos);
  EXPECT_EQ(run("render --input " + json + " --layers tiles,ammann --out " + svg).code, 0);
  EXPECT_TRUE(std::filesystem::exists(svg));
  EXPECT_EQ(run("census --input " + json).code, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BadUsage) {
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("fib spectrum --n 0").code, 2);
  EXPECT_EQ(run("tile --input /nonexistent/x.json").code, 2);
}

}  // namespace
