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

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "tilecode/parallel.hpp"

// Usage: acceptance [--known-red id,...] [id ...]
// With --known-red the exit code is 0 iff exactly the listed criteria fail.
int main(int argc, char **argv) {
  tilecode::configure_threads();
  std::vector<int> only;
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-red" && i + 1 < argc) {
      std::stringstream ids(argv[++i]);
      for (std::string id; std::getline(ids, id, ',');) known_red.insert(std::stoi(id));
    } else {
      only.push_back(std::stoi(a));
    }
  }
  auto results = tilecode::acceptance::run(only, &std::cout);
  std::size_t passed = 0;
  std::set<int> red;
  for (const auto &r : results) {
    passed += r.pass;
    if (!r.pass) red.insert(r.id);
  }
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  if (known_red.empty()) return red.empty() ? 0 : 1;
  for (int id : known_red) {
    if (!red.count(id)) std::cout << "criterion " << id << " was listed as known red but passed" << std::endl;
  }
  for (int id : red) {
    if (!known_red.count(id)) std::cout << "criterion " << id << " failed unexpectedly" << std::endl;
  }
  std::cout << "known red: ";
  for (int id : known_red) std::cout << id << " ";
  std::cout << std::endl;
  return red == known_red ? 0 : 1;
}
