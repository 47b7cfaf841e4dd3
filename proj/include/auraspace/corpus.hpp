// Copyright 2026 The auraspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Worked examples with their published values. Expected strings are compared
// byte-for-byte against query::to_text output.

#ifndef AURASPACE_CORPUS_HPP_
#define AURASPACE_CORPUS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "auraspace/space.hpp"

namespace auraspace {

struct Expectation {
  std::string op;
  std::string arg;
  std::string expected;
  std::string location;  // which example and which computation inside it
};

struct Fixture {
  std::string name;
  std::string space_json;
  std::vector<Expectation> expectations;

  IdealAuraSpace space() const;
};

const std::vector<Fixture>& builtin_fixtures();
/// Throws SpaceError for an unknown name.
const Fixture& builtin_fixture(std::string_view name);

struct CorpusRow {
  std::string fixture;
  std::string op;
  std::string arg;
  std::string expected;
  std::string got;
  std::string location;
  bool ok = false;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// `only` selects a single fixture by name; empty runs everything.
CorpusReport run_corpus(const std::vector<Fixture>& fixtures, std::string_view only = {});
CorpusReport run_corpus(std::string_view only = {});

}  // namespace auraspace

#endif  // AURASPACE_CORPUS_HPP_
