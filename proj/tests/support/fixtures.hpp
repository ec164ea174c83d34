// Copyright 2026 The Clevershop Authors
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

#ifndef CLEVERSHOP_TESTS_FIXTURES_HPP
#define CLEVERSHOP_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "clevershop/instance.hpp"
#include "clevershop/reductions.hpp"

namespace clevershop::testing {

// Five books, five shops with rule (3, 10).
inline InstanceData five_shops_data() {
  InstanceData data;
  data.book_count = 5;
  data.shops.assign(5, DiscountRule{3, 10});
  data.offers = {{0, 0, 12}, {1, 0, 10}, {1, 1, 9}, {1, 2, 11}, {2, 1, 7},
                 {2, 2, 4},  {2, 3, 5},  {2, 4, 8}, {3, 3, 8},  {4, 4, 7}};
  return data;
}

inline Instance five_shops() { return validate_instance(five_shops_data()); }

// u1..u5 with edges u1u2, u1u3, u2u3, u2u4, u3u4, u4u5; {u1, u5} is a
// perfect code.
inline SimpleGraph coded_graph() {
  return SimpleGraph{5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}};
}

// The 3-variable, 4-clause formula (x1|x2|x3)(x1|x2|x3)(!x1|!x2|!x3)(!x1|!x2|!x3).
inline CnfFormula small_twice_cnf() {
  CnfFormula f;
  f.variable_count = 3;
  const std::array<Literal, 3> pos{Literal{0, true}, Literal{1, true}, Literal{2, true}};
  const std::array<Literal, 3> neg{Literal{0, false}, Literal{1, false}, Literal{2, false}};
  f.clauses = {pos, pos, neg, neg};
  return f;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline InstanceData unit_data(std::size_t books, std::size_t shops) {
  InstanceData data;
  data.book_count = books;
  data.shops.assign(shops, DiscountRule{0, 0});
  return data;
}

}  // namespace clevershop::testing

#endif  // CLEVERSHOP_TESTS_FIXTURES_HPP
