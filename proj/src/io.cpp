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

#include "clevershop/io.hpp"

#include <charconv>
#include <sstream>

#include "clevershop/error.hpp"

namespace clevershop {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, comment-stripped, tokenized lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Money to_int(const Line& line, std::size_t index) {
  const std::string_view tok = line.tokens[index];
  Money value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string(line.tokens[0]) + " takes " +
                                      std::to_string(count - 1) + " values");
  }
}

// 1-based id in [1, limit] -> 0-based index.
std::size_t to_id(const Line& line, std::size_t index, std::size_t limit, const char* kind) {
  const Money id = to_int(line, index);
  if (id < 1 || static_cast<std::size_t>(id) > limit) {
    throw ParseError(line.number, std::string(kind) + " " + std::to_string(id) +
                                      " out of range 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(id - 1);
}

std::size_t to_count(const Line& line, std::size_t index) {
  const Money value = to_int(line, index);
  if (value < 0) throw ParseError(line.number, "count must be non-negative");
  return static_cast<std::size_t>(value);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "CLEVERSHOP") {
    throw ParseError(header.number, "missing header");
  }
  if (header.tokens[1] != "1") {
    throw ParseError(header.number, "unsupported version " + std::string(header.tokens[1]));
  }

  InstanceData data;
  std::optional<std::size_t> books;
  std::optional<std::size_t> shops;
  std::vector<bool> shop_seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string_view key = line.tokens[0];
    if (key == "BOOKS") {
      expect_arity(line, 2);
      if (books) throw ParseError(line.number, "duplicate BOOKS");
      books = to_count(line, 1);
      data.book_count = *books;
    } else if (key == "SHOPS") {
      expect_arity(line, 2);
      if (shops) throw ParseError(line.number, "duplicate SHOPS");
      shops = to_count(line, 1);
      data.shops.assign(*shops, {});
      shop_seen.assign(*shops, false);
    } else if (key == "SHOP") {
      expect_arity(line, 4);
      if (!shops) throw ParseError(line.number, "SHOP before SHOPS");
      const std::size_t s = to_id(line, 1, *shops, "shop");
      if (shop_seen[s]) throw ParseError(line.number, "shop " + std::to_string(s + 1) + " defined twice");
      shop_seen[s] = true;
      data.shops[s] = DiscountRule{to_int(line, 2), to_int(line, 3)};
    } else if (key == "OFFER") {
      expect_arity(line, 4);
      if (!books || !shops) throw ParseError(line.number, "OFFER before BOOKS and SHOPS");
      const std::size_t b = to_id(line, 1, *books, "book");
      const std::size_t s = to_id(line, 2, *shops, "shop");
      data.offers.push_back({b, s, to_int(line, 3)});
    } else if (key == "BUDGET") {
      expect_arity(line, 2);
      if (data.budget) throw ParseError(line.number, "duplicate BUDGET");
      data.budget = to_int(line, 1);
    } else {
      throw ParseError(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!books) throw ParseError(0, "missing BOOKS");
  if (!shops) throw ParseError(0, "missing SHOPS");
  for (std::size_t s = 0; s < shop_seen.size(); ++s) {
    if (!shop_seen[s]) throw ParseError(0, "missing SHOP line for shop " + std::to_string(s + 1));
  }
  return validate_instance(std::move(data));
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "CLEVERSHOP 1\n";
  out << "BOOKS " << instance.book_count() << "\n";
  out << "SHOPS " << instance.shop_count() << "\n";
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    out << "SHOP " << s + 1 << ' ' << instance.rule(s).discount << ' '
        << instance.rule(s).threshold << "\n";
  }
  for (const Offer& o : instance.offers()) {
    out << "OFFER " << o.book + 1 << ' ' << o.shop + 1 << ' ' << o.price << "\n";
  }
  if (instance.budget()) out << "BUDGET " << *instance.budget() << "\n";
  return out.str();
}

std::string serialize_generated(const GeneratedInstance& generated) {
  std::ostringstream out;
  out << "# generated from " << generated.source << "\n";
  out << "# target_budget " << generated.target_budget << "\n";
  out << "# expected_answer "
      << (generated.expected_answer ? (*generated.expected_answer ? "yes" : "no") : "unknown")
      << "\n";
  if (generated.expected_max_discount) {
    out << "# expected_max_discount " << *generated.expected_max_discount << "\n";
  }
  for (const std::string& note : generated.notes) out << "# note: " << note << "\n";
  for (const auto& [from, to] : generated.witness_map) {
    out << "# map " << from << " -> " << to << "\n";
  }
  out << serialize_instance(generated.instance);
  return out.str();
}

SolutionFile parse_solution(std::string_view text, std::size_t book_count) {
  SolutionFile file;
  file.assignment.choice.assign(book_count, 0);
  std::vector<bool> seen(book_count, false);
  bool have_cost = false;
  for (const Line& line : tokenize(text)) {
    const std::string_view key = line.tokens[0];
    if (key == "ASSIGN") {
      expect_arity(line, 3);
      const std::size_t b = to_id(line, 1, book_count, "book");
      const Money shop = to_int(line, 2);
      if (shop < 1) throw ParseError(line.number, "shop ids start at 1");
      if (seen[b]) throw ParseError(line.number, "book b" + std::to_string(b + 1) + " assigned twice");
      seen[b] = true;
      file.assignment.choice[b] = static_cast<std::size_t>(shop - 1);
    } else if (key == "COST") {
      expect_arity(line, 2);
      if (have_cost) throw ParseError(line.number, "duplicate COST");
      file.declared_cost = to_int(line, 1);
      have_cost = true;
    } else {
      throw ParseError(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  for (std::size_t b = 0; b < book_count; ++b) {
    if (!seen[b]) throw ParseError(0, "book b" + std::to_string(b + 1) + " unassigned");
  }
  if (!have_cost) throw ParseError(0, "missing COST");
  return file;
}

std::string serialize_solution(const SolveResult& result) {
  std::ostringstream out;
  for (std::size_t b = 0; b < result.assignment.choice.size(); ++b) {
    out << "ASSIGN " << b + 1 << ' ' << result.assignment.choice[b] + 1 << "\n";
  }
  out << "COST " << result.total_cost << "\n";
  return out.str();
}

CheckReport check_solution(const Instance& instance, std::string_view solution_text,
                           std::optional<Money> budget) {
  const SolutionFile file = parse_solution(solution_text, instance.book_count());
  CheckReport report;
  report.evaluated = evaluate_assignment(instance, file.assignment);
  report.declared_cost = file.declared_cost;
  if (file.declared_cost != report.evaluated.total_cost) {
    throw Error(ErrorCode::DeclaredCostMismatch,
                "declared " + std::to_string(file.declared_cost) + ", actual " +
                    std::to_string(report.evaluated.total_cost));
  }
  report.budget = budget ? budget : instance.budget();
  report.within_budget = !report.budget || report.evaluated.total_cost <= *report.budget;
  return report;
}

std::vector<Money> parse_weight_list(std::string_view text) {
  std::vector<Money> weights;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Money value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(0, "bad weight '" + token + "'");
    }
    weights.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return weights;
}

SimpleGraph parse_graph(std::string_view text) {
  SimpleGraph graph;
  std::optional<std::size_t> declared;
  std::size_t largest = 0;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] == "VERTICES") {
      expect_arity(line, 2);
      if (declared) throw ParseError(line.number, "duplicate VERTICES");
      declared = to_count(line, 1);
      continue;
    }
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    const Money u = to_int(line, 0);
    const Money v = to_int(line, 1);
    if (u < 1 || v < 1) throw ParseError(line.number, "vertex ids start at 1");
    if (u == v) throw ParseError(line.number, "self-loop");
    if (declared && (static_cast<std::size_t>(u) > *declared ||
                     static_cast<std::size_t>(v) > *declared)) {
      throw ParseError(line.number, "vertex out of range 1.." + std::to_string(*declared));
    }
    largest = std::max({largest, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
    graph.edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  graph.vertex_count = declared.value_or(largest);
  return graph;
}

CnfFormula parse_cnf(std::string_view text) {
  CnfFormula formula;
  std::optional<std::size_t> clauses;
  std::vector<Literal> pending;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] == "c") continue;
    if (line.tokens[0] == "p") {
      if (line.tokens.size() != 4 || line.tokens[1] != "cnf") {
        throw ParseError(line.number, "expected 'p cnf <vars> <clauses>'");
      }
      formula.variable_count = to_count(line, 2);
      clauses = to_count(line, 3);
      continue;
    }
    if (!clauses) throw ParseError(line.number, "clause before problem line");
    for (std::size_t i = 0; i < line.tokens.size(); ++i) {
      const Money lit = to_int(line, i);
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError(line.number, "clause with " + std::to_string(pending.size()) +
                                            " literals, expected 3");
        }
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > formula.variable_count) {
        throw ParseError(line.number, "variable " + std::to_string(var) + " out of range");
      }
      pending.push_back(Literal{var - 1, lit > 0});
    }
  }
  if (!clauses) throw ParseError(0, "missing problem line");
  if (!pending.empty()) throw ParseError(0, "unterminated clause");
  if (formula.clauses.size() != *clauses) {
    throw ParseError(0, "problem line announces " + std::to_string(*clauses) + " clauses, found " +
                            std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::vector<X3CInstance> parse_x3c(std::string_view text) {
  std::vector<X3CInstance> instances;
  std::optional<std::size_t> items;
  for (const Line& line : tokenize(text)) {
    const std::string_view key = line.tokens[0];
    if (key == "ITEMS") {
      expect_arity(line, 2);
      if (items) throw ParseError(line.number, "duplicate ITEMS");
      items = to_count(line, 1);
    } else if (key == "INSTANCE") {
      expect_arity(line, 1);
      if (!items) throw ParseError(line.number, "INSTANCE before ITEMS");
      instances.push_back(X3CInstance{*items, {}});
    } else if (key == "SET") {
      expect_arity(line, 4);
      if (instances.empty()) throw ParseError(line.number, "SET outside an INSTANCE block");
      instances.back().sets.push_back({to_id(line, 1, *items, "item"),
                                       to_id(line, 2, *items, "item"),
                                       to_id(line, 3, *items, "item")});
    } else {
      throw ParseError(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!items) throw ParseError(0, "missing ITEMS");
  return instances;
}

}  // namespace clevershop
