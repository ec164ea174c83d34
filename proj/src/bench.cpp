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

#include "clevershop/bench.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cerrno>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "clevershop/approx.hpp"
#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"
#include "clevershop/io.hpp"
#include "clevershop/oracle.hpp"

namespace clevershop {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kNames{{
    {Algorithm::Oracle, "oracle"},
    {Algorithm::SubsetDp, "subset-dp"},
    {Algorithm::PriceDp, "price-dp"},
    {Algorithm::Matching2, "matching2"},
    {Algorithm::FStar, "fstar"},
    {Algorithm::Greedy, "greedy"},
}};

using Clock = std::chrono::steady_clock;

struct Task {
  std::size_t file;
  Algorithm algo;
  bool reported;  // false for the extra oracle run used only for gaps
};

struct Running {
  pid_t pid;
  int fd;
  Clock::time_point start;
  std::size_t task;
  std::string output;
};

struct Finished {
  double wall_seconds = 0.0;
  bool timed_out = false;
  std::string output;
};

std::string encode(const AlgoOutcome& outcome) {
  std::ostringstream out;
  out << "OK ";
  if (outcome.result) {
    out << outcome.result->total_cost << ' ' << outcome.result->total_discount;
  } else {
    out << "- -";
  }
  out << ' ' << (outcome.decision ? (*outcome.decision ? "yes" : "no") : "-") << "\n";
  return out.str();
}

// Runs in the child; never returns.
[[noreturn]] void child_main(int fd, Algorithm algo, const Instance& instance) {
  std::string line;
  try {
    line = encode(run_algorithm(algo, instance));
  } catch (const Error& e) {
    line = std::string("ERR ") + e.what() + "\n";
  } catch (const std::exception& e) {
    line = std::string("ERR ") + e.what() + "\n";
  }
  const char* p = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    const ssize_t w = ::write(fd, p, left);
    if (w <= 0) break;
    p += w;
    left -= static_cast<std::size_t>(w);
  }
  ::close(fd);
  ::_exit(0);
}

void decode(const std::string& text, BenchCell& cell) {
  std::istringstream in(text);
  std::string tag;
  in >> tag;
  if (tag == "ERR") {
    std::getline(in >> std::ws, cell.error);
    return;
  }
  if (tag != "OK") {
    cell.error = "solver process died";
    return;
  }
  std::string cost, discount, decision;
  in >> cost >> discount >> decision;
  if (cost != "-") cell.cost = std::stoll(cost);
  if (discount != "-") cell.discount = std::stoll(discount);
  if (decision != "-") cell.decision = decision == "yes";
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [algo, n] : kNames) {
    if (n == name) return algo;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algo) {
  for (const auto& [a, n] : kNames) {
    if (a == algo) return n;
  }
  return "?";
}

AlgoOutcome run_algorithm(Algorithm algo, const Instance& instance, std::optional<Money> budget) {
  switch (algo) {
    case Algorithm::Oracle:
      return {brute_force_min_cost(instance), std::nullopt};
    case Algorithm::SubsetDp:
      return {subset_dp_min_cost(instance), std::nullopt};
    case Algorithm::Matching2:
      return {matching2_min_cost(instance), std::nullopt};
    case Algorithm::FStar:
      return {fstar_unit_price_min_cost(instance), std::nullopt};
    case Algorithm::Greedy:
      return {greedy_max_discount(instance), std::nullopt};
    case Algorithm::PriceDp: {
      const std::optional<Money> k = budget ? budget : instance.budget();
      if (!k) throw Error(ErrorCode::InfeasibleParameters, "price-dp needs a budget");
      PriceVectorDecision d = price_vector_dp(instance, *k);
      return {std::move(d.witness), d.yes};
    }
  }
  throw std::logic_error("unhandled algorithm");
}

std::vector<BenchCell> run_bench(const BenchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(options.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".inst") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<std::optional<Instance>> instances;
  std::vector<std::string> load_errors;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      instances.emplace_back(parse_instance(buffer.str()));
      load_errors.emplace_back();
    } catch (const Error& e) {
      instances.emplace_back();
      load_errors.push_back(e.what());
    }
  }

  const bool oracle_listed = std::find(options.algorithms.begin(), options.algorithms.end(),
                                       Algorithm::Oracle) != options.algorithms.end();
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < files.size(); ++f) {
    if (!instances[f]) continue;
    if (!oracle_listed) tasks.push_back({f, Algorithm::Oracle, false});
    for (Algorithm a : options.algorithms) tasks.push_back({f, a, true});
  }

  std::vector<Finished> finished(tasks.size());
  std::vector<Running> running;
  const unsigned jobs = std::max(1u, options.jobs);
  const auto limit = std::chrono::duration<double>(options.timeout_seconds);
  std::size_t next = 0;
  auto reap = [&](Running& r, bool timed_out) {
    if (timed_out) ::kill(r.pid, SIGKILL);
    int status = 0;
    while (::waitpid(r.pid, &status, 0) < 0 && errno == EINTR) {
    }
    ::close(r.fd);
    Finished& done = finished[r.task];
    done.wall_seconds = std::chrono::duration<double>(Clock::now() - r.start).count();
    done.timed_out = timed_out;
    done.output = std::move(r.output);
  };

  while (next < tasks.size() || !running.empty()) {
    while (next < tasks.size() && running.size() < jobs) {
      int fds[2];
      if (::pipe(fds) != 0) throw std::runtime_error("pipe failed");
      const Task& task = tasks[next];
      const pid_t pid = ::fork();
      if (pid < 0) throw std::runtime_error("fork failed");
      if (pid == 0) {
        ::close(fds[0]);
        child_main(fds[1], task.algo, *instances[task.file]);
      }
      ::close(fds[1]);
      running.push_back({pid, fds[0], Clock::now(), next, {}});
      ++next;
    }

    std::vector<pollfd> polls;
    for (const Running& r : running) polls.push_back({r.fd, POLLIN, 0});
    ::poll(polls.data(), polls.size(), 10);
    for (std::size_t i = running.size(); i-- > 0;) {
      Running& r = running[i];
      bool closed = false;
      if (polls[i].revents & (POLLIN | POLLHUP | POLLERR)) {
        char buf[512];
        const ssize_t got = ::read(r.fd, buf, sizeof buf);
        if (got > 0) {
          r.output.append(buf, static_cast<std::size_t>(got));
        } else if (got == 0 || errno != EINTR) {
          closed = true;
        }
      }
      const bool late = Clock::now() - r.start > limit;
      if (closed || late) {
        reap(r, !closed);
        running.erase(running.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  // Ordered merge: per file, the oracle value first, then the listed cells.
  std::vector<BenchCell> cells;
  std::size_t t = 0;
  for (std::size_t f = 0; f < files.size(); ++f) {
    const std::string name = files[f].filename().string();
    if (!instances[f]) {
      for (Algorithm a : options.algorithms) {
        BenchCell cell;
        cell.instance = name;
        cell.algorithm = std::string(algorithm_name(a));
        cell.error = load_errors[f];
        cells.push_back(std::move(cell));
      }
      continue;
    }
    std::vector<BenchCell> row;
    std::optional<Money> oracle_cost;
    for (; t < tasks.size() && tasks[t].file == f; ++t) {
      BenchCell cell;
      cell.instance = name;
      cell.algorithm = std::string(algorithm_name(tasks[t].algo));
      cell.wall_seconds = finished[t].wall_seconds;
      cell.timed_out = finished[t].timed_out;
      if (!cell.timed_out) decode(finished[t].output, cell);
      if (tasks[t].algo == Algorithm::Oracle) oracle_cost = cell.cost;
      if (tasks[t].reported) row.push_back(std::move(cell));
    }
    for (BenchCell& cell : row) {
      cell.oracle_cost = oracle_cost;
      if (oracle_cost && cell.cost) cell.gap = *cell.cost - *oracle_cost;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string bench_report_json(const std::vector<BenchCell>& cells) {
  using nlohmann::ordered_json;
  auto opt = [](const auto& v) -> ordered_json {
    if (v) return ordered_json(*v);
    return nullptr;
  };
  ordered_json rows = ordered_json::array();
  for (const BenchCell& c : cells) {
    ordered_json row;
    row["instance"] = c.instance;
    row["algorithm"] = c.algorithm;
    row["wall_seconds"] = c.wall_seconds;
    row["timeout"] = c.timed_out;
    row["cost"] = opt(c.cost);
    row["discount"] = opt(c.discount);
    row["decision"] = opt(c.decision);
    row["oracle_cost"] = opt(c.oracle_cost);
    row["gap"] = opt(c.gap);
    row["error"] = c.error.empty() ? ordered_json(nullptr) : ordered_json(c.error);
    rows.push_back(std::move(row));
  }
  ordered_json report;
  report["cells"] = std::move(rows);
  return report.dump(2) + "\n";
}

}  // namespace clevershop
