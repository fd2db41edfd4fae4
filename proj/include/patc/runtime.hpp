// Copyright 2026 The patc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATC_RUNTIME_HPP_
#define PATC_RUNTIME_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "patc/diagnostic.hpp"
#include "patc/ir.hpp"

// Small-step interpreter over the IR. Threads carry a term and a frame
// stack; values are substituted into terms, so mailbox names appear as
// literal VK::kName nodes and can be counted exactly.
namespace patc::runtime {

enum class OutcomeKind { kTerminated, kDeadlock, kFailGuardHit, kStepLimit };
const char* outcome_name(OutcomeKind k);

struct Outcome {
  OutcomeKind kind = OutcomeKind::kTerminated;
  int64_t mailbox = -1;  // FailGuardHit
  Span span;             // FailGuardHit: the guard
  std::string detail;
};

struct Frame {
  std::string binder;
  ir::TermP cont;
};

struct Thread {
  int id = 0;
  ir::TermP term;
  std::vector<Frame> stack;  // top is back()
  std::map<int64_t, int> refs;  // name occurrences in term and stack
};

struct Message {
  std::string tag;
  std::vector<ir::ValueP> payload;
};

struct Options {
  uint64_t seed = 1;
  int64_t max_steps = 100000;
  bool trace = false;
  // Streams program output as it happens when set; output is captured in
  // the result either way.
  std::function<void(const std::string&)> on_output;
  std::function<void(const std::string&)> on_trace;
};

struct RunResult {
  Outcome outcome;
  std::string output;
  std::vector<std::string> trace;
  std::vector<std::string> notes;  // monitor messages
  int64_t steps = 0;
};

class Machine {
 public:
  // One thread running the program body (none if the body is absent).
  Machine(const ir::Program& p, uint64_t seed);

  // Applies one redex picked by the scheduler. Returns an outcome when the
  // configuration can no longer step (or a fail clause was selected).
  std::optional<Outcome> step();

  // Outcome of a configuration with no enabled redex.
  Outcome final_outcome() const;

  // Maintained reference counts equal a full recount.
  bool refcounts_consistent() const;

  // Every unfinished thread waits on a guard none of whose receive tags has
  // a pending message.
  bool blocked_on_receives_only() const;

  const std::vector<Thread>& threads() const { return threads_; }
  const std::map<int64_t, std::deque<Message>>& mailboxes() const { return queues_; }
  const std::map<int64_t, int>& refcounts() const { return refs_; }
  int64_t steps() const { return steps_; }
  const std::string& output() const { return output_; }
  const std::vector<std::string>& trace() const { return trace_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void set_trace(bool on) { tracing_ = on; }
  void set_output_sink(std::function<void(const std::string&)> f) { out_sink_ = std::move(f); }
  void set_trace_sink(std::function<void(const std::string&)> f) { trace_sink_ = std::move(f); }

 private:
  struct Redex {
    size_t thread;
    int clause = -1;  // guard clause index, -1 otherwise
  };

  std::vector<Redex> enabled();
  bool done(const Thread& t) const;
  std::optional<Outcome> fire(const Redex& r);
  void add_refs(const std::map<int64_t, int>& m, int sign);
  std::map<int64_t, int> count_thread(const Thread& t) const;
  void retire_finished();
  void log(int thread, const std::string& rule, const std::string& what);

  std::map<std::string, const ir::Def*> defs_;
  std::vector<Thread> threads_;
  std::map<int64_t, std::deque<Message>> queues_;
  std::map<int64_t, int> refs_;  // threads plus message payloads
  std::mt19937_64 rng_;
  int64_t next_name_ = 0;
  int next_thread_ = 0;
  int64_t steps_ = 0;
  bool tracing_ = false;
  std::string output_;
  std::vector<std::string> trace_;
  std::vector<std::string> notes_;
  std::function<void(const std::string&)> out_sink_;
  std::function<void(const std::string&)> trace_sink_;
};

// Deterministic in (program, seed, max_steps).
RunResult run(const ir::Program& p, const Options& opt);

// Helpers exposed for tests.
ir::TermP subst(const ir::TermP& t, const std::map<std::string, ir::ValueP>& s);
void count_names(const ir::Term& t, std::map<int64_t, int>& out);
void count_names(const ir::Value& v, std::map<int64_t, int>& out);

}  // namespace patc::runtime

#endif  // PATC_RUNTIME_HPP_
