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

#ifndef PATC_PATTERN_HPP_
#define PATC_PATTERN_HPP_

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace patc {

enum class PatKind { kZero, kOne, kTag, kVar, kPlus, kDot, kStar };

// Commutative regular expression over message tags. Immutable and shared.
// Construction goes through the smart constructors below, which flatten and
// sort n-ary nodes and apply the unit/annihilator laws, so two patterns that
// are equal up to AC and units compare equal via key().
class Pattern {
 public:
  Pattern();  // 0

  PatKind kind() const { return node_->kind; }
  const std::string& tag() const { return node_->tag; }
  int var() const { return node_->var; }
  const std::vector<Pattern>& kids() const { return node_->kids; }
  const std::string& key() const { return node_->key; }

  bool is_zero() const { return kind() == PatKind::kZero; }
  bool is_one() const { return kind() == PatKind::kOne; }
  bool is_closed() const { return node_->closed; }

  bool operator==(const Pattern& o) const { return key() == o.key(); }
  bool operator!=(const Pattern& o) const { return key() != o.key(); }
  bool operator<(const Pattern& o) const { return key() < o.key(); }

  static Pattern zero();
  static Pattern one();
  static Pattern tag(const std::string& m);
  static Pattern var(int id);
  static Pattern plus(std::vector<Pattern> ps);
  static Pattern dot(std::vector<Pattern> ps);
  static Pattern plus(const Pattern& a, const Pattern& b) { return plus(std::vector<Pattern>{a, b}); }
  static Pattern dot(const Pattern& a, const Pattern& b) { return dot(std::vector<Pattern>{a, b}); }
  static Pattern star(const Pattern& p);

 private:
  struct Node {
    PatKind kind = PatKind::kZero;
    std::string tag;
    int var = -1;
    std::vector<Pattern> kids;
    std::string key;
    bool closed = true;
  };
  explicit Pattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Pattern make(PatKind k, std::string tag, int var, std::vector<Pattern> kids);

  std::shared_ptr<const Node> node_;
};

class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Concrete syntax: 0, 1, Tag, E + F, E . F, *E; variables print as αN.
std::string to_string(const Pattern& p);

std::set<std::string> tags_of(const Pattern& p);
std::set<int> vars_of(const Pattern& p);
bool mentions_var(const Pattern& p, int v);

// Replaces variables present in `s`; others are left alone.
Pattern substitute(const Pattern& p, const std::map<int, Pattern>& s);

// Commutative Brzozowski derivative E/m. Throws PatternError on variables.
Pattern residual(const Pattern& p, const std::string& m);

}  // namespace patc

#endif  // PATC_PATTERN_HPP_
