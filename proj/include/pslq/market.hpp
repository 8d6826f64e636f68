// Copyright 2026 The pslq Authors
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

// Core domain types: markets with lower/upper quotas, strict preference
// profiles, deterministic and random assignment matrices.
//
// Students and projects are dense 0-based indices internally. Projects carry
// string names for I/O; students are rendered 1-based by the I/O layer.

#ifndef PSLQ_MARKET_HPP_
#define PSLQ_MARKET_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslq/rational.hpp"

namespace pslq {

// Raised for every violated precondition on caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Menu / active set over projects, indexed by project.
using ProjectSet = std::vector<bool>;

// Dense n x k matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int p) { return data_[index(i, p)]; }
  const Rational& operator()(int i, int p) const { return data_[index(i, p)]; }

  std::span<const Rational> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<Rational> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  Rational row_sum(int i) const;
  Rational col_sum(int p) const;
  std::vector<Rational> col_sums() const;
  bool is_integral() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int p) const {
    return static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(p);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Row-stochastic rational matrix; feasibility is checked by is_feasible.
using RandomAssignment = Matrix;

// Strict complete preferences: ranking(i) lists all k projects from most to
// least preferred.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;
  PreferenceProfile(std::vector<std::vector<int>> rankings, int projects);

  int students() const { return static_cast<int>(rankings_.size()); }
  int projects() const { return projects_; }

  std::span<const int> ranking(int student) const { return rankings_[student]; }
  // 0 = most preferred.
  int rank(int student, int project) const {
    return ranks_[student][project];
  }
  bool prefers(int student, int p, int q) const {
    return rank(student, p) < rank(student, q);
  }

  // Same profile with `student`'s report replaced.
  PreferenceProfile with_report(int student, std::vector<int> ranking) const;

  friend bool operator==(const PreferenceProfile& a,
                         const PreferenceProfile& b) {
    return a.projects_ == b.projects_ && a.rankings_ == b.rankings_;
  }

 private:
  int projects_ = 0;
  std::vector<std::vector<int>> rankings_;
  std::vector<std::vector<int>> ranks_;
};

struct ProjectSpec {
  std::string name;
  Rational lower;
  std::optional<Rational> upper;  // nullopt = unbounded
};

class Market {
 public:
  // Validates 0 <= l <= u and sum(l) <= n <= sum(u). Unbounded upper quotas
  // are materialized as u(p) = n.
  Market(std::vector<ProjectSpec> projects, PreferenceProfile profile);

  int students() const { return profile_.students(); }
  int projects() const { return static_cast<int>(names_.size()); }

  const std::string& name(int p) const { return names_[p]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  const Rational& lower(int p) const { return lower_[p]; }
  const Rational& upper(int p) const { return upper_[p]; }
  bool upper_unbounded(int p) const { return unbounded_[p]; }
  const std::vector<Rational>& lower() const { return lower_; }
  const std::vector<Rational>& upper() const { return upper_; }

  // All quotas integral.
  bool integer_quotas() const;

  const PreferenceProfile& profile() const { return profile_; }
  Market with_profile(PreferenceProfile profile) const;
  std::vector<ProjectSpec> specs() const;

  friend bool operator==(const Market&, const Market&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> lower_;
  std::vector<Rational> upper_;
  std::vector<bool> unbounded_;
  PreferenceProfile profile_;
};

// Bijection on {0..n-1}; order[s] is the student served at step s.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> order);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int s) const { return order_[s]; }
  const std::vector<int>& order() const { return order_; }

 private:
  std::vector<int> order_;
};

// Exogenous ordering of students used for ML-fairness.
class MasterList {
 public:
  explicit MasterList(Permutation order);
  int size() const { return order_.size(); }
  // True when student a is ahead of student b.
  bool precedes(int a, int b) const { return position_[a] < position_[b]; }

 private:
  Permutation order_;
  std::vector<int> position_;
};

// Zero-one assignment, stored as the project of each student.
class DeterministicAssignment {
 public:
  DeterministicAssignment() = default;
  DeterministicAssignment(std::vector<int> project_of, int projects);
  // Throws InputError unless every entry is 0/1 with unit row sums.
  static DeterministicAssignment from_matrix(const Matrix& m);

  int students() const { return static_cast<int>(project_of_.size()); }
  int projects() const { return projects_; }
  int operator[](int student) const { return project_of_[student]; }
  const std::vector<int>& project_of() const { return project_of_; }
  std::vector<int> column_counts() const;
  Matrix to_matrix() const;

  friend bool operator==(const DeterministicAssignment&,
                         const DeterministicAssignment&) = default;

 private:
  std::vector<int> project_of_;
  int projects_ = 0;
};

// phi_i(menu): the student's most preferred project in `menu`.
int choice(const PreferenceProfile& profile, int student, const ProjectSet& menu);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return feasible; }
};

// Row sums exactly 1, entries in [0,1], column sums within [l, u].
// Throws InputError on a dimension mismatch.
FeasibilityReport is_feasible(const Matrix& r, const Market& market);
FeasibilityReport is_feasible(const DeterministicAssignment& x,
                              const Market& market);

}  // namespace pslq

#endif  // PSLQ_MARKET_HPP_
