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

#include "pslq/market.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pslq {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Rational Matrix::row_sum(int i) const {
  Rational s;
  for (const auto& v : row(i)) s += v;
  return s;
}

Rational Matrix::col_sum(int p) const {
  Rational s;
  for (int i = 0; i < rows_; ++i) s += (*this)(i, p);
  return s;
}

std::vector<Rational> Matrix::col_sums() const {
  std::vector<Rational> sums(static_cast<std::size_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int p = 0; p < cols_; ++p) sums[p] += (*this)(i, p);
  return sums;
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& v) { return v.is_integer(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("dimension mismatch");
  for (std::size_t j = 0; j < data_.size(); ++j) data_[j] += o.data_[j];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("dimension mismatch");
  for (std::size_t j = 0; j < data_.size(); ++j) data_[j] -= o.data_[j];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

PreferenceProfile::PreferenceProfile(std::vector<std::vector<int>> rankings,
                                     int projects)
    : projects_(projects), rankings_(std::move(rankings)) {
  if (projects_ < 1) throw InputError("profile needs at least one project");
  ranks_.assign(rankings_.size(), std::vector<int>(projects_, -1));
  for (std::size_t i = 0; i < rankings_.size(); ++i) {
    const auto& r = rankings_[i];
    if (static_cast<int>(r.size()) != projects_) {
      throw InputError("student " + std::to_string(i + 1) + " ranks " +
                       std::to_string(r.size()) + " projects, expected " +
                       std::to_string(projects_));
    }
    for (int pos = 0; pos < projects_; ++pos) {
      const int p = r[pos];
      if (p < 0 || p >= projects_ || ranks_[i][p] != -1) {
        throw InputError("student " + std::to_string(i + 1) +
                         " ranking is not a permutation of the projects");
      }
      ranks_[i][p] = pos;
    }
  }
}

PreferenceProfile PreferenceProfile::with_report(int student,
                                                 std::vector<int> ranking) const {
  auto rankings = rankings_;
  rankings.at(static_cast<std::size_t>(student)) = std::move(ranking);
  return PreferenceProfile(std::move(rankings), projects_);
}

Market::Market(std::vector<ProjectSpec> projects, PreferenceProfile profile)
    : profile_(std::move(profile)) {
  const int n = profile_.students();
  if (n < 1) throw InputError("no students");
  if (projects.empty()) throw InputError("no projects");
  if (static_cast<int>(projects.size()) != profile_.projects()) {
    throw InputError("profile ranks " + std::to_string(profile_.projects()) +
                     " projects but market has " +
                     std::to_string(projects.size()));
  }
  std::set<std::string> seen;
  Rational sum_lower;
  Rational sum_upper;
  for (auto& spec : projects) {
    if (spec.name.empty()) throw InputError("project with empty name");
    if (!seen.insert(spec.name).second) {
      throw InputError("duplicate project name '" + spec.name + "'");
    }
    const Rational upper = spec.upper.value_or(Rational(n));
    if (spec.lower.sign() < 0) {
      throw InputError("project '" + spec.name + "': lower quota " +
                       spec.lower.str() + " is negative");
    }
    if (spec.upper && upper < spec.lower) {
      throw InputError("project '" + spec.name + "': lower quota " +
                       spec.lower.str() + " exceeds upper quota " + upper.str());
    }
    sum_lower += spec.lower;
    sum_upper += upper;
    names_.push_back(std::move(spec.name));
    lower_.push_back(spec.lower);
    upper_.push_back(upper);
    unbounded_.push_back(!spec.upper.has_value());
  }
  if (sum_lower > Rational(n)) {
    throw InputError("infeasible market: sum of lower quotas " + sum_lower.str() +
                     " exceeds n = " + std::to_string(n) +
                     " (need sum(l) <= n <= sum(u))");
  }
  if (sum_upper < Rational(n)) {
    throw InputError("infeasible market: sum of upper quotas " + sum_upper.str() +
                     " is below n = " + std::to_string(n) +
                     " (need sum(l) <= n <= sum(u))");
  }
}

std::optional<int> Market::index_of(std::string_view name) const {
  for (std::size_t p = 0; p < names_.size(); ++p) {
    if (names_[p] == name) return static_cast<int>(p);
  }
  return std::nullopt;
}

bool Market::integer_quotas() const {
  for (int p = 0; p < projects(); ++p) {
    if (!lower_[p].is_integer() || !upper_[p].is_integer()) return false;
  }
  return true;
}

std::vector<ProjectSpec> Market::specs() const {
  std::vector<ProjectSpec> out;
  for (int p = 0; p < projects(); ++p) {
    out.push_back({names_[p], lower_[p],
                   unbounded_[p] ? std::nullopt : std::optional(upper_[p])});
  }
  return out;
}

Market Market::with_profile(PreferenceProfile profile) const {
  return Market(specs(), std::move(profile));
}

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> hit(order_.size(), false);
  for (int s : order_) {
    if (s < 0 || s >= size() || hit[s]) throw InputError("not a permutation");
    hit[s] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) order[s] = s;
  return Permutation(std::move(order));
}

MasterList::MasterList(Permutation order)
    : order_(std::move(order)), position_(order_.order().size()) {
  for (int s = 0; s < order_.size(); ++s) position_[order_[s]] = s;
}

DeterministicAssignment::DeterministicAssignment(std::vector<int> project_of,
                                                 int projects)
    : project_of_(std::move(project_of)), projects_(projects) {
  for (int p : project_of_) {
    if (p < 0 || p >= projects_) throw InputError("project index out of range");
  }
}

DeterministicAssignment DeterministicAssignment::from_matrix(const Matrix& m) {
  std::vector<int> project_of(static_cast<std::size_t>(m.rows()), -1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int p = 0; p < m.cols(); ++p) {
      const Rational& v = m(i, p);
      if (v.is_zero()) continue;
      if (v != Rational(1) || project_of[i] != -1) {
        throw InputError("row " + std::to_string(i + 1) +
                         " is not a zero-one unit row");
      }
      project_of[i] = p;
    }
    if (project_of[i] == -1) {
      throw InputError("row " + std::to_string(i + 1) + " is empty");
    }
  }
  return DeterministicAssignment(std::move(project_of), m.cols());
}

std::vector<int> DeterministicAssignment::column_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(projects_), 0);
  for (int p : project_of_) ++counts[p];
  return counts;
}

Matrix DeterministicAssignment::to_matrix() const {
  Matrix m(students(), projects_);
  for (int i = 0; i < students(); ++i) m(i, project_of_[i]) = Rational(1);
  return m;
}

int choice(const PreferenceProfile& profile, int student, const ProjectSet& menu) {
  if (static_cast<int>(menu.size()) != profile.projects()) {
    throw InputError("menu size does not match project count");
  }
  for (int p : profile.ranking(student)) {
    if (menu[p]) return p;
  }
  throw InputError("empty menu");
}

FeasibilityReport is_feasible(const Matrix& r, const Market& market) {
  if (r.rows() != market.students() || r.cols() != market.projects()) {
    throw InputError("assignment is " + std::to_string(r.rows()) + "x" +
                     std::to_string(r.cols()) + " but market is " +
                     std::to_string(market.students()) + "x" +
                     std::to_string(market.projects()));
  }
  FeasibilityReport report;
  auto fail = [&](std::string msg) {
    report.feasible = false;
    report.violations.push_back(std::move(msg));
  };
  const Rational one(1);
  for (int i = 0; i < r.rows(); ++i) {
    for (int p = 0; p < r.cols(); ++p) {
      const Rational& v = r(i, p);
      if (v.sign() < 0 || v > one) {
        fail("entry (" + std::to_string(i + 1) + "," + market.name(p) + ") = " +
             v.str() + " outside [0,1]");
      }
    }
    const Rational s = r.row_sum(i);
    if (s != one) fail("row " + std::to_string(i + 1) + " sum " + s.str() + " != 1");
  }
  const auto cols = r.col_sums();
  for (int p = 0; p < r.cols(); ++p) {
    const std::string& name = market.name(p);
    if (cols[p] < market.lower(p)) {
      fail("column " + name + " sum " + cols[p].str() + " < l(" + name +
           ")=" + market.lower(p).str());
    }
    if (cols[p] > market.upper(p)) {
      fail("column " + name + " sum " + cols[p].str() + " > u(" + name +
           ")=" + market.upper(p).str());
    }
  }
  return report;
}

FeasibilityReport is_feasible(const DeterministicAssignment& x,
                              const Market& market) {
  return is_feasible(x.to_matrix(), market);
}

}  // namespace pslq
