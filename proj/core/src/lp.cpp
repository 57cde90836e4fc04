#include "minlin/lp.hpp"

#include "minlin/error.hpp"

#include <optional>

namespace minlin::lp {

std::size_t LinearProgram::add_variable(std::string name, bool nonnegative) {
  names_.push_back(std::move(name));
  nonnegative_.push_back(nonnegative);
  objective_.emplace_back(0);
  for (auto& c : constraints_) c.coefficients.emplace_back(0);
  return names_.size() - 1;
}

void LinearProgram::set_objective(std::size_t variable, Rational coefficient) {
  objective_.at(variable) = std::move(coefficient);
}

void LinearProgram::add_constraint(const std::vector<Term>& terms, Relation relation,
                                   Rational rhs) {
  std::vector<Rational> row(names_.size(), Rational(0));
  for (const auto& t : terms) {
    if (t.variable >= row.size()) {
      throw MalformedProgram("constraint references unknown variable " +
                             std::to_string(t.variable));
    }
    row[t.variable] += t.coefficient;
  }
  constraints_.push_back({std::move(row), relation, std::move(rhs)});
}

void LinearProgram::add_dense_constraint(std::vector<Rational> coefficients, Relation relation,
                                         Rational rhs) {
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::validate() const {
  if (names_.empty()) throw MalformedProgram("linear program has no variables");
  if (objective_.size() != names_.size()) {
    throw MalformedProgram("objective length does not match variable count");
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].coefficients.size() != names_.size()) {
      throw MalformedProgram("constraint " + std::to_string(i) + " has " +
                             std::to_string(constraints_[i].coefficients.size()) +
                             " coefficients, expected " + std::to_string(names_.size()));
    }
  }
}

namespace {

// Dense tableau for   min c·x  s.t.  A x = b, x ≥ 0,  b ≥ 0.
// `rows[i]` holds A|b for row i in the current basis, `reduced` the reduced
// costs with -z in the last slot.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis,
          std::size_t num_columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), num_columns_(num_columns) {}

  struct Stop {
    bool unbounded = false;
    std::size_t column = 0;
  };

  void set_costs(const std::vector<Rational>& costs) {
    reduced_.assign(num_columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < num_columns_; ++j) reduced_[j] = costs[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= num_columns_; ++j) reduced_[j] -= cb * rows_[i][j];
    }
  }

  // Runs simplex iterations over the allowed columns until optimal or
  // unbounded. Bland's rule: lowest entering index, lowest leaving basis index.
  Stop run(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < num_columns_; ++j) {
        if (allowed[j] && reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return {};
      const std::size_t col = *entering;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][col];
        if (a <= 0) continue;
        Rational ratio = rows_[i][num_columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return {true, col};
      pivot(*leaving, col);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      eliminate(rows_[i], prow, c);
    }
    eliminate(reduced_, prow, c);
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective() const { return -reduced_[num_columns_]; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rows_[i][num_columns_]; }

 private:
  void eliminate(std::vector<Rational>& row, const std::vector<Rational>& prow, std::size_t c) {
    if (row[c] == 0) return;
    const Rational factor = row[c];
    for (std::size_t j = 0; j <= num_columns_; ++j) {
      if (prow[j] != 0) row[j] -= factor * prow[j];
    }
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::size_t num_columns_;
};

// Maps each original variable onto one (nonnegative) or two (free: x = p - n)
// standard-form columns.
struct ColumnMap {
  std::vector<std::size_t> positive;
  std::vector<std::optional<std::size_t>> negative;
  std::size_t count = 0;
};

ColumnMap map_columns(const LinearProgram& program) {
  ColumnMap map;
  for (std::size_t v = 0; v < program.num_variables(); ++v) {
    map.positive.push_back(map.count++);
    map.negative.push_back(program.nonnegative()[v] ? std::nullopt
                                                    : std::optional<std::size_t>(map.count++));
  }
  return map;
}

std::vector<Rational> to_original(const ColumnMap& map, const std::vector<Rational>& standard) {
  std::vector<Rational> out(map.positive.size(), Rational(0));
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = standard[map.positive[v]];
    if (map.negative[v]) out[v] -= standard[*map.negative[v]];
  }
  return out;
}

}  // namespace

Result solve(const LinearProgram& program) {
  program.validate();
  const ColumnMap map = map_columns(program);
  const auto& constraints = program.constraints();
  const std::size_t m = constraints.size();

  // Normalize rows to b ≥ 0 and count auxiliary columns.
  struct Row {
    std::vector<Rational> coeffs;  // over structural standard columns
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (const auto& c : constraints) {
    Row row{std::vector<Rational>(map.count, Rational(0)), c.relation, c.rhs};
    for (std::size_t v = 0; v < program.num_variables(); ++v) {
      row.coeffs[map.positive[v]] = c.coefficients[v];
      if (map.negative[v]) row.coeffs[*map.negative[v]] = -c.coefficients[v];
    }
    if (row.rhs < 0) {
      for (auto& a : row.coeffs) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
    if (row.relation != Relation::Equal) ++num_slack;
    if (row.relation != Relation::LessEqual) ++num_artificial;
    rows.push_back(std::move(row));
  }

  const std::size_t slack_begin = map.count;
  const std::size_t artificial_begin = slack_begin + num_slack;
  const std::size_t num_columns = artificial_begin + num_artificial;

  std::vector<std::vector<Rational>> tableau_rows;
  std::vector<std::size_t> basis;
  tableau_rows.reserve(m);
  std::size_t next_slack = slack_begin;
  std::size_t next_artificial = artificial_begin;
  for (auto& row : rows) {
    std::vector<Rational> t(num_columns + 1, Rational(0));
    for (std::size_t j = 0; j < map.count; ++j) t[j] = row.coeffs[j];
    t[num_columns] = row.rhs;
    switch (row.relation) {
      case Relation::LessEqual:
        t[next_slack] = 1;
        basis.push_back(next_slack++);
        break;
      case Relation::GreaterEqual:
        t[next_slack++] = -1;
        t[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
      case Relation::Equal:
        t[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
    }
    tableau_rows.push_back(std::move(t));
  }

  Tableau tableau(std::move(tableau_rows), std::move(basis), num_columns);
  std::vector<bool> all_columns(num_columns, true);

  if (num_artificial > 0) {
    std::vector<Rational> phase1(num_columns, Rational(0));
    for (std::size_t j = artificial_begin; j < num_columns; ++j) phase1[j] = 1;
    tableau.set_costs(phase1);
    tableau.run(all_columns);  // bounded below by zero
    if (tableau.objective() != 0) return Infeasible{};

    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < tableau.num_rows();) {
      if (tableau.basic(i) < artificial_begin) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < artificial_begin; ++j) {
        if (tableau.at(i, j) != 0) {
          column = j;
          break;
        }
      }
      if (column) {
        tableau.pivot(i, *column);
        ++i;
      } else {
        tableau.drop_row(i);  // redundant equality
      }
    }
  }

  const bool maximize = program.sense() == Sense::Maximize;
  std::vector<Rational> costs(num_columns, Rational(0));
  for (std::size_t v = 0; v < program.num_variables(); ++v) {
    const Rational c = maximize ? Rational(-program.objective()[v]) : program.objective()[v];
    costs[map.positive[v]] = c;
    if (map.negative[v]) costs[*map.negative[v]] = -c;
  }
  std::vector<bool> structural(num_columns, false);
  for (std::size_t j = 0; j < artificial_begin; ++j) structural[j] = true;

  tableau.set_costs(costs);
  const auto stop = tableau.run(structural);

  if (stop.unbounded) {
    std::vector<Rational> direction(num_columns, Rational(0));
    direction[stop.column] = 1;
    for (std::size_t i = 0; i < tableau.num_rows(); ++i) {
      direction[tableau.basic(i)] = -tableau.at(i, stop.column);
    }
    return Unbounded{to_original(map, direction)};
  }

  std::vector<Rational> standard(num_columns, Rational(0));
  for (std::size_t i = 0; i < tableau.num_rows(); ++i) standard[tableau.basic(i)] = tableau.rhs(i);
  std::vector<Rational> point = to_original(map, standard);
  Rational value = objective_value(program, point);
  return Optimal{std::move(value), std::move(point)};
}

Rational objective_value(const LinearProgram& program, std::span<const Rational> point) {
  Rational total = 0;
  for (std::size_t v = 0; v < program.num_variables(); ++v) total += program.objective()[v] * point[v];
  return total;
}

namespace {

Rational dot(const std::vector<Rational>& a, std::span<const Rational> b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

bool holds(Relation relation, const Rational& lhs, const Rational& rhs) {
  switch (relation) {
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::Equal:
      return lhs == rhs;
    case Relation::GreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

}  // namespace

bool is_feasible(const LinearProgram& program, std::span<const Rational> point) {
  if (point.size() != program.num_variables()) return false;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (program.nonnegative()[v] && point[v] < 0) return false;
  }
  for (const auto& c : program.constraints()) {
    if (!holds(c.relation, dot(c.coefficients, point), c.rhs)) return false;
  }
  return true;
}

bool is_improving_ray(const LinearProgram& program, std::span<const Rational> ray) {
  if (ray.size() != program.num_variables()) return false;
  for (std::size_t v = 0; v < ray.size(); ++v) {
    if (program.nonnegative()[v] && ray[v] < 0) return false;
  }
  for (const auto& c : program.constraints()) {
    if (!holds(c.relation, dot(c.coefficients, ray), Rational(0))) return false;
  }
  const Rational gain = objective_value(program, ray);
  return program.sense() == Sense::Maximize ? gain > 0 : gain < 0;
}

}  // namespace minlin::lp
