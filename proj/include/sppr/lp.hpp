#pragma once

// Exact-rational linear programming.
//
// A program  min c.x  s.t. rows (<=, >=, =), x >= lower  is shifted to y >= 0
// and every row is normalised to ">=". The solver then runs the textbook
// tableau simplex with Bland's rule on the dual
//
//     max b.u   s.t.  A^T u + s = c,   u, s >= 0,
//
// whose tableau has one row per primal variable. Constraint programs with few
// variables and many rows (path-enumeration encodings) therefore stay narrow,
// and adding primal rows later only appends dual columns, so a solved basis
// stays feasible and re-optimisation continues from it.

#include <optional>
#include <string>
#include <vector>

#include "sppr/rational.hpp"

namespace sppr {

struct LinearTerm {
  std::size_t var = 0;
  Rational coef;
};

enum class Relation { le, ge, eq };

struct Constraint {
  std::vector<LinearTerm> terms;
  Relation relation = Relation::ge;
  Rational rhs;
  std::string provenance;
};

struct Variable {
  std::string name;
  Rational lower_bound{0};
};

enum class Sense { minimize, maximize };

struct Objective {
  std::vector<LinearTerm> terms;
  Sense sense = Sense::minimize;
};

struct LinearProgram {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  Objective objective;

  std::size_t add_variable(std::string name, Rational lower_bound = Rational(0)) {
    variables.push_back({std::move(name), std::move(lower_bound)});
    return variables.size() - 1;
  }

  void validate() const {
    auto check = [&](const std::vector<LinearTerm>& terms) {
      for (const auto& t : terms)
        if (t.var >= variables.size())
          throw Error("constraint references unknown variable " + std::to_string(t.var));
    };
    for (const auto& c : constraints) {
      check(c.terms);
      if (c.provenance.empty()) throw Error("constraint without provenance");
    }
    check(objective.terms);
  }

  Rational evaluate(const std::vector<LinearTerm>& terms, const std::vector<Rational>& x) const {
    Rational v;
    for (const auto& t : terms) v += t.coef * x.at(t.var);
    return v;
  }

  bool satisfied(const Constraint& c, const std::vector<Rational>& x) const {
    Rational lhs = evaluate(c.terms, x);
    switch (c.relation) {
      case Relation::le: return lhs <= c.rhs;
      case Relation::ge: return lhs >= c.rhs;
      case Relation::eq: return lhs == c.rhs;
    }
    return false;
  }

  // Index of the first violated constraint or bound (bounds reported as
  // constraints.size() + var), empty when x is feasible.
  std::optional<std::size_t> first_violation(const std::vector<Rational>& x) const {
    if (x.size() != variables.size()) return constraints.size();
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (!satisfied(constraints[i], x)) return i;
    for (std::size_t j = 0; j < variables.size(); ++j)
      if (x[j] < variables[j].lower_bound) return constraints.size() + j;
    return std::nullopt;
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LpCertificate {
  LpStatus status = LpStatus::infeasible;
  Rational optimum;
  std::vector<Rational> assignment;
  // Multipliers of the minimisation form, one per constraint: >= 0 on ">=",
  // <= 0 on "<=", free on "=". Together with the assignment they prove
  // optimality by weak duality (see verify_optimality).
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

// Independent optimality proof: the assignment is feasible, the multipliers
// are dual feasible, and both objective values coincide.
inline bool verify_optimality(const LinearProgram& lp, const LpCertificate& cert) {
  if (cert.status != LpStatus::optimal) return false;
  if (lp.first_violation(cert.assignment)) return false;
  if (cert.duals.size() != lp.constraints.size()) return false;
  const bool maximize = lp.objective.sense == Sense::maximize;
  const std::size_t n = lp.variables.size();
  // Minimisation-form cost vector.
  std::vector<Rational> cost(n);
  for (const auto& t : lp.objective.terms) cost[t.var] += maximize ? -t.coef : t.coef;
  std::vector<Rational> reduced = cost;
  Rational dual_value;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    const Rational& u = cert.duals[i];
    if (c.relation == Relation::ge && u.sign() < 0) return false;
    if (c.relation == Relation::le && u.sign() > 0) return false;
    for (const auto& t : c.terms) reduced[t.var] -= u * t.coef;
    dual_value += u * c.rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced[j].sign() < 0) return false;
    dual_value += reduced[j] * lp.variables[j].lower_bound;
  }
  Rational primal_value;
  for (std::size_t j = 0; j < n; ++j) primal_value += cost[j] * cert.assignment[j];
  if (primal_value != dual_value) return false;
  return (maximize ? -primal_value : primal_value) == cert.optimum;
}

namespace detail {

class DualSimplex {
 public:
  explicit DualSimplex(const LinearProgram& lp) : lp_(lp) {
    lp_.validate();
    n_ = lp_.variables.size();
    const bool maximize = lp_.objective.sense == Sense::maximize;
    cost_.assign(n_, Rational(0));
    for (const auto& t : lp_.objective.terms) cost_[t.var] += maximize ? -t.coef : t.coef;
    flipped_.assign(n_, false);
    for (std::size_t j = 0; j < n_; ++j) flipped_[j] = cost_[j].sign() < 0;

    rows_.assign(n_, {});
    rhs_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) rhs_[j] = flipped_[j] ? -cost_[j] : cost_[j];
    // Slack and artificial columns first so they keep fixed positions.
    slack_col_.resize(n_);
    art_col_.assign(n_, npos);
    for (std::size_t j = 0; j < n_; ++j) {
      slack_col_[j] = add_raw_column(Kind::slack, j, Rational(0));
      rows_[j][slack_col_[j]] = flipped_[j] ? Rational(-1) : Rational(1);
    }
    basis_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (flipped_[j]) {
        art_col_[j] = add_raw_column(Kind::artificial, j, Rational(0));
        rows_[j][art_col_[j]] = Rational(1);
        basis_[j] = art_col_[j];
        needs_phase1_ = true;
      } else {
        basis_[j] = slack_col_[j];
      }
    }
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) append_constraint_columns(i, true);
  }

  void add_constraint(Constraint c) {
    lp_.constraints.push_back(std::move(c));
    lp_.validate();
    append_constraint_columns(lp_.constraints.size() - 1, phase_ == Phase::fresh);
  }

  const LinearProgram& program() const { return lp_; }

  LpCertificate solve() {
    LpCertificate cert;
    if (phase_ == Phase::fresh) {
      if (needs_phase1_ && !run_phase1()) {
        cert.status = primal_feasible() ? LpStatus::unbounded : LpStatus::infeasible;
        cert.pivots = pivots_;
        return cert;
      }
      start_phase2();
    }
    if (!iterate(false)) {
      cert.status = LpStatus::infeasible;  // dual unbounded
      cert.pivots = pivots_;
      return cert;
    }
    cert.status = LpStatus::optimal;
    cert.pivots = pivots_;
    // Primal values are the simplex multipliers: y_j = -d(s_j).
    cert.assignment.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
      cert.assignment[j] = lp_.variables[j].lower_bound - reduced_[slack_col_[j]];
    cert.duals.assign(lp_.constraints.size(), Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& col = columns_[basis_[i]];
      if (col.kind != Kind::dual) continue;
      cert.duals[col.index] += col.negated ? -rhs_[i] : rhs_[i];
    }
    Rational value;
    for (const auto& t : lp_.objective.terms) value += t.coef * cert.assignment[t.var];
    cert.optimum = value;
    if (auto bad = lp_.first_violation(cert.assignment))
      throw Error("internal: simplex optimum violates constraint " + std::to_string(*bad));
    if (!verify_optimality(lp_, cert))
      throw Error("internal: simplex optimum fails the duality check");
    return cert;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  enum class Kind { slack, artificial, dual };
  enum class Phase { fresh, two };
  struct Column {
    Kind kind;
    std::size_t index;  // variable row for slack/artificial, constraint for dual
    bool negated = false;
    Rational cost;
  };

  std::size_t add_raw_column(Kind kind, std::size_t index, Rational cost, bool negated = false) {
    columns_.push_back({kind, index, negated, std::move(cost)});
    for (auto& row : rows_) row.emplace_back();
    reduced_.emplace_back();
    return columns_.size() - 1;
  }

  // A primal row a.x >= b becomes the dual column (a, b - a.lower) in the
  // original coordinates; "<=" rows are negated and "=" rows split in two.
  void append_constraint_columns(std::size_t ci, bool fresh) {
    const auto& c = lp_.constraints[ci];
    auto emit = [&](bool negate) {
      std::vector<Rational> a(n_);
      Rational b = c.rhs;
      for (const auto& t : c.terms) {
        a[t.var] += t.coef;
        b -= t.coef * lp_.variables[t.var].lower_bound;
      }
      if (negate) {
        for (auto& v : a) v = -v;
        b = -b;
      }
      std::size_t col = add_raw_column(Kind::dual, ci, b, negate);
      for (std::size_t j = 0; j < n_; ++j)
        if (flipped_[j]) a[j] = -a[j];
      if (fresh) {
        for (std::size_t j = 0; j < n_; ++j) rows_[j][col] = std::move(a[j]);
        return;
      }
      // Current tableau column = B^-1 a, where column j of B^-1 is the
      // current column of the initial basic variable of row j.
      Rational reduced = columns_[col].cost;
      for (std::size_t j = 0; j < n_; ++j) {
        if (a[j].is_zero()) continue;
        std::size_t id = flipped_[j] ? art_col_[j] : slack_col_[j];
        for (std::size_t i = 0; i < n_; ++i)
          if (!rows_[i][id].is_zero()) rows_[i][col].sub_mul(-a[j], rows_[i][id]);
        // pi_j = -d(id_j) since identity columns cost nothing in phase two.
        reduced.sub_mul(-reduced_[id], a[j]);
      }
      reduced_[col] = std::move(reduced);
    };
    if (c.relation == Relation::ge || c.relation == Relation::eq) emit(false);
    if (c.relation == Relation::le || c.relation == Relation::eq) emit(true);
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    auto& prow = rows_[r];
    const Rational piv = prow[e];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < prow.size(); ++k)
      if (!prow[k].is_zero()) {
        prow[k] /= piv;
        nz.push_back(k);
      }
    rhs_[r] /= piv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r || rows_[i][e].is_zero()) continue;
      const Rational f = rows_[i][e];
      for (std::size_t k : nz) rows_[i][k].sub_mul(f, prow[k]);
      rhs_[i].sub_mul(f, rhs_[r]);
    }
    if (!reduced_[e].is_zero()) {
      const Rational f = reduced_[e];
      for (std::size_t k : nz) reduced_[k].sub_mul(f, prow[k]);
    }
    basis_[r] = e;
  }

  // Bland's rule; returns false when the objective is unbounded.
  bool iterate(bool phase1) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t k = 0; k < columns_.size(); ++k) {
        if (!phase1 && columns_[k].kind == Kind::artificial) continue;
        if (reduced_[k].sign() > 0) {
          enter = k;
          break;
        }
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < n_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void set_reduced(const std::vector<Rational>& cost) {
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      Rational d = cost[k];
      for (std::size_t i = 0; i < n_; ++i)
        if (!cost[basis_[i]].is_zero() && !rows_[i][k].is_zero())
          d.sub_mul(cost[basis_[i]], rows_[i][k]);
      reduced_[k] = std::move(d);
    }
  }

  bool run_phase1() {
    std::vector<Rational> cost(columns_.size());
    for (std::size_t k = 0; k < columns_.size(); ++k)
      if (columns_[k].kind == Kind::artificial) cost[k] = Rational(-1);
    set_reduced(cost);
    iterate(true);
    for (std::size_t i = 0; i < n_; ++i)
      if (columns_[basis_[i]].kind == Kind::artificial && rhs_[i].sign() > 0) return false;
    // Drive zero-level artificials out; [A^T I] has full row rank, so a
    // non-artificial pivot always exists.
    for (std::size_t i = 0; i < n_; ++i) {
      if (columns_[basis_[i]].kind != Kind::artificial) continue;
      for (std::size_t k = 0; k < columns_.size(); ++k)
        if (columns_[k].kind != Kind::artificial && !rows_[i][k].is_zero()) {
          pivot(i, k);
          break;
        }
    }
    return true;
  }

  void start_phase2() {
    std::vector<Rational> cost(columns_.size());
    for (std::size_t k = 0; k < columns_.size(); ++k) cost[k] = columns_[k].cost;
    set_reduced(cost);
    phase_ = Phase::two;
  }

  // Primal feasibility with a zero objective: its dual is feasible at u = 0
  // and bounded exactly when the primal rows are satisfiable.
  bool primal_feasible() const {
    LinearProgram zero = lp_;
    zero.objective.terms.clear();
    DualSimplex probe(zero);
    probe.start_phase2();
    return probe.iterate(false);
  }

  LinearProgram lp_;
  std::size_t n_ = 0;
  std::vector<Rational> cost_;
  std::vector<bool> flipped_;
  std::vector<Column> columns_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> slack_col_;
  std::vector<std::size_t> art_col_;
  bool needs_phase1_ = false;
  Phase phase_ = Phase::fresh;
  std::size_t pivots_ = 0;
};

}  // namespace detail

// Solves lp exactly. Optimal assignments are re-checked against every
// constraint and against the dual certificate before being returned.
inline LpCertificate solve_lp(const LinearProgram& lp) {
  detail::DualSimplex solver(lp);
  return solver.solve();
}

// Incremental interface for row generation: add constraints between solves.
class IncrementalLp {
 public:
  explicit IncrementalLp(const LinearProgram& lp) : solver_(lp) {}
  void add_constraint(Constraint c) { solver_.add_constraint(std::move(c)); }
  LpCertificate solve() { return solver_.solve(); }
  const LinearProgram& program() const { return solver_.program(); }

 private:
  detail::DualSimplex solver_;
};

}  // namespace sppr
