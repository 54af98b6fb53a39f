#include "indpath/lp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>

#include "indpath/kernels.hpp"

namespace indpath::lp {

int LinearProgram::add_variable(double obj, double lo, double hi) {
  if (!(lo <= hi)) throw Error("variable bounds crossed");
  if (lo == -kInfinity && hi == kInfinity) throw Error("free variables unsupported");
  if (!std::isfinite(obj)) throw Error("objective coefficient not finite");
  objective.push_back(obj);
  lower.push_back(lo);
  upper.push_back(hi);
  return num_vars() - 1;
}

void LinearProgram::append_row(Row row) {
  for (const auto& [var, coeff] : row.coeffs) {
    if (var < 0 || var >= num_vars())
      throw Error("row references unknown variable " + std::to_string(var));
    if (!std::isfinite(coeff)) throw Error("row coefficient not finite");
  }
  if (!std::isfinite(row.rhs)) throw Error("row rhs not finite");
  // Canonical form: one entry per variable, negligible coefficients dropped.
  std::sort(row.coeffs.begin(), row.coeffs.end());
  std::vector<std::pair<int, double>> merged;
  for (const auto& [var, coeff] : row.coeffs) {
    if (!merged.empty() && merged.back().first == var)
      merged.back().second += coeff;
    else
      merged.emplace_back(var, coeff);
  }
  std::erase_if(merged, [](const auto& e) { return std::fabs(e.second) < kDropTol; });
  row.coeffs = std::move(merged);
  rows.push_back(std::move(row));
}

LinearProgram lp_add_rows(LinearProgram lp, const std::vector<Row>& rows) {
  for (const Row& r : rows) lp.append_row(r);
  return lp;
}

namespace {

constexpr double kPivotTol = 1e-7;    // smallest acceptable pivot element
constexpr double kSingularTol = 1e-11;
constexpr double kDegenTol = 1e-9;    // step sizes below this count as degenerate
constexpr int kRefactorInterval = 100;
constexpr int kDegenerateLimit = 1000;  // consecutive degenerate pivots before Bland

enum class VarState : std::uint8_t { at_lower, at_upper, basic };

struct SparseCol {
  std::vector<std::pair<int, double>> entries;  // (row, coefficient)
};

// Factorization of the basis matrix: singleton columns are peeled off into a
// triangular part; what remains is a dense LU block driven by the kernels.
class BasisFactor {
 public:
  // cols[p] is the column of the p-th basic variable. Returns false when the
  // basis is (near-)singular.
  bool factorize(const std::vector<const SparseCol*>& cols, int m) {
    m_ = m;
    const int nb = static_cast<int>(cols.size());
    tri_.clear();
    claim_of_row_.assign(m_, -1);
    pos_kind_.assign(nb, -1);

    // Peel columns that have exactly one entry in a still-unclaimed row.
    std::vector<int> live(nb);
    std::vector<std::vector<int>> cols_at_row(m_);
    for (int p = 0; p < nb; ++p) {
      live[p] = static_cast<int>(cols[p]->entries.size());
      for (const auto& [r, a] : cols[p]->entries) cols_at_row[r].push_back(p);
    }
    std::vector<int> work;
    std::vector<char> queued(nb, 0);
    for (int p = 0; p < nb; ++p)
      if (live[p] == 1) {
        work.push_back(p);
        queued[p] = 1;
      }
    std::vector<char> claimed_col(nb, 0);
    for (std::size_t w = 0; w < work.size(); ++w) {
      const int p = work[w];
      if (claimed_col[p]) continue;
      int row = -1;
      double pivot = 0.0;
      for (const auto& [r, a] : cols[p]->entries)
        if (claim_of_row_[r] == -1) {
          row = r;
          pivot = a;
        }
      if (row == -1 || std::fabs(pivot) < kSingularTol) continue;  // leave for the dense block
      claim_of_row_[row] = static_cast<int>(tri_.size());
      claimed_col[p] = 1;
      pos_kind_[p] = static_cast<int>(tri_.size());
      tri_.push_back({p, row, pivot});
      for (int q : cols_at_row[row]) {
        if (claimed_col[q]) continue;
        if (--live[q] == 1 && !queued[q]) {
          work.push_back(q);
          queued[q] = 1;
        }
      }
    }

    // Dense block over the unclaimed rows and columns.
    dense_rows_.clear();
    dense_slot_of_row_.assign(m_, -1);
    for (int r = 0; r < m_; ++r)
      if (claim_of_row_[r] == -1) {
        dense_slot_of_row_[r] = static_cast<int>(dense_rows_.size());
        dense_rows_.push_back(r);
      }
    dense_pos_.clear();
    for (int p = 0; p < nb; ++p)
      if (!claimed_col[p]) {
        pos_kind_[p] = -2 - static_cast<int>(dense_pos_.size());
        dense_pos_.push_back(p);
      }
    const int k = static_cast<int>(dense_pos_.size());
    if (k != static_cast<int>(dense_rows_.size())) return false;
    dense_k_ = k;
    dmat_.assign(static_cast<std::size_t>(k) * k, 0.0);
    for (int j = 0; j < k; ++j) {
      const SparseCol& col = *cols[dense_pos_[j]];
      double* dcol = &dmat_[static_cast<std::size_t>(j) * k];
      for (const auto& [r, a] : col.entries) {
        const int slot = dense_slot_of_row_[r];
        if (slot >= 0) dcol[slot] += a;
        // Entries in claimed rows are handled through the triangular part.
      }
    }
    cols_ = &cols;
    return lu_factorize();
  }

  // Solve B x = b; b indexed by row, x by basis position.
  void ftran(std::vector<double>& b, std::vector<double>& x) const {
    const int k = dense_k_;
    scratch_.resize(std::max(k, 1));
    for (int j = 0; j < k; ++j) scratch_[j] = b[dense_rows_[j]];
    lu_solve(scratch_.data());
    x.assign(cols_->size(), 0.0);
    for (int j = 0; j < k; ++j) {
      const double v = scratch_[j];
      x[dense_pos_[j]] = v;
      if (v != 0.0)
        for (const auto& [r, a] : (*cols_)[dense_pos_[j]]->entries)
          if (claim_of_row_[r] >= 0) b[r] -= a * v;
    }
    // Triangular part, newest claim first: later claims only touch earlier rows.
    for (int t = static_cast<int>(tri_.size()) - 1; t >= 0; --t) {
      const TriEntry& e = tri_[t];
      const double v = b[e.row] / e.pivot;
      x[e.pos] = v;
      if (v != 0.0)
        for (const auto& [r, a] : (*cols_)[e.pos]->entries)
          if (r != e.row) b[r] -= a * v;
    }
  }

  // Solve B^T y = c; c indexed by basis position, y by row.
  void btran(const std::vector<double>& c, std::vector<double>& y) const {
    y.assign(m_, 0.0);
    for (const TriEntry& e : tri_) {
      double acc = c[e.pos];
      for (const auto& [r, a] : (*cols_)[e.pos]->entries)
        if (r != e.row) acc -= a * y[r];
      y[e.row] = acc / e.pivot;
    }
    const int k = dense_k_;
    scratch_.resize(std::max(k, 1));
    for (int j = 0; j < k; ++j) {
      double acc = c[dense_pos_[j]];
      for (const auto& [r, a] : (*cols_)[dense_pos_[j]]->entries)
        if (claim_of_row_[r] >= 0) acc -= a * y[r];
      scratch_[j] = acc;
    }
    lu_solve_transposed(scratch_.data());
    for (int j = 0; j < k; ++j) y[dense_rows_[j]] = scratch_[j];
  }

  int dense_size() const { return dense_k_; }

 private:
  struct TriEntry {
    int pos;
    int row;
    double pivot;
  };

  bool lu_factorize() {
    const auto& ops = kern::ops();
    const int k = dense_k_;
    piv_.resize(k);
    for (int j = 0; j < k; ++j) {
      double* colj = &dmat_[static_cast<std::size_t>(j) * k];
      const int p = j + static_cast<int>(ops.iamax(colj + j, k - j));
      piv_[j] = p;
      if (p != j)
        for (int t = 0; t < k; ++t)
          std::swap(dmat_[static_cast<std::size_t>(t) * k + j], dmat_[static_cast<std::size_t>(t) * k + p]);
      const double d = colj[j];
      if (std::fabs(d) < kSingularTol) return false;
      ops.scale(1.0 / d, colj + j + 1, k - j - 1);
      for (int t = j + 1; t < k; ++t) {
        double* colt = &dmat_[static_cast<std::size_t>(t) * k];
        if (colt[j] != 0.0) ops.axpy(-colt[j], colj + j + 1, colt + j + 1, k - j - 1);
      }
    }
    return true;
  }

  void lu_solve(double* w) const {
    const auto& ops = kern::ops();
    const int k = dense_k_;
    for (int j = 0; j < k; ++j)
      if (piv_[j] != j) std::swap(w[j], w[piv_[j]]);
    for (int j = 0; j < k; ++j) {
      const double* colj = &dmat_[static_cast<std::size_t>(j) * k];
      if (w[j] != 0.0) ops.axpy(-w[j], colj + j + 1, w + j + 1, k - j - 1);
    }
    for (int j = k - 1; j >= 0; --j) {
      const double* colj = &dmat_[static_cast<std::size_t>(j) * k];
      w[j] /= colj[j];
      if (w[j] != 0.0) ops.axpy(-w[j], colj, w, j);
    }
  }

  void lu_solve_transposed(double* w) const {
    const auto& ops = kern::ops();
    const int k = dense_k_;
    for (int j = 0; j < k; ++j) {
      const double* colj = &dmat_[static_cast<std::size_t>(j) * k];
      w[j] = (w[j] - ops.dot(colj, w, j)) / colj[j];
    }
    for (int j = k - 1; j >= 0; --j) {
      const double* colj = &dmat_[static_cast<std::size_t>(j) * k];
      w[j] -= ops.dot(colj + j + 1, w + j + 1, k - j - 1);
    }
    for (int j = k - 1; j >= 0; --j)
      if (piv_[j] != j) std::swap(w[j], w[piv_[j]]);
  }

  int m_ = 0;
  int dense_k_ = 0;
  std::vector<TriEntry> tri_;
  std::vector<int> claim_of_row_;   // row -> claim index, -1 if in dense block
  std::vector<int> pos_kind_;
  std::vector<int> dense_rows_;
  std::vector<int> dense_slot_of_row_;
  std::vector<int> dense_pos_;
  std::vector<double> dmat_;  // k*k column-major, LU in place
  std::vector<int> piv_;
  const std::vector<const SparseCol*>* cols_ = nullptr;
  mutable std::vector<double> scratch_;
};

// Product-form eta: the transformed entering column replaces basis slot pos.
struct Eta {
  int pos;
  std::vector<double> col;  // eta column, indexed by basis position
};

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp, const SolveOptions& options)
      : lp_(lp), m_(lp.num_rows()), nstruct_(lp.num_vars()) {
    max_pivots_ = options.max_pivots > 0
                      ? options.max_pivots
                      : 50L * (lp.num_vars() + lp.num_rows());
    if (options.time_limit_seconds > 0.0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(options.time_limit_seconds));
    build_columns();
  }

  LpSolution run(const Basis* warm) {
    // A failed refactorization aborts the attempt; one deterministic retry
    // under Bland's rule from the start takes a different, finite path.
    LpSolution out = run_attempt(warm);
    if (out.status == SolveStatus::iteration_limit && refactor_failed_ && !force_bland_) {
      force_bland_ = true;
      refactor_failed_ = false;
      const long spent = pivots_;
      pivots_ = 0;
      out = run_attempt(nullptr);
      out.pivots += spent;
    }
    return out;
  }

 private:
  LpSolution run_attempt(const Basis* warm) {
    LpSolution out;
    bool warm_ok = warm != nullptr && try_warm_start(*warm);
    if (!warm_ok) {
      crash_basis();
      if (num_artificials_ > 0) {
        set_phase1_costs();
        const SolveStatus st = iterate();
        if (st != SolveStatus::optimal) {
          out.status = st;
          out.pivots = pivots_;
          return out;
        }
        double infeas = 0.0;
        for (int j = first_artificial_; j < total_cols_; ++j)
          infeas += value_of(j);
        if (infeas > kFeasTol) {
          out.status = SolveStatus::infeasible;
          out.pivots = pivots_;
          return out;
        }
        // Pin the artificials at zero for phase 2.
        for (int j = first_artificial_; j < total_cols_; ++j) lower_[j] = upper_[j] = 0.0;
      }
    }
    set_phase2_costs();
    const SolveStatus st = iterate();
    out.status = st;
    out.pivots = pivots_;
    if (st != SolveStatus::optimal) return out;
    out.primal.resize(nstruct_);
    for (int j = 0; j < nstruct_; ++j) out.primal[j] = value_of(j);
    out.objective_value = 0.0;
    for (int j = 0; j < nstruct_; ++j) out.objective_value += lp_.objective[j] * out.primal[j];
    out.basis.basic = basic_;
    out.basis.at_upper.assign(nstruct_ + m_, 0);
    for (int j = 0; j < nstruct_ + m_; ++j)
      out.basis.at_upper[j] = state_[j] == VarState::at_upper ? 1 : 0;
    return out;
  }

 private:
  void build_columns() {
    total_cols_ = nstruct_ + m_;
    first_artificial_ = total_cols_;
    num_artificials_ = 0;
    cols_.assign(total_cols_, {});
    lower_.assign(total_cols_, 0.0);
    upper_.assign(total_cols_, 0.0);
    cost_.assign(total_cols_, 0.0);
    for (int j = 0; j < nstruct_; ++j) {
      lower_[j] = lp_.lower[j];
      upper_[j] = lp_.upper[j];
    }
    for (int i = 0; i < m_; ++i) {
      for (const auto& [var, coeff] : lp_.rows[i].coeffs)
        if (std::fabs(coeff) >= kDropTol) cols_[var].entries.emplace_back(i, coeff);
      const int slack = nstruct_ + i;
      cols_[slack].entries.emplace_back(i, 1.0);
      switch (lp_.rows[i].rel) {
        case Relation::less_equal:
          lower_[slack] = 0.0;
          upper_[slack] = kInfinity;
          break;
        case Relation::equal:
          lower_[slack] = 0.0;
          upper_[slack] = 0.0;
          break;
        case Relation::greater_equal:
          lower_[slack] = -kInfinity;
          upper_[slack] = 0.0;
          break;
      }
    }
    for (int j = 0; j < nstruct_; ++j) {
      auto& e = cols_[j].entries;
      std::sort(e.begin(), e.end());
    }
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) rhs_[i] = lp_.rows[i].rhs;
  }

  double nonbasic_value(int j) const {
    return state_[j] == VarState::at_upper ? upper_[j] : lower_[j];
  }

  double value_of(int j) const {
    if (state_[j] == VarState::basic) return x_basic_[pos_of_[j]];
    return nonbasic_value(j);
  }

  // Nonbasic columns rest at a finite bound; preferring the lower one.
  VarState rest_state(int j) const {
    return std::isfinite(lower_[j]) ? VarState::at_lower : VarState::at_upper;
  }

  void crash_basis() {
    // Slack basis where feasible; artificials for the violated rows. Drops
    // artificials left over from a previous attempt.
    total_cols_ = nstruct_ + m_;
    first_artificial_ = total_cols_;
    num_artificials_ = 0;
    cols_.resize(total_cols_);
    lower_.resize(total_cols_);
    upper_.resize(total_cols_);
    cost_.resize(total_cols_);
    for (int i = 0; i < m_; ++i) {
      const int slack = nstruct_ + i;
      switch (lp_.rows[i].rel) {
        case Relation::less_equal:
          lower_[slack] = 0.0;
          upper_[slack] = kInfinity;
          break;
        case Relation::equal:
          lower_[slack] = 0.0;
          upper_[slack] = 0.0;
          break;
        case Relation::greater_equal:
          lower_[slack] = -kInfinity;
          upper_[slack] = 0.0;
          break;
      }
    }
    state_.assign(total_cols_, VarState::at_lower);
    for (int j = 0; j < total_cols_; ++j) state_[j] = rest_state(j);
    std::vector<double> residual = rhs_;
    for (int j = 0; j < nstruct_; ++j) {
      const double v = nonbasic_value(j);
      if (v != 0.0)
        for (const auto& [r, a] : cols_[j].entries) residual[r] -= a * v;
    }
    basic_.assign(m_, -1);
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      const int slack = nstruct_ + i;
      if (residual[i] >= lower_[slack] - kFeasTol && residual[i] <= upper_[slack] + kFeasTol) {
        basic_[i] = slack;
      } else {
        art_rows.push_back(i);
      }
    }
    first_artificial_ = total_cols_;
    num_artificials_ = static_cast<int>(art_rows.size());
    for (int t = 0; t < num_artificials_; ++t) {
      const int i = art_rows[t];
      const int art = total_cols_ + t;
      cols_.push_back({});
      cols_.back().entries.emplace_back(i, residual[i] >= 0 ? 1.0 : -1.0);
      lower_.push_back(0.0);
      upper_.push_back(kInfinity);
      cost_.push_back(0.0);
      basic_[i] = art;
    }
    total_cols_ += num_artificials_;
    state_.resize(total_cols_, VarState::at_lower);
    finish_basis_setup();
  }

  bool try_warm_start(const Basis& warm) {
    if (static_cast<int>(warm.basic.size()) > m_) return false;
    if (static_cast<int>(warm.at_upper.size()) > nstruct_ + m_) return false;
    num_artificials_ = 0;
    first_artificial_ = total_cols_ = nstruct_ + m_;
    cols_.resize(total_cols_);
    state_.assign(total_cols_, VarState::at_lower);
    for (int j = 0; j < total_cols_; ++j) {
      const bool up = j < static_cast<int>(warm.at_upper.size()) && warm.at_upper[j];
      state_[j] = up && std::isfinite(upper_[j]) ? VarState::at_upper : rest_state(j);
    }
    basic_.assign(m_, -1);
    std::vector<char> used(total_cols_, 0);
    for (std::size_t i = 0; i < warm.basic.size(); ++i) {
      const int j = warm.basic[i];
      if (j < 0 || j >= total_cols_ || used[j]) return false;
      used[j] = 1;
      basic_[i] = j;
    }
    // Rows added after the basis was recorded get their slacks.
    for (int i = static_cast<int>(warm.basic.size()); i < m_; ++i) {
      const int slack = nstruct_ + i;
      if (used[slack]) return false;
      basic_[i] = slack;
      used[slack] = 1;
    }
    if (!finish_basis_setup()) return false;
    for (int i = 0; i < m_; ++i) {
      const int j = basic_[i];
      if (x_basic_[i] < lower_[j] - kFeasTol || x_basic_[i] > upper_[j] + kFeasTol) return false;
    }
    return true;
  }

  bool finish_basis_setup() {
    pos_of_.assign(total_cols_, -1);
    for (int i = 0; i < m_; ++i) {
      state_[basic_[i]] = VarState::basic;
      pos_of_[basic_[i]] = i;
    }
    etas_.clear();
    if (!refactorize()) return false;
    return true;
  }

  bool refactorize() {
    basic_cols_.resize(m_);
    for (int i = 0; i < m_; ++i) basic_cols_[i] = &cols_[basic_[i]];
    if (!factor_.factorize(basic_cols_, m_)) return false;
    etas_.clear();
    compute_basic_values();
    return true;
  }

  void compute_basic_values() {
    std::vector<double> residual = rhs_;
    for (int j = 0; j < total_cols_; ++j) {
      if (state_[j] == VarState::basic) continue;
      const double v = nonbasic_value(j);
      if (v != 0.0)
        for (const auto& [r, a] : cols_[j].entries) residual[r] -= a * v;
    }
    factor_.ftran(residual, x_basic_);
    apply_etas_ftran(x_basic_);
  }

  void apply_etas_ftran(std::vector<double>& x) const {
    const auto& ops = kern::ops();
    for (const Eta& e : etas_) {
      const double t = x[e.pos];
      if (t == 0.0) continue;
      x[e.pos] = 0.0;
      ops.axpy(t, e.col.data(), x.data(), e.col.size());
    }
  }

  // alpha = B^{-1} (column j), indexed by basis position.
  void ftran_column(int j, std::vector<double>& alpha) {
    std::vector<double> b(m_, 0.0);
    for (const auto& [r, a] : cols_[j].entries) b[r] = a;
    factor_.ftran(b, alpha);
    apply_etas_ftran(alpha);
  }

  // y = B^{-T} c_B.
  void btran_costs(std::vector<double>& y) {
    std::vector<double> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = cost_[basic_[i]];
    const auto& ops = kern::ops();
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it)
      c[it->pos] = ops.dot(it->col.data(), c.data(), it->col.size());
    factor_.btran(c, y);
  }

  void set_phase1_costs() {
    cost_.assign(total_cols_, 0.0);
    for (int j = first_artificial_; j < total_cols_; ++j) cost_[j] = -1.0;
    bland_ = force_bland_;
    bland_engaged_at_ = 0;
    degenerate_run_ = 0;
  }

  void set_phase2_costs() {
    cost_.assign(total_cols_, 0.0);
    for (int j = 0; j < nstruct_; ++j) cost_[j] = lp_.objective[j];
    bland_ = force_bland_;
    bland_engaged_at_ = 0;
    degenerate_run_ = 0;
  }

  // Core loop for the current cost vector.
  SolveStatus iterate() {
    std::vector<double> y;
    std::vector<double> alpha;
    while (true) {
      if (pivots_ >= pivot_budget()) return SolveStatus::iteration_limit;
      if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
        return SolveStatus::iteration_limit;
      btran_costs(y);

      int entering = -1;
      double best_score = 0.0;
      for (int j = 0; j < total_cols_; ++j) {
        if (state_[j] == VarState::basic) continue;
        if (lower_[j] == upper_[j]) continue;  // fixed
        double d = cost_[j];
        for (const auto& [r, a] : cols_[j].entries) d -= a * y[r];
        const bool eligible = state_[j] == VarState::at_lower ? d > kDualTol : d < -kDualTol;
        if (!eligible) continue;
        if (bland_) {
          entering = j;
          break;
        }
        const double score = std::fabs(d);
        if (score > best_score) {
          best_score = score;
          entering = j;
        }
      }
      if (entering == -1) {
        if (!etas_.empty()) {
          // Confirm optimality against a fresh factorization.
          if (!refactorize()) {
            refactor_failed_ = true;
            return SolveStatus::iteration_limit;
          }
          continue;
        }
        return SolveStatus::optimal;
      }

      const double sigma = state_[entering] == VarState::at_lower ? 1.0 : -1.0;
      ftran_column(entering, alpha);

      // Ratio test: smallest step. Ties go to the largest pivot element for
      // stability, except under Bland's rule, whose termination argument
      // needs the lowest variable index to leave.
      double best_t = kInfinity;
      int leaving_pos = -1;
      bool leaving_to_upper = false;
      if (std::isfinite(lower_[entering]) && std::isfinite(upper_[entering]))
        best_t = upper_[entering] - lower_[entering];
      for (int i = 0; i < m_; ++i) {
        const double a = sigma * alpha[i];
        if (std::fabs(a) < kPivotTol) continue;
        const int bj = basic_[i];
        double t;
        bool to_upper;
        if (a > 0.0) {
          if (!std::isfinite(lower_[bj])) continue;
          t = (x_basic_[i] - lower_[bj]) / a;
          to_upper = false;
        } else {
          if (!std::isfinite(upper_[bj])) continue;
          t = (x_basic_[i] - upper_[bj]) / a;
          to_upper = true;
        }
        if (t < 0.0) t = 0.0;
        bool take = false;
        if (t < best_t - kDegenTol) {
          take = true;
        } else if (t < best_t + kDegenTol && leaving_pos >= 0) {
          take = bland_ ? basic_[i] < basic_[leaving_pos]
                        : std::fabs(alpha[i]) > std::fabs(alpha[leaving_pos]);
        }
        if (take) {
          best_t = std::min(best_t, t);
          leaving_pos = i;
          leaving_to_upper = to_upper;
        }
      }
      if (!std::isfinite(best_t)) throw Error("LP is unbounded");

      ++pivots_;
      if (best_t <= kDegenTol) {
        if (++degenerate_run_ >= kDegenerateLimit && !bland_) {
          bland_ = true;
          bland_engaged_at_ = pivots_;
        }
      } else {
        degenerate_run_ = 0;
      }

      const auto& ops = kern::ops();
      if (leaving_pos == -1) {
        // Bound flip: the entering variable crosses to its other bound.
        if (best_t != 0.0)
          ops.axpy(-sigma * best_t, alpha.data(), x_basic_.data(), m_);
        state_[entering] =
            state_[entering] == VarState::at_lower ? VarState::at_upper : VarState::at_lower;
        continue;
      }

      const int leaving = basic_[leaving_pos];
      const double entering_value = nonbasic_value(entering) + sigma * best_t;
      if (best_t != 0.0)
        ops.axpy(-sigma * best_t, alpha.data(), x_basic_.data(), m_);
      state_[leaving] = leaving_to_upper ? VarState::at_upper : VarState::at_lower;
      pos_of_[leaving] = -1;
      basic_[leaving_pos] = entering;
      state_[entering] = VarState::basic;
      pos_of_[entering] = leaving_pos;
      x_basic_[leaving_pos] = entering_value;

      // Record the eta column for the basis change.
      Eta eta;
      eta.pos = leaving_pos;
      eta.col.assign(alpha.begin(), alpha.end());
      const double apiv = alpha[leaving_pos];
      ops.scale(-1.0 / apiv, eta.col.data(), m_);
      eta.col[leaving_pos] = 1.0 / apiv;
      etas_.push_back(std::move(eta));

      if (static_cast<int>(etas_.size()) >= kRefactorInterval) {
        if (!refactorize()) {
          refactor_failed_ = true;
          return SolveStatus::iteration_limit;
        }
      }
    }
  }

  long pivot_budget() const {
    return bland_ ? bland_engaged_at_ + max_pivots_ : max_pivots_;
  }

  const LinearProgram& lp_;
  int m_;
  int nstruct_;
  int total_cols_ = 0;
  int first_artificial_ = 0;
  int num_artificials_ = 0;
  long max_pivots_ = 0;
  long pivots_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool bland_ = false;
  bool force_bland_ = false;
  bool refactor_failed_ = false;
  long bland_engaged_at_ = 0;
  int degenerate_run_ = 0;

  std::vector<SparseCol> cols_;
  std::vector<double> lower_, upper_, cost_, rhs_;
  std::vector<VarState> state_;
  std::vector<int> basic_;    // row -> column
  std::vector<int> pos_of_;   // column -> row position or -1
  std::vector<double> x_basic_;
  std::vector<const SparseCol*> basic_cols_;
  BasisFactor factor_;
  std::vector<Eta> etas_;
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp, const Basis* warm, const SolveOptions& options) {
  Simplex simplex(lp, options);
  return simplex.run(warm);
}

void write_lp_text(const LinearProgram& lp, std::ostream& out) {
  out << "Maximize\n obj:";
  for (int j = 0; j < lp.num_vars(); ++j) {
    const double c = lp.objective[j];
    if (c == 0.0) continue;
    out << (c >= 0 ? " +" : " -") << std::fabs(c) << " x" << j;
  }
  out << "\nSubject To\n";
  for (int i = 0; i < lp.num_rows(); ++i) {
    const Row& row = lp.rows[i];
    out << " r" << i << ":";
    for (const auto& [var, coeff] : row.coeffs)
      out << (coeff >= 0 ? " +" : " -") << std::fabs(coeff) << " x" << var;
    switch (row.rel) {
      case Relation::less_equal: out << " <= "; break;
      case Relation::equal: out << " = "; break;
      case Relation::greater_equal: out << " >= "; break;
    }
    out << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_vars(); ++j)
    out << ' ' << lp.lower[j] << " <= x" << j << " <= " << lp.upper[j] << '\n';
  out << "End\n";
}

}  // namespace indpath::lp
