#include "tsp2ec/simplex.hpp"

#include <algorithm>

#include "tsp2ec/error.hpp"

namespace tsp2ec::detail {

void LinearProgram::add_row(std::vector<Rat> row, Rel rel, Rat b) {
  coeffs.push_back(std::move(row));
  rels.push_back(rel);
  rhs.push_back(std::move(b));
}

namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : nv_(lp.num_vars) {
    int rows = static_cast<int>(lp.coeffs.size());
    // Column layout: structural | slack/surplus | artificial.
    slack_col_.assign(rows, -1);
    art_col_.assign(rows, -1);
    int next = nv_;
    for (int i = 0; i < rows; ++i)
      if (lp.rels[i] != Rel::eq) slack_col_[i] = next++;
    first_art_ = next;
    for (int i = 0; i < rows; ++i)
      if (lp.rels[i] != Rel::le) art_col_[i] = next++;
    cols_ = next;

    t_.assign(rows, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.assign(rows, -1);
    for (int i = 0; i < rows; ++i) {
      bool flip = lp.rhs[i] < 0;
      Rel rel = lp.rels[i];
      if (flip && rel == Rel::le) rel = Rel::ge;
      else if (flip && rel == Rel::ge) rel = Rel::le;
      for (int j = 0; j < nv_; ++j) t_[i][j] = flip ? Rat(-lp.coeffs[i][j]) : lp.coeffs[i][j];
      t_[i][cols_] = flip ? Rat(-lp.rhs[i]) : lp.rhs[i];
      if (slack_col_[i] >= 0) t_[i][slack_col_[i]] = (rel == Rel::le) ? 1 : -1;
      // A <=-row after normalization starts with its slack basic; the rest
      // start with an artificial.
      if (rel == Rel::le) {
        basis_[i] = slack_col_[i];
      } else {
        if (art_col_[i] < 0) {
          // A >=-row whose sense flipped to <=: reuse the surplus column as
          // slack would conflict; give it an artificial lazily.
          art_col_[i] = cols_++;
          for (auto& row : t_) row.insert(row.begin() + cols_ - 1, Rat(0));
        }
        t_[i][art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      }
    }
  }

  bool run_phase1() {
    std::vector<Rat> red(cols_ + 1, Rat(0));
    for (int j = first_art_; j < cols_; ++j) red[j] = 1;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] >= first_art_) sub_row(red, t_[i], Rat(1));
    iterate(red, /*allow_artificial=*/false);
    Rat value(0);
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] >= first_art_) value += t_[i][cols_];
    if (value != 0) return false;
    drive_out_artificials();
    return true;
  }

  void run_phase2(const std::vector<Rat>& objective) {
    std::vector<Rat> cost(cols_ + 1, Rat(0));
    for (int j = 0; j < nv_; ++j) cost[j] = objective[j];
    std::vector<Rat> red = cost;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (cost[basis_[i]] != 0) sub_row(red, t_[i], cost[basis_[i]]);
    iterate(red, /*allow_artificial=*/false);
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(nv_, Rat(0));
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < nv_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

  Rat objective_value(const std::vector<Rat>& objective) const {
    Rat total(0);
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < nv_ && objective[basis_[i]] != 0) total += objective[basis_[i]] * t_[i][cols_];
    return total;
  }

 private:
  static void sub_row(std::vector<Rat>& target, const std::vector<Rat>& source, const Rat& factor) {
    for (std::size_t j = 0; j < target.size(); ++j)
      if (source[j] != 0) target[j] -= factor * source[j];
  }

  void pivot(std::vector<Rat>& red, int r, int s) {
    Rat inv = t_[r][s];
    for (auto& entry : t_[r]) {
      if (entry != 0) entry /= inv;
    }
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r || t_[i][s] == 0) continue;
      sub_row(t_[i], t_[r], t_[i][s]);
    }
    if (red[s] != 0) sub_row(red, t_[r], red[s]);
    basis_[r] = s;
  }

  // Bland: entering = lowest-index improving column; leaving = min ratio,
  // ties broken by lowest basic-variable index.
  void iterate(std::vector<Rat>& red, bool allow_artificial) {
    const int entering_limit = allow_artificial ? cols_ : first_art_;
    for (long guard = 0;; ++guard) {
      if (guard > 2'000'000) fail(Errc::internal, "simplex iteration guard tripped");
      int s = -1;
      for (int j = 0; j < entering_limit; ++j)
        if (red[j] < 0) {
          s = j;
          break;
        }
      if (s < 0) return;
      int r = -1;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][s] <= 0) continue;
        if (r < 0) {
          r = static_cast<int>(i);
          continue;
        }
        Rat lhs = t_[i][cols_] * t_[r][s];
        Rat rhs = t_[r][cols_] * t_[i][s];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[r])) r = static_cast<int>(i);
      }
      if (r < 0) fail(Errc::internal, "unbounded simplex ray");
      pivot(red, r, s);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      int pivot_col = -1;
      for (int j = 0; j < first_art_; ++j)
        if (t_[i][j] != 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col >= 0) {
        std::vector<Rat> dummy(cols_ + 1, Rat(0));
        pivot(dummy, static_cast<int>(i), pivot_col);
        ++i;
      } else {
        // Redundant constraint; drop the row.
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  int nv_;
  int cols_ = 0;
  int first_art_ = 0;
  std::vector<int> slack_col_;
  std::vector<int> art_col_;
  std::vector<std::vector<Rat>> t_;
  std::vector<int> basis_;
};

}  // namespace

SimplexOutcome solve_simplex(const LinearProgram& lp) {
  Tableau tableau(lp);
  SimplexOutcome outcome;
  if (!tableau.run_phase1()) {
    outcome.feasible = false;
    return outcome;
  }
  tableau.run_phase2(lp.objective);
  outcome.x = tableau.solution();
  outcome.value = tableau.objective_value(lp.objective);
  return outcome;
}

}  // namespace tsp2ec::detail
