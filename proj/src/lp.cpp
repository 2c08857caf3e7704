#include "conelab/lp.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace conelab::lp {

namespace {

std::mutex observer_mutex;
std::shared_ptr<const FeasibilityObserver> observer;

void notify(const FeasibilitySystem& sys, const FeasibilityResult& result) {
  std::shared_ptr<const FeasibilityObserver> current;
  {
    std::lock_guard lock(observer_mutex);
    current = observer;
  }
  if (current) (*current)(sys, result);
}

/// Phase-one tableau for M·w = d, w ≥ 0 with a prescribed initial identity
/// basis (one column per row, cost 1 for artificial columns, 0 otherwise).
class PhaseOne {
 public:
  PhaseOne(Matrix tableau, std::vector<std::size_t> basis, std::vector<bool> artificial)
      : t_(std::move(tableau)), basis_(std::move(basis)), initial_(basis_),
        artificial_(std::move(artificial)), width_(t_.cols() - 1), cost_row_(t_.cols()) {
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j <= width_; ++j) cost_row_[j] -= t_(i, j);
    }
    for (std::size_t j = 0; j < width_; ++j)
      if (artificial_[j]) cost_row_[j] += 1;
  }

  void run() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_; ++j)
        if (cost_row_[j].sign() < 0) {
          entering = j;
          break;
        }
      if (!entering) return;
      const std::size_t col = *entering;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < t_.rows(); ++i) {
        if (t_(i, col).sign() <= 0) continue;
        Rational ratio = t_(i, width_) / t_(i, col);
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so an improving column always has a pivot row.
      if (!leaving) throw std::logic_error("phase one unbounded");
      pivot(*leaving, col);
    }
  }

  Rational objective() const { return -cost_row_[width_]; }

  Rational value(std::size_t column) const {
    for (std::size_t i = 0; i < t_.rows(); ++i)
      if (basis_[i] == column) return t_(i, width_);
    return Rational();
  }

  /// Simplex multipliers u with cost − uᵀM ≥ 0 at optimality.
  Vector multipliers() const {
    Vector u(t_.rows());
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      const std::size_t c = initial_[i];
      u[i] = Rational(artificial_[c] ? 1 : 0) - cost_row_[c];
    }
    return u;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / t_(row, col);
    for (std::size_t j = 0; j <= width_; ++j)
      if (!t_(row, j).is_zero()) t_(row, j) *= inv;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == row || t_(i, col).is_zero()) continue;
      const Rational factor = t_(i, col);
      for (std::size_t j = 0; j <= width_; ++j)
        if (!t_(row, j).is_zero()) t_(i, j) -= factor * t_(row, j);
    }
    if (!cost_row_[col].is_zero()) {
      const Rational factor = cost_row_[col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (!t_(row, j).is_zero()) cost_row_[j] -= factor * t_(row, j);
    }
    basis_[row] = col;
  }

  Matrix t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> initial_;
  std::vector<bool> artificial_;
  std::size_t width_;
  Vector cost_row_;
};

FeasibilityResult solve(const FeasibilitySystem& sys) {
  const std::size_t n = sys.num_vars();
  const std::size_t n_eq = sys.eq_matrix.rows();
  const std::size_t n_in = sys.ineq_matrix.rows();

  // A row a·x ≥ 0 with a = α e_j (α > 0) is absorbed as a sign constraint on x_j.
  std::vector<std::optional<std::size_t>> sign_row(n);
  std::vector<bool> absorbed(n_in, false);
  for (std::size_t k = 0; k < n_in; ++k) {
    std::optional<std::size_t> support;
    bool single = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (sys.ineq_matrix(k, j).is_zero()) continue;
      if (support) {
        single = false;
        break;
      }
      support = j;
    }
    if (!single || !support || sys.ineq_matrix(k, *support).sign() < 0) continue;
    absorbed[k] = true;
    if (!sign_row[*support]) sign_row[*support] = k;
  }

  std::vector<std::size_t> plus_col(n), minus_col(n);
  std::size_t width = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = width++;
    minus_col[j] = sign_row[j] ? plus_col[j] : width++;
  }
  std::vector<std::size_t> kept_rows;
  for (std::size_t k = 0; k < n_in; ++k)
    if (!absorbed[k]) kept_rows.push_back(k);
  const std::size_t slack0 = width;
  width += kept_rows.size();
  const std::size_t art0 = width;
  width += n_eq;

  const std::size_t m = n_eq + kept_rows.size();
  Matrix tableau(m, width + 1);
  std::vector<std::size_t> basis(m);
  std::vector<bool> artificial(width, false);
  std::vector<int> flip(n_eq, 1);

  for (std::size_t i = 0; i < n_eq; ++i) {
    flip[i] = sys.eq_rhs[i].sign() < 0 ? -1 : 1;
    const Rational s(flip[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = sys.eq_matrix(i, j);
      if (a.is_zero()) continue;
      tableau(i, plus_col[j]) = s * a;
      if (minus_col[j] != plus_col[j]) tableau(i, minus_col[j]) = -(s * a);
    }
    tableau(i, art0 + i) = 1;
    tableau(i, width) = s * sys.eq_rhs[i];
    basis[i] = art0 + i;
    artificial[art0 + i] = true;
  }
  for (std::size_t r = 0; r < kept_rows.size(); ++r) {
    const std::size_t i = n_eq + r;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = sys.ineq_matrix(kept_rows[r], j);
      if (a.is_zero()) continue;
      tableau(i, plus_col[j]) = -a;
      if (minus_col[j] != plus_col[j]) tableau(i, minus_col[j]) = a;
    }
    tableau(i, slack0 + r) = 1;
    basis[i] = slack0 + r;
  }

  PhaseOne simplex(std::move(tableau), std::move(basis), std::move(artificial));
  simplex.run();

  if (simplex.objective().is_zero()) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = simplex.value(plus_col[j]);
      if (minus_col[j] != plus_col[j]) x[j] -= simplex.value(minus_col[j]);
    }
    return FeasiblePoint{std::move(x)};
  }

  const Vector u = simplex.multipliers();
  Vector y(n_eq), z(n_in);
  for (std::size_t i = 0; i < n_eq; ++i) y[i] = Rational(flip[i]) * u[i];
  for (std::size_t r = 0; r < kept_rows.size(); ++r) z[kept_rows[r]] = -u[n_eq + r];
  for (std::size_t j = 0; j < n; ++j) {
    if (!sign_row[j]) continue;
    Rational residual;
    for (std::size_t i = 0; i < n_eq; ++i) add_product(residual, y[i], sys.eq_matrix(i, j));
    for (std::size_t k : kept_rows) add_product(residual, z[k], sys.ineq_matrix(k, j));
    z[*sign_row[j]] = -residual / sys.ineq_matrix(*sign_row[j], j);
  }

  Vector joined = y;
  joined.insert(joined.end(), z.begin(), z.end());
  joined = primitive(joined);
  return FarkasCertificate{Vector(joined.begin(), joined.begin() + static_cast<std::ptrdiff_t>(n_eq)),
                           Vector(joined.begin() + static_cast<std::ptrdiff_t>(n_eq), joined.end())};
}

}  // namespace

void FeasibilitySystem::validate() const {
  if (ineq_matrix.cols() != eq_matrix.cols())
    throw InputError("feasibility system: inequality matrix has " +
                     std::to_string(ineq_matrix.cols()) + " columns, equality matrix has " +
                     std::to_string(eq_matrix.cols()));
  if (eq_rhs.size() != eq_matrix.rows())
    throw InputError("feasibility system: rhs has dim " + std::to_string(eq_rhs.size()) +
                     ", expected " + std::to_string(eq_matrix.rows()));
}

FeasibilityResult feasibility(const FeasibilitySystem& sys) {
  sys.validate();
  FeasibilityResult result = solve(sys);
  const bool ok = std::visit([&](const auto& branch) { return verify(sys, branch); }, result);
  if (!ok) throw std::logic_error("feasibility: produced an unverifiable result");
  notify(sys, result);
  return result;
}

bool verify(const FeasibilitySystem& sys, const FeasiblePoint& p) {
  if (p.x.size() != sys.num_vars()) return false;
  if (sys.eq_matrix * p.x != sys.eq_rhs) return false;
  for (const auto& v : sys.ineq_matrix * p.x)
    if (v.sign() < 0) return false;
  return true;
}

bool verify(const FeasibilitySystem& sys, const FarkasCertificate& c) {
  if (c.y.size() != sys.eq_matrix.rows() || c.z.size() != sys.ineq_matrix.rows()) return false;
  for (const auto& v : c.z)
    if (v.sign() < 0) return false;
  const Vector combo = sys.eq_matrix.transpose() * c.y + sys.ineq_matrix.transpose() * c.z;
  if (!is_zero(combo)) return false;
  return dot(c.y, sys.eq_rhs).sign() > 0;
}

MembershipResult cone_membership(std::span<const Vector> generators, const Vector& target) {
  const std::size_t dim = target.size();
  for (std::size_t i = 0; i < generators.size(); ++i)
    require_dim(generators[i], dim, ("generator " + std::to_string(i)).c_str());
  if (is_zero(target)) return ConeMember{Vector(generators.size())};
  if (generators.empty()) return ConeSeparation{primitive(Rational(-1) * target)};

  FeasibilitySystem sys{Matrix::from_cols(generators, dim), target,
                        Matrix::identity(generators.size())};
  const FeasibilityResult r = feasibility(sys);
  MembershipResult out;
  if (const auto* p = std::get_if<FeasiblePoint>(&r)) {
    out = ConeMember{p->x};
  } else {
    out = ConeSeparation{primitive(Rational(-1) * std::get<FarkasCertificate>(r).y)};
  }
  const bool ok =
      std::visit([&](const auto& branch) { return verify(generators, target, branch); }, out);
  if (!ok) throw std::logic_error("cone_membership: produced an unverifiable result");
  return out;
}

bool verify(std::span<const Vector> generators, const Vector& target, const ConeMember& m) {
  if (m.coefficients.size() != generators.size()) return false;
  Vector sum(target.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (m.coefficients[i].sign() < 0 || generators[i].size() != target.size()) return false;
    for (std::size_t k = 0; k < target.size(); ++k)
      add_product(sum[k], m.coefficients[i], generators[i][k]);
  }
  return sum == target;
}

bool verify(std::span<const Vector> generators, const Vector& target, const ConeSeparation& s) {
  if (s.witness.size() != target.size()) return false;
  for (const auto& g : generators)
    if (g.size() != target.size() || dot(g, s.witness).sign() < 0) return false;
  return dot(target, s.witness).sign() < 0;
}

void set_feasibility_observer(FeasibilityObserver fn) {
  auto next = fn ? std::make_shared<const FeasibilityObserver>(std::move(fn)) : nullptr;
  std::lock_guard lock(observer_mutex);
  observer = std::move(next);
}

}  // namespace conelab::lp
