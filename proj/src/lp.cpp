#include "funk/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace funk::lp {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kFeasibilityEps = 1e-13;

class Tableau {
public:
    Tableau(const Matrix& a, const Vector& b) : m_(a.rows()), n_(a.cols()) {
        // Columns: u (n), v (n), slack (m), artificial (one per negative rhs).
        std::vector<int> needs_artificial;
        for (int i = 0; i < m_; ++i) {
            if (b(i) < 0.0) needs_artificial.push_back(i);
        }
        first_artificial_ = 2 * n_ + m_;
        cols_ = first_artificial_ + static_cast<int>(needs_artificial.size());
        t_ = Matrix::Zero(m_ + 1, cols_ + 1);
        basis_.assign(m_, -1);

        int art = first_artificial_;
        for (int i = 0; i < m_; ++i) {
            double sign = b(i) < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n_; ++j) {
                t_(i, j) = sign * a(i, j);
                t_(i, n_ + j) = -sign * a(i, j);
            }
            t_(i, 2 * n_ + i) = sign;
            t_(i, cols_) = sign * b(i);
            if (sign < 0.0) {
                t_(i, art) = 1.0;
                basis_[i] = art++;
            } else {
                basis_[i] = 2 * n_ + i;
            }
        }
    }

    // Returns false if the problem is infeasible.
    bool phase_one() {
        if (cols_ == first_artificial_) return true;
        Vector cost = Vector::Zero(cols_);
        for (int j = first_artificial_; j < cols_; ++j) cost(j) = 1.0;
        load_objective(cost);
        run(cols_);
        double infeasibility = -t_(m_, cols_);
        double scale = 1.0;
        for (int i = 0; i < m_; ++i) scale = std::max(scale, std::abs(t_(i, cols_)));
        if (infeasibility > kFeasibilityEps * scale) return false;
        drive_out_artificials();
        return true;
    }

    // Returns false if unbounded.
    bool phase_two(const Vector& c) {
        Vector cost = Vector::Zero(cols_);
        for (int j = 0; j < n_; ++j) {
            cost(j) = c(j);
            cost(n_ + j) = -c(j);
        }
        load_objective(cost);
        return run(first_artificial_);
    }

    Vector solution() const {
        Vector z = Vector::Zero(cols_);
        for (int i = 0; i < m_; ++i) z(basis_[i]) = t_(i, cols_);
        return z.head(n_) - z.segment(n_, n_);
    }

private:
    void load_objective(const Vector& cost) {
        t_.row(m_).setZero();
        t_.row(m_).head(cols_) = cost.transpose();
        for (int i = 0; i < m_; ++i) {
            double cb = cost(basis_[i]);
            if (cb != 0.0) t_.row(m_) -= cb * t_.row(i);
        }
    }

    void pivot(int r, int c) {
        t_.row(r) /= t_(r, c);
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            double f = t_(i, c);
            if (f != 0.0) t_.row(i) -= f * t_.row(r);
        }
        basis_[r] = c;
    }

    // Simplex iterations over columns [0, allowed). Bland's rule.
    bool run(int allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < allowed; ++j) {
                if (t_(m_, j) < -kPivotEps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                double coef = t_(i, enter);
                if (coef <= kPivotEps) continue;
                double ratio = t_(i, cols_) / coef;
                if (leave < 0 || ratio < best - 1e-14) {
                    best = ratio;
                    leave = i;
                } else if (ratio <= best + 1e-14 && basis_[i] < basis_[leave]) {
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            for (int j = 0; j < first_artificial_; ++j) {
                if (std::abs(t_(i, j)) > 1e-9) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    int m_;
    int n_;
    int cols_ = 0;
    int first_artificial_ = 0;
    Matrix t_;
    std::vector<int> basis_;
};

// Rows are scaled to unit norm; this does not change the feasible set.
void normalize_rows(Matrix& a, Vector& b) {
    for (int i = 0; i < a.rows(); ++i) {
        double norm = a.row(i).norm();
        if (norm > 0.0) {
            a.row(i) /= norm;
            b(i) /= norm;
        }
    }
}

}  // namespace

Result minimize(const Matrix& a_in, const Vector& b_in, const Vector& c) {
    if (a_in.rows() != b_in.size() || a_in.cols() != c.size()) {
        fail(ErrorCode::DimensionMismatch, "lp: inconsistent problem dimensions");
    }
    Matrix a = a_in;
    Vector b = b_in;
    normalize_rows(a, b);
    Tableau tab(a, b);
    Result result;
    if (!tab.phase_one()) {
        result.status = Status::Infeasible;
        return result;
    }
    if (!tab.phase_two(c)) {
        result.status = Status::Unbounded;
        result.x = tab.solution();
        return result;
    }
    result.status = Status::Optimal;
    result.x = tab.solution();
    result.objective = c.dot(result.x);
    return result;
}

Result find_feasible(const Matrix& a, const Vector& b) {
    return minimize(a, b, Vector::Zero(a.cols()));
}

}  // namespace funk::lp
