#include "qwalk/absorb.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/genfun.hpp"

namespace qwalk {

QuadratureSpec one_boundary_quadrature(double abs_tol) {
    QuadratureSpec spec;
    spec.method = QuadratureMethod::SplitTanhSinh;
    spec.abs_tol = abs_tol;
    const double phi = delta_branch_angle();
    spec.breakpoints = {phi, -phi};
    return spec;
}

QuadratureSpec two_boundary_quadrature(double abs_tol) {
    QuadratureSpec spec;
    spec.method = QuadratureMethod::PeriodicTrapezoid;
    spec.abs_tol = abs_tol;
    return spec;
}

namespace {

Complex combine(const CoinSpinor& a, Complex l, Complex s, Complex r) { return a.left * l + a.stay * s + a.right * r; }

Estimate to_estimate(const QuadratureResult& q) { return {q.value, q.error_estimate, q.converged}; }

}  // namespace

Estimate prob_one_boundary(int M, const CoinSpinor& spinor, const QuadratureSpec& spec) {
    if (M < 1) throw std::invalid_argument("prob_one_boundary: M must be >= 1");
    auto f = [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        const Complex l = l_closed(z);
        const double first = std::norm(combine(spinor, l, s_closed(z), r_closed(z)));
        return first * std::pow(std::norm(l), M - 1);
    };
    return to_estimate(integrate_periodic(f, spec));
}

Estimate prob_one_boundary_right(int M, const CoinSpinor& spinor, const QuadratureSpec& spec) {
    return prob_one_boundary(M, spinor.mirrored(), spec);
}

void AbsorptionQuery::validate() const {
    if (bounds.empty()) throw std::invalid_argument("absorption query needs at least one boundary");
    bounds.validate();
    require_normalized(spinor);
}

Estimate prob_two_boundary_left(int M, int N, const CoinSpinor& spinor, const QuadratureSpec& spec) {
    if (M < 1 || N < 1) throw std::invalid_argument("prob_two_boundary_left: M and N must be >= 1");
    auto f = [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        const auto ladder = two_boundary_ladder(N + M - 1, z);
        const GenFunValues& first = ladder[static_cast<std::size_t>(N)];
        double v = std::norm(combine(spinor, first.l, first.s, first.r));
        for (int k = 1; k <= M - 1; ++k) v *= std::norm(ladder[static_cast<std::size_t>(N + k)].l);
        return v;
    };
    return to_estimate(integrate_periodic(f, spec));
}

AbsorptionAnswer prob_two_boundary(const AbsorptionQuery& query, const QuadratureSpec& spec) {
    if (!query.bounds.left || !query.bounds.right)
        throw std::invalid_argument("prob_two_boundary: both boundaries are required");
    query.bounds.validate();
    const int M = *query.bounds.left;
    const int N = *query.bounds.right;
    const Estimate left = prob_two_boundary_left(M, N, query.spinor, spec);
    const Estimate right = prob_two_boundary_left(N, M, query.spinor.mirrored(), spec);

    AbsorptionAnswer ans;
    ans.p_left = left.value;
    ans.p_right = right.value;
    ans.sum = left.value + right.value;
    ans.deficit = 1.0 - ans.sum;
    ans.error_estimate = left.error_estimate + right.error_estimate;
    ans.converged = left.converged && right.converged;
    return ans;
}

AbsorptionAnswer absorb(const AbsorptionQuery& query, std::optional<double> tol) {
    query.validate();
    if (query.bounds.left && query.bounds.right) {
        return prob_two_boundary(query, tol ? two_boundary_quadrature(*tol) : two_boundary_quadrature());
    }
    const QuadratureSpec spec = tol ? one_boundary_quadrature(*tol) : one_boundary_quadrature();
    AbsorptionAnswer ans;
    Estimate e;
    if (query.bounds.left) {
        e = prob_one_boundary(*query.bounds.left, query.spinor, spec);
        ans.p_left = e.value;
    } else {
        e = prob_one_boundary_right(*query.bounds.right, query.spinor, spec);
        ans.p_right = e.value;
    }
    ans.sum = ans.p_left + ans.p_right;
    ans.deficit = 1.0 - ans.sum;
    ans.error_estimate = e.error_estimate;
    ans.converged = e.converged;
    return ans;
}

std::vector<double> theorem4_sequence(int maxN) {
    if (maxN < 0) throw std::invalid_argument("theorem4_sequence: maxN must be >= 0");
    std::vector<double> p(static_cast<std::size_t>(maxN) + 1, 0.0);
    for (std::size_t n = 1; n < p.size(); ++n) p[n] = (2.0 + 3.0 * p[n - 1]) / (3.0 + 4.0 * p[n - 1]);
    return p;
}

double theorem4_crosscheck(int N, const QuadratureSpec& spec) {
    if (N < 1) throw std::invalid_argument("theorem4_crosscheck: N must be >= 1");
    const Estimate q = prob_two_boundary_left(1, N, CoinSpinor::basis(Coin::Right), spec);
    return std::abs(q.value - theorem4_sequence(N).back());
}

std::vector<Table1Row> table1(int maxN, const QuadratureSpec& spec) {
    if (maxN < 2) throw std::invalid_argument("table1: maxN must be >= 2");
    std::vector<Table1Row> rows;
    rows.reserve(static_cast<std::size_t>(maxN));
    for (int n = 1; n <= maxN; ++n) {
        const AbsorptionAnswer a =
            prob_two_boundary({CoinSpinor::basis(Coin::Right), BoundarySpec::both(2, n)}, spec);
        Table1Row row;
        row.n = n;
        row.left = a.p_left;
        row.right = a.p_right;
        row.sum = a.sum;
        row.error_estimate = a.error_estimate;
        row.precise = a.converged && a.error_estimate <= kTable1PrecisionLimit;
        rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        Table1Row& row = rows[i];
        const double p = row.sum - rows[i + 1].sum;
        row.localization = p;
        row.localization_scaled = p * kTable1Scale;
        row.log2_scaled = p > 0.0 ? std::log2(p * kTable1Scale) : -INFINITY;
        row.precise = row.precise && rows[i + 1].precise;
    }
    return rows;
}

}  // namespace qwalk
