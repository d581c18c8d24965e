#include "mourre/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "mourre/chebyshev.hpp"
#include "mourre/errors.hpp"
#include "mourre/verifier.hpp"

namespace mourre::interpolation {

namespace {

void validate_problem(const InterpolationProblem& p) {
    if (p.sigma.empty() || p.sigma.front() != 1)
        throw domain_error("interpolation: sigma must start with 1");
    for (std::size_t i = 0; i + 1 < p.sigma.size(); ++i)
        if (p.sigma[i] >= p.sigma[i + 1])
            throw domain_error("interpolation: sigma must be strictly increasing");
    if (!(p.left.E < p.right.E))
        throw domain_error("interpolation: band edges must satisfy left.E < right.E");
    if (p.left.kappa != p.kappa || p.right.kappa != p.kappa)
        throw domain_error("interpolation: band edges must share the problem's kappa");
    for (const auto* s : {&p.left, &p.right})
        if (static_cast<int>(s->X.size()) != s->n + 2)
            throw domain_error("interpolation: band edge chain has wrong length");
}

void append_edge_rows(std::vector<std::vector<double>>& rows, const InterpolationProblem& p,
                      const pingpong::ThresholdSolution& s) {
    const int m = s.n;
    for (int q = 0; q < (m + 1) / 2; ++q) {
        std::vector<double> row;
        row.reserve(p.sigma.size());
        for (int j : p.sigma) row.push_back(symbol::g2(j, p.kappa, {s.E, s.X[q]}));
        rows.push_back(std::move(row));
    }
    for (int q = 1; q <= m / 2; ++q) {
        std::vector<double> row;
        row.reserve(p.sigma.size());
        for (int j : p.sigma) row.push_back(symbol::dg2_dx(j, p.kappa, {s.E, s.X[q]}));
        rows.push_back(std::move(row));
    }
}

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& rows, std::size_t cols) {
    Eigen::MatrixXd M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return M;
}

std::string sigma_label(const std::vector<int>& sigma) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
    os << "}";
    return os.str();
}

}  // namespace

std::vector<std::vector<double>> assemble(const InterpolationProblem& p) {
    validate_problem(p);
    std::vector<std::vector<double>> rows;
    append_edge_rows(rows, p, p.left);
    append_edge_rows(rows, p, p.right);
    return rows;
}

SolveReport solve_coefficients(const InterpolationProblem& p) {
    const auto rows = assemble(p);
    const std::size_t cols = p.sigma.size();

    SolveReport rep;
    std::vector<double> rho(cols, 0.0);
    rho[0] = 1.0;

    if (rows.empty()) {
        rep.matrix_rank = 0;
        rep.free_dims = static_cast<int>(cols) - 1;
        for (std::size_t k = 1; k < cols; ++k) {
            std::vector<double> dir(cols, 0.0);
            dir[k] = 1.0;
            rep.nullspace.push_back(std::move(dir));
        }
    } else if (cols == 1) {
        const Eigen::MatrixXd M = to_eigen(rows, cols);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
        svd.setThreshold(1e-10);
        rep.matrix_rank = static_cast<int>(svd.rank());
    } else {
        const Eigen::MatrixXd M = to_eigen(rows, cols);
        {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
            svd.setThreshold(1e-10);
            rep.matrix_rank = static_cast<int>(svd.rank());
        }
        const Eigen::MatrixXd A = M.rightCols(static_cast<Eigen::Index>(cols - 1));
        const Eigen::VectorXd b = -M.col(0);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
        svd.setThreshold(1e-10);
        const Eigen::VectorXd x = svd.solve(b);
        for (std::size_t k = 1; k < cols; ++k) rho[k] = x(static_cast<Eigen::Index>(k - 1));

        const int rank_a = static_cast<int>(svd.rank());
        rep.free_dims = static_cast<int>(cols) - 1 - rank_a;
        const Eigen::MatrixXd& V = svd.matrixV();
        for (int k = rank_a; k < static_cast<int>(cols) - 1; ++k) {
            std::vector<double> dir(cols, 0.0);
            for (std::size_t c = 1; c < cols; ++c)
                dir[c] = V(static_cast<Eigen::Index>(c - 1), k);
            rep.nullspace.push_back(std::move(dir));
        }
    }

    double residual = 0;
    for (const auto& row : rows) {
        double acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += row[c] * rho[c];
        residual = std::max(residual, std::abs(acc));
    }
    rep.residual = residual;
    if (residual > 1e-8) {
        std::ostringstream msg;
        msg << "interpolation: no combination for sigma=" << sigma_label(p.sigma)
            << " satisfies the band constraints; residual=" << residual;
        throw solver_error(msg.str());
    }

    std::vector<std::pair<int, double>> terms;
    for (std::size_t c = 0; c < cols; ++c) terms.emplace_back(p.sigma[c], rho[c]);
    rep.combination = symbol::Combination(p.kappa, std::move(terms));
    return rep;
}

symbol::Combination AffineFamily::member(double rho_last) const {
    return symbol::Combination(
        kappa, {{sigma[0], 1.0},
                {sigma[1], intercept + slope * rho_last},
                {sigma[2], rho_last}});
}

AffineFamily solve_single_constraint_family(int kappa, double H1, const std::vector<int>& sigma) {
    if (sigma.size() != 3 || sigma[0] != 1 || sigma[1] <= sigma[0] || sigma[2] <= sigma[1])
        throw domain_error("solve_single_constraint_family: sigma must be three increasing "
                           "indices starting at 1");
    const double x0 = H1 - 1.0;
    if (x0 < -1.0 || x0 > 1.0)
        throw domain_error("solve_single_constraint_family: H1 - 1 outside [-1, 1]");
    const double u1 = cheb::eval_U(sigma[0] * kappa, x0);
    const double u2 = cheb::eval_U(sigma[1] * kappa, x0);
    const double u3 = cheb::eval_U(sigma[2] * kappa, x0);
    if (std::abs(u2) < 1e-12)
        throw solver_error("solve_single_constraint_family: middle harmonic vanishes at the "
                           "constraint point");
    AffineFamily fam;
    fam.kappa = kappa;
    fam.sigma = sigma;
    fam.intercept = -u1 / u2;
    fam.slope = -u3 / u2;
    return fam;
}

SearchResult search_sigma(const InterpolationProblem& base,
                          const std::vector<std::vector<int>>& pool, int budget) {
    if (pool.empty()) throw domain_error("search_sigma: empty candidate pool");
    SearchResult result;
    const int limit = budget > 0 ? std::min<int>(budget, static_cast<int>(pool.size()))
                                 : static_cast<int>(pool.size());
    for (int i = 0; i < limit; ++i) {
        InterpolationProblem p = base;
        p.sigma = pool[static_cast<std::size_t>(i)];
        SigmaVerdict v;
        v.sigma = p.sigma;
        SolveReport rep;
        try {
            rep = solve_coefficients(p);
            v.solved = true;
            v.residual = rep.residual;
        } catch (const mourre::error& e) {
            v.note = e.what();
            result.verdicts.push_back(std::move(v));
            continue;
        }
        // cheap screen first, full resolution only for survivors
        auto screen = verifier::certify_band(rep.combination, p.left.E, p.right.E, 64, 256);
        if (!screen.certified) {
            v.note = screen.failure;
            result.verdicts.push_back(std::move(v));
            continue;
        }
        auto full = verifier::certify_band(rep.combination, p.left.E, p.right.E, 256, 512);
        v.certified = full.certified;
        if (!full.certified) {
            v.note = "screen passed but full resolution failed: " + full.failure;
            result.verdicts.push_back(std::move(v));
            continue;
        }
        result.verdicts.push_back(std::move(v));
        result.report = std::move(rep);
        result.sigma = p.sigma;
        return result;
    }
    std::ostringstream msg;
    msg << "search_sigma: no candidate certifies the band;";
    for (const auto& v : result.verdicts) {
        msg << " " << sigma_label(v.sigma) << " -> "
            << (v.solved ? (v.certified ? "certified" : "not positive") : "no solution");
        if (!v.note.empty()) msg << " (" << v.note << ")";
        msg << ";";
    }
    throw solver_error(msg.str());
}

std::vector<std::vector<int>> default_sigma_pool(int n, int budget) {
    if (n < 1) return {{1}};
    std::vector<std::vector<int>> pool;
    auto push = [&](std::vector<int> s) {
        if (budget > 0 && static_cast<int>(pool.size()) >= budget) return;
        for (const auto& q : pool)
            if (q == s) return;
        pool.push_back(std::move(s));
    };

    std::vector<int> base(2 * n);
    for (int i = 0; i < 2 * n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    push(base);
    for (int m = 2 * n + 1; m <= 2 * n + 4; ++m) {
        std::vector<int> s(base.begin(), base.end() - 1);
        s.push_back(m);
        push(s);
    }
    // lexicographic 2n-subsets of {1..2n+4} containing 1
    std::vector<int> idx(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    const int top = 2 * n + 4;
    while (budget <= 0 || static_cast<int>(pool.size()) < budget) {
        push(idx);
        int k = 2 * n - 1;
        while (k >= 1 && idx[static_cast<std::size_t>(k)] == top - (2 * n - 1 - k)) --k;
        if (k < 1) break;  // keep idx[0] == 1
        ++idx[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < 2 * n; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return pool;
}

std::string to_json_string(const SolveReport& r) {
    nlohmann::json j;
    j["kappa"] = r.combination.kappa;
    nlohmann::json sigma = nlohmann::json::array(), rho = nlohmann::json::array();
    for (const auto& [jj, rr] : r.combination.terms) {
        sigma.push_back(jj);
        rho.push_back(rr);
    }
    j["sigma"] = std::move(sigma);
    j["rho"] = std::move(rho);
    j["rank"] = r.matrix_rank;
    j["residual"] = r.residual;
    j["free_dims"] = r.free_dims;
    if (!r.nullspace.empty()) j["nullspace"] = r.nullspace;
    return j.dump();
}

SolveReport report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SolveReport r;
    const auto sigma = j.at("sigma").get<std::vector<int>>();
    const auto rho = j.at("rho").get<std::vector<double>>();
    if (sigma.size() != rho.size())
        throw domain_error("report_from_json: sigma and rho sizes differ");
    std::vector<std::pair<int, double>> terms;
    for (std::size_t i = 0; i < sigma.size(); ++i) terms.emplace_back(sigma[i], rho[i]);
    r.combination = symbol::Combination(j.at("kappa").get<int>(), std::move(terms));
    r.matrix_rank = j.at("rank").get<int>();
    r.residual = j.at("residual").get<double>();
    r.free_dims = j.at("free_dims").get<int>();
    if (j.contains("nullspace"))
        r.nullspace = j.at("nullspace").get<std::vector<std::vector<double>>>();
    return r;
}

}  // namespace mourre::interpolation
