// Acceptance runner: one line per criterion, then a summary. Exits nonzero
// only when a criterion outside kKnownUnattainable fails.

#include "generators.hpp"
#include "polar/claims.hpp"
#include "polar/composed.hpp"
#include "polar/extremal.hpp"
#include "polar/families.hpp"
#include "polar/kernels.hpp"
#include "polar/quadrature.hpp"
#include "polar/report.hpp"
#include "polar/weighted_ip.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace polar {

namespace {

// Criterion 6 asks for Q_n'' = -n(n-1) q_{n-2}; the exact quotient is +n(n-1).
const std::set<int> kKnownUnattainable = {6};

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string fmt(const char* label, int n) { return std::string(label) + " n=" + std::to_string(n); }

std::string fmt(const char* label, int n, int m) {
    return std::string(label) + " (" + std::to_string(n) + "," + std::to_string(m) + ")";
}

Outcome coefficient_fidelity() {
    Outcome o;
    const std::vector<std::vector<long>> listing = {
        {-1, 0, 1}, {0, -1, 0, 1}, {1, 0, -6, 0, 5}, {0, 3, 0, -10, 0, 7}, {-1, 0, 15, 0, -35, 0, 21}};
    const std::vector<long> dens = {2, 2, 8, 8, 16};
    for (int n = 2; n <= 6; ++n) {
        std::vector<BigRational> c;
        for (long v : listing[n - 2]) c.emplace_back(v, dens[n - 2]);
        o.require(pipcir(n) == Polynomial(c), fmt("Q", n));
    }
    if (o.ok) o.detail = "Q_2..Q_6 bit-exact";
    return o;
}

Outcome q_orthogonality() {
    Outcome o;
    std::vector<int> idx;
    for (int n = 2; n <= 40; ++n) idx.push_back(n);
    const GramMatrix g = gram_matrix(FamilyKind::Pipcir, WeightKind::QWeight, idx);
    o.require(g.flagged.empty(), "unreduced pair");
    for (std::size_t i = 0; i < idx.size() && o.ok; ++i) {
        const int n = idx[i];
        o.require(g.entries[i][i] == BigRational(2, n * (n - 1) * (2 * n - 1)), fmt("norm", n));
        for (std::size_t j = i + 1; j < idx.size(); ++j) o.require(g.entries[i][j]->is_zero(), fmt("pair", n, idx[j]));
    }
    if (o.ok) o.detail = "741 pairs zero, 39 norms exact";
    return o;
}

Outcome p_orthogonality() {
    Outcome o;
    std::vector<int> p_idx;
    std::vector<int> q_idx;
    for (int n = 1; n <= 40; ++n) {
        p_idx.push_back(n);
        q_idx.push_back(n + 1);
    }
    const GramMatrix gp = gram_matrix(FamilyKind::Polar, WeightKind::PWeight, p_idx);
    const GramMatrix gq = gram_matrix(FamilyKind::Pipcir, WeightKind::QWeight, q_idx);
    o.require(gp.flagged.empty() && gq.flagged.empty(), "unreduced pair");
    for (std::size_t i = 0; i < p_idx.size() && o.ok; ++i) {
        for (std::size_t j = i; j < p_idx.size(); ++j) {
            const int n = p_idx[i];
            const int m = p_idx[j];
            if (i != j) o.require(gp.entries[i][j]->is_zero(), fmt("pair", n, m));
            o.require(*gp.entries[i][j] == BigRational((n + 1) * (m + 1)) * *gq.entries[i][j], fmt("identity", n, m));
        }
    }
    if (o.ok) o.detail = "780 pairs zero, P/Q identity exact";
    return o;
}

Outcome route_equivalence() {
    Outcome o;
    for (int n = 0; n <= 25; ++n) {
        o.require(legendre(n) == shifted_binomial_legendre(n), fmt("binomial L", n));
        o.require(legendre(n) == legendre_rodrigues(n), fmt("Rodrigues L", n));
        if (n >= 1) o.require(polar(n) == polar_rodrigues(n), fmt("Rodrigues P", n));
        if (n >= 1) {
            const Polynomial from_q = divide_exact(pipcir(n + 1) * BigRational(n + 1), Polynomial({-1, 1}));
            o.require(polar(n) == from_q, fmt("P from Q", n));
        }
        if (n >= 2) {
            o.require(pipcir(n) == pipcir_rodrigues(n), fmt("Rodrigues Q", n));
            o.require(pipcir(n) == pipcir_explicit(n), fmt("explicit Q", n));
            o.require(pipcir(n) == antiderivative_vanishing_at(legendre(n - 1), 1), fmt("antiderivative Q", n));
        }
    }
    if (o.ok) o.detail = "all constructions agree for n <= 25";
    return o;
}

Outcome residuals() {
    Outcome o;
    const Polynomial xm1({-1, 1});
    for (int n = 0; n <= 40; ++n) {
        o.require(ode_residual(FamilyKind::Polar, n).is_zero(), fmt("polar ODE", n));
        const Polynomial p = polar(n);
        o.require(legendre(n) * BigRational(n + 1) == xm1 * differentiate(p) + p, fmt("polar condition", n));
        if (n >= 2) {
            o.require(ode_residual(FamilyKind::Pipcir, n).is_zero(), fmt("second-order ODE", n));
            o.require(pipcir_third_order_residual(n).is_zero(), fmt("third-order ODE", n));
        }
        if (n >= 3) {
            const auto [a, b] = recurrence_residual_pipcir(n);
            o.require(a.is_zero(), fmt("first recurrence", n));
            o.require(b.is_zero(), fmt("second recurrence", n));
        }
        if (n >= 2 && n <= 20) o.require(rodrigues_pair_residual(n).is_zero(), fmt("Rodrigues pair", n));
    }
    if (o.ok) o.detail = "all residuals zero";
    return o;
}

Outcome zero_structure() {
    Outcome o;
    std::string sign_witness;
    for (int n = 2; n <= 40; ++n) {
        const Polynomial q = pipcir_cofactor(n);
        o.require(q.degree() == n - 2, fmt("cofactor degree", n));
        if (n > 2) {
            o.require(sturm_root_count(q, Interval(-1, 1)) == static_cast<std::size_t>(n - 2), fmt("root count", n));
            o.require(evaluate(q, 1) != 0 && evaluate(q, -1) != 0, fmt("endpoint root", n));
        }
        const Polynomial d2 = differentiate(pipcir(n), 2);
        const Polynomial claimed = q * BigRational(-n * (n - 1));
        if (d2 != claimed && sign_witness.empty()) {
            sign_witness = "Q_" + std::to_string(n) + "'' = " + d2.str() + ", claimed " + claimed.str();
        }
        if (d2 != claimed) {
            const Polynomial flipped = q * BigRational(n * (n - 1));
            if (d2 != flipped) o.require(false, fmt("second derivative not a multiple", n));
        }
    }
    if (!o.ok) return o;
    if (!sign_witness.empty()) {
        o.ok = false;
        o.detail = "root counts certified for n=2..40; sign check fails, Q_n'' = +n(n-1) q_{n-2} (" + sign_witness +
                   ")";
        return o;
    }
    o.detail = "root counts and second derivatives exact";
    return o;
}

Outcome kernels() {
    Outcome o;
    prop::Gen g(7001);
    for (int n = 1; n <= 15 && o.ok; ++n) {
        const KernelSpec spec = KernelSpec::contiguous(n);
        for (int i = 0; i < 50; ++i) {
            const BigRational x = g.rational();
            const BigRational y = g.rational();
            o.require(christoffel_darboux(n, x, y) == kernel_value(spec, x, y), fmt("Christoffel-Darboux", n));
        }
        Polynomial f;
        for (int k = 1; k <= n; ++k) f += polar(k) * g.rational();
        o.require(reproduce(f, spec) == f, fmt("reproduce", n));
    }
    const GramMatrix z = kernel_zero_gram(15);
    o.require(z.flagged.empty() && z.is_diagonal(), "kernel-at-zero Gram not diagonal");
    if (o.ok) {
        bool all_zero = true;
        for (std::size_t i = 0; i < z.indices.size(); ++i) all_zero = all_zero && z.entries[i][i]->is_zero();
        o.detail = std::string("750 CD pairs, reproduction exact, kernel-at-zero Gram diagonal") +
                   (all_zero ? " (all entries zero)" : "");
    }
    return o;
}

Outcome extremal() {
    Outcome o;
    std::size_t subsets = 0;
    for (int a = 1; a <= 12; ++a) {
        for (int b = a; b <= 12; ++b, ++subsets) {
            const KernelSpec spec = KernelSpec::range(a, b);
            o.require(oracle_minimize(spec) == solve_extremal(spec), "contiguous " + std::to_string(a) + ".." +
                                                                         std::to_string(b));
        }
    }
    prop::Gen g(7002);
    for (int i = 0; i < 50; ++i, ++subsets) {
        const KernelSpec spec(g.subset(1, 12));
        o.require(oracle_minimize(spec) == solve_extremal(spec), "random subset " + std::to_string(i));
    }
    for (int i = 0; i < 20; ++i) {
        std::vector<int> idx = g.subset(1, 10);
        if (idx.size() < 2) idx = {1, 4};
        const KernelSpec spec(idx);
        const ExtremalSolution sol = solve_extremal(spec);
        Polynomial delta;
        const int k0 = idx.front();
        for (std::size_t j = 1; j < idx.size(); ++j) {
            delta += (polar(idx[j]) * BigRational(k0 + 1) - polar(k0) * BigRational(idx[j] + 1)) * g.nonzero_rational();
        }
        o.require(evaluate(delta, 1).is_zero(), "perturbation infeasible");
        if (!delta.is_zero()) o.require(extremal_objective(sol.minimizer + delta) > sol.minimum, "perturbation improved");
    }
    o.require(solve_extremal(KernelSpec({2})).minimum == BigRational(1, 15), "M({2})");
    if (o.ok) o.detail = std::to_string(subsets) + " subsets match oracle, 20 perturbations, M({2}) = 1/15";
    return o;
}

Outcome composed() {
    Outcome o;
    const Interval unit(-1, 1);
    const QuadratureRule rule = gauss_legendre_rule(64);
    const std::vector<std::pair<std::string, RationalMap>> maps = {
        {"identity", RationalMap::identity(unit)},
        {"cubic", RationalMap::cubic()},
        {"mobius(3,1,1,3)", RationalMap::mobius(3, 1, 1, 3, unit)}};
    double worst = 0;
    for (const auto& [name, map] : maps) {
        try {
            const ComposedGram g = composed_gram(map, Orientation::AsOrthogonality, 8, rule);
            for (std::size_t i = 0; i < g.indices.size(); ++i) {
                for (std::size_t j = 0; j < g.indices.size(); ++j) {
                    const Real expected = i == j ? to_real(polar_norm_squared(g.indices[i])) : Real(0);
                    const double gap = static_cast<double>(abs(g.values[i][j] - expected));
                    worst = std::max(worst, gap);
                    o.require(gap <= 1e-10, name + " " + fmt("entry", g.indices[i], g.indices[j]));
                }
            }
        } catch (const std::exception& e) {
            o.require(false, name + ": " + e.what());
        }
    }
    if (o.ok) {
        std::ostringstream s;
        s << "identity, cubic, Mobius within 1e-10 (worst " << worst << ")";
        o.detail = s.str();
    }
    return o;
}

Outcome quadrature() {
    Outcome o;
    for (int m = 1; m <= 20; ++m) {
        const QuadratureRule rule = gauss_legendre_rule(m);
        for (int d = 0; d <= 2 * m - 1; ++d) {
            const Real exact = d % 2 == 1 ? Real(0) : Real(2) / (d + 1);
            const Real got = integrate([d](const Real& x) { return pow(x, d); }, rule).value;
            o.require(abs(got - exact) <= Real("1e-14"), fmt("Gauss degree", m, d));
        }
    }
    const QuadratureRule ts = tanh_sinh_rule(6);
    const Polynomial p1 = polar(1);
    const Polynomial p2 = polar(2);
    const Polynomial q3 = pipcir(3);
    const std::vector<std::tuple<std::string, std::function<Real(const Real&)>, Real>> cases = {
        {"P_1 norm", [&](const Real& x) { return pow(evaluate_real(p1, x), 2) * (1 - x) / (1 + x); }, Real(4) / 3},
        {"Q_3 norm", [&](const Real& x) { return pow(evaluate_real(q3, x), 2) / (1 - x * x); }, Real(1) / 15},
        {"P_2 norm", [&](const Real& x) { return pow(evaluate_real(p2, x), 2) * (1 - x) / (1 + x); }, Real(3) / 5}};
    for (const auto& [name, fn, exact] : cases) {
        o.require(abs(integrate(fn, ts).value - exact) <= Real("1e-12"), "tanh-sinh " + name);
    }
    if (o.ok) o.detail = "Gauss m <= 20 exact, tanh-sinh 4/3, 1/15, 3/5";
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome claims_report() {
    Outcome o;
    const auto first = run_claims(12);
    const std::string a = render_report(first, ReportFormat::Json);
    const std::string b = render_report(run_claims(12), ReportFormat::Json);
    o.require(a == b, "report not byte-deterministic");

    const auto golden = parse_report_json(slurp(std::string(POLAR_GOLDEN_DIR) + "/claims_12.json"));
    o.require(golden.size() == first.size(), "golden size differs");
    for (std::size_t i = 0; i < golden.size() && i < first.size(); ++i) {
        o.require(golden[i].claim == first[i].claim && golden[i].params == first[i].params &&
                      golden[i].status == first[i].status,
                  "partition differs at " + first[i].claim);
    }

    std::set<std::string> seen;
    for (const auto& r : first) seen.insert(r.claim);
    for (const auto& id : registered_claims()) o.require(seen.count(id) > 0, "missing " + id);

    const auto status_of = [&](const std::string& id, auto&& accept) {
        for (const auto& r : first) {
            if (r.claim == id && !accept(r)) return false;
        }
        return true;
    };
    const auto param_text = [](const ClaimResult& r, const std::string& key) {
        for (const auto& [k, v] : r.params) {
            if (k == key) return std::visit([](const auto& x) {
                std::ostringstream s;
                s << x;
                return s.str();
            }, v);
        }
        return std::string();
    };
    for (const char* id : {"NormQn", "Pnat1", "condpolar", "Polardiffequat", "Second", "expp"}) {
        o.require(status_of(id, [](const ClaimResult& r) { return r.status == ClaimStatus::Pass; }),
                  std::string(id) + " expected PASS");
    }
    o.require(status_of("NormPn",
                        [&](const ClaimResult& r) {
                            return std::stol(param_text(r, "n")) < 2 || r.status == ClaimStatus::Fail;
                        }),
              "NormPn expected FAIL");
    o.require(status_of("derivpnat1",
                        [&](const ClaimResult& r) {
                            return param_text(r, "reading") != "printed" || std::stol(param_text(r, "n")) < 2 ||
                                   r.status == ClaimStatus::Fail;
                        }),
              "derivpnat1 expected FAIL");
    o.require(status_of("Pnat0",
                        [&](const ClaimResult& r) {
                            const long n = std::stol(param_text(r, "n"));
                            return n < 2 || n % 2 == 1 || r.status == ClaimStatus::Fail;
                        }),
              "Pnat0 even n expected FAIL");
    o.require(status_of("CDS11",
                        [&](const ClaimResult& r) {
                            return param_text(r, "reading") != "printed" || r.status == ClaimStatus::Fail;
                        }),
              "CDS11 verbatim expected FAIL");
    o.require(status_of("wffff",
                        [&](const ClaimResult& r) {
                            return param_text(r, "reading") != "f-prime-factor" || r.status == ClaimStatus::Fail;
                        }),
              "wffff f' factor expected FAIL");

    if (o.ok) {
        std::size_t pass = 0, fail = 0, na = 0;
        for (const auto& r : first) {
            (r.status == ClaimStatus::Pass ? pass : r.status == ClaimStatus::Fail ? fail : na) += 1;
        }
        o.detail = std::to_string(first.size()) + " rows (" + std::to_string(pass) + " pass, " + std::to_string(fail) +
                   " fail, " + std::to_string(na) + " n/a), deterministic, matches golden";
    }
    return o;
}

}  // namespace

}  // namespace polar

using namespace polar;

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, coefficient_fidelity}, {2, q_orthogonality}, {3, p_orthogonality}, {4, route_equivalence},
        {5, residuals},            {6, zero_structure},  {7, kernels},         {8, extremal},
        {9, composed},             {10, quadrature},     {11, claims_report}};

    int unexpected = 0;
    int failed = 0;
    const auto report = [&](int id, const Outcome& o) {
        std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " - " << o.detail << '\n'
                  << std::flush;
        if (!o.ok) {
            ++failed;
            if (!kKnownUnattainable.count(id)) ++unexpected;
        }
    };
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        report(id, o);
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    Outcome perf;
    std::ostringstream s;
    s.precision(3);
    s << "criteria 1-11 took " << seconds << " s (limit 300 s)";
    perf.ok = seconds < 300;
    perf.detail = s.str();
    report(12, perf);

    std::cout << "summary: " << 12 - failed << "/12 pass";
    if (failed > unexpected) std::cout << ", " << failed - unexpected << " known unattainable";
    std::cout << '\n';
    return unexpected == 0 ? 0 : 1;
}
