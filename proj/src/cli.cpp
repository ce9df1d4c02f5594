#include "polar/cli.hpp"

#include "polar/claims.hpp"
#include "polar/composed.hpp"
#include "polar/errors.hpp"
#include "polar/extremal.hpp"
#include "polar/kernels.hpp"
#include "polar/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace polar {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kWorkingDigits = 50;

char family_letter(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Legendre: return 'L';
        case FamilyKind::Pipcir: return 'Q';
        case FamilyKind::Polar: return 'P';
    }
    return '?';
}

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad index '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string real_text(const Real& x, int digits) { return x.str(digits); }

QuadratureRule parse_rule(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("rule must look like gauss:<order> or tanh-sinh:<level>");
    const std::string kind = spec.substr(0, colon);
    const int param = std::stoi(spec.substr(colon + 1));
    if (kind == "gauss") return gauss_legendre_rule(param);
    if (kind == "tanh-sinh") return tanh_sinh_rule(param);
    throw std::invalid_argument("unknown rule '" + kind + "'");
}

RationalMap parse_map(const std::string& name, const std::string& mobius_params) {
    const Interval unit(-1, 1);
    if (name == "identity") return RationalMap::identity(unit);
    if (name == "cubic") return RationalMap::cubic();
    if (name == "mobius") {
        std::vector<BigRational> c;
        std::stringstream ss(mobius_params);
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(BigRational::parse(item));
        if (c.size() != 4) throw std::invalid_argument("--mobius needs four values a,b,c,d");
        return RationalMap::mobius(c[0], c[1], c[2], c[3], unit);
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

struct Options {
    std::string family = "polar";
    int max = 6;
    int n = 2;
    std::string indices;
    std::string weight;
    std::string orientation = "as-orthogonality";
    std::string format = "text";
    int precision = kWorkingDigits;
    int grid = 101;
    int max_n = 12;
    std::string x = "0";
    std::string y = "0";
    std::string map = "cubic";
    std::string mobius = "3,1,1,3";
    std::string rule = "gauss:64";
    double tolerance = 1e-10;
    std::string what = "family";
};

int digits(const Options& o) { return std::clamp(o.precision, 1, kWorkingDigits); }

void cmd_table(const Options& o, std::ostream& out) {
    const FamilyKind kind = parse_family(o.family);
    const ReportFormat fmt = parse_format(o.format);
    std::vector<int> ns;
    for (int n = min_index(kind); n <= o.max; ++n) ns.push_back(n);
    if (fmt == ReportFormat::Csv) {
        out << "n,k,num,den\n";
        for (int n : ns) {
            const Polynomial p = family(kind, n);
            const auto c = p.coeffs();
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k].is_zero()) continue;
                out << n << ',' << k << ',' << c[k].numerator().str() << ',' << c[k].denominator().str() << '\n';
            }
        }
    } else if (fmt == ReportFormat::Json) {
        ojson doc;
        doc["family"] = std::string(to_string(kind));
        ojson list = ojson::array();
        for (int n : ns) {
            ojson coeffs = ojson::array();
            for (const auto& c : family(kind, n).coeffs()) coeffs.push_back(c.str());
            list.push_back(ojson{{"n", n}, {"coefficients", coeffs}});
        }
        doc["polynomials"] = list;
        out << doc.dump() << '\n';
    } else {
        for (int n : ns) out << family_letter(kind) << '_' << n << " = " << family(kind, n).str() << '\n';
    }
}

void cmd_gram(const Options& o, std::ostream& out) {
    const FamilyKind kind = parse_family(o.family);
    const WeightKind w = o.weight.empty() ? natural_weight(kind) : parse_weight(o.weight);
    std::vector<int> idx;
    if (!o.indices.empty()) {
        idx = parse_indices(o.indices);
    } else {
        const int first = kind == FamilyKind::Polar ? 1 : min_index(kind);
        for (int n = first; n <= o.max; ++n) idx.push_back(n);
    }
    const GramMatrix g = gram_matrix(kind, w, idx);
    const ReportFormat fmt = parse_format(o.format);
    if (fmt == ReportFormat::Json) {
        ojson rows = ojson::array();
        for (const auto& row : g.entries) {
            ojson r = ojson::array();
            for (const auto& e : row) r.push_back(e ? ojson(e->str()) : ojson(nullptr));
            rows.push_back(r);
        }
        out << ojson{{"family", std::string(to_string(kind))},
                     {"weight", std::string(to_string(w))},
                     {"indices", g.indices},
                     {"entries", rows},
                     {"diagonal", g.is_diagonal()}}
                   .dump()
            << '\n';
        return;
    }
    const char sep = fmt == ReportFormat::Csv ? ',' : ' ';
    if (fmt == ReportFormat::Csv) out << "n,m,value\n";
    for (std::size_t i = 0; i < g.indices.size(); ++i) {
        for (std::size_t j = 0; j < g.indices.size(); ++j) {
            const auto& e = g.entries[i][j];
            out << g.indices[i] << sep << g.indices[j] << sep << (e ? e->str() : "divergent") << '\n';
        }
    }
}

KernelSpec spec_from(const Options& o) {
    if (!o.indices.empty()) return KernelSpec(parse_indices(o.indices));
    return KernelSpec::contiguous(o.max);
}

void cmd_kernel(const Options& o, std::ostream& out) {
    const KernelSpec spec = spec_from(o);
    const BigRational x = BigRational::parse(o.x);
    const BigRational y = BigRational::parse(o.y);
    const BigRational value = kernel_value(spec, x, y);
    std::optional<BigRational> cd;
    if (spec.is_one_based_contiguous()) cd = christoffel_darboux(spec.indices().back(), x, y);
    if (parse_format(o.format) == ReportFormat::Json) {
        ojson doc{{"K", spec.indices()}, {"x", x.str()}, {"y", y.str()}, {"value", value.str()}};
        if (cd) doc["christoffel_darboux"] = cd->str();
        out << doc.dump() << '\n';
        return;
    }
    out << "K(" << x << ", " << y << ") = " << value << '\n';
    if (cd) out << "closed form = " << *cd << '\n';
    out << "K(x, " << y << ") = " << kernel_in_x(spec, y).str() << '\n';
}

void cmd_extremal(const Options& o, std::ostream& out) {
    const ExtremalSolution sol = solve_extremal(spec_from(o));
    if (parse_format(o.format) == ReportFormat::Json) {
        ojson coeffs = ojson::object();
        for (const auto& [k, a] : sol.coefficients) coeffs[std::to_string(k)] = a.str();
        out << ojson{{"M", sol.minimum.str()}, {"coefficients", coeffs}}.dump() << '\n';
        return;
    }
    out << "M = " << sol.minimum << '\n';
    for (const auto& [k, a] : sol.coefficients) out << "a_" << k << " = " << a << '\n';
    out << "f(x) = " << sol.minimizer.str() << '\n';
}

void cmd_composed(const Options& o, std::ostream& out) {
    const RationalMap f = parse_map(o.map, o.mobius);
    const Orientation orient = parse_orientation(o.orientation);
    const ComposedGram g = composed_gram(f, orient, o.max, parse_rule(o.rule), o.tolerance);
    const int d = digits(o);
    const ReportFormat fmt = parse_format(o.format);
    if (fmt == ReportFormat::Json) {
        ojson rows = ojson::array();
        for (const auto& row : g.values) {
            ojson r = ojson::array();
            for (const auto& v : row) r.push_back(real_text(v, d));
            rows.push_back(r);
        }
        out << ojson{{"map", o.map},
                     {"orientation", std::string(to_string(orient))},
                     {"indices", g.indices},
                     {"values", rows},
                     {"max_error_estimate", real_text(g.max_error_estimate(), 6)}}
                   .dump()
            << '\n';
        return;
    }
    const char sep = fmt == ReportFormat::Csv ? ',' : ' ';
    if (fmt == ReportFormat::Csv) out << "n,m,value,error_estimate\n";
    for (std::size_t i = 0; i < g.indices.size(); ++i) {
        for (std::size_t j = 0; j < g.indices.size(); ++j) {
            out << g.indices[i] << sep << g.indices[j] << sep << real_text(g.values[i][j], d) << sep
                << real_text(g.error_estimates[i][j], 6) << '\n';
        }
    }
}

void cmd_roots(const Options& o, std::ostream& out) {
    const FamilyKind kind = parse_family(o.family);
    const Polynomial p = family(kind, o.n);
    if (p.degree() <= 0) return;
    const int d = digits(o);
    // Binary digits for a width below 10^-d.
    const unsigned bits = static_cast<unsigned>(d * 10 / 3 + 4);
    const BigRational width = BigRational(1) / pow(BigRational(2), bits);
    const auto roots = isolate_roots(p, Interval(BigRational(-3, 2), BigRational(3, 2)), width);
    const bool json = parse_format(o.format) == ReportFormat::Json;
    ojson list = ojson::array();
    for (const auto& iv : roots) {
        const Real mid = evaluate(p, iv.hi).is_zero() ? to_real(iv.hi) : (to_real(iv.lo) + to_real(iv.hi)) / 2;
        if (json) {
            list.push_back(ojson{{"approx", real_text(mid, d)}});
        } else {
            out << real_text(mid, d) << '\n';
        }
    }
    if (json) {
        out << ojson{{"family", std::string(to_string(kind))}, {"n", o.n}, {"roots", list}}.dump() << '\n';
    }
}

void cmd_claims(const Options& o, std::ostream& out) {
    out << render_report(run_claims(o.max_n), parse_format(o.format));
}

void cmd_plot(const Options& o, std::ostream& out) {
    PlotRequest req;
    if (o.what == "family") {
        req.what = PlotKind::Family;
    } else if (o.what == "kernel") {
        req.what = PlotKind::KernelSlice;
    } else if (o.what == "minimizer") {
        req.what = PlotKind::Minimizer;
    } else {
        throw std::invalid_argument("unknown plot target '" + o.what + "'");
    }
    req.family = parse_family(o.family);
    req.n = o.n;
    if (!o.indices.empty()) req.indices = parse_indices(o.indices);
    out << emit_plot_data(req, o.grid);
}

void report_error(std::ostream& err, std::string_view code, const std::string& what) {
    err << "error[" << code << "]: " << what << '\n';
}

}  // namespace

std::string emit_plot_data(const PlotRequest& request, int grid) {
    if (grid < 2) throw std::invalid_argument("grid must be at least 2");
    Polynomial p;
    switch (request.what) {
        case PlotKind::Family: p = family(request.family, request.n); break;
        case PlotKind::KernelSlice: p = kernel_in_x(KernelSpec::contiguous(request.n), 0); break;
        case PlotKind::Minimizer: {
            const KernelSpec spec =
                request.indices.empty() ? KernelSpec::range(2, request.n) : KernelSpec(request.indices);
            p = solve_extremal(spec).minimizer;
            break;
        }
    }
    std::ostringstream os;
    for (int i = 0; i < grid; ++i) {
        const BigRational x = BigRational(-1) + BigRational(2L * i, grid - 1);
        os << shortest(x.to_double()) << ' ' << shortest(evaluate(p, x).to_double()) << '\n';
    }
    return os.str();
}

std::map<int, Polynomial> parse_table_csv(std::string_view csv) {
    std::map<int, std::vector<BigRational>> coeffs;
    std::istringstream is{std::string(csv)};
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line == "n,k,num,den") continue;
        }
        std::stringstream ls(line);
        std::string n, k, num, den;
        if (!std::getline(ls, n, ',') || !std::getline(ls, k, ',') || !std::getline(ls, num, ',') ||
            !std::getline(ls, den, ',')) {
            throw std::invalid_argument("malformed table row '" + line + "'");
        }
        auto& c = coeffs[std::stoi(n)];
        const auto idx = static_cast<std::size_t>(std::stoul(k));
        if (c.size() <= idx) c.resize(idx + 1);
        c[idx] = BigRational(BigInteger::parse(num), BigInteger::parse(den));
    }
    std::map<int, Polynomial> out;
    for (auto& [n, c] : coeffs) out.emplace(n, Polynomial(std::move(c)));
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Legendre, PIPCIR and polar Legendre polynomials"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats = {"json", "csv", "text"};
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };
    const auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "legendre, pipcir or polar")
            ->check(CLI::IsMember({"legendre", "pipcir", "polar"}));
    };

    auto* table = app.add_subcommand("table", "Coefficient listing of a family");
    add_family(table);
    table->add_option("--max", o.max, "Largest index");
    add_format(table);

    auto* gram = app.add_subcommand("gram", "Exact Gram matrix under a singular weight");
    add_family(gram);
    gram->add_option("--max", o.max, "Largest index");
    gram->add_option("--indices", o.indices, "Comma-separated indices");
    gram->add_option("--weight", o.weight, "q-weight, p-weight or kernel-zero-weight");
    add_format(gram);

    auto* kernel = app.add_subcommand("kernel", "Reproducing kernel value");
    kernel->add_option("--max", o.max, "Kernel over k = 1..max");
    kernel->add_option("--indices", o.indices, "Comma-separated index set");
    kernel->add_option("--x", o.x, "Rational x");
    kernel->add_option("--y", o.y, "Rational y");
    add_format(kernel);

    auto* extremal = app.add_subcommand("extremal", "Constrained minimizer with f(1) = 1");
    extremal->add_option("--max", o.max, "Index set 1..max");
    extremal->add_option("--indices", o.indices, "Comma-separated index set");
    add_format(extremal);

    auto* composed = app.add_subcommand("composed", "Numeric Gram matrix of P_n(f(x))");
    composed->add_option("--map", o.map, "identity, cubic or mobius")
        ->check(CLI::IsMember({"identity", "cubic", "mobius"}));
    composed->add_option("--mobius", o.mobius, "a,b,c,d for the mobius map");
    composed->add_option("--orientation", o.orientation, "as-orthogonality or as-printed")
        ->check(CLI::IsMember({"as-orthogonality", "as-printed"}));
    composed->add_option("--max", o.max, "Largest index");
    composed->add_option("--rule", o.rule, "gauss:<order> or tanh-sinh:<level>");
    composed->add_option("--tolerance", o.tolerance, "Largest accepted error estimate");
    composed->add_option("--precision", o.precision, "Printed significant digits (at most 50)");
    add_format(composed);

    auto* roots = app.add_subcommand("roots", "Real roots of a family member");
    add_family(roots);
    roots->add_option("--n", o.n, "Index");
    roots->add_option("--precision", o.precision, "Printed significant digits (at most 50)");
    add_format(roots);

    auto* claims = app.add_subcommand("claims", "Audit every published identity");
    claims->add_option("--max-n", o.max_n, "Largest index (at least 4)");
    add_format(claims);

    auto* plot = app.add_subcommand("plot", "Two-column samples over [-1, 1]");
    plot->add_option("--what", o.what, "family, kernel or minimizer")
        ->check(CLI::IsMember({"family", "kernel", "minimizer"}));
    add_family(plot);
    plot->add_option("--n", o.n, "Index");
    plot->add_option("--indices", o.indices, "Index set of the minimizer");
    plot->add_option("--grid", o.grid, "Number of sample points");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (table->parsed()) cmd_table(o, out);
        else if (gram->parsed()) cmd_gram(o, out);
        else if (kernel->parsed()) cmd_kernel(o, out);
        else if (extremal->parsed()) cmd_extremal(o, out);
        else if (composed->parsed()) cmd_composed(o, out);
        else if (roots->parsed()) cmd_roots(o, out);
        else if (claims->parsed()) cmd_claims(o, out);
        else if (plot->parsed()) cmd_plot(o, out);
    } catch (const std::invalid_argument& e) {
        report_error(err, "usage", e.what());
        return 1;
    } catch (const NotReducible& e) {
        report_error(err, "not-reducible", e.what());
        return 2;
    } catch (const SpanError& e) {
        report_error(err, "span", e.what());
        return 2;
    } catch (const NotDivisible& e) {
        report_error(err, "not-divisible", e.what());
        return 2;
    } catch (const QuadratureError& e) {
        report_error(err, "quadrature", e.what());
        return 2;
    } catch (const DomainError& e) {
        report_error(err, "domain", e.what());
        return 2;
    } catch (const std::exception& e) {
        report_error(err, "computation", e.what());
        return 2;
    }
    out.flush();
    return 0;
}

}  // namespace polar
