#include "isodirac/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isodirac/deform.hpp"
#include "isodirac/errors.hpp"
#include "isodirac/families.hpp"
#include "isodirac/numerics.hpp"
#include "isodirac/verify.hpp"
#include "isodirac/version.hpp"

namespace isodirac {

namespace {

struct Options {
    std::string family;
    double omega = std::nan("");  // per-family defaults filled in later
    double ell = std::nan("");
    double A = std::nan("");
    double B = std::nan("");
    int m = 1;
    std::vector<std::string> lambda_tokens;
    int grid_n = 0;     // 0 keeps the family default
    double xmax = 0.0;  // 0 keeps the family default
    int n = 0;
    int levels = 8;
    bool divide_by_r = false;
    std::string component = "upper";
    std::string quantity = "phi";
    std::string format;
    std::string out_path;
};

FamilyParams make_params(const Options& o) {
    auto pick = [](double v, double dflt) { return std::isnan(v) ? dflt : v; };
    if (o.family == "radial")
        return FamilyParams::radial_oscillator(pick(o.omega, 3.0), pick(o.ell, 1.0), o.m);
    if (o.family == "scarf") return FamilyParams::scarf1(pick(o.A, 4.0), pick(o.B, 2.0), o.m);
    if (o.family == "gpt") return FamilyParams::gpt(pick(o.A, 2.0), pick(o.B, 5.0), o.m);
    throw UsageError("unknown family '" + o.family + "' (choose radial, scarf or gpt)");
}

GridSpec make_grid(const Family& fam, const Options& o) {
    GridSpec g = fam.default_grid();
    if (o.grid_n > 0) g.n = o.grid_n;
    if (o.xmax > 0.0) g.x_max = o.xmax;
    g.validate();
    return g;
}

// One requested deformation, remembering the exact token the user typed so
// output columns can echo it back verbatim.
struct LambdaSpec {
    std::string token;
    Deformation d;
};

LambdaSpec parse_lambda_token(const std::string& tok) {
    // keyword spellings first, then anything strtod understands (so the
    // figure captions' values can be typed directly: 0, -1, inf, 0.05, ...)
    if (tok == "pursey") return {tok, Deformation::pursey()};
    if (tok == "am") return {tok, Deformation::abraham_moses()};
    if (tok == "undeformed") return {tok, Deformation::undeformed()};
    const char* s = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || std::isnan(v))
        throw UsageError("cannot parse lambda value '" + tok + "'");
    if (std::isinf(v)) return {tok, Deformation::undeformed()};
    if (v == 0.0) return {tok, Deformation::pursey()};
    if (v == -1.0) return {tok, Deformation::abraham_moses()};
    if (v > -1.0 && v < 0.0)
        throw UsageError("lambda = " + tok +
                         " rejected: for lambda in (-1, 0) the denominator I(x)+lambda "
                         "vanishes inside the domain");
    return {tok, Deformation::generic(v)};
}

std::vector<LambdaSpec> parse_lambda_list(const std::vector<std::string>& tokens) {
    // nothing requested: tabulate the plain undeformed quantity
    if (tokens.empty()) return {{"inf", Deformation::undeformed()}};
    std::vector<LambdaSpec> specs;
    specs.reserve(tokens.size());
    for (const auto& t : tokens) specs.push_back(parse_lambda_token(t));
    return specs;
}

std::string column_name(const std::string& prefix, const LambdaSpec& s) {
    switch (s.d.kind) {
        case Deformation::Kind::Undeformed: return prefix + "_undeformed";
        case Deformation::Kind::Pursey:     return prefix + "_pursey";
        case Deformation::Kind::AbrahamMoses: return prefix + "_am";
        case Deformation::Kind::Generic:    return prefix + "_lambda=" + s.token;
    }
    return prefix;
}

void append_g17(std::string& text, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    text += buf;
}

// All file output goes through a temp-and-rename so a crash mid-write never
// leaves a truncated file behind under the requested name.
void emit(const std::string& text, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw UsageError("cannot open '" + tmp + "' for writing");
        f << text;
        f.flush();
        if (!f) {
            std::remove(tmp.c_str());
            throw UsageError("failed writing '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw UsageError("failed moving temporary output onto '" + path + "'");
    }
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<double>& xs,
                      const std::vector<std::vector<double>>& cols) {
    std::string text;
    text.reserve(64 * (xs.size() + 1));
    for (size_t c = 0; c < header.size(); ++c) {
        if (c) text += ',';
        text += header[c];
    }
    text += '\n';
    for (size_t i = 0; i < xs.size(); ++i) {
        append_g17(text, xs[i]);
        for (const auto& col : cols) {
            text += ',';
            append_g17(text, col[i]);
        }
        text += '\n';
    }
    return text;
}

int cmd_potential(const Options& o, std::ostream& out, std::ostream&) {
    Family fam(make_params(o));
    GridSpec grid = make_grid(fam, o);
    auto specs = parse_lambda_list(o.lambda_tokens);
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    if (fmt != "csv") throw UsageError("potential writes csv only");

    bool need_table = false;
    for (const auto& s : specs)
        if (s.d.kind != Deformation::Kind::Undeformed) need_table = true;
    std::optional<IntegralTable> table;
    if (need_table) table.emplace(compute_I(fam, grid));

    const bool want_phi = o.quantity == "phi";
    const auto xs = grid.points();
    std::vector<std::string> header{"x"};
    std::vector<std::vector<double>> cols;
    for (const auto& s : specs) {
        header.push_back(column_name(want_phi ? "phi" : "v", s));
        std::vector<double> col(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            if (!table)  // every requested deformation is the undeformed one
                col[i] = want_phi ? fam.phi(xs[i]) : fam.v1(xs[i]);
            else
                col[i] = want_phi ? phi_lambda(fam, s.d, xs[i], *table)
                                  : v1_lambda(fam, s.d, xs[i], *table);
        }
        cols.push_back(std::move(col));
    }
    emit(csv_table(header, xs, cols), o.out_path, out);
    return 0;
}

int cmd_wavefunction(const Options& o, std::ostream& out, std::ostream& err) {
    Family fam(make_params(o));
    GridSpec grid = make_grid(fam, o);
    auto specs = parse_lambda_list(o.lambda_tokens);
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    if (fmt != "csv") throw UsageError("wavefunction writes csv only");
    if (o.divide_by_r && fam.params().kind != FamilyKind::RadialOscillator)
        throw UsageError("--divide-by-r applies to the radial oscillator only");
    if (o.component != "upper" && o.component != "lower")
        throw UsageError("--component must be upper or lower");
    const bool lower = o.component == "lower";

    IntegralTable table = compute_I(fam, grid);
    const auto xs = grid.points();
    const double h = grid.spacing();

    std::vector<std::string> header{"x"};
    std::vector<std::vector<double>> cols;
    int rc = 0;
    for (const auto& s : specs) {
        // Level indexing is per deformed potential: for the lambda family
        // (and the undeformed limit) n=0 is the deformed ground state, while
        // the Pursey / Abraham-Moses potentials start at the first surviving
        // level.
        bool has_ground = s.d.kind == Deformation::Kind::Generic ||
                          s.d.kind == Deformation::Kind::Undeformed;
        int dirac_n = has_ground ? o.n - 1 : o.n;
        std::vector<double> col(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            Spinor sp = dirac_spinor_lambda(fam, s.d, dirac_n, xs[i], table);
            col[i] = lower ? sp.lower : sp.upper;
        }

        bool zero_column = lower && dirac_n == -1;  // ground spinors have no lower part
        if (!zero_column) {
            double acc = 0.0;
            for (size_t i = 0; i < xs.size(); ++i) {
                double w = (i == 0 || i + 1 == xs.size()) ? 0.5 : 1.0;
                acc += w * col[i] * col[i];
            }
            double norm = acc * h;
            if (std::abs(norm - 1.0) > 1e-4) {
                err << "norm check failed for " << column_name("psi", s) << ": integral "
                    << norm << " deviates from 1 by more than 1e-4\n";
                rc = 1;
            }
        }
        if (o.divide_by_r)
            for (size_t i = 0; i < xs.size(); ++i) col[i] /= xs[i];

        header.push_back(column_name("psi", s));
        cols.push_back(std::move(col));
    }
    emit(csv_table(header, xs, cols), o.out_path, out);
    return rc;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
    Family fam(make_params(o));
    const std::string fmt = o.format.empty() ? "csv" : o.format;
    if (fmt != "csv") throw UsageError("spectrum writes csv only");

    auto s1 = fam.spectrum(1, o.levels);
    auto s2 = fam.spectrum(2, o.levels);
    if (static_cast<int>(s1.size()) < o.levels || static_cast<int>(s2.size()) < o.levels)
        err << "note: " << fam.params().label()
            << " holds finitely many bound levels; the listing is truncated\n";

    std::string text = "sector,n,E,epsilon\n";
    auto rows = [&text](const char* label, const std::vector<SpectralLine>& lines) {
        for (const auto& l : lines) {
            text += label;
            text += ',';
            text += std::to_string(l.n);
            text += ',';
            append_g17(text, l.E);
            text += ',';
            append_g17(text, l.epsilon);
            text += '\n';
        }
    };
    rows("1", s1);
    rows("2", s2);
    // The two one-sided limits delete the ground level, leaving exactly the
    // sector-2 ladder.
    rows("pursey", s2);
    rows("am", s2);
    emit(text, o.out_path, out);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    FamilyParams params = make_params(o);
    Family fam(params);
    GridSpec grid = make_grid(fam, o);
    const std::string fmt = o.format.empty() ? "report-text" : o.format;
    if (fmt != "report-text" && fmt != "report-tree")
        throw UsageError("verify writes report-text or report-tree");

    std::vector<double> lams = {0.05, 0.1, 1.0, 10.0};
    if (!o.lambda_tokens.empty()) {
        lams.clear();
        for (const auto& t : o.lambda_tokens) {
            LambdaSpec s = parse_lambda_token(t);
            if (s.d.kind != Deformation::Kind::Generic)
                throw UsageError(
                    "verify --lambda takes finite deformation parameters (lambda > 0 or "
                    "lambda < -1); the limit kinds are always checked");
            lams.push_back(s.d.lambda);
        }
    }

    VerificationReport rep = verify_family(params, grid, lams);
    emit(fmt == "report-tree" ? to_tree(rep) : to_text(rep), o.out_path, out);
    if (!rep.overall()) {
        err << "verification failed: " << rep.subject << "\n";
        return 1;
    }
    return 0;
}

void add_family_options(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "potential family: radial, scarf or gpt")
        ->required()
        ->check(CLI::IsMember({"radial", "scarf", "gpt"}));
    sub->add_option("--omega", o.omega, "radial oscillator frequency (default 3)");
    sub->add_option("--ell", o.ell, "radial angular momentum, > 0 (default 1)");
    sub->add_option("--A", o.A, "first shape parameter (defaults: scarf 4, gpt 2)");
    sub->add_option("--B", o.B, "second shape parameter (defaults: scarf 2, gpt 5)");
    sub->add_option("--m", o.m, "degree of the polynomial extension (default 1)");
}

void add_grid_options(CLI::App* sub, Options& o) {
    sub->add_option("--grid-n", o.grid_n, "number of grid points (>= 200; 0 keeps the default)");
    sub->add_option("--xmax", o.xmax, "upper end of the grid (0 keeps the default)");
}

// the Options object is shared by all subcommands, so the per-command
// default cannot be assigned here; an empty format means "use the
// subcommand's default" at dispatch time
void add_output_options(CLI::App* sub, Options& o, const char* fmt_default,
                        const std::vector<std::string>& fmt_choices) {
    sub->add_option("--format", o.format, std::string("output format (default ") + fmt_default + ")")
        ->check(CLI::IsMember(fmt_choices));
    sub->add_option("--out", o.out_path, "write output to this path (atomic; default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"rationally extended Dirac oscillator potentials, their isospectral "
                 "deformations and one-sided limits"};
    app.set_version_flag("--version", std::string("isodirac ") + kVersion);
    app.require_subcommand(1);

    CLI::App* pot = app.add_subcommand("potential",
                                       "tabulate the superpotential or potential of the "
                                       "deformed family over the grid");
    add_family_options(pot, o);
    add_grid_options(pot, o);
    pot->add_option("--lambda", o.lambda_tokens,
                    "deformation parameters; lambda > 0 or < -1, plus the limits "
                    "0 (Pursey), -1 (Abraham-Moses) and inf (undeformed); "
                    "empty means undeformed")
        ->delimiter(',');
    pot->add_option("--quantity", o.quantity, "phi (superpotential) or v (potential)")
        ->check(CLI::IsMember({"phi", "v"}));
    add_output_options(pot, o, "csv", {"csv"});

    CLI::App* wav = app.add_subcommand("wavefunction",
                                       "tabulate bound states of the deformed family");
    add_family_options(wav, o);
    add_grid_options(wav, o);
    wav->add_option("--lambda", o.lambda_tokens,
                    "deformation parameters (same spellings as potential)")
        ->delimiter(',');
    wav->add_option("--n", o.n, "level index within the chosen potential (default 0)")
        ->check(CLI::NonNegativeNumber);
    wav->add_option("--component", o.component, "spinor component: upper (default) or lower");
    wav->add_flag("--divide-by-r", o.divide_by_r,
                  "radial oscillator only: emit the full radial function u(r)/r");
    add_output_options(wav, o, "csv", {"csv"});

    CLI::App* spec = app.add_subcommand("spectrum",
                                        "list bound-state energies of both sectors and of "
                                        "the one-sided limits");
    add_family_options(spec, o);
    spec->add_option("--levels", o.levels, "levels per sector (default 8)")
        ->check(CLI::PositiveNumber);
    add_output_options(spec, o, "csv", {"csv"});

    CLI::App* ver = app.add_subcommand("verify",
                                       "run the built-in numerical checks and emit a report");
    add_family_options(ver, o);
    add_grid_options(ver, o);
    ver->add_option("--lambda", o.lambda_tokens,
                    "isospectrality is checked for these parameters (default 0.05,0.1,1,10)")
        ->delimiter(',');
    add_output_options(ver, o, "report-text", {"report-text", "report-tree"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (pot->parsed()) return cmd_potential(o, out, err);
        if (wav->parsed()) return cmd_wavefunction(o, out, err);
        if (spec->parsed()) return cmd_spectrum(o, out, err);
        if (ver->parsed()) return cmd_verify(o, out, err);
        err << "choose a subcommand: potential, wavefunction, spectrum, verify\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace isodirac
