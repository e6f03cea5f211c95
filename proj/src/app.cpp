#include "piv/app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "piv/errors.hpp"
#include "piv/susy.hpp"
#include "piv/verify.hpp"

namespace piv::app {

using nlohmann::ordered_json;

bool RunConfig::has_seed() const noexcept { return epsilon1 || nu || lambda_re || lambda_im; }

void RunConfig::validate() const {
    if (samples < 2) throw UsageError("--samples must be >= 2");
    if (!(x_lo < x_hi)) throw UsageError("--range needs LO < HI");
    if (k_max < 1) throw UsageError("--k-max must be >= 1");
    if (k < 1 || k > kMaxOrder) throw UsageError("--k must lie in [1, 10]");
    if (family < 1 || family > 3) throw UsageError("--family must be 1, 2 or 3");
    if (nu && (lambda_re || lambda_im)) throw UsageError("give either --nu or --lambda-re/--lambda-im, not both");
    if (command == Command::Solve && (!epsilon1 || !(nu || lambda_re || lambda_im)))
        throw UsageError("solve needs --epsilon1 and one of --nu or --lambda-re/--lambda-im");
    if (!battery.empty() && battery != "default" && battery != "single" && battery != "none")
        throw UsageError("--battery must be default, single or none");
    if (battery == "single" && !epsilon1) throw UsageError("--battery single needs --epsilon1");
}

SeedSpec RunConfig::seed_spec() const {
    SeedSpec spec;
    spec.epsilon1 = epsilon1.value_or(0.0);
    spec.k = k;
    spec.family = family_from_int(family);
    if (nu) {
        try {
            spec.lambda = lambda_from_nu(spec.epsilon1, *nu);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    } else {
        spec.lambda = {lambda_re.value_or(0.0), lambda_im.value_or(0.0)};
    }
    return spec;
}

std::string format_number(Real v) {
    v += 0.0;  // -0 -> 0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_line(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) line += ',';
        line += f;
        first = false;
    }
    line += '\n';
    return line;
}

Real unsigned_zero(Real v) { return v + 0.0; }

ordered_json complex_json(Complex z) { return {{"re", unsigned_zero(z.real())}, {"im", unsigned_zero(z.imag())}}; }

ordered_json spec_json(const SeedSpec& spec) {
    return {{"epsilon1", spec.epsilon1}, {"lambda", complex_json(spec.lambda)}, {"k", spec.k}, {"family", to_int(spec.family)}};
}

std::string singular_list(const std::vector<Real>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += format_number(xs[i]);
    }
    return s;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandOutput cmd_solve(const RunConfig& config) {
    config.validate();
    const SeedSpec spec = config.seed_spec();
    const PivSolution sol = sample_solution(spec, config.x_lo, config.x_hi, config.samples);

    CommandOutput out;
    if (!sol.regularity.regular()) {
        out.diagnostic = "singular transformation; Wronskian zeros at x = " + singular_list(sol.regularity.singular_at);
        if (config.strict) {
            out.exit_code = kExitSingular;
            return out;
        }
    }

    if (config.format == Format::Csv) {
        std::string body = "x,re_g,im_g,re_residual,im_residual,regular\n";
        for (const auto& s : sol.samples) {
            const std::string x = format_number(s.x);
            if (!s.regular) {
                body += csv_line({x, "", "", "", "", "0"});
                continue;
            }
            const std::string rr = s.residual ? format_number(s.residual->real()) : "";
            const std::string ri = s.residual ? format_number(s.residual->imag()) : "";
            body += csv_line({x, format_number(s.g->real()), format_number(s.g->imag()), rr, ri, "1"});
        }
        out.body = std::move(body);
    } else {
        ordered_json header = spec_json(spec);
        header["a"] = unsigned_zero(sol.params.a);
        header["b"] = unsigned_zero(sol.params.b);
        header["hierarchy"] = std::string(to_string(sol.tag));
        ordered_json samples = ordered_json::array();
        for (const auto& s : sol.samples) {
            ordered_json row;
            row["x"] = s.x;
            row["re_g"] = s.g ? ordered_json(unsigned_zero(s.g->real())) : ordered_json(nullptr);
            row["im_g"] = s.g ? ordered_json(unsigned_zero(s.g->imag())) : ordered_json(nullptr);
            row["re_residual"] = s.residual ? ordered_json(unsigned_zero(s.residual->real())) : ordered_json(nullptr);
            row["im_residual"] = s.residual ? ordered_json(unsigned_zero(s.residual->imag())) : ordered_json(nullptr);
            row["regular"] = s.regular ? 1 : 0;
            samples.push_back(std::move(row));
        }
        out.body = dump({{"header", header}, {"samples", samples}});
    }
    return out;
}

std::vector<ParamRecord> parameter_space(int k_max, Real eps_lo, Real eps_hi, int n) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    const std::vector<Real> grid = uniform_grid(eps_lo, eps_hi, n);

    // half-integers and integers inside the interval
    std::vector<Real> half_odd, integers;
    for (long m = static_cast<long>(std::ceil(2.0 * eps_lo)); m <= static_cast<long>(std::floor(2.0 * eps_hi)); ++m) {
        const Real e = 0.5 * static_cast<Real>(m);
        (m % 2 == 0 ? integers : half_odd).push_back(e);
    }

    std::vector<ParamRecord> records;
    auto emit = [&](int family, int k, Real eps, Complex lambda, const char* regime, const char* kind) {
        const PivParams p = piv_params(family_from_int(family), eps, k);
        records.push_back({family, k, eps, p.a, p.b, classify_hierarchy(eps, lambda), regime, kind});
    };
    // representative mixing constants: a generic real one and a purely imaginary one
    const Complex real_lambda = 0.5;
    const Complex complex_lambda{0.0, 1.0};

    for (int k = 1; k <= k_max; ++k) {
        for (Real e : grid)
            if (e < 0.5) emit(1, k, e, real_lambda, "real", "curve");
        for (Real e : half_odd) {
            if (e >= 0.5) continue;
            emit(1, k, e, real_lambda, "real", "marker");
            if (classify_hierarchy(e, 0.0) == HierarchyTag::Rational) emit(1, k, e, 0.0, "real", "marker");
        }
        for (Real e : integers)
            if (e <= 0.0) emit(1, k, e, real_lambda, "real", "marker");
    }
    for (int family = 1; family <= 3; ++family) {
        for (int k = 1; k <= k_max; ++k) {
            for (Real e : grid) emit(family, k, e, complex_lambda, "complex", "curve");
            for (Real e : half_odd) emit(family, k, e, complex_lambda, "complex", "marker");
            for (Real e : integers)
                if (e <= 0.0) emit(family, k, e, complex_lambda, "complex", "marker");
        }
    }
    return records;
}

CommandOutput cmd_paramspace(const RunConfig& config) {
    config.validate();
    const auto records = parameter_space(config.k_max, config.x_lo, config.x_hi, config.samples);
    CommandOutput out;
    if (config.format == Format::Csv) {
        std::string body = "family,k,epsilon1,a,b,hierarchy,regime,kind\n";
        for (const auto& r : records)
            body += csv_line({std::to_string(r.family), std::to_string(r.k), format_number(r.epsilon1), format_number(r.a),
                              format_number(r.b), std::string(to_string(r.hierarchy)), r.regime, r.kind});
        out.body = std::move(body);
    } else {
        ordered_json rows = ordered_json::array();
        for (const auto& r : records)
            rows.push_back({{"family", r.family},
                            {"k", r.k},
                            {"epsilon1", r.epsilon1},
                            {"a", unsigned_zero(r.a)},
                            {"b", unsigned_zero(r.b)},
                            {"hierarchy", std::string(to_string(r.hierarchy))},
                            {"regime", r.regime},
                            {"kind", r.kind}});
        out.body = dump({{"k_max", config.k_max}, {"records", rows}});
    }
    return out;
}

std::vector<BatteryEntry> default_battery() {
    auto real = [](Real eps, Real nu, int k) { return SeedSpec{eps, lambda_from_nu(eps, nu), k, Family::One}; };
    auto cplx = [](Real eps, Complex lambda, int k, Family f) { return SeedSpec{eps, lambda, k, f}; };
    return {
        {"rational-k1", real(-2.5, 0.0, 1)},
        {"rational-k2", real(-2.5, 0.0, 2)},
        {"rational-k3", real(-2.5, 0.0, 3)},
        {"real-hypergeometric-k1", real(-1.3, 0.4, 1)},
        {"real-erf-k2", real(-0.5, 0.3, 2)},
        {"real-hypergeometric-k3", real(0.2, -0.6, 3)},
        {"complex-bessel-k1", cplx(0.0, {0.0, 1.0}, 1, Family::One)},
        {"complex-ground-k2", cplx(0.5, {0.5, 1.0}, 2, Family::One)},
        {"complex-erfi-k3", cplx(2.5, {1.0, -1.0}, 3, Family::One)},
        {"family2-k1", cplx(1.5, {1.0, 1.0}, 1, Family::Two)},
        {"family2-k2", cplx(-1.5, {0.3, 0.7}, 2, Family::Two)},
        {"family2-k3", cplx(2.5, {0.0, 2.0}, 3, Family::Two)},
        {"family3-k1", cplx(2.5, {1.0, 1.0}, 1, Family::Three)},
        {"family3-k2", cplx(1.5, {0.0, 0.8}, 2, Family::Three)},
        {"family3-k3", cplx(0.5, {-0.4, 1.2}, 3, Family::Three)},
    };
}

bool EntryReport::pass() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

namespace {

void record(SuiteResult& suite, Real relative, Real tol) {
    ++suite.points;
    suite.max_relative = std::max(suite.max_relative, relative);
    if (!(relative <= tol)) suite.pass = false;
}

// Every `stride`-th grid point, always including both ends.
std::vector<Real> thinned(const std::vector<Real>& xs, std::size_t stride) {
    std::vector<Real> out;
    for (std::size_t i = 0; i < xs.size(); i += stride) out.push_back(xs[i]);
    if (out.back() != xs.back()) out.push_back(xs.back());
    return out;
}

}  // namespace

EntryReport verify_entry(const BatteryEntry& entry, Real x_lo, Real x_hi, int samples) {
    EntryReport report{entry, {}};
    const SeedSpec& spec = entry.spec;
    PivParams params = piv_params(spec.family, spec.epsilon1, spec.k);
    params.b += entry.b_shift;
    const std::vector<Real> xs = uniform_grid(x_lo, x_hi, samples);
    const std::vector<Real> coarse = thinned(xs, std::max<std::size_t>(1, xs.size() / 20));
    const SusySystem system(spec);

    SuiteResult piv{"piv_residual"};
    for (Real x : xs) {
        try {
            const auto r = piv_residual(g_jet(spec, x, 2), params, kPivTolerance);
            if (!r) {
                ++piv.skipped;
                continue;
            }
            record(piv, r->relative(), kPivTolerance);
        } catch (const SingularityError&) {
            ++piv.skipped;
        }
    }
    report.suites.push_back(piv);

    SuiteResult seed{"seed_residual"};
    for (Real x : coarse) {
        const auto chain = seed_chain_jets(spec, x, 2);
        for (int j = 1; j <= spec.k; ++j) {
            const SchrodingerReport r = schrodinger_residual(chain[static_cast<std::size_t>(j - 1)], spec.factorization_energy(j));
            record(seed, r.schrodinger.relative(), kSeedTolerance);
            if (r.riccati) record(seed, r.riccati->relative(), kSeedTolerance);
        }
    }
    report.suites.push_back(seed);

    SuiteResult fd{"jet_vs_fd"};
    const auto g_of = [&spec](Real x) { return g_solution(spec, x); };
    for (Real x : coarse) {
        try {
            const Jet g = g_jet(spec, x, 2);
            const auto d = fd_cross_check(g_of, x, 1e-3);
            const auto coarse_d = fd_cross_check(g_of, x, 2e-3);
            if (!d || !coarse_d) {
                ++fd.skipped;
                continue;
            }
            const Complex j1 = g.derivative_value(1), j2 = g.derivative_value(2);
            // the stencil itself is unconverged (nearby complex pole or round-off
            // amplified by 1/h^2): no verdict at this point
            if (std::abs(d->d1 - coarse_d->d1) > 1e-7 * std::max(1.0, std::abs(j1)) ||
                std::abs(d->d2 - coarse_d->d2) > 1e-7 * std::max(1.0, std::abs(j2))) {
                ++fd.skipped;
                continue;
            }
            record(fd, std::abs(j1 - d->d1) / std::max(1.0, std::abs(j1)), 1e-6);
            record(fd, std::abs(j2 - d->d2) / std::max(1.0, std::abs(j2)), 1e-6);
        } catch (const SingularityError&) {
            ++fd.skipped;
        }
    }
    report.suites.push_back(fd);

    if (spec.family == Family::One) {
        SuiteResult pot{"potential_consistency"};
        for (Real x : coarse) {
            try {
                const Jet g = g_jet(spec, x, 1);
                const Complex from_g = potential_from_g(g.value(), g[1], x, system.e1);
                const Complex wronskian = partner_potential(system, x);
                record(pot, std::abs(from_g - wronskian) / std::max(1.0, std::abs(wronskian)), 1e-9);
            } catch (const SingularityError&) {
                ++pot.skipped;
            }
        }
        report.suites.push_back(pot);
    }
    return report;
}

CommandOutput cmd_verify(const RunConfig& config) {
    config.validate();
    std::string mode = config.battery;
    if (mode.empty()) mode = config.epsilon1 ? "single" : "default";

    std::vector<BatteryEntry> battery;
    if (mode == "default") {
        battery = default_battery();
    } else if (mode == "single") {
        if (!(config.nu || config.lambda_re || config.lambda_im))
            throw UsageError("verify with a spec needs one of --nu or --lambda-re/--lambda-im");
        battery.push_back({"user", config.seed_spec()});
    }
    for (auto& e : battery) e.b_shift = config.b_shift;

    std::vector<EntryReport> reports;
    for (const auto& e : battery) reports.push_back(verify_entry(e, config.x_lo, config.x_hi, config.samples));
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const EntryReport& r) { return r.pass(); });

    CommandOutput out;
    out.exit_code = all_pass ? kExitOk : kExitVerificationFailed;
    if (config.format == Format::Csv) {
        std::string body = "entry,suite,pass,max_relative,points,skipped\n";
        for (const auto& r : reports)
            for (const auto& s : r.suites)
                body += csv_line({r.entry.name, s.name, s.pass ? "1" : "0", format_number(s.max_relative),
                                  std::to_string(s.points), std::to_string(s.skipped)});
        out.body = std::move(body);
    } else {
        ordered_json entries = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json suites = ordered_json::array();
            for (const auto& s : r.suites)
                suites.push_back({{"name", s.name},
                                  {"pass", s.pass},
                                  {"max_relative", s.max_relative},
                                  {"points", s.points},
                                  {"skipped", s.skipped}});
            ordered_json seed = spec_json(r.entry.spec);
            seed["b_shift"] = r.entry.b_shift;
            entries.push_back({{"name", r.entry.name}, {"seed", seed}, {"pass", r.pass()}, {"suites", suites}});
        }
        out.body = dump({{"pass", all_pass}, {"entries", entries}});
    }
    if (!all_pass) {
        std::ostringstream diag;
        for (const auto& r : reports)
            for (const auto& s : r.suites)
                if (!s.pass) diag << r.entry.name << ": " << s.name << " failed, max relative residual " << format_number(s.max_relative) << '\n';
        out.diagnostic = diag.str();
    }
    return out;
}

CommandOutput run(const RunConfig& config) {
    switch (config.command) {
        case Command::Solve: return cmd_solve(config);
        case Command::Paramspace: return cmd_paramspace(config);
        case Command::Verify: return cmd_verify(config);
    }
    throw UsageError("unknown command");
}

}  // namespace piv::app
