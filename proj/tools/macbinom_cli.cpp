// macbinom: compute named objects from the interpolation Macdonald world,
// run verification suites, and expand polynomials in the Newton bases.
//
// Exit codes: 0 success, 1 identity failure in verify, 2 parse error,
// 3 pole, 4 contract violation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "macbinom/binom.hpp"
#include "macbinom/diffops.hpp"
#include "macbinom/json_io.hpp"
#include "macbinom/newton.hpp"
#include "macbinom/parse.hpp"
#include "macbinom/sampling.hpp"
#include "macbinom/verify.hpp"

namespace {

using macbinom::Ctx;
using macbinom::Expansion;
using macbinom::FieldElement;
using macbinom::Partition;
using macbinom::ShiftedSymPoly;
using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string target;
    std::string suite;
    std::string lambda_s, mu_s, nu_s, beta_s;
    int n = 0;  // 0 = infer from the partitions / input polynomial
    int max_size = -1;
    int order = -1;
    std::string mode = "symbolic";
    std::uint64_t seed = 1;
    std::string output;
    std::string input;
    std::string regime = "qt";
    std::string algorithm = "direct";
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw macbinom::error("cannot open output file: " + path);
    out << text;
}

int infer_n(const Options& o, const Partition& mu) {
    if (o.n > 0) return o.n;
    return std::max(1, mu.length());
}

int run_compute(const Options& o) {
    Ctx ctx;
    const Partition lambda = Partition::parse(o.lambda_s);
    const Partition mu = Partition::parse(o.mu_s);
    const Partition nu = Partition::parse(o.nu_s);

    std::string doc;
    if (o.target == "pstar") {
        doc = field_json_string(ctx.pstar(mu, infer_n(o, mu), false).f);
    } else if (o.target == "macdonald") {
        doc = field_json_string(ctx.macdonald(mu, infer_n(o, mu), false).f);
    } else if (o.target == "binom") {
        doc = field_json_string(ctx.binom(lambda, mu, false));
    } else if (o.target == "trinom") {
        const Partition beta = Partition::parse(o.beta_s);
        for (int i = 2; i <= beta.length(); ++i)
            if (beta.part(i) != beta.part(1))
                throw macbinom::contract_error("trinom: beta must be a rectangle (b^n)");
        doc = field_json_string(
            trinomial(ctx, beta.part(1), beta.length(), lambda, nu, false));
    } else if (o.target == "omega") {
        doc = field_json_string(omega_qt(nu, lambda));
    } else if (o.target == "hnorm") {
        doc = field_json_string(ctx.h_norm(mu, false));
    } else if (o.target == "eigentable") {
        const int n = o.n > 0 ? o.n : 2;
        const int msize = o.max_size < 0 ? 3 : o.max_size;
        macbinom::Sampler sampler(o.seed);
        macbinom::OpFn op = [](const macbinom::PointFn& f,
                               const std::vector<FieldElement>& xs) {
            return macbinom::apply_dstar(f, xs, FieldElement::var(macbinom::vars::U));
        };
        std::vector<Partition> index = macbinom::enumerate_partitions(msize, n);
        auto table = macbinom::harish_chandra_table(ctx, op, index, n, sampler);
        ordered_json obj;
        for (const Partition& p : index) obj[p.to_string()] = table.at(p).to_string();
        doc = obj.dump();
    } else {
        throw macbinom::contract_error("unknown compute target: " + o.target);
    }
    emit(o.output, doc + "\n");
    return 0;
}

int run_verify(const Options& o) {
    Ctx ctx;
    macbinom::VerifyOptions opt;
    opt.max_size = o.max_size;
    opt.n = o.n > 0 ? o.n : -1;
    opt.order = o.order;
    opt.sampled = o.mode == "sampled";
    opt.seed = o.seed;

    const auto t0 = std::chrono::steady_clock::now();
    macbinom::VerifyReport rep;
    if (o.output.empty()) {
        rep = run_suite(ctx, o.suite, opt, std::cout);
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw macbinom::error("cannot open output file: " + o.output);
        rep = run_suite(ctx, o.suite, opt, out);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "[verify " << o.suite << ": " << secs << "s]\n";
    return rep.ok() ? 0 : 1;
}

int run_interpolate(const Options& o) {
    std::ifstream in(o.input);
    if (!in) throw macbinom::parse_error("cannot open input file: " + o.input);
    std::stringstream buf;
    buf << in.rdbuf();

    const FieldElement f = macbinom::parse_field_expression(buf.str());
    if (!macbinom::x_free(f.den()))
        throw macbinom::contract_error("interpolation input must be a polynomial in x");
    const int n = o.n > 0 ? o.n : std::max(1, macbinom::max_x_index(f.num()));
    const ShiftedSymPoly sp(n, f);

    Ctx ctx;
    Expansion e;
    if (o.regime == "qt") {
        if (o.algorithm == "direct") e = fhat_direct(ctx, sp);
        else if (o.algorithm == "explicit") e = fhat_explicit(ctx, sp);
        else e = fhat_recurrence(ctx, sp);
    } else {
        if (o.algorithm == "direct") e = jack_fhat_solver(sp);
        else if (o.algorithm == "explicit") e = jack_fhat_explicit(sp);
        else e = jack_fhat_fast(sp);
    }
    ordered_json obj;
    for (const auto& [p, c] : e) obj[p.to_string()] = c.to_string();
    emit(o.output, obj.dump() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact interpolation Macdonald polynomial toolkit"};
    app.require_subcommand(1);

    CLI::App* compute = app.add_subcommand("compute", "compute a named object as JSON");
    compute->add_option("target", o.target, "pstar|macdonald|binom|trinom|omega|hnorm|eigentable")
        ->required()
        ->check(CLI::IsMember(
            {"pstar", "macdonald", "binom", "trinom", "omega", "hnorm", "eigentable"}));

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(macbinom::suite_names()));

    CLI::App* interpolate =
        app.add_subcommand("interpolate", "expand a polynomial in a Newton basis");
    interpolate->add_option("--input", o.input, "file with the polynomial expression")
        ->required();
    interpolate->add_option("--regime", o.regime, "qt|jack (default qt)")
        ->check(CLI::IsMember({"qt", "jack"}));
    interpolate->add_option("--algorithm", o.algorithm, "direct|explicit|fast (default direct)")
        ->check(CLI::IsMember({"direct", "explicit", "fast"}));

    for (CLI::App* sub : {compute, verify, interpolate}) {
        sub->add_option("--lambda", o.lambda_s, "partition, e.g. \"3,1\"");
        sub->add_option("--mu", o.mu_s, "partition");
        sub->add_option("--nu", o.nu_s, "partition");
        sub->add_option("--beta", o.beta_s, "box partition (b^n)");
        sub->add_option("--n", o.n, "number of variables");
        sub->add_option("--max-size", o.max_size, "partition size bound");
        sub->add_option("--order", o.order, "series truncation order K");
        sub->add_option("--mode", o.mode, "symbolic|sampled")
            ->check(CLI::IsMember({"symbolic", "sampled"}));
        sub->add_option("--seed", o.seed, "sampling seed");
        sub->add_option("--output", o.output, "write the result to a file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(o);
        if (verify->parsed()) return run_verify(o);
        return run_interpolate(o);
    } catch (const macbinom::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const macbinom::pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const macbinom::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
