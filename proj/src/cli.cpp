#include "slicepl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicepl/domain_io.hpp"
#include "slicepl/format.hpp"
#include "slicepl/function_io.hpp"

namespace slicepl {

namespace {

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": cannot parse '" + item + "' as a number");
        }
    }
    if (v.size() != n) {
        throw InputError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated numbers");
    }
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

// Flags left unset keep the value from the config file or the default.
struct Flags {
    std::string function, domain, q, axis = "1,0,0", line = "0,0,1,0", config;
    std::optional<double> M, alpha, rho, sigma, N, k, rmin, rmax, tol, offset;
    std::optional<std::size_t> nr, ntheta, naxis;
    std::optional<std::string> csv;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
};

template <typename T>
void set_if(const std::optional<T>& v, T& target) {
    if (v) target = *v;
}

RunConfig effective_config(const Flags& fl, bool growth_command) {
    RunConfig cfg;
    std::string path = fl.config;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
    }
    if (!path.empty()) apply_config_json(read_file(path), cfg);
    auto& v = cfg.verify;
    if (growth_command) {
        set_if(fl.rmin, cfg.growth.r_min);
        set_if(fl.rmax, cfg.growth.r_max);
        set_if(fl.nr, cfg.growth.n_r);
        set_if(fl.ntheta, cfg.growth.sampler.n_theta);
        set_if(fl.naxis, cfg.growth.sampler.n_axis);
    } else {
        set_if(fl.rmin, v.r_min);
        set_if(fl.rmax, v.r_max);
        set_if(fl.nr, v.n_r);
        set_if(fl.ntheta, v.n_theta);
        set_if(fl.naxis, v.n_axis);
    }
    set_if(fl.tol, v.conclusion_tol);
    if (fl.offset) v.inward_offset = *fl.offset;
    set_if(fl.seed, v.seed);
    if (fl.workers) {
        v.workers = *fl.workers;
        cfg.growth.sampler.workers = *fl.workers;
    }
    if (fl.csv) cfg.csv_path = *fl.csv;
    v.growth = cfg.growth;
    if (v.n_theta < 1 || v.n_axis < 1 || cfg.growth.sampler.n_theta < 1 || cfg.growth.sampler.n_axis < 1 ||
        v.n_r < 1 || cfg.growth.n_r < 1) {
        throw InputError("config: sample counts must be at least 1");
    }
    if (!(v.r_min < v.r_max) || !(cfg.growth.r_min < cfg.growth.r_max)) {
        throw InputError("config: r_min must be below r_max");
    }
    return cfg;
}

double required(const std::optional<double>& v, const char* flag) {
    if (!v) throw InputError(std::string("missing required flag ") + flag);
    return *v;
}

}  // namespace

void apply_config_json(const std::string& text, RunConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw InputError("config: expected a JSON object");
    auto& v = cfg.verify;
    for (const auto& [key, val] : j.items()) {
        auto num = [&, &key = key, &val = val]() {
            if (!val.is_number()) throw InputError("config: \"" + key + "\" must be a number");
            return val.get<double>();
        };
        auto count = [&, &key = key, &val = val]() {
            if (!val.is_number_unsigned()) throw InputError("config: \"" + key + "\" must be a nonnegative integer");
            return val.get<std::size_t>();
        };
        if (key == "conclusion_tol") v.conclusion_tol = num();
        else if (key == "premise_tol") v.premise_tol = num();
        else if (key == "algebra_tol") v.algebra_tol = num();
        else if (key == "n_theta") v.n_theta = count();
        else if (key == "n_axis") v.n_axis = count();
        else if (key == "r_min") v.r_min = num();
        else if (key == "r_max") v.r_max = num();
        else if (key == "n_r") v.n_r = count();
        else if (key == "offset") v.inward_offset = num();
        else if (key == "order_margin") v.order_margin = num();
        else if (key == "type_tol") v.type_tol = num();
        else if (key == "max_witnesses") v.max_witnesses = count();
        else if (key == "growth_r_min") cfg.growth.r_min = num();
        else if (key == "growth_r_max") cfg.growth.r_max = num();
        else if (key == "growth_n_r") cfg.growth.n_r = count();
        else if (key == "growth_n_theta") cfg.growth.sampler.n_theta = count();
        else if (key == "growth_n_axis") cfg.growth.sampler.n_axis = count();
        else if (key == "seed") v.seed = count();
        else if (key == "workers") {
            v.workers = static_cast<unsigned>(count());
            cfg.growth.sampler.workers = v.workers;
        } else if (key == "csv") {
            if (!val.is_string()) throw InputError("config: \"csv\" must be a path");
            cfg.csv_path = val.get<std::string>();
        } else {
            throw InputError("config: unknown key \"" + key + "\"");
        }
    }
    v.growth = cfg.growth;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quaternionic slice regular functions and Phragmen-Lindelof checks", "slicepl"};
    app.require_subcommand(1);
    Flags fl;

    auto common = [&](CLI::App* c, bool needs_domain) {
        c->add_option("--function", fl.function, "function spec (JSON)")->required();
        auto* d = c->add_option("--domain", fl.domain, "domain spec (JSON)");
        if (needs_domain) d->required();
        c->add_option("--rmin", fl.rmin);
        c->add_option("--rmax", fl.rmax);
        c->add_option("--nr", fl.nr);
        c->add_option("--ntheta", fl.ntheta);
        c->add_option("--naxis", fl.naxis);
        c->add_option("--csv", fl.csv, "CSV output path");
        c->add_option("--config", fl.config, std::string("JSON config file (default from $") + kConfigEnv + ")");
        c->add_option("--workers", fl.workers, "worker threads, 0 = hardware");
        c->add_option("--seed", fl.seed);
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate f at q");
    eval_cmd->add_option("--function", fl.function)->required();
    eval_cmd->add_option("--q", fl.q, "w,x,y,z")->required();

    auto* order_cmd = app.add_subcommand("order", "estimate the growth order");
    common(order_cmd, false);
    auto* type_cmd = app.add_subcommand("type", "estimate the growth type at a given order");
    common(type_cmd, false);
    type_cmd->add_option("--rho", fl.rho)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a Phragmen-Lindelof statement");
    std::string tag;
    verify_cmd->add_option("theorem", tag, "bounded | cone | sharp | strip | liouville")
        ->required()
        ->check(CLI::IsMember({"bounded", "cone", "sharp", "strip", "liouville"}));
    common(verify_cmd, false);
    verify_cmd->add_option("--M", fl.M);
    verify_cmd->add_option("--alpha", fl.alpha);
    verify_cmd->add_option("--rho", fl.rho);
    verify_cmd->add_option("--sigma", fl.sigma);
    verify_cmd->add_option("--N", fl.N);
    verify_cmd->add_option("--k", fl.k);
    verify_cmd->add_option("--tol", fl.tol, "conclusion tolerance");
    verify_cmd->add_option("--offset", fl.offset, "inward boundary offset");
    verify_cmd->add_option("--axis", fl.axis, "x,y,z of the slice for liouville");
    verify_cmd->add_option("--line", fl.line, "a,b,u,v: point and direction in the slice");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }

    try {
        if (eval_cmd->parsed()) {
            const Function f = load_function(fl.function);
            const auto c = parse_list(fl.q, 4, "--q");
            out << format_quaternion17(eval(f, Quaternion(c[0], c[1], c[2], c[3]))) << '\n';
            return 0;
        }
        if (order_cmd->parsed() || type_cmd->parsed()) {
            const RunConfig cfg = effective_config(fl, true);
            const Function f = load_function(fl.function);
            const Domain d = fl.domain.empty() ? Domain::whole_space() : load_domain(fl.domain);
            const GrowthEstimate g = order_cmd->parsed() ? estimate_order(f, d, cfg.growth)
                                                         : estimate_type(f, d, *fl.rho, cfg.growth);
            out << "function: " << f.describe() << '\n' << "domain: " << d.describe() << '\n' << format_growth(g);
            if (cfg.csv_path) write_file(*cfg.csv_path, growth_csv(g));
            return 0;
        }
        const RunConfig cfg = effective_config(fl, false);
        const Function f = load_function(fl.function);
        std::optional<Domain> d;
        if (!fl.domain.empty()) d = load_domain(fl.domain);
        VerificationReport rep;
        if (tag == "bounded") {
            if (!d) throw InputError("verify bounded: --domain is required");
            rep = verify_bounded_pl(f, *d, required(fl.M, "--M"), cfg.verify);
        } else if (tag == "cone") {
            rep = verify_cone_pl(f, required(fl.alpha, "--alpha"), required(fl.M, "--M"), cfg.verify, d);
        } else if (tag == "sharp") {
            const double rho = required(fl.rho, "--rho");
            const Domain dom = d ? *d : Domain::cone(std::numbers::pi / rho);
            rep = verify_sharp_bound(f, dom, required(fl.M, "--M"), rho, required(fl.sigma, "--sigma"), cfg.verify);
        } else if (tag == "strip") {
            if (!d) throw InputError("verify strip: --domain is required");
            rep = verify_strip_pl(f, *d, required(fl.M, "--M"), required(fl.N, "--N"), required(fl.k, "--k"),
                                  cfg.verify);
        } else {
            const auto a = parse_list(fl.axis, 3, "--axis");
            const auto l = parse_list(fl.line, 4, "--line");
            rep = verify_liouville(f, UnitImaginary::normalized(a[0], a[1], a[2]),
                                   SliceLine{{l[0], l[1]}, {l[2], l[3]}}, cfg.verify);
        }
        out << format_report(rep);
        if (cfg.csv_path && (!rep.violations.empty() || !rep.diagnostics.empty())) {
            write_file(*cfg.csv_path, violations_csv(rep));
        }
        return exit_code(rep);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what();
        if (!e.node().empty()) err << " (node " << e.node() << ')';
        err << '\n';
    }
    return 3;
}

}  // namespace slicepl
