#include "f1hall/cli.hpp"

#include "f1hall/context.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/hallmod.hpp"
#include "f1hall/json_io.hpp"
#include "f1hall/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace f1hall {

namespace {

DimVector parse_dim(const Quiver& q, const std::string& s)
{
    DimVector d;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        d.push_back(std::stoi(part));
    if (static_cast<int>(d.size()) != q.num_vertices())
        throw std::invalid_argument("dimension vector '" + s + "' has " +
                                    std::to_string(d.size()) + " entries, quiver has " +
                                    std::to_string(q.num_vertices()) + " vertices");
    for (int x : d)
        if (x < 0)
            throw std::invalid_argument("dimension vector '" + s + "' has a negative entry");
    return d;
}

nlohmann::json read_input_json(const std::string& input, std::istream& fallback)
{
    nlohmann::json j;
    if (input.empty() || input == "-") {
        fallback >> j;
    } else {
        std::ifstream in(input);
        if (!in)
            throw std::invalid_argument("cannot open input file '" + input + "'");
        in >> j;
    }
    return j;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hall algebra and Hall module of quiver representations over F1"};
    app.require_subcommand(1);

    std::string quiver_path;
    std::string format = "text";
    std::string input;
    std::string cap_str;
    int jobs = 1;

    auto add_common = [&](CLI::App* sub, bool needs_quiver = true) {
        auto* opt = sub->add_option("--quiver", quiver_path, "quiver JSON file");
        if (needs_quiver)
            opt->required();
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::vector<std::string> dim_args;

    auto* reps = app.add_subcommand("reps", "isomorphism classes at a dimension vector");
    add_common(reps);
    reps->add_option("--dim", dim_args, "dimension vector a,b,...")->required()->expected(1);

    auto* forms = app.add_subcommand("forms", "isometry classes at a dimension vector");
    add_common(forms);
    forms->add_option("--dim", dim_args, "dimension vector a,b,...")->required()->expected(1);

    auto* mul = app.add_subcommand("mul", "products of the classes in two grades");
    add_common(mul);
    mul->add_option("--dim", dim_args, "two dimension vectors: a,b x c,d")
        ->required()
        ->expected(3);

    auto* comul = app.add_subcommand("comul", "coproduct of a representation literal");
    add_common(comul);
    comul->add_option("--input", input, "representation literal file (default stdin)");

    auto* act_cmd = app.add_subcommand("act", "action of the classes in a grade on a form");
    add_common(act_cmd);
    act_cmd->add_option("--dim", dim_args, "dimension vector of the acting classes")
        ->required()
        ->expected(1);
    act_cmd->add_option("--input", input, "form literal file (default stdin)");

    auto* coact_cmd = app.add_subcommand("coact", "coaction on a form literal");
    add_common(coact_cmd);
    coact_cmd->add_option("--input", input, "form literal file (default stdin)");

    auto* prim = app.add_subcommand("primitives", "indecomposable classes and the +/- split");
    add_common(prim);
    prim->add_option("--cap", cap_str, "componentwise bound a,b,...")->required();
    bool with_lcs = false;
    prim->add_flag("--lcs", with_lcs, "also print lower central series dimensions");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify);
    std::string which;
    verify->add_option("check", which, "check name or 'all'")->required();
    verify->add_option("--cap", cap_str, "componentwise bound a,b,...");
    verify->add_option("--jobs", jobs, "worker threads per check")
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("f1hall");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        QuiverFile qf = load_quiver_file(quiver_path);
        Context ctx(qf.quiver, qf.sigma, qf.name);
        const bool json_out = format == "json";

        if (reps->parsed()) {
            DimVector d = parse_dim(ctx.quiver(), dim_args[0]);
            auto classes = ctx.reps_at(d);
            if (json_out) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : *classes)
                    j.push_back(c.enc);
                out << j.dump(2) << "\n";
            } else {
                for (const auto& c : *classes)
                    out << c.enc << "\n";
            }
            return 0;
        }

        if (forms->parsed()) {
            DimVector d = parse_dim(ctx.quiver(), dim_args[0]);
            if (!sigma_symmetric(ctx.sigma(), d))
                err << "warning: dimension vector " << dim_str(d)
                    << " is not sigma-symmetric; no symmetric forms exist\n";
            auto classes = ctx.forms_at(d);
            if (json_out) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : *classes)
                    j.push_back(c.enc);
                out << j.dump(2) << "\n";
            } else {
                for (const auto& c : *classes)
                    out << c.enc << "\n";
            }
            return 0;
        }

        if (mul->parsed()) {
            if (dim_args[1] != "x")
                throw std::invalid_argument("mul expects --dim a,b x c,d");
            DimVector d1 = parse_dim(ctx.quiver(), dim_args[0]);
            DimVector d2 = parse_dim(ctx.quiver(), dim_args[2]);
            nlohmann::json jout = nlohmann::json::array();
            for (const auto& a : *ctx.reps_at(d1))
                for (const auto& b : *ctx.reps_at(d2)) {
                    HallElement p =
                        product(ctx, HallElement::basis(a), HallElement::basis(b));
                    if (json_out)
                        jout.push_back({{"left", a.enc},
                                        {"right", b.enc},
                                        {"product", to_json(p)}});
                    else
                        out << "[" << a.enc << "] . [" << b.enc << "] = " << to_text(p)
                            << "\n";
                }
            if (json_out)
                out << jout.dump(2) << "\n";
            return 0;
        }

        if (comul->parsed()) {
            Rep r = parse_rep_literal(ctx.quiver(), read_input_json(input, std::cin));
            Tensor2 t = coproduct(ctx, HallElement::basis(ctx.canon(r)));
            if (json_out)
                out << to_json(t).dump(2) << "\n";
            else
                out << to_text(t) << "\n";
            return 0;
        }

        if (act_cmd->parsed()) {
            SymmetricForm f = parse_form_literal(ctx.quiver(), ctx.sigma(),
                                                 read_input_json(input, std::cin));
            ModuleElement xi = ModuleElement::basis(ctx.canon(f));
            DimVector d = parse_dim(ctx.quiver(), dim_args[0]);
            nlohmann::json jout = nlohmann::json::array();
            for (const auto& u : *ctx.reps_at(d)) {
                ModuleElement r = act(ctx, HallElement::basis(u), xi);
                if (json_out)
                    jout.push_back({{"class", u.enc}, {"result", to_json(r)}});
                else
                    out << "[" << u.enc << "] * xi = " << to_text(r) << "\n";
            }
            if (json_out)
                out << jout.dump(2) << "\n";
            return 0;
        }

        if (coact_cmd->parsed()) {
            SymmetricForm f = parse_form_literal(ctx.quiver(), ctx.sigma(),
                                                 read_input_json(input, std::cin));
            TensorHM t = coact(ctx, ModuleElement::basis(ctx.canon(f)));
            if (json_out)
                out << to_json(t).dump(2) << "\n";
            else
                out << to_text(t) << "\n";
            return 0;
        }

        if (prim->parsed()) {
            DimVector bound = parse_dim(ctx.quiver(), cap_str);
            auto basis = primitive_basis(ctx, bound);
            PmBases pm = split_pm(ctx, bound);
            if (json_out) {
                nlohmann::json j;
                j["indecomposables"] = nlohmann::json::array();
                for (const auto& c : basis)
                    j["indecomposables"].push_back(c.enc);
                j["plus"] = nlohmann::json::array();
                for (const auto& x : pm.plus)
                    j["plus"].push_back(to_json(x));
                j["minus"] = nlohmann::json::array();
                for (const auto& x : pm.minus)
                    j["minus"].push_back(to_json(x));
                if (with_lcs) {
                    j["lower_central_series"] = nlohmann::json::array();
                    auto lcs = lower_central_series(ctx, bound);
                    for (std::size_t k = 0; k < lcs.size(); ++k) {
                        nlohmann::json row;
                        row["depth"] = k + 1;
                        row["dims"] = nlohmann::json::array();
                        for (const auto& [g, dim] : lcs[k])
                            row["dims"].push_back({{"grade", dim_str(g)}, {"dim", dim}});
                        j["lower_central_series"].push_back(row);
                    }
                }
                out << j.dump(2) << "\n";
            } else {
                out << "indecomposables:\n";
                for (const auto& c : basis)
                    out << "  [" << c.enc << "]\n";
                out << "plus basis:\n";
                for (const auto& x : pm.plus)
                    out << "  " << to_text(x) << "\n";
                out << "minus basis:\n";
                for (const auto& x : pm.minus)
                    out << "  " << to_text(x) << "\n";
                if (with_lcs) {
                    auto lcs = lower_central_series(ctx, bound);
                    for (std::size_t k = 0; k < lcs.size(); ++k) {
                        out << "lower central series depth " << (k + 1) << ":";
                        for (const auto& [g, dim] : lcs[k])
                            out << "  " << dim_str(g) << ":" << dim;
                        out << "\n";
                    }
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            Cap cap;
            if (!cap_str.empty())
                cap.vec = parse_dim(ctx.quiver(), cap_str);
            auto reports = run_checks(ctx, which, cap, jobs);
            bool all_pass = true;
            if (json_out) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : reports) {
                    j.push_back(report_json(r));
                    all_pass = all_pass && r.pass();
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    out << report_text(r) << "\n";
                    all_pass = all_pass && r.pass();
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace f1hall
