#include "walg/walg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using walg::Json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int max_rank = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string algebra;
    int rank = 0;
    bool rank_given = false;
    std::string format = "json";
    int truncation = walg::default_truncation;
    bool verbose = false;
    std::string input;
    std::optional<int> degree;
};

walg::LieAlgebraSpec spec_for(const RunConfig& cfg)
{
    static const std::map<std::string, walg::Kind> kinds = {{"gl", walg::Kind::A},
                                                            {"so-odd", walg::Kind::B},
                                                            {"sp", walg::Kind::C},
                                                            {"so-even", walg::Kind::D},
                                                            {"g2", walg::Kind::G2}};
    const walg::Kind kind = kinds.at(cfg.algebra);
    if (kind == walg::Kind::G2) {
        if (cfg.rank_given && cfg.rank != 2)
            throw UsageError("g2 has rank 2");
        return walg::build_spec(kind, 2);
    }
    if (!cfg.rank_given)
        throw UsageError("--rank is required for " + cfg.algebra);
    const int lower = kind == walg::Kind::D ? 2 : 1;
    if (cfg.rank < lower || cfg.rank > max_rank)
        throw UsageError("--rank for " + cfg.algebra + " must lie in [" + std::to_string(lower) + ", " +
                         std::to_string(max_rank) + "]");
    return walg::build_spec(kind, cfg.rank);
}

// "-2 + E[1,1]^(1) + 3/2 E[2,1]^2 - (E[1,1]^(1))^2"
std::string to_text(const walg::LieAlgebraSpec& spec, const walg::DiffPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        walg::Rational a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (a != 1 || m.empty())
            out << a.get_str() << (m.empty() ? "" : " ");
        for (std::size_t k = 0; k < m.size(); ++k) {
            std::string v = spec.name_of(m[k].var.gen);
            if (m[k].var.der)
                v += "^(" + std::to_string(m[k].var.der) + ")";
            if (m[k].pow > 1)
                v = (m[k].var.der ? "(" + v + ")" : v) + "^" + std::to_string(m[k].pow);
            out << (k ? " " : "") << v;
        }
    }
    return out.str();
}

std::string to_text(const walg::LieAlgebraSpec& spec, const walg::LambdaPoly& q)
{
    if (q.is_zero())
        return "0";
    std::string s;
    for (const auto& [k, c] : q.coeffs())
        s += (s.empty() ? "" : " + ") + std::string("(") + to_text(spec, c) + ")" +
             (k == 0 ? "" : " lambda^" + std::to_string(k));
    return s;
}

void emit(const RunConfig& cfg, const Json& report, const std::string& text)
{
    if (cfg.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

Json header(const walg::LieAlgebraSpec& spec)
{
    return {{"kind", std::string(walg::kind_name(spec.kind))}, {"rank", spec.rank}};
}

int cmd_generate(const RunConfig& cfg)
{
    const auto spec = spec_for(cfg);
    const auto gs = walg::generators(spec, cfg.truncation);
    std::ostringstream text;
    for (const auto& [k, w] : gs.w)
        text << "w" << k << " = " << to_text(spec, w) << "\n";
    if (gs.y)
        text << "y = " << to_text(spec, *gs.y) << "\n";
    emit(cfg, walg::to_json(spec, gs), text.str());
    return exit_ok;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_verify(const RunConfig& cfg)
{
    const auto spec = spec_for(cfg);
    walg::GeneratorSet gs;
    Json report = header(spec);
    if (cfg.input.empty()) {
        gs = walg::generators(spec, cfg.truncation);
        // generators() has already rejected a wrong tail or parity
        if (spec.kind == walg::Kind::D)
            report["d_structure"] = {{"tail_depth", cfg.truncation}, {"tail", true}, {"parity", true}};
    } else {
        const Json doc = read_json_file(cfg.input);
        if (doc.contains("kind") && doc.at("kind") != std::string(walg::kind_name(spec.kind)))
            throw UsageError("input kind does not match --algebra");
        if (doc.contains("rank") && doc.at("rank") != spec.rank)
            throw UsageError("input rank does not match --rank");
        gs = walg::generator_set_from_json(spec, doc);
    }
    std::vector<std::pair<std::string, const walg::DiffPoly*>> targets;
    for (const auto& [k, w] : gs.w)
        targets.emplace_back("w" + std::to_string(k), &w);
    if (gs.y)
        targets.emplace_back("y", &*gs.y);

    bool ok = true;
    Json checks = Json::array();
    std::ostringstream text;
    for (const auto& [label, p] : targets) {
        const auto cert = walg::verify_membership(spec, *p);
        ok = ok && cert.member;
        Json entry = {{"label", label}};
        entry.update(walg::to_json(spec, cert));
        checks.push_back(std::move(entry));
        text << label << ": " << (cert.member ? "member" : "NOT a member");
        if (!cert.member) {
            const auto& w = cert.entries.back();
            text << ", witness rho{" << spec.name_of(w.x) << "_lambda " << label << "} = " << to_text(spec, w.value);
        }
        text << "\n";
        if (cfg.verbose && cert.member)
            for (const auto& e : cert.entries)
                text << "  rho{" << spec.name_of(e.x) << "_lambda " << label << "} = 0\n";
    }
    report["checks"] = std::move(checks);
    report["ok"] = ok;
    emit(cfg, report, text.str());
    return ok ? exit_ok : exit_failure;
}

int cmd_miura(const RunConfig& cfg)
{
    const auto spec = spec_for(cfg);
    const auto gs = walg::generators(spec, cfg.truncation);
    const auto m = walg::miura_product(spec, cfg.truncation);
    const auto agreement = walg::phi_agreement(spec, gs, cfg.truncation);
    Json report = header(spec);
    Json images = Json::object();
    std::ostringstream text;
    for (const auto& [k, w] : m.w) {
        images["w" + std::to_string(k)] = walg::to_json(spec, w);
        text << "w~" << k << " = " << to_text(spec, w) << "\n";
    }
    if (m.y) {
        images["y"] = walg::to_json(spec, *m.y);
        text << "y~ = " << to_text(spec, *m.y) << "\n";
    }
    report["images"] = std::move(images);
    report["mismatches"] = agreement.mismatches;
    Json residuals = Json::object();
    for (const auto& label : agreement.mismatches) {
        const walg::DiffPoly& w = label == "y" ? *gs.y : gs.w.at(std::stoi(label.substr(1)));
        const walg::DiffPoly& wt = label == "y" ? *m.y : m.w.at(std::stoi(label.substr(1)));
        const auto r = walg::phi_hom(spec, w) - wt;
        residuals[label] = walg::to_json(spec, r);
        text << "phi(" << label << ") - " << (label == "y" ? "y~" : "w~" + label.substr(1)) << " = " << to_text(spec, r) << "\n";
    }
    if (!agreement.ok)
        report["residuals"] = std::move(residuals);
    report["ok"] = agreement.ok;
    text << (agreement.ok ? "phi agrees with the Miura product\n" : "phi DISAGREES with the Miura product\n");
    emit(cfg, report, text.str());
    return agreement.ok ? exit_ok : exit_failure;
}

int cmd_screen(const RunConfig& cfg)
{
    const auto spec = spec_for(cfg);
    const auto m = walg::miura_product(spec, cfg.truncation);
    const auto bad = walg::screening_sweep(spec, m);
    std::vector<std::string> labels;
    for (const auto& [k, w] : m.w)
        labels.push_back("w" + std::to_string(k));
    if (m.y)
        labels.push_back("y");

    Json results = Json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < spec.coroots.size(); ++i)
        for (const auto& label : labels) {
            const walg::ScreeningResidual* hit = nullptr;
            for (const auto& b : bad)
                if (b.screening == static_cast<int>(i) && b.label == label)
                    hit = &b;
            const std::string target = label == "y" ? "y~" : "w~" + label.substr(1);
            Json r = {{"screening", i + 1}, {"target", target}, {"zero", hit == nullptr}};
            if (hit)
                r["residual"] = walg::to_json(spec, hit->residual);
            results.push_back(std::move(r));
            text << "V" << i + 1 << "(" << target << ") = " << (hit ? to_text(spec, hit->residual) : "0") << "\n";
        }
    Json report = header(spec);
    report["results"] = std::move(results);
    report["ok"] = bad.empty();
    emit(cfg, report, text.str());
    return bad.empty() ? exit_ok : exit_failure;
}

int cmd_macmahon(const RunConfig& cfg)
{
    const auto spec = spec_for(cfg);
    const int bound = walg::family_bound(spec, cfg.truncation);
    const int degree = cfg.degree.value_or(bound);
    if (degree < 1 || degree > bound)
        throw UsageError("--degree must lie in [1, " + std::to_string(bound) + "]");
    const auto r = walg::macmahon_check(spec, degree, cfg.truncation);
    Json report = header(spec);
    report["degree"] = degree;
    report["ok"] = r.ok;
    std::ostringstream text;
    if (r.ok) {
        text << "sum_k (-1)^k h_{m-k} e_k = 0 for m = 1.." << degree << "\n";
    } else {
        report["failing_degree"] = *r.failing_degree;
        report["residual"] = walg::to_json(spec, r.residual);
        text << "MacMahon identity fails at m = " << *r.failing_degree << "\n";
    }
    emit(cfg, report, text.str());
    return r.ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generators of principal classical W-algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra, "Lie algebra")
            ->required()
            ->check(CLI::IsMember({"gl", "so-odd", "so-even", "sp", "g2"}));
        sub->add_option("--rank", cfg.rank, "rank n (so-odd 2 means o_5)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--truncation", cfg.truncation, "d^{-1} truncation depth K")->check(CLI::PositiveNumber);
        sub->add_flag("--verbose", cfg.verbose, "list every checked pair in text output");
    };
    std::map<std::string, int (*)(const RunConfig&)> commands = {{"generate", cmd_generate},
                                                                 {"verify", cmd_verify},
                                                                 {"miura", cmd_miura},
                                                                 {"screen", cmd_screen},
                                                                 {"macmahon", cmd_macmahon}};
    std::map<std::string, CLI::App*> subs;
    subs["generate"] = app.add_subcommand("generate", "print the generators w_k (and y_n)");
    subs["verify"] = app.add_subcommand("verify", "check W-algebra membership of every generator");
    subs["miura"] = app.add_subcommand("miura", "compare phi(w_k) with the Miura product");
    subs["screen"] = app.add_subcommand("screen", "apply every screening operator to the Miura coefficients");
    subs["macmahon"] = app.add_subcommand("macmahon", "check sum_k (-1)^k h_{m-k} e_k = 0");
    for (auto& [name, sub] : subs)
        add_common(sub);
    subs["verify"]->add_option("--input", cfg.input, "GeneratorSet JSON to verify instead of the built-in set");
    subs["macmahon"]->add_option("--degree", cfg.degree, "highest m to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) {
            cfg.rank_given = sub->count("--rank") > 0;
            try {
                return commands.at(name)(cfg);
            } catch (const UsageError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return exit_usage;
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return exit_usage;
            } catch (const std::out_of_range& e) {
                std::cerr << "error: " << e.what() << "\n";
                return exit_usage;
            } catch (const Json::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return exit_usage;
            } catch (const std::logic_error& e) {
                std::cerr << "check failed: " << e.what() << "\n";
                return exit_failure;
            }
        }
    return exit_usage;
}
