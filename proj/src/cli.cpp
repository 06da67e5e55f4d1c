#include "fgl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgl/json_io.hpp"

namespace fgl::cli {

namespace {

using json_io::Json;
using json_io::to_json;

// Raised for unreadable files and malformed arguments (exit 1).
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string backend = "free";
    int order = FormalGroupLaw::default_order;
    std::string input;
    std::string inline_json;
    std::string output;
    bool pretty = false;
    std::vector<int> multiplicities;
    int n = 1;
};

int default_order()
{
    const char* env = std::getenv("FGL_ORDER");
    if (env == nullptr || *env == '\0')
        return FormalGroupLaw::default_order;
    try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 1)
            throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        throw InputError(std::string("FGL_ORDER must be a positive integer, got '") + env + "'");
    }
}

Json read_input(const Options& opt)
{
    std::string text;
    if (!opt.inline_json.empty()) {
        text = opt.inline_json;
    } else if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in)
            throw InputError("cannot read '" + opt.input + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        throw InputError("this subcommand needs --input FILE or --json TEXT");
    }
    return Json::parse(text);
}

CoefficientBackend backend_of(const Options& opt)
{
    return backend_for_order(CoefficientBackend::from_name(opt.backend, 0).kind(), opt.order);
}

Json header(const std::string& command, const Options& opt)
{
    return Json{{"command", command}, {"backend", opt.backend}, {"order", opt.order}};
}

Json series_entry(const TruncatedSeries& s)
{
    return Json{{"series", to_json(s)}, {"text", s.to_string()}};
}

// Evaluates the s.n.c. input schema; rejects invalid configurations and
// insufficient orders before any evaluation.
SncConfiguration checked_config(const Json& in, const Options& opt)
{
    SncConfiguration config = json_io::config_from_json(in);
    require_valid(config);
    if (opt.order < config.ambient_dim())
        throw TruncationError("--order " + std::to_string(opt.order) + " is below the ambient dimension " +
                              std::to_string(config.ambient_dim()));
    return config;
}

Json run_fgl(const std::string& verb, const Options& opt)
{
    const FormalGroupLaw law(backend_of(opt), opt.order);
    Json out = header("fgl " + verb, opt);
    if (verb == "inverse") {
        out.update(series_entry(formal_inverse(law)));
    } else if (verb == "nseries") {
        out["n"] = opt.n;
        out.update(series_entry(n_series(law, opt.n)));
    } else if (verb == "multilinear") {
        if (opt.multiplicities.empty())
            throw InputError("fgl multilinear needs --n n1,n2,..");
        out["multiplicities"] = opt.multiplicities;
        out.update(series_entry(multi_linear(law, opt.multiplicities)));
    } else if (verb == "decompose") {
        TruncatedSeries source(std::vector<std::string>{"u1"}, opt.order);
        if (!opt.multiplicities.empty()) {
            out["multiplicities"] = opt.multiplicities;
            source = multi_linear(law, opt.multiplicities);
        } else {
            source = json_io::series_from_json(read_input(opt));
        }
        Json parts = Json::array();
        for (const auto& [face, part] : support_decompose(source)) {
            Json entry{{"face", to_json(face)}};
            entry.update(series_entry(part));
            parts.push_back(std::move(entry));
        }
        out["parts"] = std::move(parts);
    }
    return out;
}

std::string status_name(PropertyOutcome::Status s)
{
    switch (s) {
    case PropertyOutcome::Status::Pass: return "pass";
    case PropertyOutcome::Status::Fail: return "fail";
    default: return "skipped";
    }
}

Json run_snc(const std::string& verb, const Options& opt)
{
    const Json in = read_input(opt);
    const SncConfiguration config = checked_config(in, opt);
    const FormalGroupLaw law(backend_of(opt), opt.order);
    Json out = header("snc " + verb, opt);

    auto emit_class = [&](const FaceClassVector& v) {
        out["class"] = to_json(v);
        out["dimension"] = to_json(class_dimension(v));
    };

    if (verb == "divclass") {
        const auto d = json_io::multiplicities_from_json(in.at("D"));
        out["D"] = d;
        emit_class(divisor_class(config, d, law));
    } else if (verb == "prodclass") {
        const auto d = json_io::multiplicities_from_json(in.at("D"));
        const auto e = json_io::multiplicities_from_json(in.at("E"));
        out["D"] = d;
        out["E"] = e;
        emit_class(product_class(config, d, e, law));
    } else if (verb == "normalform") {
        if (in.contains("classes")) {
            emit_class(normal_form(json_io::face_classes_from_json(in, config)));
        } else {
            // ch(O(D)) [E -> |E|]
            const auto d = json_io::multiplicities_from_json(in.at("D"));
            const auto e = json_io::multiplicities_from_json(in.at("E"));
            out["D"] = d;
            out["E"] = e;
            emit_class(normal_form(apply_divisor_operator(divisor_class(config, e, law), d, law)));
        }
    } else if (verb == "check-properties") {
        const auto d = json_io::multiplicities_from_json(in.at("D"));
        const auto e = json_io::multiplicities_from_json(in.at("E"));
        out["D"] = d;
        out["E"] = e;
        Json results = Json::array();
        bool all = true;
        for (const auto& p : check_properties(config, d, e, law)) {
            all = all && p.status != PropertyOutcome::Status::Fail;
            results.push_back(Json{{"name", p.name}, {"status", status_name(p.status)}, {"detail", p.detail}});
        }
        out["properties"] = std::move(results);
        out["all_passed"] = all;
    }
    return out;
}

std::vector<std::string> string_list(const Json& in, const char* key)
{
    return in.contains(key) ? in.at(key).get<std::vector<std::string>>() : std::vector<std::string>{};
}

Json run_cycles(const std::string& verb, const Options& opt)
{
    const Json in = read_input(opt);
    Json out{{"command", "cycles " + verb}};
    auto emit = [&](const auto& relation) {
        out["relation"] = to_json(relation);
        out["degree"] = to_json(cycle_degree(relation));
    };

    if (verb == "dpr") {
        DoublePointDatum datum;
        datum.target = json_io::label_from_json(in.at("target"));
        datum.y_infinity = json_io::label_from_json(in.at("Y_inf"));
        datum.a = json_io::label_from_json(in.at("A"));
        datum.b = json_io::label_from_json(in.at("B"));
        datum.intersection = json_io::label_from_json(in.at("D"));
        datum.projective = json_io::label_from_json(in.at("P_D"));
        datum.fiber_dim = in.value("n", datum.y_infinity.dim);
        emit(double_point_relation(datum));
    } else if (verb == "blowup-tower") {
        const SpaceLabel target = json_io::label_from_json(in.at("target"));
        std::vector<BlowupStep> steps;
        for (const auto& s : in.at("steps"))
            steps.push_back(BlowupStep{json_io::label_from_json(s.at("Y")), json_io::label_from_json(s.at("Y_next")),
                                       json_io::label_from_json(s.at("E")), json_io::label_from_json(s.at("P_D"))});
        emit(blowup_tower_telescope(steps, target));
    } else if (verb == "relgen") {
        const std::string kind = in.at("kind").get<std::string>();
        out["kind"] = kind;
        const SpaceLabel source = json_io::label_from_json(in.at("source"));
        const SpaceLabel target = json_io::label_from_json(in.at("target"));
        if (kind == "Dim") {
            emit(omega_relation_generator(DimWitness{source, target, json_io::label_from_json(in.at("base")),
                                                     string_list(in, "pulled_back"), string_list(in, "extra")}));
        } else if (kind == "Sect") {
            emit(omega_relation_generator(
                SectWitness{source, json_io::label_from_json(in.at("zero_locus")), target, string_list(in, "bundles")}));
        } else if (kind == "FGL") {
            out["backend"] = opt.backend;
            out["order"] = opt.order;
            emit(omega_relation_generator(FglWitness{source, target, string_list(in, "bundles"),
                                                     in.at("L").get<std::string>(), in.at("M").get<std::string>(),
                                                     backend_of(opt)}));
        } else {
            throw DomainError("unknown relation kind '" + kind + "' (expected Dim, Sect or FGL)");
        }
    }
    return out;
}

void write_result(const Json& result, const Options& opt, std::ostream& out)
{
    const std::string text = (opt.pretty ? result.dump(2) : result.dump()) + "\n";
    if (opt.output.empty() || opt.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file)
        throw InputError("cannot write '" + opt.output + "'");
    file << text;
}

Json violation_report(const std::exception& e)
{
    Json report{{"error", "validation"}, {"message", e.what()}};
    if (const auto* invalid = dynamic_cast<const InvalidConfiguration*>(&e))
        report["violations"] = to_json(invalid->report()).at("violations");
    else
        report["violations"] = Json::array({Json{{"message", e.what()}, {"subset", nullptr}}});
    return report;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    try {
        opt.order = default_order();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return io_error;
    }

    CLI::App app{"Formal group law and divisor class calculator", "fglcalc"};
    app.require_subcommand(1);

    std::string group;
    std::string verb;
    auto add_common = [&](CLI::App* sub, bool needs_input, bool uses_law) {
        if (uses_law) {
            sub->add_option("--backend", opt.backend, "Coefficient backend")
                ->check(CLI::IsMember({"free", "log", "additive", "mult"}));
            sub->add_option("--order", opt.order, "Series truncation order (default $FGL_ORDER or 8)")
                ->check(CLI::PositiveNumber);
        }
        if (needs_input) {
            sub->add_option("--input,-i", opt.input, "Input JSON file");
            sub->add_option("--json", opt.inline_json, "Inline input JSON");
        }
        sub->add_option("--output,-o", opt.output, "Output file (default: standard output)");
        sub->add_flag("--pretty", opt.pretty, "Indent the JSON output");
    };
    auto leaf = [&](CLI::App* parent, const std::string& group_name, const std::string& name,
                    const std::string& description) {
        CLI::App* sub = parent->add_subcommand(name, description);
        sub->callback([&group, &verb, group_name, name] {
            group = group_name;
            verb = name;
        });
        return sub;
    };

    CLI::App* fgl_cmd = app.add_subcommand("fgl", "Formal group law series");
    fgl_cmd->require_subcommand(1);
    add_common(leaf(fgl_cmd, "fgl", "inverse", "Formal inverse chi(u)"), false, true);
    CLI::App* ns = leaf(fgl_cmd, "fgl", "nseries", "n-series [n]u");
    add_common(ns, false, true);
    ns->add_option("--n", opt.n, "Multiplier n")->required();
    CLI::App* ml = leaf(fgl_cmd, "fgl", "multilinear", "[n1]u1 +F .. +F [nr]ur");
    add_common(ml, false, true);
    ml->add_option("--n", opt.multiplicities, "Multiplicities n1,..,nr")->delimiter(',')->required();
    CLI::App* dec = leaf(fgl_cmd, "fgl", "decompose", "Support decomposition of F^n or of an input series");
    add_common(dec, true, true);
    dec->add_option("--n", opt.multiplicities, "Multiplicities n1,..,nr")->delimiter(',');

    CLI::App* snc_cmd = app.add_subcommand("snc", "Divisor classes over s.n.c. configurations");
    snc_cmd->require_subcommand(1);
    add_common(leaf(snc_cmd, "snc", "divclass", "Divisor class of D"), true, true);
    add_common(leaf(snc_cmd, "snc", "prodclass", "Product class of D and E"), true, true);
    add_common(leaf(snc_cmd, "snc", "normalform", "Normal form of a face class vector"), true, true);
    add_common(leaf(snc_cmd, "snc", "check-properties", "Check product class properties"), true, true);

    CLI::App* cyc_cmd = app.add_subcommand("cycles", "Cycle groups and relation generators");
    cyc_cmd->require_subcommand(1);
    add_common(leaf(cyc_cmd, "cycles", "dpr", "Double point relation"), true, false);
    add_common(leaf(cyc_cmd, "cycles", "blowup-tower", "Telescoped blowup relations"), true, false);
    add_common(leaf(cyc_cmd, "cycles", "relgen", "Dim / Sect / FGL relation generator"), true, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return io_error;
    }

    try {
        Json result;
        if (group == "fgl")
            result = run_fgl(verb, opt);
        else if (group == "snc")
            result = run_snc(verb, opt);
        else
            result = run_cycles(verb, opt);
        write_result(result, opt, out);
        return ok;
    } catch (const DomainError& e) {
        err << "validation error: " << e.what() << "\n";
        try {
            write_result(violation_report(e), opt, out);
        } catch (const InputError& io) {
            err << "error: " << io.what() << "\n";
            return io_error;
        }
        return validation_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return io_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return io_error;
    }
}

} // namespace fgl::cli
