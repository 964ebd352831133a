#include "cb/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace cb::cli {

namespace {

struct ManifoldInput {
    std::string expr;
    std::string gram_path;

    FourManifold build() const {
        if (!gram_path.empty()) return read_gram_file(gram_path);
        if (!expr.empty()) return parse_manifold_expression(expr);
        throw std::invalid_argument("no manifold given: pass an expression or --gram <file>");
    }
};

EulerClass parse_alpha(const std::string& text, const FourManifold& m) {
    std::vector<Int> v = parse_integer_vector(text);
    if (v.size() != m.rank())
        throw std::invalid_argument("alpha has " + std::to_string(v.size()) +
                                    " coordinates but the manifold has rank " +
                                    std::to_string(m.rank()));
    return EulerClass{std::move(v)};
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int run_main(int argc, char** argv) {
    CLI::App app{"Circle bundles over simply connected 4-manifolds: cohomology and "
                 "homeomorphism type of the total space"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    ManifoldInput cls_in, coh_in, sur_in, spin_in;
    std::string cls_alpha, coh_alpha;
    long long bound = 1;
    long long s2_p = 0;

    auto add_manifold_opts = [](CLI::App* cmd, ManifoldInput& in) {
        auto* e = cmd->add_option("expr", in.expr, "manifold expression, e.g. \"CP2 # -CP2\"");
        auto* g = cmd->add_option("--gram", in.gram_path, "path to a Gram matrix file");
        e->excludes(g);
    };

    auto* cls = app.add_subcommand("classify", "homeomorphism type of M(alpha), alpha primitive");
    add_manifold_opts(cls, cls_in);
    cls->add_option("alpha", cls_alpha, "Euler class, e.g. \"1,0\"")->required();

    auto* coh = app.add_subcommand("cohomology", "H^0..H^5 and pi_1 of M(alpha), any alpha");
    add_manifold_opts(coh, coh_in);
    coh->add_option("alpha", coh_alpha, "Euler class, e.g. \"2,0\"")->required();

    auto* sur = app.add_subcommand("survey", "classify all primitive alpha up to a bound");
    add_manifold_opts(sur, sur_in);
    sur->add_option("--bound", bound, "sup-norm bound on alpha")->check(CLI::PositiveNumber);

    auto* s2b = app.add_subcommand("s2-bundle", "total space of the degree-p circle bundle over S^2");
    s2b->add_option("p", s2_p, "Euler number")->required();

    auto* spn = app.add_subcommand("spin-class",
                                   "a primitive alpha matching w2 mod 2, and its total space");
    add_manifold_opts(spn, spin_in);

    for (CLI::App* sc : {cls, coh, sur, s2b, spn}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (cls->parsed()) {
            FourManifold m = cls_in.build();
            ClassifyReport r = run_classify(m, parse_alpha(cls_alpha, m));
            emit(to_json(r), to_text(r), as_json);
            return r.result ? 0 : kExitNonPrimitive;
        }
        if (coh->parsed()) {
            FourManifold m = coh_in.build();
            CohomologyReport r = run_cohomology(m, parse_alpha(coh_alpha, m));
            emit(to_json(r), to_text(r), as_json);
            return 0;
        }
        if (sur->parsed()) {
            FourManifold m = sur_in.build();
            SurveyReport r = run_survey(m, bound);
            emit(to_json(r), to_text(r), as_json);
            return 0;
        }
        if (s2b->parsed()) {
            std::string space = s2_bundle_total_space(s2_p);
            json j{{"p", s2_p}, {"total_space", space}};
            emit(j, "total space:  " + space + "\n", as_json);
            return 0;
        }
        if (spn->parsed()) {
            FourManifold m = spin_in.build();
            SpinClassReport r = run_spin_class(m);
            emit(to_json(r), to_text(r), as_json);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}

}  // namespace cb::cli
