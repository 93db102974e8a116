// Command-line front end: group/diagram computations and the verification
// suites, with text or JSON reports.
//
// Exit codes: 0 success, 1 parse/usage errors, 2 domain errors (the message
// names the failed precondition).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "moorediag/verify.hpp"

using namespace moorediag;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

std::string hom_text(const std::string& name, const Hom& h) {
    return name + ": " + h.dom().to_string() + " -> " + h.cod().to_string() + ", matrix " +
           h.matrix().to_string();
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations in the categories of Moore diagrams and eta-diagrams"};
    app.require_subcommand(1);

    // group normalize <literal>
    auto* group_cmd = app.add_subcommand("group", "group-level computations");
    group_cmd->require_subcommand(1);
    std::string literal;
    auto* normalize = group_cmd->add_subcommand("normalize", "canonical invariant-factor form");
    normalize->add_option("literal", literal)->required();
    normalize->callback([&] { std::cout << FgGroup::parse(literal).to_string() << "\n"; });

    // hom <U> <V>
    std::string hom_u, hom_v;
    auto* hom_cmd = app.add_subcommand("hom", "the group Hom(U, V)");
    hom_cmd->add_option("U", hom_u)->required();
    hom_cmd->add_option("V", hom_v)->required();
    hom_cmd->callback([&] {
        std::cout << HomGroup(FgGroup::parse(hom_u), FgGroup::parse(hom_v)).group().to_string()
                  << "\n";
    });

    // ext <U> <V>
    std::string ext_u, ext_v;
    auto* ext_cmd = app.add_subcommand("ext", "the group Ext(U, V)");
    ext_cmd->add_option("U", ext_u)->required();
    ext_cmd->add_option("V", ext_v)->required();
    ext_cmd->callback([&] {
        std::cout << ext_group(FgGroup::parse(ext_u), FgGroup::parse(ext_v)).to_string() << "\n";
    });

    // phi <extension.json>
    std::string phi_file;
    auto* phi_cmd = app.add_subcommand("phi", "the map Phi(E): U[2] -> V/2 of an extension");
    phi_cmd->add_option("file", phi_file)->required();
    phi_cmd->callback([&] {
        Extension e = extension_from_json(read_json_file(phi_file));
        Hom f = phi(e);
        std::cout << "U[2] = " << f.dom().to_string() << "\n";
        std::cout << "V/2 = " << f.cod().to_string() << "\n";
        std::cout << "Phi = " << f.matrix().to_string() << "\n";
        std::cout << "class = " << (classify(e).is_zero() ? "split" : "nonsplit") << "\n";
    });

    // diagram validate|exact|homset <files>
    auto* diagram_cmd = app.add_subcommand("diagram", "diagram-level computations");
    diagram_cmd->require_subcommand(1);
    std::string dfile, dfile2;
    auto* validate_cmd = diagram_cmd->add_subcommand("validate", "check the defining relations");
    validate_cmd->add_option("file", dfile)->required();
    validate_cmd->callback([&] {
        AnyDiagram d = diagram_from_json(read_json_file(dfile));
        ValidationReport r = std::visit([](const auto& x) { return validate(x); }, d);
        for (const auto& line : r.lines)
            std::cout << (line.holds ? "ok   " : "FAIL ") << line.relation << "\n";
        if (!r.ok()) throw RelationError("diagram violates a defining relation");
        if (!r.derived_ok()) throw RelationError("internal: derived relation violated");
    });
    auto* exact_cmd = diagram_cmd->add_subcommand("exact", "short exactness of the induced row");
    exact_cmd->add_option("file", dfile)->required();
    exact_cmd->callback([&] {
        AnyDiagram d = diagram_from_json(read_json_file(dfile));
        bool ok = std::visit(
            [](const auto& x) -> bool {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, EtaDiagram>) {
                    throw DomainError("eta-diagrams have no exactness condition");
                } else {
                    return is_exact(x);
                }
            },
            d);
        std::cout << (ok ? "exact" : "not exact") << "\n";
    });
    auto* homset_cmd = diagram_cmd->add_subcommand("homset", "all morphisms between diagrams");
    homset_cmd->add_option("source", dfile)->required();
    homset_cmd->add_option("target", dfile2)->required();
    homset_cmd->callback([&] {
        AnyDiagram a = diagram_from_json(read_json_file(dfile));
        AnyDiagram b = diagram_from_json(read_json_file(dfile2));
        if (a.index() != b.index()) throw DomainError("homset: diagrams have different kinds");
        auto print = [&](const auto& x, const auto& y) {
            DiagramHomGroup hg(x, y);
            std::cout << "morphism group: " << hg.group().to_string() << "\n";
            auto morphisms = hom_set(x, y);  // throws InfiniteHomSetError when infinite
            std::cout << "count: " << morphisms.size() << "\n";
            for (const DiagramMorphism& m : morphisms) {
                std::cout << "  f = " << m.f.matrix().to_string();
                if (m.g) std::cout << ", g = " << m.g->matrix().to_string();
                if (m.h) std::cout << ", h = " << m.h->matrix().to_string();
                std::cout << "\n";
            }
        };
        if (std::holds_alternative<MooreDiagram>(a))
            print(std::get<MooreDiagram>(a), std::get<MooreDiagram>(b));
        else if (std::holds_alternative<EtaDiagram>(a))
            print(std::get<EtaDiagram>(a), std::get<EtaDiagram>(b));
        else
            print(std::get<ExtEtaDiagram>(a), std::get<ExtEtaDiagram>(b));
    });

    // dual j|delta <file>
    auto* dual_cmd = app.add_subcommand("dual", "duality functors on extended eta-diagrams");
    dual_cmd->require_subcommand(1);
    std::string jfile, deltafile;
    auto* jdual_cmd = dual_cmd->add_subcommand("j", "character dual (finite diagrams)");
    jdual_cmd->add_option("file", jfile)->required();
    jdual_cmd->callback([&] {
        AnyDiagram d = diagram_from_json(read_json_file(jfile));
        if (!std::holds_alternative<ExtEtaDiagram>(d))
            throw DomainError("dual j: expected an extended eta-diagram");
        std::cout << diagram_to_json(j_dual(std::get<ExtEtaDiagram>(d))).dump(2) << "\n";
    });
    auto* ddual_cmd = dual_cmd->add_subcommand("delta", "self-adjoint dual");
    ddual_cmd->add_option("file", deltafile)->required();
    ddual_cmd->callback([&] {
        AnyDiagram d = diagram_from_json(read_json_file(deltafile));
        if (!std::holds_alternative<ExtEtaDiagram>(d))
            throw DomainError("dual delta: expected an extended eta-diagram");
        ExtEtaDiagram out = delta_dual_explicit(std::get<ExtEtaDiagram>(d));
        std::cout << diagram_to_json(out).dump(2) << "\n";
    });

    // cj table | representable <x>
    auto* cj_cmd = app.add_subcommand("cj", "the three-object category J");
    cj_cmd->require_subcommand(1);
    auto* table_cmd = cj_cmd->add_subcommand("table", "hom groups, relations and the square");
    table_cmd->callback([&] { std::cout << cj_table_text(); });
    std::string which;
    auto* rep_cmd = cj_cmd->add_subcommand("representable", "the diagram F_x");
    rep_cmd->add_option("x", which)->required()->check(CLI::IsMember({"a", "b", "c"}));
    rep_cmd->callback([&] {
        CjObject x = which == "a" ? CjObject::a : (which == "b" ? CjObject::b : CjObject::c);
        std::cout << cj_representable_text(x);
    });

    // verify <suite> [--max-order n] [--seed n] [--format text|json]
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int max_order = 8;
    uint64_t seed = 0;
    std::string format = "text";
    std::vector<std::string> names = verify_suite_names();
    names.push_back("all");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(names));
    verify_cmd->add_option("--max-order", max_order, "largest group order enumerated")
        ->default_val(8);
    verify_cmd->add_option("--seed", seed, "seed for sampled instances")->default_val(0);
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    verify_cmd->callback([&] {
        std::vector<std::string> to_run =
            suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
        bool all_pass = true;
        Json array = Json::array();
        for (const std::string& name : to_run) {
            VerifyReport rep = run_verify(name, max_order, seed);
            all_pass = all_pass && rep.pass();
            if (format == "text")
                std::cout << report_text(rep);
            else
                array.push_back(report_json(rep));
        }
        if (format == "json") {
            if (suite == "all")
                std::cout << array.dump(2) << "\n";
            else
                std::cout << array[0].dump(2) << "\n";
        }
        if (!all_pass) throw DomainError("verification failed");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
