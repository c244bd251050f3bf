// Command-line front end for exact signature computations on positive braid
// closures. Prints JSON to stdout (CSV for `verify --csv`); exit code 0 on
// success, 1 when `verify` finds counterexamples, 2 on usage errors.

#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "braidsig/bounds.hpp"
#include "braidsig/braid_word.hpp"
#include "braidsig/fence.hpp"
#include "braidsig/garside.hpp"
#include "braidsig/json_io.hpp"
#include "braidsig/seifert.hpp"
#include "braidsig/torus.hpp"

using namespace braidsig;
using nlohmann::json;

namespace {

void print(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidsig: exact invariants of positive braid closures"};
    app.require_subcommand(1);

    std::function<int()> action;

    // ---- invariants / sigma / betti / normal-form / rotate -------------
    int strands = 4;
    std::string word_text;
    bool with_matrix = false;

    auto add_word_command = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("-b,--strands", strands, "strand count")->required();
        cmd->add_option("word", word_text, "braid word, e.g. \"a1 a2 a1\"")->required();
        return cmd;
    };

    CLI::App* cmd_inv = add_word_command("invariants", "b1, c, signature and nullity of a closure");
    cmd_inv->callback([&] {
        action = [&] {
            print(invariants_to_json(invariants(BraidWord::parse(word_text, strands))));
            return 0;
        };
    });

    CLI::App* cmd_sigma = add_word_command("sigma", "signature of a positive braid closure");
    cmd_sigma->add_flag("--matrix", with_matrix, "also print the Seifert matrix");
    cmd_sigma->callback([&] {
        action = [&] {
            const BraidWord w = BraidWord::parse(word_text, strands);
            const SeifertMatrix sm = seifert_matrix(w);
            const Inertia in = inertia_of(symmetrize(sm.entries));
            if (with_matrix)
                print(json{{"sigma", in.signature()},
                           {"nullity", in.zero},
                           {"seifert", seifert_to_json(sm)}});
            else
                print(json(in.signature()));
            return 0;
        };
    });

    CLI::App* cmd_betti = add_word_command("betti", "first Betti number and split components");
    cmd_betti->callback([&] {
        action = [&] {
            const auto [b1, c] = betti_and_c(BraidWord::parse(word_text, strands));
            print(json{{"b1", b1}, {"c", c}});
            return 0;
        };
    });

    CLI::App* cmd_nf = add_word_command("normal-form", "Garside left normal form");
    cmd_nf->callback([&] {
        action = [&] {
            print(normal_form_to_json(normal_form(BraidWord::parse(word_text, strands))));
            return 0;
        };
    });

    CLI::App* cmd_rot = add_word_command("rotate", "180-degree rotation of the word");
    cmd_rot->callback([&] {
        action = [&] {
            print(word_to_json(BraidWord::parse(word_text, strands).rotate180()));
            return 0;
        };
    });

    // ---- equal ----------------------------------------------------------
    std::string word_text2;
    CLI::App* cmd_eq = app.add_subcommand("equal", "braid-group equality of two words");
    cmd_eq->add_option("-b,--strands", strands, "strand count")->required();
    cmd_eq->add_option("first", word_text, "first word")->required();
    cmd_eq->add_option("second", word_text2, "second word")->required();
    cmd_eq->callback([&] {
        action = [&] {
            print(json(braid_equal(BraidWord::parse(word_text, strands),
                                   BraidWord::parse(word_text2, strands))));
            return 0;
        };
    });

    // ---- torus ----------------------------------------------------------
    int torus_p = 2, torus_q = 1;
    CLI::App* cmd_torus = app.add_subcommand("torus", "signature of the torus link T(p, q)");
    cmd_torus->add_option("p", torus_p, "2 <= p <= 4")->required();
    cmd_torus->add_option("q", torus_q, "q >= 1")->required();
    cmd_torus->callback([&] {
        action = [&] {
            print(json(sigma_torus(torus_p, torus_q)));
            return 0;
        };
    });

    // ---- verify ----------------------------------------------------------
    int l_max = 10;
    std::string bound_text = "1/2";
    bool strict = false;
    bool csv = false;
    int jobs = 0;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check -sigma (>|>=) bound*b1 over all closure classes");
    cmd_verify->add_option("-b,--strands", strands, "strand count")->required();
    cmd_verify->add_option("-l,--max-length", l_max, "maximum word length")->required();
    cmd_verify->add_option("--bound", bound_text, "rational bound p/q")->required();
    cmd_verify->add_flag("--strict", strict, "require strict inequality");
    cmd_verify->add_flag("--csv", csv, "CSV output (word, l, b1, sigma, ratio)");
    cmd_verify->add_option("--jobs", jobs, "worker threads (default: all cores)");
    cmd_verify->callback([&] {
        action = [&] {
            const BoundReport report = verify_bound(
                strands, l_max, rational_from_string(bound_text), strict, jobs, true);
            if (csv)
                std::cout << report_to_csv(report);
            else
                print(report_to_json(report));
            return report.holds() ? 0 : 1;
        };
    });

    // ---- asymptotic -------------------------------------------------------
    int n_power = 8;
    CLI::App* cmd_asym =
        app.add_subcommand("asymptotic", "sigma(beta^n)/n with a rigorous enclosure");
    cmd_asym->add_option("-b,--strands", strands, "strand count")->required();
    cmd_asym->add_option("-n,--power", n_power, "power to evaluate at")->required();
    cmd_asym->add_option("word", word_text, "positive braid word")->required();
    cmd_asym->callback([&] {
        action = [&] {
            const AsymptoticEstimate est =
                asymptotic_sigma(BraidWord::parse(word_text, strands), n_power);
            print(json{{"word", est.word.format()},
                       {"strands", est.word.strands()},
                       {"n_used", est.n_used},
                       {"estimate", rational_to_string(est.estimate)},
                       {"lower", rational_to_string(est.lower)},
                       {"upper", rational_to_string(est.upper)}});
            return 0;
        };
    });

    // ---- reduce ------------------------------------------------------------
    int b_target = 2;
    CLI::App* cmd_reduce = app.add_subcommand(
        "reduce", "delete one residue class of generators down to single bars");
    cmd_reduce->add_option("-b,--strands", strands, "strand count")->required();
    cmd_reduce->add_option("--target", b_target, "target strand count")->required();
    cmd_reduce->add_option("word", word_text, "positive braid word with c = 1")->required();
    cmd_reduce->callback([&] {
        action = [&] {
            const ReductionResult red =
                reduction_decompose(BraidWord::parse(word_text, strands), b_target);
            json comps = json::array();
            for (const BraidWord& piece : red.components)
                comps.push_back(json{{"strands", piece.strands()}, {"word", piece.format()}});
            print(json{{"i", red.i},
                       {"reduced", red.reduced.format()},
                       {"components", comps}});
            return 0;
        };
    });

    // ---- complete-block -----------------------------------------------------
    CLI::App* cmd_block =
        app.add_subcommand("complete-block", "grow a length-4 4-braid block to Delta, L or R");
    cmd_block->add_option("word", word_text, "positive length-4 word on 4 strands")->required();
    cmd_block->callback([&] {
        action = [&] {
            const BlockCompletion comp = complete_block(BraidWord::parse(word_text, 4));
            if (comp.exceptional()) {
                print(json{{"exceptional", true}});
                return 0;
            }
            const auto [first, second] = *comp.insertions;
            print(json{{"exceptional", false},
                       {"insertions",
                        json::array({json::array({first.position, first.generator}),
                                     json::array({second.position, second.generator})})},
                       {"first_host", comp.first_host->format()},
                       {"second_host", comp.second_host->format()},
                       {"target", block_target_name(*comp.target)},
                       {"completed", comp.completed->format()}});
            return 0;
        };
    });

    // ---- certificate -----------------------------------------------------------
    CLI::App* cmd_cert = app.add_subcommand(
        "certificate", "block-completion signature certificate for beta^n");
    cmd_cert->add_option("-n,--power", n_power, "positive multiple of 4")->required();
    cmd_cert->add_option("word", word_text, "positive braid word on 4 strands")->required();
    cmd_cert->callback([&] {
        action = [&] {
            const PowerCertificate cert =
                power_certificate(BraidWord::parse(word_text, 4), n_power);
            print(json{{"k", cert.k},
                       {"shift", cert.shift_used},
                       {"tilde_word", cert.tilde_word.format()},
                       {"measured", cert.measured},
                       {"rhs", cert.rhs},
                       {"certificate_holds", cert.certificate_holds},
                       {"minus_sigma_power", cert.minus_sigma_power},
                       {"bound", rational_to_string(cert.bound)},
                       {"bound_holds", cert.bound_holds}});
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
