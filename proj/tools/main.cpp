#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ortho/checks.hpp"
#include "ortho/crystal.hpp"
#include "ortho/jdt.hpp"
#include "ortho/serialize.hpp"

namespace {

using namespace ortho;

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

LieType make_type(const std::string& fam, int rank) {
    if (fam == "B" || fam == "b") return type_b(rank);
    if (fam == "D" || fam == "d") return type_d(rank);
    throw DomainError("--type must be B or D");
}

void print_tabloid(const Tabloid& t, bool as_json) {
    if (as_json) {
        std::cout << to_json(t).dump(2) << "\n";
    } else {
        std::cout << render_grid(t);
        std::cout << "reading: " << format_word(reading(t)) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal combinatorics for types B and D"};
    app.require_subcommand(1);

    std::string family = "B";
    int rank = 2;
    bool as_json = false;
    app.add_option("--type", family, "Lie type, B or D")->capture_default_str();
    app.add_option("--rank", rank, "rank n >= 2")->capture_default_str();
    app.add_flag("--json", as_json, "JSON output where supported");

    std::string word_arg, hw_arg;
    bool dot_flag = false;

    auto* cmd_explore = app.add_subcommand("explore", "explore a connected crystal component");
    cmd_explore->add_option("--hw", hw_arg, "highest weight word")->required();
    cmd_explore->add_flag("--dot", dot_flag, "emit DOT");

    auto* cmd_dot = app.add_subcommand("dot", "DOT export of a component (explore --dot)");
    cmd_dot->add_option("--hw", hw_arg, "highest weight word")->required();

    auto* cmd_p = app.add_subcommand("p-symbol", "insertion tableau of a word");
    cmd_p->add_option("word", word_arg, "word (or - for stdin)");

    auto* cmd_q = app.add_subcommand("q-symbol", "oscillating tableau of a word");
    cmd_q->add_option("word", word_arg, "word (or - for stdin)");

    bool invert = false;
    auto* cmd_sch = app.add_subcommand("schensted", "the bijection w <-> (P, Q)");
    cmd_sch->add_option("word", word_arg, "word (or JSON {P,Q} with --invert)");
    cmd_sch->add_flag("--invert", invert, "read (P, Q) JSON and print w");

    std::string word2_arg;
    auto* cmd_cong = app.add_subcommand("congruent", "plactic congruence of two words");
    cmd_cong->add_option("first", word_arg, "first word")->required();
    cmd_cong->add_option("second", word2_arg, "second word")->required();

    auto* cmd_split = app.add_subcommand("split", "split an admissible column");
    cmd_split->add_option("column", word_arg, "column reading, top to bottom");

    bool trace = false;
    auto* cmd_jdt = app.add_subcommand("jdt", "jeu de taquin");
    auto* cmd_rect = cmd_jdt->add_subcommand("rectify", "rectify a skew tableau (JSON input)");
    cmd_rect->add_option("skew", word_arg, "skew tableau JSON (or - for stdin)");
    cmd_rect->add_flag("--trace", trace, "print every intermediate split grid");

    std::string suite = "all";
    auto* cmd_check = app.add_subcommand("check", "run a verification suite");
    cmd_check->add_option("suite", suite,
                          "crystal | plactic | schensted | jdt | spin | all | c1..c10");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        LieType t = make_type(family, rank);
        if (*cmd_explore || *cmd_dot) {
            auto comp = explore_component(parse_gword(t, hw_arg));
            if (dot_flag || *cmd_dot) {
                std::cout << to_dot(comp);
            } else {
                std::cout << comp.vertices.size() << " vertices, " << comp.edges.size()
                          << " edges\n";
                for (const auto& label : comp.labels) std::cout << label << "\n";
                for (const auto& e : comp.edges)
                    std::cout << comp.labels[e.from] << " -" << e.color << "-> "
                              << comp.labels[e.to] << "\n";
            }
        } else if (*cmd_p) {
            Word w = parse_word(t, read_input(word_arg));
            print_tabloid(p_symbol(w), as_json);
        } else if (*cmd_q) {
            Word w = parse_word(t, read_input(word_arg));
            auto q = q_symbol(w);
            if (as_json) {
                std::cout << to_json(q).dump(2) << "\n";
            } else {
                for (const Shape& s : q.steps) std::cout << format_shape(s) << "\n";
            }
        } else if (*cmd_sch) {
            if (invert) {
                json j = json::parse(read_input(word_arg));
                Tabloid P = tabloid_from_json(j.at("P"));
                OscillatingTableau Q = oscillating_from_json(j.at("Q"));
                std::cout << format_word(psi_inverse(P, Q)) << "\n";
            } else {
                Word w = parse_word(t, read_input(word_arg));
                auto [P, Q] = psi(w);
                if (as_json) {
                    json j;
                    j["P"] = to_json(P);
                    j["Q"] = to_json(Q);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "P:\n" << render_grid(P) << "Q:";
                    for (const Shape& s : Q.steps) std::cout << " " << format_shape(s);
                    std::cout << "\n";
                }
            }
        } else if (*cmd_cong) {
            Word a = parse_word(t, word_arg), b = parse_word(t, word2_arg);
            std::cout << (congruent(a, b) ? "true" : "false") << "\n";
        } else if (*cmd_split) {
            Column c(t, parse_word(t, read_input(word_arg)).letters);
            auto sp = split_column(c);
            if (as_json) {
                json j;
                j["l"] = json::array();
                j["r"] = json::array();
                for (Letter x : sp.l.cells) j["l"].push_back(format_letter(x));
                for (Letter x : sp.r.cells) j["r"].push_back(format_letter(x));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "l: " << format_word(sp.l.reading()) << "\n";
                std::cout << "r: " << format_word(sp.r.reading()) << "\n";
            }
        } else if (*cmd_jdt) {
            if (!*cmd_rect) throw DomainError("jdt needs the rectify subcommand");
            json j = json::parse(read_input(word_arg));
            SkewTableau skew = skew_from_json(j);
            RectifyOptions opts;
            if (trace)
                opts.trace = [](const PuncturedSplitForm& g) {
                    std::cout << g.render() << "\n";
                };
            Tabloid r = rectify(skew, opts);
            print_tabloid(r, as_json);
        } else if (*cmd_check) {
            bool all_ok = true;
            for (const auto& res : checks::run_suite(suite)) {
                std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name << " (" << res.detail
                          << ")\n";
                all_ok = all_ok && res.pass;
            }
            return all_ok ? 0 : 1;
        }
        return 0;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return 1;
    }
}
