// Command-line front end for the exact classification library: adjoint-orbit
// classification in g2 and the induced automorphism groups of the genus-10
// hyperplane sections, sextic sections of the flag variety, even-touching
// conic pairs, binary-cubic orbits, and the intersection-number ledger.

#include "fm18/json_io.hpp"
#include "fm18/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitVerifyFailed = 2;

std::uint64_t seed_from_env()
{
    const char* s = std::getenv("FM_SEED");
    if (!s || !*s) return 20180218u; // fixed default for reproducibility
    return std::strtoull(s, nullptr, 10);
}

std::vector<std::string> tokens_from(const std::vector<std::string>& args,
                                     const std::string& input_file)
{
    if (input_file.empty()) return args;
    std::ifstream in(input_file);
    if (!in) throw std::invalid_argument("cannot open input file " + input_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // accept either whitespace-separated rationals or a JSON array
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        auto j = nlohmann::json::parse(text);
        std::vector<std::string> out;
        for (const auto& v : j)
            out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        return out;
    }
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(text);
    while (is >> tok) out.push_back(tok);
    return out;
}

fm18::RatVec parse_rationals(const std::vector<std::string>& toks, std::size_t expect,
                             const std::string& what)
{
    if (toks.size() != expect)
        throw std::invalid_argument(what + ": expected " + std::to_string(expect) +
                                    " rationals, got " + std::to_string(toks.size()));
    fm18::RatVec v;
    v.reserve(expect);
    for (const auto& t : toks) v.push_back(fm18::parse_rat(t));
    return v;
}

void emit(const nlohmann::json& j, bool as_json, const std::string& text)
{
    if (as_json) std::cout << j.dump() << "\n";
    else std::cout << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fm18 - exact classification toolkit for genus-10 Fano-Mukai geometry"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string input_file;
    app.add_option("--input", input_file, "read positional input from a file");

    std::vector<std::string> g2_args, sextic_args, conic_args, cubic_args;
    std::string ledger_expr, ledger_table = "W";

    auto* cmd_g2 = app.add_subcommand(
        "classify-g2", "classify an element of g2 (14 rationals: h1 h2 then root coordinates)");
    cmd_g2->add_option("coords", g2_args, "14 rationals");

    auto* cmd_sextic = app.add_subcommand(
        "classify-sextic", "classify a hyperplane section of the flag variety "
                           "(9 rationals, row-major traceless 3x3 matrix)");
    cmd_sextic->add_option("entries", sextic_args, "9 rationals");

    auto* cmd_conics = app.add_subcommand(
        "classify-conics", "classify a pair of plane conics "
                           "(two Gram upper triangles: a00 a01 a02 a11 a12 a22, base first)");
    cmd_conics->add_option("entries", conic_args, "12 rationals");

    auto* cmd_cubic = app.add_subcommand(
        "classify-cubic", "classify a point of P(M3 + C) (5 rationals: a0 a1 a2 a3 c)");
    cmd_cubic->add_option("coords", cubic_args, "5 rationals");

    auto* cmd_verify =
        app.add_subcommand("ledger-verify", "check every intersection-number identity");

    auto* cmd_eval = app.add_subcommand(
        "ledger-eval", "evaluate a degree-4 class expression, e.g. \"(2H-A)^3*(H-A)\"");
    cmd_eval->add_option("expression", ledger_expr, "expression over {H,A} or {L,B}")->required();
    cmd_eval->add_option("--table", ledger_table, "moment table")
        ->check(CLI::IsMember({"W", "V"}));

    auto* cmd_selftest =
        app.add_subcommand("selftest", "run every module's property suite (FM_SEED honored)");

    auto* cmd_dump = app.add_subcommand("dump-g2", "dump the g2 structure-constant table as JSON");

    CLI11_PARSE(app, argc, argv);
    const bool as_json = format == "json";

    try {
        if (cmd_g2->parsed()) {
            auto v = parse_rationals(tokens_from(g2_args, input_file), 14, "classify-g2");
            fm18::G2Element g;
            for (int i = 0; i < 14; ++i) g.c[i] = v[i];
            auto rep = fm18::classify_fourfold(g);
            nlohmann::json j = fm18::classification_report_to_json(rep);
            j["input"] = fm18::g2_element_to_json(g);
            auto [dl, ds] = fm18::g2().invariant_sextics(g);
            j["delta_long"] = fm18::rat_to_string(dl);
            j["delta_short"] = fm18::rat_to_string(ds);
            std::ostringstream text;
            text << "orbit: " << fm18::to_string(rep.orbit.tag)
                 << " (centralizer dim " << rep.orbit.centralizer_dim << ")\n"
                 << "delta_long = " << fm18::rat_to_string(dl)
                 << ", delta_short = " << fm18::rat_to_string(ds) << "\n"
                 << "section smooth: " << (rep.section_smooth ? "yes" : "no") << "\n";
            if (rep.aut0) {
                text << "Aut0(V) = " << fm18::to_string(*rep.aut0) << "\n"
                     << "variety: " << fm18::to_string(*rep.variety_name) << "\n"
                     << "Aut(V): "
                     << (rep.full_aut->determined
                             ? rep.full_aut->lower
                             : rep.full_aut->lower + " <= Aut(V) <= " + rep.full_aut->upper)
                     << "\n"
                     << "cubic cones: " << fm18::to_string(*rep.cubic_cone_count) << "\n"
                     << "splitting surface: " << fm18::to_string(*rep.sigma_s_type) << "\n";
            }
            text << "flexibility: " << rep.cone_flexibility << "\n";
            emit(j, as_json, text.str());
            return kExitOk;
        }

        if (cmd_sextic->parsed()) {
            auto v = parse_rationals(tokens_from(sextic_args, input_file), 9, "classify-sextic");
            auto c = fm18::TracelessMatrix3::from_entries(v);
            auto rep = fm18::classify_section(c);
            auto sing = fm18::find_singular_points(c);
            nlohmann::json j = fm18::sextic_report_to_json(rep);
            j["jordan_type"] = fm18::to_string(fm18::jordan_label(c));
            j["pcent_lie_dim"] = fm18::pcent_lie_dim(c);
            j["singular_locus"] = fm18::singular_locus_to_json(sing);
            std::ostringstream text;
            text << "conjugacy type: " << fm18::to_string(fm18::jordan_label(c)) << "\n"
                 << "surface: " << fm18::to_string(rep.surface_type) << "\n"
                 << "Aut(Sigma, X_C) = " << rep.aut_descriptor << " (identity component dim "
                 << rep.aut0_dim << ")\n"
                 << "lines: ";
            if (rep.line_count) text << *rep.line_count;
            else text << "infinitely many";
            text << "\nsingularities: " << rep.sing_descriptor << "\n"
                 << "dual graph: " << rep.dual_graph << "\n";
            emit(j, as_json, text.str());
            return kExitOk;
        }

        if (cmd_conics->parsed()) {
            auto v = parse_rationals(tokens_from(conic_args, input_file), 12, "classify-conics");
            auto u = fm18::Conic::from_upper_triangle(fm18::RatVec(v.begin(), v.begin() + 6));
            auto jc = fm18::Conic::from_upper_triangle(fm18::RatVec(v.begin() + 6, v.end()));
            auto t = fm18::classify_pair(u, jc);
            nlohmann::json j;
            j["schema"] = "fm18.conics/1";
            j["tangency"] = fm18::to_string(t);
            std::ostringstream text;
            text << "tangency: " << fm18::to_string(t) << "\n";
            if (t != fm18::TangencyType::Equal) {
                auto mults = fm18::intersection_multiplicities(u, jc);
                j["multiplicities"] = mults;
                text << "multiplicities:";
                for (int m : mults) text << " " << m;
                text << "\n";
            }
            if (t != fm18::TangencyType::NotEvenTouching) {
                auto stab = fm18::pair_stabilizer(t);
                j["stabilizer"] = fm18::pair_stabilizer_to_json(stab);
                j["aut0V"] = fm18::to_string(fm18::pair_to_aut0V(t));
                text << "stabilizer: " << fm18::to_string(stab.group) << " via " << stab.family
                     << "\n"
                     << "Aut0(V) = " << fm18::to_string(fm18::pair_to_aut0V(t)) << "\n";
            }
            emit(j, as_json, text.str());
            return kExitOk;
        }

        if (cmd_cubic->parsed()) {
            auto v = parse_rationals(tokens_from(cubic_args, input_file), 5, "classify-cubic");
            fm18::BinaryCubic f;
            for (int i = 0; i < 4; ++i) f.a[i] = v[i];
            fm18::P4Point p(f, v[4]);
            auto label = fm18::classify_point(p);
            nlohmann::json j;
            j["schema"] = "fm18.cubic/1";
            j["orbit"] = fm18::to_string(label);
            j["stratum"] = fm18::stratum_description(label);
            j["root_type"] = fm18::to_string(fm18::cubic_root_type(f));
            std::ostringstream text;
            text << "orbit: " << fm18::to_string(label) << "\n"
                 << "stratum: " << fm18::stratum_description(label) << "\n"
                 << "cubic root type: " << fm18::to_string(fm18::cubic_root_type(f)) << "\n";
            emit(j, as_json, text.str());
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            auto checks = fm18::verify_ledger_identities();
            bool all = true;
            std::ostringstream text;
            for (const auto& c : checks) {
                all &= c.pass;
                text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " (expected "
                     << fm18::rat_to_string(c.expected) << ", computed "
                     << fm18::rat_to_string(c.computed) << ")\n";
            }
            text << (all ? "all identities hold\n" : "IDENTITY FAILURES PRESENT\n");
            nlohmann::json j;
            j["schema"] = "fm18.ledger-verify/1";
            j["identities"] = fm18::identity_checks_to_json(checks);
            j["pass"] = all;
            emit(j, as_json, text.str());
            return all ? kExitOk : kExitVerifyFailed;
        }

        if (cmd_eval->parsed()) {
            const bool w = ledger_table == "W";
            fm18::MomentTable table = w ? fm18::builtin_w_table() : fm18::builtin_v_table();
            auto expr = fm18::parse_class_expr(ledger_expr, table.g0, table.g1);
            fm18::Rat value = fm18::evaluate(table, {expr});
            nlohmann::json j;
            j["schema"] = "fm18.ledger-eval/1";
            j["table"] = ledger_table;
            j["expression"] = expr.to_string(table.g0, table.g1);
            j["value"] = fm18::rat_to_string(value);
            emit(j, as_json,
                 expr.to_string(table.g0, table.g1) + " = " + fm18::rat_to_string(value) + "\n");
            return kExitOk;
        }

        if (cmd_selftest->parsed()) {
            auto outcome = fm18::run_selftest(seed_from_env());
            std::ostringstream text;
            for (const auto& suite : outcome.report["suites"]) {
                text << (suite["failed"].get<long>() == 0 ? "PASS" : "FAIL") << "  "
                     << suite["name"].get<std::string>() << " (" << suite["cases"].get<long>()
                     << " checks)";
                for (const auto& f : suite["failures"])
                    text << "\n      " << f.get<std::string>();
                text << "\n";
            }
            text << (outcome.pass ? "selftest green\n" : "SELFTEST FAILURES PRESENT\n");
            emit(outcome.report, as_json, text.str());
            return outcome.pass ? kExitOk : kExitVerifyFailed;
        }

        if (cmd_dump->parsed()) {
            std::cout << fm18::g2().dump_json() << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
