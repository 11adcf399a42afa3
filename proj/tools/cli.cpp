#include "cli.hpp"

#include "nsmp/fixtures.hpp"
#include "nsmp/json_io.hpp"
#include "nsmp/transform.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nsmp::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_matrix(std::ostream& out, const RationalMatrix& a, const std::string& indent = "  ") {
    std::istringstream lines(a.to_text());
    std::string line;
    while (std::getline(lines, line)) out << indent << line << '\n';
}

void print_classification(std::ostream& out, const Classification& c) {
    out << "allow: " << to_string(c.allow_verdict) << '\n';
    out << "require: " << to_string(c.require_verdict) << '\n';
    out << "provenance:";
    for (const auto& tag : c.provenance) out << ' ' << tag;
    out << '\n';
    if (c.refutation) {
        out << "refuting realization:\n";
        print_matrix(out, c.refutation->realization);
        out << "refuting solution:\n";
        print_matrix(out, c.refutation->witness);
    }
}

int run_check_matrix(const std::string& file, const std::string& property_name_arg,
                     bool as_json, std::ostream& out) {
    Property property = property_name_arg == "nssp" ? Property::Nssp : Property::Nsmp;
    RationalMatrix a = parse_matrix(slurp(file));
    NsmpVerdict v = check(a, property);
    if (as_json) {
        out << envelope("check-matrix", matrix_to_json(a), verdict_to_json(v), json::array(), 0)
                   .dump(2)
            << '\n';
    } else {
        out << property_name(property) << ": " << (v.has_property() ? "YES" : "NO");
        if (!v.has_property()) out << ", nullity " << v.nullity;
        out << '\n';
        if (v.witness) {
            out << "witness:\n";
            print_matrix(out, *v.witness);
        }
    }
    return v.has_property() ? 0 : 1;
}

int run_classify(const std::string& file, std::size_t samples, std::uint64_t seed, bool as_json,
                 std::ostream& out) {
    SignPattern p = parse_pattern(slurp(file));
    Classification c = requires_nsmp(p, {samples, seed});
    if (as_json) {
        json result = classification_to_json(c);
        out << envelope("classify", pattern_to_json(p), result, c.provenance, seed).dump(2)
            << '\n';
    } else {
        print_classification(out, c);
    }
    return 0;
}

int run_witness_search(const std::string& file, std::size_t samples, std::uint64_t seed,
                       bool as_json, std::ostream& out) {
    SignPattern p = parse_pattern(slurp(file));
    auto hit = witness_search(p, samples, seed);
    if (as_json) {
        json result;
        if (hit)
            result = {{"found", true},
                      {"realization", matrix_to_json(hit->realization)},
                      {"solution", matrix_to_json(hit->witness)}};
        else
            result = {{"found", false}};
        out << envelope("witness-search", pattern_to_json(p), result, json::array(), seed).dump(2)
            << '\n';
    } else if (hit) {
        out << "realization:\n";
        print_matrix(out, hit->realization);
        out << "solution:\n";
        print_matrix(out, hit->witness);
    } else {
        out << "none found\n";
    }
    return hit ? 0 : 1;
}

int run_canonical(const std::string& file, bool as_json, std::ostream& out) {
    SignPattern p = parse_pattern(slurp(file));
    auto [canon, tr] = canonical_form(p);
    if (as_json) {
        json result = {{"canonical", pattern_to_json(canon)},
                       {"permutation", tr.permutation},
                       {"signature", tr.signature},
                       {"transposed", tr.transposed},
                       {"negated", tr.negated}};
        out << envelope("canonical", pattern_to_json(p), result, json::array(), 0).dump(2) << '\n';
    } else {
        out << "canonical:\n";
        std::istringstream lines(canon.to_text());
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << '\n';
        out << "permutation:";
        for (auto v : tr.permutation) out << ' ' << v;
        out << "\nsignature:";
        for (auto s : tr.signature) out << ' ' << (s > 0 ? '+' : '-');
        out << "\ntransposed: " << (tr.transposed ? "yes" : "no");
        out << "\nnegated: " << (tr.negated ? "yes" : "no") << '\n';
    }
    return 0;
}

int run_enumerate(std::size_t n, bool orbits, std::size_t samples, std::uint64_t seed,
                  bool as_json, std::ostream& out) {
    ClassificationSummary s = classify_all(n, {samples, seed}, orbits);
    if (as_json) {
        out << envelope("enumerate", json{{"n", n}, {"orbits", orbits}}, summary_to_json(s),
                        json::array(), seed)
                   .dump(2)
            << '\n';
        return 0;
    }
    out << s.total_patterns << " patterns of order " << n;
    if (orbits) out << " in " << s.rows.size() << " equivalence orbits";
    out << '\n';
    for (const auto& [key, count] : s.verdict_counts)
        out << "  " << to_string(key.first) << '/' << to_string(key.second) << ": " << count
            << '\n';
    out << "deciding rules:\n";
    for (const auto& [tag, count] : s.rule_counts) out << "  " << tag << ": " << count << '\n';
    if (orbits) {
        out << "orbit representatives:\n";
        for (const auto& row : s.rows) {
            std::string flat;
            for (std::size_t i = 0; i < row.pattern.size(); ++i)
                for (std::size_t j = 0; j < row.pattern.size(); ++j)
                    flat += sign_char(row.pattern.at(i, j));
            out << "  " << flat << "  x" << row.orbit_size << "  "
                << to_string(row.classification.allow_verdict) << '/'
                << to_string(row.classification.require_verdict) << "  "
                << row.classification.provenance.back() << '\n';
        }
    }
    return 0;
}

int run_fixtures(bool verify, bool as_json, std::ostream& out) {
    auto checks = fixtures::fixture_checks();
    bool all_pass = true;
    json rows = json::array();
    for (const auto& fc : checks) {
        if (verify) {
            bool pass = fc.run();
            all_pass = all_pass && pass;
            if (as_json)
                rows.push_back({{"name", fc.name}, {"pass", pass}});
            else
                out << (pass ? "PASS" : "FAIL") << "  " << fc.name << '\n';
        } else if (!as_json) {
            out << fc.name << '\n';
        } else {
            rows.push_back({{"name", fc.name}});
        }
    }
    if (as_json)
        out << envelope("fixtures", json{{"verify", verify}}, rows, json::array(), 0).dump(2)
            << '\n';
    return verify && !all_pass ? 1 : 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sign pattern toolkit for the strong multiplicity property"};
    app.require_subcommand(1);

    std::string file;
    std::string property_arg = "nsmp";
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t n = 2;
    bool as_json = false;
    bool orbits = false;
    bool verify = false;

    auto* chk = app.add_subcommand("check-matrix",
                                   "decide the property for an exact rational matrix "
                                   "(exit 1 when it lacks the property)");
    chk->add_option("file", file)->required();
    chk->add_option("--property", property_arg)->check(CLI::IsMember({"nsmp", "nssp"}));
    chk->add_flag("--json", as_json);

    auto* cls = app.add_subcommand("classify", "classify a sign pattern");
    cls->add_option("file", file)->required();
    cls->add_option("--samples", samples);
    cls->add_option("--seed", seed);
    cls->add_flag("--json", as_json);

    auto* wit = app.add_subcommand("witness-search",
                                   "search for a realization lacking the property "
                                   "(exit 1 when none found)");
    wit->add_option("file", file)->required();
    wit->add_option("--samples", samples);
    wit->add_option("--seed", seed);
    wit->add_flag("--json", as_json);

    auto* can = app.add_subcommand("canonical", "canonical form of a sign pattern");
    can->add_option("file", file)->required();
    can->add_flag("--json", as_json);

    auto* enu = app.add_subcommand("enumerate", "classify every pattern of a small order");
    enu->add_option("--n", n)->required();
    enu->add_flag("--orbits", orbits);
    enu->add_option("--samples", samples);
    enu->add_option("--seed", seed);
    enu->add_flag("--json", as_json);

    auto* fix = app.add_subcommand("fixtures",
                                   "list or replay the built-in reference cases "
                                   "(exit 1 when a verified fixture fails)");
    fix->add_flag("--verify", verify);
    fix->add_flag("--json", as_json);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (chk->parsed()) return run_check_matrix(file, property_arg, as_json, out);
        if (cls->parsed()) return run_classify(file, samples, seed, as_json, out);
        if (wit->parsed()) return run_witness_search(file, samples, seed, as_json, out);
        if (can->parsed()) return run_canonical(file, as_json, out);
        if (enu->parsed()) return run_enumerate(n, orbits, samples, seed, as_json, out);
        if (fix->parsed()) return run_fixtures(verify, as_json, out);
    } catch (const TooLarge& e) {
        err << "too large: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace nsmp::cli
