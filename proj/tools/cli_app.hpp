#pragma once

// Command-line front end. Every subcommand writes exactly one JSON record
// (one line) to `out` and returns 0 (true / found), 1 (false / none) or
// 2 (usage or domain error). Diagnostics go to `err` only.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crs/branches.hpp"
#include "crs/cyclotomic.hpp"
#include "crs/residue_system.hpp"
#include "crs/serialize.hpp"
#include "crs/verify.hpp"

namespace crs::cli {

enum ExitStatus : int { kTrue = 0, kFalse = 1, kError = 2 };

namespace detail {

struct Options {
    std::optional<Int> h;
    std::optional<Int> p;
    std::optional<Int> q;
    std::optional<std::vector<Int>> l;
    std::optional<std::vector<Int>> elements;
    Int cap = Int{1} << 20;
    Int hmax = 16;
    Int pmax = 16;
    bool json_output = true;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int need(const std::optional<Int>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing required flag --") + flag);
    return *v;
}

// --h/--elements on the command line, otherwise a candidate record on stdin.
inline CrsCandidate read_candidate(const Options& o, std::istream& in) {
    if (o.elements) return CrsCandidate(need(o.h, "h"), *o.elements);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return candidate_from_json(json::parse(text));
}

inline int emit(std::ostream& out, const json& record, int code) {
    out << record.dump() << '\n';
    return code;
}

inline int transformed(std::ostream& out, const CrsCandidate& c) {
    const bool ok = is_crs(c);
    return emit(out, json{{"candidate", to_json(c)}, {"is_crs", ok}}, ok ? kTrue : kFalse);
}

inline int roots_record(std::ostream& out, const RootSet& s, Modulus h) {
    const bool ok = equals_omega(s, h);
    return emit(out, json{{"roots", to_json(s)}, {"equals_omega", ok}}, ok ? kTrue : kFalse);
}

inline BranchVector branch_vector_from(const Options& o, Modulus h, Int p) {
    if (o.l) return BranchVector(h, p, *o.l);
    auto sol = solve_branch_vector(h, p);
    if (auto* bv = std::get_if<BranchVector>(&sol)) return *bv;
    throw std::get<NoSolution>(sol);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Options o;
    CLI::App app{"Complete residue systems and roots of unity", "crs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
    app.set_help_all_flag("--help-all");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--h", o.h, "modulus h >= 2");
        sub->add_option("--p", o.p, "multiplier or root degree");
        sub->add_option("--q", o.q, "power");
        sub->add_option("--l", o.l, "comma list (branch vector / shifts / offset)")->delimiter(',');
        sub->add_option("--elements", o.elements, "comma list of candidate elements")->delimiter(',');
        sub->add_option("--cap", o.cap, "enumeration budget for brute-force search");
        sub->add_flag("--json", o.json_output, "JSON output (default)");
    };

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"check-crs", "test whether a candidate is a complete residue system"},
        {"residues", "canonical residue profile of a candidate"},
        {"scale", "multiply every element by --p"},
        {"affine", "map every element a to p*a + l"},
        {"shift", "add h*l_i to element i"},
        {"omega", "the h-th roots of unity"},
        {"power", "elementwise p-th power of the h-th roots (or of omega^elements)"},
        {"solve-branches", "construct a branch vector mapping the h-th roots onto themselves"},
        {"brute-branches", "enumerate all branch vectors for (h, p)"},
        {"rational", "both q/p rational-power compositions"},
        {"verify", "run the property sweep"},
    };
    for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help));
    auto* verify = app.get_subcommand("verify");
    verify->add_option("--hmax", o.hmax, "largest modulus in the sweep");
    verify->add_option("--pmax", o.pmax, "largest multiplier / root degree in the sweep");

    auto fail = [&](const std::string& msg) {
        err << "crs: " << msg << '\n';
        return emit(out, json{{"error", msg}}, kError);
    };

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kTrue;
    } catch (const CLI::ParseError& e) {
        return fail(e.what());
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "check-crs") {
            const auto c = read_candidate(o, in);
            const bool ok = is_crs(c);
            return emit(out, json{{"is_crs", ok}, {"profile", residue_profile(c).residues}}, ok ? kTrue : kFalse);
        }
        if (cmd == "residues") return emit(out, to_json(residue_profile(read_candidate(o, in))), kTrue);
        if (cmd == "scale") {
            const auto c = read_candidate(o, in);
            return transformed(out, scale(c, need(o.p, "p")));
        }
        if (cmd == "affine") {
            const auto c = read_candidate(o, in);
            if (!o.l || o.l->size() != 1) throw usage_error("affine needs a single offset --l");
            return transformed(out, affine(c, need(o.p, "p"), o.l->front()));
        }
        if (cmd == "shift") {
            const auto c = read_candidate(o, in);
            if (!o.l) throw usage_error("missing required flag --l");
            return transformed(out, shift_multiples(c, *o.l));
        }
        if (cmd == "omega") return emit(out, to_json(omega_set(Modulus(need(o.h, "h")))), kTrue);
        if (cmd == "power") {
            const Modulus h(need(o.h, "h"));
            const RootSet base = o.elements ? exponent_set(*o.elements, h) : omega_set(h);
            return roots_record(out, power_set(base, o.p.value_or(1)), h);
        }
        if (cmd == "solve-branches") {
            const Modulus h(need(o.h, "h"));
            const auto sol = solve_branch_vector(h, need(o.p, "p"));
            if (const auto* bv = std::get_if<BranchVector>(&sol)) {
                return emit(out, json{{"branch_vector", to_json(*bv)}, {"roots", to_json(apply_branches(*bv))}}, kTrue);
            }
            return emit(out, to_json(std::get<NoSolution>(sol)), kFalse);
        }
        if (cmd == "brute-branches") {
            const auto report = brute_force_branch_search(Modulus(need(o.h, "h")), need(o.p, "p"), o.cap);
            return emit(out, to_json(report), report.solutions.empty() ? kFalse : kTrue);
        }
        if (cmd == "rational") {
            const Modulus h(need(o.h, "h"));
            const Int p = need(o.p, "p");
            const Int q = need(o.q, "q");
            const BranchVector bv = branch_vector_from(o, h, p);
            const RootSet root_first = rational_power_root_first(h, p, q, bv);
            json record{{"branch_vector", to_json(bv)},
                        {"root_first", {{"roots", to_json(root_first)}, {"equals_omega", equals_omega(root_first, h)}}}};
            bool ok = equals_omega(root_first, h);
            try {
                const RootSet power_first = rational_power_power_first(h, p, q, bv);
                ok = ok && equals_omega(power_first, h);
                record["power_first"] = {{"roots", to_json(power_first)}, {"equals_omega", equals_omega(power_first, h)}};
            } catch (const collapsed_set& e) {
                ok = false;
                record["power_first"] = {{"collapsed", true}, {"gcd", e.gcd()}};
            }
            return emit(out, record, ok ? kTrue : kFalse);
        }
        if (cmd == "verify") {
            const auto results = verify_all({o.hmax, o.pmax, o.cap});
            json props = json::array();
            bool all = true;
            for (const auto& r : results) {
                all = all && r.counterexamples == 0;
                json entry{{"name", r.name}, {"checks", r.checks}, {"counterexamples", r.counterexamples}};
                entry["first_counterexample"] = r.first_counterexample ? json(*r.first_counterexample) : json(nullptr);
                props.push_back(std::move(entry));
            }
            return emit(out, json{{"properties", std::move(props)}, {"all_passed", all}}, all ? kTrue : kFalse);
        }
        return fail("unknown subcommand " + cmd);
    } catch (const NoSolution& ns) {
        return emit(out, to_json(ns), kFalse);
    } catch (const json::exception& e) {
        return fail(std::string("malformed input: ") + e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

}  // namespace crs::cli
