#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decomposition.hpp"
#include "digraph.hpp"
#include "euler.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "line_graph.hpp"
#include "oracle.hpp"

namespace p3dec::cli {

namespace detail {

inline p3_policy to_policy(const std::string& s) {
    return s == "closed" ? p3_policy::allow_closed : p3_policy::strict_path;
}

inline void emit_text(const std::string& path, std::ostream& fallback, const digraph& d,
                      std::optional<int> bip) {
    if (path.empty()) {
        write_digraph_text(fallback, d, bip);
        return;
    }
    std::ofstream f(path);
    if (!f) throw parse_error(0, "cannot open output file: " + path);
    write_digraph_text(f, d, bip);
}

inline vertex_set side_from_header(const digraph& d, int k) {
    vertex_set x(d.order());
    for (int v = 0; v < k; ++v) x.insert(v);
    return x;
}

/// check dispatch: bipartition header routes through the bipartite
/// characterization, even tournaments through the tournament checker, odd
/// tournaments through the fractional certificate (odd arc count as
/// fallback), everything else through plain matching.
inline check_result dispatch_check(const parsed_digraph& input, p3_policy policy,
                                   bool find_certificate, p3_policy& policy_used) {
    const digraph& d = input.d;
    if (input.bipartition_k) {
        policy_used = p3_policy::allow_closed;
        return check_bipartite(d, side_from_header(d, *input.bipartition_k), find_certificate);
    }
    if (is_tournament(d)) {
        policy_used = p3_policy::strict_path;
        if (d.size() % 2 == 0) return check_tournament(d, find_certificate);
        check_result res;
        res.decomposable = false;
        if (find_certificate) {
            fractional_check_result fr =
                check_fractional(d, p3_policy::strict_path, true);
            if (fr.cert)
                res.cert = fr.cert;
            else
                res.cert = certificate{p3_policy::strict_path, odd_arc_count_cert{d.size()}};
        }
        return res;
    }
    policy_used = policy;
    decompose_result dr = decompose(d, policy);
    check_result res;
    if (auto* dec = std::get_if<p3_decomposition>(&dr)) {
        res.decomposable = true;
        res.decomposition = *dec;
    } else {
        res.decomposable = false;
        if (find_certificate) res.cert = std::get<certificate>(dr);
    }
    return res;
}

struct oracle_options {
    std::string mode;
    std::string file;
    int tournaments_n = -1;
    std::vector<int> bipartite_ab;
    p3_policy policy = p3_policy::strict_path;
};

inline int run_oracle(const oracle_options& opt, std::ostream& out) {
    struct instance {
        std::string name;
        digraph d;
        std::optional<int> bip;
    };
    std::vector<instance> instances;
    if (!opt.file.empty()) {
        parsed_digraph p = load_digraph_file(opt.file);
        instances.push_back({opt.file, std::move(p.d), p.bipartition_k});
    } else if (opt.tournaments_n >= 0) {
        std::vector<digraph> all = oracle::enumerate_tournaments(opt.tournaments_n);
        for (std::size_t i = 0; i < all.size(); ++i)
            instances.push_back({"tournaments(" + std::to_string(opt.tournaments_n) + ")[" +
                                     std::to_string(i) + "]",
                                 std::move(all[i]), std::nullopt});
    } else {
        int a = opt.bipartite_ab[0], b = opt.bipartite_ab[1];
        std::vector<digraph> all = oracle::enumerate_bipartite_digraphs(a, b);
        for (std::size_t i = 0; i < all.size(); ++i)
            instances.push_back({"bipartite(" + std::to_string(a) + "," + std::to_string(b) +
                                     ")[" + std::to_string(i) + "]",
                                 std::move(all[i]), a});
    }

    bool all_agree = true;
    for (const instance& inst : instances) {
        nlohmann::json rec;
        rec["instance"] = inst.name;
        const digraph& d = inst.d;
        if (opt.mode == "decompose") {
            decompose_result dr = decompose(d, opt.policy);
            auto* dec = std::get_if<p3_decomposition>(&dr);
            std::optional<p3_decomposition> brute = oracle::brute_decompose(d, opt.policy);
            rec["engine"] = dec != nullptr;
            rec["oracle"] = brute.has_value();
            rec["engine_valid"] = dec ? verify_decomposition(d, *dec, opt.policy) : true;
            rec["oracle_valid"] = brute ? verify_decomposition(d, *brute, opt.policy) : true;
            rec["agree"] = (dec != nullptr) == brute.has_value() &&
                           rec["engine_valid"].get<bool>() && rec["oracle_valid"].get<bool>();
        } else if (opt.mode == "partition3") {
            check_result cr = check_tournament(d);
            oracle::partition_scan_result scan = oracle::brute_partition3(d);
            rec["engine"] = cr.decomposable;
            rec["oracle"] = scan.min_slack >= 0;
            rec["min_slack"] = scan.min_slack;
            if (cr.cert) rec["certificate"] = to_json(*cr.cert);
            rec["agree"] = cr.decomposable == (scan.min_slack >= 0);
        } else if (opt.mode == "fractional") {
            fractional_check_result fr = check_fractional(d, opt.policy);
            ugraph lg = build_line_graph(d, opt.policy).to_ugraph();
            std::optional<oracle::set_violation> viol = oracle::brute_fractional_violator(lg);
            rec["engine"] = fr.exists;
            rec["oracle"] = !viol.has_value();
            if (viol) rec["violator"] = viol->s;
            rec["agree"] = fr.exists == !viol.has_value();
        } else {  // hall
            if (!inst.bip) throw precondition_error("hall mode needs a bipartition");
            vertex_set x = side_from_header(d, *inst.bip);
            check_result cr = check_bipartite(d, x);
            oracle::hall_scan_result scan = oracle::brute_hall(d, x);
            rec["engine"] = cr.decomposable;
            rec["oracle"] = scan.ok();
            rec["agree"] = cr.decomposable == scan.ok();
        }
        if (!rec["agree"].get<bool>()) all_agree = false;
        out << rec.dump() << '\n';
    }
    return all_agree ? 0 : 1;
}

}  // namespace detail

/// Front end over the library.  Exit codes: 0 the property holds or the
/// digraph decomposes, 1 refuted with a certificate, 2 usage or input error,
/// 3 a budget or certificate search was exhausted.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"P3-decomposition toolkit for digraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string policy_str = "strict";
    std::string format = "json";
    std::string in_file;
    std::string out_file;
    bool no_certificate = false;

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a digraph in the text format");
    gen->require_subcommand(1);
    struct gen_params {
        int n = 0, m = 0, a = 0, b = 0;
        double p = 0.5;
        bool asymmetric = false;
        std::uint64_t seed = 0;
    } gp;
    auto add_gen = [&](const char* name, const char* help) {
        CLI::App* sub = gen->add_subcommand(name, help);
        sub->add_option("-o,--output", out_file, "output file (default stdout)");
        return sub;
    };
    CLI::App* gen_tt = add_gen("transitive-tournament", "transitive tournament on n vertices");
    gen_tt->add_option("n", gp.n)->required();
    gen_tt->callback([&] { detail::emit_text(out_file, out, transitive_tournament(gp.n), {}); });
    CLI::App* gen_rt = add_gen("random-tournament", "uniform random tournament");
    gen_rt->add_option("n", gp.n)->required();
    gen_rt->add_option("--seed", gp.seed)->required();
    gen_rt->callback(
        [&] { detail::emit_text(out_file, out, random_tournament(gp.n, gp.seed), {}); });
    CLI::App* gen_kb = add_gen("complete-bipartite", "complete bipartite orientation X to Y");
    gen_kb->add_option("a", gp.a)->required();
    gen_kb->add_option("b", gp.b)->required();
    gen_kb->callback([&] {
        detail::emit_text(out_file, out, complete_bipartite_orientation(gp.a, gp.b), gp.a);
    });
    CLI::App* gen_rb = add_gen("random-bipartite", "random bipartite digraph, arc prob p");
    gen_rb->add_option("a", gp.a)->required();
    gen_rb->add_option("b", gp.b)->required();
    gen_rb->add_option("p", gp.p)->required();
    gen_rb->add_option("--seed", gp.seed)->required();
    gen_rb->callback([&] {
        detail::emit_text(out_file, out, random_bipartite_digraph(gp.a, gp.b, gp.p, gp.seed),
                          gp.a);
    });
    CLI::App* gen_rd = add_gen("random-digraph", "random strict digraph, arc prob p");
    gen_rd->add_option("n", gp.n)->required();
    gen_rd->add_option("p", gp.p)->required();
    gen_rd->add_flag("--asymmetric", gp.asymmetric, "forbid 2-cycles");
    gen_rd->add_option("--seed", gp.seed)->required();
    gen_rd->callback([&] {
        detail::emit_text(out_file, out,
                          random_strict_digraph(gp.n, gp.p, gp.asymmetric, gp.seed), {});
    });
    CLI::App* gen_re = add_gen("random-eulerian", "random eulerian digraph with m arcs");
    gen_re->add_option("n", gp.n)->required();
    gen_re->add_option("m", gp.m)->required();
    gen_re->add_option("--seed", gp.seed)->required();
    gen_re->callback(
        [&] { detail::emit_text(out_file, out, random_eulerian(gp.n, gp.m, gp.seed), {}); });

    auto add_policy = [&](CLI::App* sub) {
        sub->add_option("--policy", policy_str, "strict | closed")
            ->check(CLI::IsMember({"strict", "closed"}));
    };

    // linegraph
    CLI::App* lgc = app.add_subcommand("linegraph", "emit L(D) as JSON or DOT");
    lgc->add_option("file", in_file)->required();
    add_policy(lgc);
    lgc->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    lgc->callback([&] {
        parsed_digraph p = load_digraph_file(in_file);
        line_graph lg = build_line_graph(p.d, detail::to_policy(policy_str));
        if (format == "dot")
            out << to_dot(lg);
        else
            out << to_json(lg).dump() << '\n';
    });

    // check / decompose
    for (const char* name : {"check", "decompose"}) {
        CLI::App* sub = app.add_subcommand(
            name, std::string(name) == "check"
                      ? "decide decomposability, dispatching on structure"
                      : "decide decomposability by matching alone");
        sub->add_option("file", in_file)->required();
        add_policy(sub);
        sub->add_flag("--no-certificate", no_certificate, "skip certificate extraction");
        bool dispatch = std::string(name) == "check";
        sub->callback([&, dispatch] {
            parsed_digraph p = load_digraph_file(in_file);
            p3_policy policy = detail::to_policy(policy_str);
            p3_policy used = policy;
            check_result res;
            if (dispatch) {
                res = detail::dispatch_check(p, policy, !no_certificate, used);
            } else {
                decompose_result dr = decompose(p.d, policy);
                if (auto* dec = std::get_if<p3_decomposition>(&dr)) {
                    res.decomposable = true;
                    res.decomposition = *dec;
                } else if (!no_certificate) {
                    res.cert = std::get<certificate>(dr);
                }
            }
            out << check_result_json(used, res).dump() << '\n';
            exit_code = res.decomposable ? 0 : 1;
        });
    }

    // fractional
    CLI::App* frc = app.add_subcommand("fractional", "fractional perfect matching of L(D)");
    frc->add_option("file", in_file)->required();
    add_policy(frc);
    frc->add_flag("--no-certificate", no_certificate, "skip certificate extraction");
    frc->callback([&] {
        parsed_digraph p = load_digraph_file(in_file);
        p3_policy policy = detail::to_policy(policy_str);
        fractional_check_result fr = check_fractional(p.d, policy, !no_certificate);
        nlohmann::json j;
        j["policy"] = to_string(policy);
        j["exists"] = fr.exists;
        j["certificate"] = fr.cert ? to_json(*fr.cert) : nlohmann::json();
        out << j.dump() << '\n';
        exit_code = fr.exists ? 0 : 1;
    });

    // connectivity
    CLI::App* conn = app.add_subcommand("connectivity",
                                        "L(D) connectivity and component-count bound");
    conn->add_option("file", in_file)->required();
    conn->callback([&] {
        parsed_digraph p = load_digraph_file(in_file);
        connectivity_report cr = line_graph_connected(p.d, p3_policy::strict_path);
        component_report rep = component_analysis(p.d);
        nlohmann::json j = to_json(rep);
        j["connected"] = cr.connected;
        j["methods_agree"] = cr.methods_agree;
        out << j.dump() << '\n';
        exit_code = cr.connected ? 0 : 1;
    });

    // euler-ham
    CLI::App* eh = app.add_subcommand("euler-ham",
                                      "Hamilton cycle of L(D) from an Euler tour");
    eh->add_option("file", in_file)->required();
    std::string eh_policy = "closed";
    eh->add_option("--policy", eh_policy, "strict | closed")
        ->check(CLI::IsMember({"strict", "closed"}));
    eh->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    eh->callback([&] {
        parsed_digraph p = load_digraph_file(in_file);
        p3_policy policy = detail::to_policy(eh_policy);
        std::vector<int> cycle = line_hamilton_cycle(p.d, policy);
        if (format == "dot") {
            out << to_dot(build_line_graph(p.d, policy), &cycle);
        } else {
            nlohmann::json j;
            j["policy"] = to_string(policy);
            j["cycle"] = cycle;
            out << j.dump() << '\n';
        }
    });

    // oracle
    CLI::App* orc = app.add_subcommand("oracle", "engine vs brute-force agreement reports");
    detail::oracle_options opt;
    orc->add_option("mode", opt.mode, "decompose | partition3 | fractional | hall")
        ->required()
        ->check(CLI::IsMember({"decompose", "partition3", "fractional", "hall"}));
    CLI::Option* o_file = orc->add_option("--file", opt.file, "single instance from a file");
    CLI::Option* o_tour =
        orc->add_option("--tournaments", opt.tournaments_n, "all tournaments on n vertices");
    CLI::Option* o_bip = orc->add_option("--bipartite", opt.bipartite_ab,
                                         "all bipartite digraphs on parts a, b")
                             ->expected(2);
    o_file->excludes(o_tour)->excludes(o_bip);
    o_tour->excludes(o_bip);
    orc->add_option("--policy", policy_str, "strict | closed")
        ->check(CLI::IsMember({"strict", "closed"}));
    orc->callback([&] {
        if (opt.file.empty() && opt.tournaments_n < 0 && opt.bipartite_ab.empty())
            throw CLI::RequiredError("one of --file / --tournaments / --bipartite");
        opt.policy = detail::to_policy(policy_str);
        exit_code = detail::run_oracle(opt, out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const budget_exceeded_error& e) {
        err << e.code() << ": " << e.what() << '\n';
        return 3;
    } catch (const certificate_search_exhausted_error& e) {
        err << e.code() << ": " << e.what() << '\n';
        return 3;
    } catch (const witness_search_exhausted_error& e) {
        err << e.code() << ": " << e.what() << '\n';
        return 3;
    } catch (const policy_mismatch_error& e) {
        err << e.code() << ": " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        err << e.code() << ": " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace p3dec::cli
