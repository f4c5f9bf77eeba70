#include "impalg/cli.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "impalg/enumerate.hpp"
#include "impalg/iso.hpp"
#include "impalg/json_io.hpp"
#include "impalg/polymatroid.hpp"
#include "impalg/synth.hpp"

namespace impalg::cli {

namespace {

using nlohmann::json;

std::string render(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json indices_of(IndexSet s) {
    json out = json::array();
    for (int i : s) out.push_back(i);
    return out;
}

json verdict_witness(const RealizabilityVerdict& v) {
    return json{{"A", indices_of(v.a)},
                {"clause", clause_name(v.clause)},
                {"s1", indices_of(v.s1)},
                {"s2", indices_of(v.s2)}};
}

json degeneracy_findings(const DegeneracyReport& report) {
    json out = json::array();
    for (const auto& group : report.coinciding)
        out.push_back(json{{"indices", group}, {"kind", "coinciding"}});
    for (auto [inner, outer] : report.nested)
        out.push_back(json{{"inner", inner}, {"kind", "nested"}, {"outer", outer}});
    for (int i : report.empty_edges) out.push_back(json{{"index", i}, {"kind", "empty"}});
    return out;
}

std::vector<std::string> fresh_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    return names;
}

// Input and validation problems exit 2; anything else escaping a command
// is by definition not understood and exits 4.
template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        CommandResult r;
        r.exit_code = kExitInputError;
        r.diagnostics.push_back(std::string(errc_name(e.code())) + ": " + e.what());
        return r;
    } catch (const std::exception& e) {
        CommandResult r;
        r.exit_code = kExitInternalInconsistency;
        r.diagnostics.push_back(std::string("internal error: ") + e.what());
        return r;
    }
}

void note_dot_ignored(CommandResult& r, const GlobalOptions& opts) {
    if (opts.dot) r.diagnostics.push_back("note: --dot ignored (no hypergraph in play)");
}

Hypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(load_json_file(path));
}

void note_reduction(CommandResult& r, const Hypergraph& h, const ImplicationAlgebra& alg,
                    const std::string& which = {}) {
    if (alg.min_edges().size() != static_cast<size_t>(h.edge_count()))
        r.diagnostics.push_back(which + "input not Sperner; reduced " +
                                std::to_string(h.edge_count()) + " -> " +
                                std::to_string(alg.min_edges().size()) + " edges");
}

void note_degenerate(CommandResult& r, const DegeneracyReport& report, int indices) {
    if (report.degenerate())
        r.diagnostics.push_back("degenerate: " + std::to_string(report.distinct_maximal) +
                                " distinct maximal edges of " + std::to_string(indices) +
                                " indices");
}

}  // namespace

CommandResult cmd_profile(const std::string& hypergraph_path, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        const Hypergraph h = load_hypergraph(hypergraph_path);
        const auto alg = ImplicationAlgebra::from_hypergraph(h);
        note_reduction(r, h, alg);
        if (opts.dot) {
            r.stdout_payload = dot_incidence(h);
        } else {
            r.stdout_payload = render(profile_to_json(compute_profile(alg)), opts.pretty);
        }
        return r;
    });
}

CommandResult cmd_rho(const std::string& hypergraph_path, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        // rho is taken over the edges as given; non-maximal edges count
        const Hypergraph h = load_hypergraph(hypergraph_path);
        if (opts.dot) {
            r.stdout_payload = dot_incidence(h);
        } else {
            r.stdout_payload = render(polymatroid_to_json(rho_of_hypergraph(h)), opts.pretty);
        }
        return r;
    });
}

CommandResult cmd_iso(const std::string& path1, const std::string& path2,
                      const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        note_dot_ignored(r, opts);
        const Hypergraph h1 = load_hypergraph(path1);
        const Hypergraph h2 = load_hypergraph(path2);

        std::optional<IsoWitness> witness;
        bool isomorphic = false;
        if (h1.vertex_count() != h2.vertex_count()) {
            // profiles never see vertex counts, so this is checked here
        } else if (h1.edge_count() == 0 || h2.edge_count() == 0) {
            isomorphic = h1.edge_count() == h2.edge_count();
        } else {
            const auto a1 = ImplicationAlgebra::from_hypergraph(h1);
            const auto a2 = ImplicationAlgebra::from_hypergraph(h2);
            note_reduction(r, h1, a1, "first: ");
            note_reduction(r, h2, a2, "second: ");
            witness = algebra_iso(a1, a2);
            isomorphic = witness.has_value();
        }

        if (!isomorphic) {
            r.exit_code = kExitNo;
            r.stdout_payload = render(json{{"isomorphic", false}}, opts.pretty);
            return r;
        }
        json mapping = json::array();
        if (witness)
            for (auto [i, j] : witness->mapping()) mapping.push_back(json::array({i, j}));
        r.stdout_payload =
            render(json{{"isomorphic", true}, {"mapping", std::move(mapping)}}, opts.pretty);
        return r;
    });
}

CommandResult cmd_check_profile(const std::string& profile_path, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        note_dot_ignored(r, opts);
        const Profile p = profile_from_json(load_json_file(profile_path));
        const RealizabilityVerdict verdict = check_realizability_conditions(p);
        if (verdict.pass) {
            r.stdout_payload = render(json{{"pass", true}}, opts.pretty);
        } else {
            r.exit_code = kExitNo;
            r.stdout_payload = render(
                json{{"pass", false}, {"witness", verdict_witness(verdict)}}, opts.pretty);
        }
        return r;
    });
}

CommandResult cmd_realize(const std::string& profile_path, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        const Profile p = profile_from_json(load_json_file(profile_path));
        std::optional<RealizationResult> result;
        try {
            result = realize_to_hypergraph(p);
        } catch (const Error& e) {
            // past this point the input was well-formed, so failures are
            // the construction's, not the caller's
            r.exit_code = e.code() == errc::conditions_fail ? kExitConditionsFail
                                                            : kExitInternalInconsistency;
            r.diagnostics.push_back(std::string(errc_name(e.code())) + ": " + e.what());
            return r;
        }
        note_degenerate(r, result->report, static_cast<int>(result->family.edges.size()));
        if (opts.dot) {
            r.stdout_payload = dot_incidence(result->hypergraph);
            return r;
        }
        json out = hypergraph_to_json(result->hypergraph);
        out["degeneracy"] = degeneracy_findings(result->report);
        r.stdout_payload = render(out, opts.pretty);
        return r;
    });
}

CommandResult cmd_recognize(const std::string& polymatroid_path, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        const PolymatroidFn input = polymatroid_from_json(load_json_file(polymatroid_path));
        const RecognitionResult result = recognize_boolean(input);

        if (result.recognized()) {
            note_degenerate(r, result.degeneracy,
                            static_cast<int>(result.family.edges.size()));
            const auto names = fresh_names(result.family.ground_size);
            if (opts.dot) {
                r.stdout_payload = dot_incidence(names, result.family.edges);
                return r;
            }
            json out = json{{"degeneracy", degeneracy_findings(result.degeneracy)},
                            {"edges", json::array()},
                            {"recognized", true},
                            {"vertices", names}};
            for (VertexSet e : result.family.edges) {
                json members = json::array();
                for (int v : e) members.push_back(names[v]);
                out["edges"].push_back(std::move(members));
            }
            r.stdout_payload = render(out, opts.pretty);
            return r;
        }

        note_dot_ignored(r, opts);
        if (result.status == RecognitionResult::Status::internal_inconsistency) {
            r.exit_code = kExitInternalInconsistency;
            r.diagnostics.push_back("internal inconsistency at stage " +
                                    std::to_string(result.stage) + ": " + result.detail);
            return r;
        }

        json witness;
        switch (result.status) {
            case RecognitionResult::Status::rejected_axioms:
                witness = json{{"axiom", polymatroid_axiom_name(result.axiom_violation->axiom)},
                               {"s1", indices_of(result.axiom_violation->s1)},
                               {"s2", indices_of(result.axiom_violation->s2)}};
                break;
            case RecognitionResult::Status::rejected_negative:
                witness = json{{"negative_at", indices_of(*result.negative_at)}};
                break;
            default:
                witness = verdict_witness(*result.condition_verdict);
                break;
        }
        r.exit_code = kExitNo;
        r.stdout_payload = render(json{{"recognized", false},
                                       {"stage", result.stage},
                                       {"witness", std::move(witness)}},
                                  opts.pretty);
        return r;
    });
}

namespace {

struct CorpusTally {
    int pass = 0;
    int fail = 0;
};

struct CorpusRun {
    std::map<std::string, CorpusTally> tally;
    json counterexamples = json::array();

    void record(const std::string& check, bool ok, const json& instance,
                const std::string& detail) {
        auto& t = tally[check];
        if (ok) {
            ++t.pass;
            return;
        }
        if (t.fail == 0)
            counterexamples.push_back(
                json{{"check", check}, {"detail", detail}, {"instance", instance}});
        ++t.fail;
    }
};

std::string violation_text(const char* what, const PairViolation& v) {
    return std::string(what) + " violated at s1=" + std::to_string(v.s1.bits) +
           " s2=" + std::to_string(v.s2.bits);
}

}  // namespace

CommandResult cmd_verify_corpus(int max_vertices, int max_edges, const GlobalOptions& opts) {
    return guarded([&] {
        CommandResult r;
        note_dot_ignored(r, opts);
        CorpusRun run;

        std::vector<Hypergraph> corpus =
            enumerate_hypergraphs(max_vertices, max_edges, /*sperner_only=*/true);
        std::vector<ImplicationAlgebra> algebras;
        std::vector<Profile> profiles;
        std::vector<size_t> element_counts;
        algebras.reserve(corpus.size());
        for (const Hypergraph& h : corpus) {
            algebras.push_back(ImplicationAlgebra::from_hypergraph(h));
            profiles.push_back(compute_profile(algebras.back()));
            element_counts.push_back(elements(algebras.back()).size());
        }

        for (size_t k = 0; k < corpus.size(); ++k) {
            const Hypergraph& h = corpus[k];
            const ImplicationAlgebra& alg = algebras[k];
            const Profile& p = profiles[k];
            const json hj = hypergraph_to_json(h);

            {
                bool ok = true;
                std::string detail;
                for (std::uint32_t b = 0; ok && b < (1u << alg.ground_size()); ++b) {
                    const Profile pb = profile_at(alg, VertexSet{b});
                    if (auto v = is_decreasing(pb)) {
                        ok = false;
                        detail = "b=" + std::to_string(b) + ": " +
                                 violation_text("decreasing", *v);
                    } else if (auto w = is_paper_submodular(pb)) {
                        ok = false;
                        detail = "b=" + std::to_string(b) + ": " +
                                 violation_text("paper-submodular", *w);
                    }
                }
                run.record("lemma_submod", ok, hj, detail);
            }

            {
                const RealizabilityVerdict verdict = check_realizability_conditions(p);
                run.record("thm_profile", verdict.pass, hj,
                           verdict.pass ? ""
                                        : std::string("clause ") + clause_name(verdict.clause));
            }

            {
                const Hypergraph back = to_hypergraph(alg);
                const bool ok =
                    back == h && ImplicationAlgebra::from_hypergraph(back) == alg;
                run.record("roundtrip", ok, hj, ok ? "" : "roundtrip not the identity");
            }

            {
                bool ok = true;
                std::string detail;
                try {
                    const PolymatroidFn rho = rho_of_hypergraph(h);
                    if (rho_from_profile(p) != rho)
                        detail = "rho_from_profile(compute_profile) != rho_of_hypergraph";
                    else if (profile_from_rho(rho) != p)
                        detail = "profile_from_rho(rho_of_hypergraph) != compute_profile";
                    else if (profile_from_rho(rho_from_profile(p)) != p)
                        detail = "profile roundtrip not the identity";
                    else if (rho_from_profile(profile_from_rho(rho)) != rho)
                        detail = "rho roundtrip not the identity";
                    ok = detail.empty();
                } catch (const Error& e) {
                    ok = false;
                    detail = std::string(errc_name(e.code())) + ": " + e.what();
                }
                run.record("transform_involution", ok, hj, detail);
            }

            {
                bool ok = true;
                std::string detail;
                try {
                    const RealizationResult result = realize_to_hypergraph(p);
                    const PolymatroidFn rho = rho_of_hypergraph(h);
                    if (result.family.ground_size != rho.at(rho.full_index_set())) {
                        ok = false;
                        detail = "realized ground size differs from the union size";
                    } else if (!hypergraph_iso(result.hypergraph, h)) {
                        ok = false;
                        detail = "realized hypergraph not isomorphic to the source";
                    }
                } catch (const Error& e) {
                    ok = false;
                    detail = std::string(errc_name(e.code())) + ": " + e.what();
                }
                run.record("realize_verify", ok, hj, detail);
            }
        }

        // Thm minRk, both directions, against the independent order-iso
        // oracle; limited to instances the oracle accepts.
        for (size_t i = 0; i < corpus.size(); ++i) {
            if (element_counts[i] > 12) continue;
            for (size_t j = i; j < corpus.size(); ++j) {
                if (element_counts[j] > 12) continue;
                const bool by_profile = algebra_iso(algebras[i], algebras[j]).has_value();
                const bool by_order = poset_iso_oracle(algebras[i], algebras[j]);
                run.record("iso_oracle_agreement", by_profile == by_order,
                           json{{"first", hypergraph_to_json(corpus[i])},
                                {"second", hypergraph_to_json(corpus[j])}},
                           std::string("algebra_iso says ") + (by_profile ? "yes" : "no") +
                               ", oracle says " + (by_order ? "yes" : "no"));
            }
        }

        bool all_pass = true;
        json checks = json::object();
        for (const auto& [name, t] : run.tally) {
            checks[name] = json{{"fail", t.fail}, {"pass", t.pass}};
            all_pass = all_pass && t.fail == 0;
        }
        const json report{{"all_pass", all_pass},
                          {"checks", std::move(checks)},
                          {"counterexamples", std::move(run.counterexamples)},
                          {"instances", corpus.size()},
                          {"max_edges", max_edges},
                          {"max_vertices", max_vertices}};
        r.stdout_payload = render(report, opts.pretty);
        if (!all_pass) {
            r.exit_code = kExitInternalInconsistency;
            r.diagnostics.push_back("corpus verification found counterexamples");
        }
        return r;
    });
}

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"finite implication algebras, hypergraphs, and Boolean polymatroids"};
    app.name("impalg");
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--pretty", opts.pretty, "indent JSON output");
    app.add_flag("--dot", opts.dot,
                 "emit DOT bipartite incidence text instead of JSON where a hypergraph is in play");

    std::string file1, file2;
    int max_vertices = 0, max_edges = 0;

    auto* c_profile = app.add_subcommand("profile", "intersection profile of a hypergraph");
    c_profile->add_option("hypergraph", file1, "hypergraph JSON file")->required();
    auto* c_rho = app.add_subcommand("rho", "graphical polymatroid of a hypergraph");
    c_rho->add_option("hypergraph", file1, "hypergraph JSON file")->required();
    auto* c_iso = app.add_subcommand("iso", "decide hypergraph/algebra isomorphism");
    c_iso->add_option("first", file1, "hypergraph JSON file")->required();
    c_iso->add_option("second", file2, "hypergraph JSON file")->required();
    auto* c_check = app.add_subcommand("check-profile", "test the realizability conditions");
    c_check->add_option("profile", file1, "profile JSON file")->required();
    auto* c_realize = app.add_subcommand("realize", "synthesize a hypergraph from a profile");
    c_realize->add_option("profile", file1, "profile JSON file")->required();
    auto* c_recognize =
        app.add_subcommand("recognize", "decide whether a table is a Boolean polymatroid");
    c_recognize->add_option("polymatroid", file1, "polymatroid JSON file")->required();
    auto* c_corpus = app.add_subcommand(
        "verify-corpus", "run the invariant suite over all small hypergraphs");
    c_corpus->add_option("max_vertices", max_vertices, "vertex bound (at most 6)")->required();
    c_corpus->add_option("max_edges", max_edges, "edge bound (at most 4)")->required();

    for (auto* sub : {c_profile, c_rho, c_iso, c_check, c_realize, c_recognize, c_corpus})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        CommandResult r;
        r.exit_code = code == 0 ? kExitOk : kExitInputError;
        r.stdout_payload = out.str();
        if (!err.str().empty()) r.diagnostics.push_back(err.str());
        return r;
    }

    if (app.got_subcommand(c_profile)) return cmd_profile(file1, opts);
    if (app.got_subcommand(c_rho)) return cmd_rho(file1, opts);
    if (app.got_subcommand(c_iso)) return cmd_iso(file1, file2, opts);
    if (app.got_subcommand(c_check)) return cmd_check_profile(file1, opts);
    if (app.got_subcommand(c_realize)) return cmd_realize(file1, opts);
    if (app.got_subcommand(c_recognize)) return cmd_recognize(file1, opts);
    return cmd_verify_corpus(max_vertices, max_edges, opts);
}

}  // namespace impalg::cli
