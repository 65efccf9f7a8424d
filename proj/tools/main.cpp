// Command-line front end: every library feature behind one binary with
// JSON-file inputs, plain-text output by default and a machine-readable
// envelope under --json.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simpchrom/chromatic.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/errors.hpp"
#include "simpchrom/graph.hpp"
#include "simpchrom/hodge.hpp"
#include "simpchrom/json_io.hpp"
#include "simpchrom/poly.hpp"
#include "simpchrom/polytope.hpp"

namespace {

using simpchrom::Graph;
using simpchrom::Integer;
using simpchrom::Pattern;
using json = simpchrom::io::json;
namespace io = simpchrom::io;
namespace fs = std::filesystem;

struct CmdOut {
    std::string command;
    json result = json::object();
    std::vector<json> reports;
    std::vector<std::string> lines;  // plain-text output, one entry per line
    bool failed = false;             // some verification or check came out false
};

int parse_spec_int(const std::string& arg, const std::string& spec) {
    try {
        size_t used = 0;
        int v = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
        return v;
    } catch (const std::exception&) {
        throw simpchrom::InvalidArgument("bad pattern spec '" + spec +
                                         "': expected an integer after ':'");
    }
}

// clique:K, cycle:L, path:L (edge count), subgraph:@graph.json
Pattern parse_pattern(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw simpchrom::InvalidArgument("bad pattern spec '" + spec +
                                         "': expected kind:arg");
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "clique") return Pattern::clique(parse_spec_int(arg, spec));
    if (kind == "cycle") return Pattern::cycle(parse_spec_int(arg, spec));
    if (kind == "path") return Pattern::path(parse_spec_int(arg, spec));
    if (kind == "subgraph") {
        if (arg.empty() || arg[0] != '@')
            throw simpchrom::InvalidArgument("bad pattern spec '" + spec +
                                             "': expected subgraph:@file.json");
        return Pattern::subgraph(
            io::graph_from_json(io::load_json_file(arg.substr(1)), "pattern graph"));
    }
    throw simpchrom::InvalidArgument("unknown pattern kind '" + kind + "'");
}

simpchrom::ForbiddenFamily parse_family(const std::vector<std::string>& specs) {
    simpchrom::ForbiddenFamily fam;
    for (const auto& s : specs) fam.patterns.push_back(parse_pattern(s));
    return fam;
}

std::string report_line(const simpchrom::VerificationReport& r) {
    std::string line = r.identity + ": " + (r.pass ? "PASS" : "FAIL");
    if (!r.hypotheses_ok) line += " [hypotheses not met]";
    return line;
}

void add_report(CmdOut& out, const simpchrom::VerificationReport& r) {
    out.reports.push_back(io::report_to_json(r));
    out.lines.push_back(report_line(r));
}

// ---------------------------------------------------------------------------
// verify subcommands share bundle plumbing

struct VerifyArgs {
    std::string bundle_path;
};

json load_bundle(const VerifyArgs& a, fs::path& dir_out) {
    fs::path p(a.bundle_path);
    dir_out = p.has_parent_path() ? p.parent_path() : fs::path(".");
    json b = io::load_json_file(p);
    if (!b.is_object()) throw simpchrom::ParseError(a.bundle_path + ": bundle must be an object");
    return b;
}

void run_verify_part1(const VerifyArgs& a, CmdOut& out) {
    fs::path dir;
    json b = load_bundle(a, dir);
    auto s = io::complex_from_json(io::bundle_value(b, "complex", dir), "complex");
    auto rep = simpchrom::verify_identity_part1(s);
    add_report(out, rep);
    out.failed = !rep.pass;
    out.result = json{{"pass", rep.pass}};
}

void run_verify_part2(const VerifyArgs& a, CmdOut& out) {
    fs::path dir;
    json b = load_bundle(a, dir);
    auto in = io::apex_input_from_bundle(b, dir, nullptr);
    auto rep = simpchrom::verify_identity_part2(in.s, in.w);
    add_report(out, rep);
    out.failed = !rep.pass;
    out.result = json{{"pass", rep.pass}};
}

void run_verify_chain(const VerifyArgs& a, CmdOut& out) {
    fs::path dir;
    json b = load_bundle(a, dir);
    auto p = io::polytope_from_json(io::bundle_value(b, "polytope", dir), "polytope");
    auto t = io::triangulation_from_json(io::bundle_value(b, "triangulation", dir),
                                         "triangulation");
    auto in = io::apex_input_from_bundle(b, dir, &t);
    auto rep = simpchrom::verify_compressed_chain(in.s, in.w, p, t);
    add_report(out, rep.part2);
    add_report(out, rep.h_eq_delta);
    add_report(out, rep.etilde);
    add_report(out, rep.corrected);
    add_report(out, rep.displayed_form);
    add_report(out, rep.proof_variant);
    out.lines.push_back(std::string("chain: ") + (rep.pass ? "PASS" : "FAIL"));
    out.failed = !rep.pass;
    out.result = io::chain_report_to_json(rep);
}

void run_verify_latcoh(const VerifyArgs& a, CmdOut& out) {
    fs::path dir;
    json b = load_bundle(a, dir);
    auto p = io::polytope_from_json(io::bundle_value(b, "polytope", dir), "polytope");
    auto t = io::triangulation_from_json(io::bundle_value(b, "triangulation", dir),
                                         "triangulation");
    auto in = io::apex_input_from_bundle(b, dir, &t);
    auto rep = simpchrom::verify_lattice_coh(in.s, in.w, p, t);
    add_report(out, rep.exact);
    out.lines.push_back(std::string("series match (order 8): ") +
                        (rep.series_ok ? "PASS" : "FAIL"));
    out.lines.push_back(std::string("lattice-coh: ") + (rep.pass ? "PASS" : "FAIL"));
    out.failed = !rep.pass;
    out.result = io::latcoh_report_to_json(rep);
}

void run_verify_reciprocity(const VerifyArgs& a, CmdOut& out) {
    fs::path dir;
    json b = load_bundle(a, dir);
    auto p = io::polytope_from_json(io::bundle_value(b, "polytope", dir), "polytope");
    int m_max = 5;
    if (b.contains("m_max")) m_max = io::int_from_json(b["m_max"], "bundle.m_max");
    auto rep = simpchrom::verify_reciprocity(p, m_max);
    add_report(out, rep);
    out.failed = !rep.pass;
    out.result = json{{"pass", rep.pass}};
}

// ---------------------------------------------------------------------------
// suite: run every shipped fixture against its frozen expectation

struct SuiteItem {
    std::string name;
    std::function<bool(std::string&)> run;  // fills a detail string on failure
};

void run_suite(const std::string& fixtures, CmdOut& out) {
    fs::path dir(fixtures);
    auto complex_at = [&](const char* f) {
        return io::complex_from_json(io::load_json_file(dir / f), f);
    };
    auto polytope_at = [&](const char* f) {
        return io::polytope_from_json(io::load_json_file(dir / f), f);
    };
    auto tri_at = [&](const char* f) {
        return io::triangulation_from_json(io::load_json_file(dir / f), f);
    };
    auto chain_at = [&](const char* bundle) {
        fs::path p = dir / bundle;
        json b = io::load_json_file(p);
        auto poly = io::polytope_from_json(io::bundle_value(b, "polytope", dir), "polytope");
        auto tri = io::triangulation_from_json(io::bundle_value(b, "triangulation", dir),
                                               "triangulation");
        auto in = io::apex_input_from_bundle(b, dir, &tri);
        return simpchrom::verify_compressed_chain(in.s, in.w, poly, tri);
    };
    auto latcoh_at = [&](const char* bundle) {
        json b = io::load_json_file(dir / bundle);
        auto poly = io::polytope_from_json(io::bundle_value(b, "polytope", dir), "polytope");
        auto tri = io::triangulation_from_json(io::bundle_value(b, "triangulation", dir),
                                               "triangulation");
        auto in = io::apex_input_from_bundle(b, dir, &tri);
        return simpchrom::verify_lattice_coh(in.s, in.w, poly, tri);
    };

    std::vector<SuiteItem> items;
    items.push_back({"chi(triangle boundary) at t=2 is 6", [&](std::string& d) {
        auto v = simpchrom::chi_polynomial(complex_at("tri-boundary.json")).polynomial.eval(
            Integer(2));
        d = "got " + v.str();
        return v == 6;
    }});
    items.push_back({"reciprocal identity, triangle boundary", [&](std::string& d) {
        auto rep = simpchrom::verify_identity_part1(complex_at("tri-boundary.json"));
        d = report_line(rep);
        return rep.pass;
    }});
    items.push_back({"reciprocal identity, overlapping pair of nonfaces", [&](std::string& d) {
        auto rep = simpchrom::verify_identity_part1(complex_at("pair-nonfaces.json"));
        d = report_line(rep);
        return rep.pass;
    }});
    items.push_back({"apex factorization, 8-cycle", [&](std::string& d) {
        auto aug = simpchrom::apex_augment(complex_at("cycle8.json"));
        auto rep = simpchrom::verify_identity_part2(aug.s, aug.witness);
        d = report_line(rep);
        return rep.pass;
    }});
    items.push_back({"triangle-free colorings of K5 with 2 colors: 12", [&](std::string& d) {
        auto g = io::graph_from_json(io::load_json_file(dir / "k5.json"), "k5.json");
        auto v = simpchrom::anti_ramsey_count(g, {{Pattern::clique(3)}}, Integer(2));
        d = "got " + v.str();
        return v == 12;
    }});
    items.push_back({"smallest n with no triangle-free 2-coloring: 6", [&](std::string& d) {
        auto n = simpchrom::ramsey_probe(Pattern::clique(3), Integer(2), 8);
        d = n ? "got " + std::to_string(*n) : "got none";
        return n && *n == 6;
    }});
    items.push_back({"delta vector of the side-2 square: [1,6,1]", [&](std::string& d) {
        auto v = simpchrom::delta_vector(polytope_at("sq2.json"));
        d = io::integers_to_json(v).dump();
        return v == std::vector<Integer>{1, 6, 1};
    }});
    items.push_back({"unit triangulation of [0,2] covers", [&](std::string& d) {
        auto rep = simpchrom::check_triangulation(polytope_at("seg02.json"),
                                                  tri_at("seg02-units.json"));
        d = io::tri_report_to_json(rep).dump();
        return rep.valid;
    }});
    items.push_back({"diagonal triangulation of the unit square covers", [&](std::string& d) {
        auto rep = simpchrom::check_triangulation(polytope_at("sq01.json"),
                                                  tri_at("sq01-diag.json"));
        d = io::tri_report_to_json(rep).dump();
        return rep.valid;
    }});
    items.push_back({"staircase triangulation of the unit cube covers", [&](std::string& d) {
        auto rep = simpchrom::check_triangulation(polytope_at("cube01.json"),
                                                  tri_at("cube01-6simplex.json"));
        d = io::tri_report_to_json(rep).dump();
        return rep.valid;
    }});
    items.push_back({"8-point boundary triangulation of the side-2 square", [&](std::string& d) {
        auto rep = simpchrom::check_triangulation(polytope_at("sq2.json"),
                                                  tri_at("sq2-boundary8.json"), true);
        d = io::tri_report_to_json(rep).dump();
        return rep.valid;
    }});
    items.push_back({"identity chain on [-1,1], corrected form", [&](std::string& d) {
        auto rep = chain_at("chain-segpm1.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"identity chain on [-1,1], printed form stays broken", [&](std::string& d) {
        auto rep = chain_at("chain-segpm1.json");
        d = "displayed_form pass=" + std::to_string(rep.displayed_form.pass);
        return !rep.displayed_form.pass;  // regression lock: must keep failing
    }});
    items.push_back({"identity chain on the side-2 square", [&](std::string& d) {
        auto rep = chain_at("chain-sq2.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"series identity on [0,2]", [&](std::string& d) {
        auto rep = latcoh_at("latcoh-seg02.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"series identity on [0,1] (degenerate apex)", [&](std::string& d) {
        auto rep = latcoh_at("latcoh-seg01.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"series identity on the unit square", [&](std::string& d) {
        auto rep = latcoh_at("latcoh-sq01.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"series identity on the unit cube", [&](std::string& d) {
        auto rep = latcoh_at("latcoh-cube01.json");
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});
    items.push_back({"counting reciprocity on the side-2 square", [&](std::string& d) {
        auto rep = simpchrom::verify_reciprocity(polytope_at("sq2.json"));
        d = report_line(rep);
        return rep.pass;
    }});
    items.push_back({"filtration dimensions of the side-2 square", [&](std::string& d) {
        auto p = polytope_at("sq2.json");
        auto dims = simpchrom::hodge_dims_from_delta(simpchrom::delta_vector(p), p.dim());
        d = io::hodge_dims_to_json(dims).dump();
        return dims.primitive == std::vector<Integer>{1, 6} &&
               dims.full == std::vector<Integer>{1, 8};
    }});
    items.push_back({"polar dual of the side-2 square round-trips", [&](std::string& d) {
        auto r = simpchrom::polar_dual(polytope_at("sq2.json"));
        d = io::polar_dual_to_json(r).dump();
        return r.standard_type && r.in_Cstar && r.roundtrip_ok && *r.roundtrip_ok;
    }});
    items.push_back({"filtration coefficients match on the 8-cycle", [&](std::string& d) {
        auto aug = simpchrom::apex_augment(complex_at("cycle8.json"));
        auto rep = simpchrom::chromatic_hodge_coefficients(
            aug.s, aug.witness, polytope_at("sq2.json"), tri_at("sq2-boundary8.json"));
        d = "pass=" + std::to_string(rep.pass);
        return rep.pass;
    }});

    json jitems = json::array();
    int passed = 0;
    for (auto& item : items) {
        bool ok = false;
        std::string detail;
        try {
            ok = item.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) ++passed;
        out.lines.push_back(std::string(ok ? "ok   - " : "FAIL - ") + item.name +
                            (ok ? "" : " (" + detail + ")"));
        jitems.push_back(json{{"name", item.name}, {"ok", ok}, {"detail", detail}});
    }
    out.lines.push_back("suite: " + std::to_string(passed) + "/" +
                        std::to_string(items.size()) + " ok");
    out.failed = passed != static_cast<int>(items.size());
    out.result = json{{"total", items.size()}, {"passed", passed}, {"items", std::move(jitems)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic, coloring, and lattice-point toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;
    bool strict = false;
    app.add_flag("--json", json_mode, "emit a machine-readable envelope on stdout");
    app.add_flag("--strict", strict, "exit 2 when a verification fails");

    CmdOut out;
    std::function<void()> action;

    // chi --complex F [--eval T]
    auto* chi = app.add_subcommand("chi", "chromatic polynomial of a complex");
    auto chi_args = std::make_shared<std::pair<std::string, std::optional<std::int64_t>>>();
    chi->add_option("--complex", chi_args->first, "complex JSON file")->required();
    chi->add_option("--eval", chi_args->second, "evaluate at this integer");
    chi->callback([&, chi_args] {
        action = [&, chi_args] {
            auto s = io::complex_from_json(io::load_json_file(chi_args->first));
            auto res = simpchrom::chi_polynomial(s);
            out.result = json{{"n", res.n},
                              {"r", res.r},
                              {"polynomial", io::polynomial_to_json(res.polynomial)}};
            if (chi_args->second) {
                Integer v = res.polynomial.eval(Integer(*chi_args->second));
                out.result["value"] = io::integer_to_json(v);
                out.lines.push_back(v.str());
            } else {
                out.lines.push_back(io::polynomial_to_json(res.polynomial).dump());
            }
        };
    });

    // hvec --complex F
    auto* hvec = app.add_subcommand("hvec", "h-vector of a complex");
    auto hvec_file = std::make_shared<std::string>();
    hvec->add_option("--complex", *hvec_file, "complex JSON file")->required();
    hvec->callback([&, hvec_file] {
        action = [&, hvec_file] {
            auto s = io::complex_from_json(io::load_json_file(*hvec_file));
            auto h = s.h_vector();
            out.result = json{{"d", s.krull_dimension()}, {"h", io::integers_to_json(h)}};
            out.lines.push_back(io::integers_to_json(h).dump());
        };
    });

    // nonfaces --complex F
    auto* nonf = app.add_subcommand("nonfaces", "minimal nonfaces of a complex");
    auto nonf_file = std::make_shared<std::string>();
    nonf->add_option("--complex", *nonf_file, "complex JSON file")->required();
    nonf->callback([&, nonf_file] {
        action = [&, nonf_file] {
            auto s = io::complex_from_json(io::load_json_file(*nonf_file));
            json lists = io::int_lists_to_json(s.nonface_sets());
            out.result = json{{"n", s.n()}, {"minimal_nonfaces", lists}};
            out.lines.push_back(lists.dump());
        };
    });

    // graph anti-ramsey | graph ramsey
    auto* graph = app.add_subcommand("graph", "edge-coloring counts and probes");
    graph->require_subcommand(1);

    struct GraphArgs {
        std::string graph_file;
        std::vector<std::string> forbid;
        std::int64_t colors = 0;
        int max_n = 0;
    };
    auto gargs = std::make_shared<GraphArgs>();

    auto* anti = graph->add_subcommand(
        "anti-ramsey", "colorings with no forbidden subgraph monochromatic");
    anti->add_option("--graph", gargs->graph_file, "graph JSON file")->required();
    anti->add_option("--forbid", gargs->forbid, "pattern spec (repeatable)")->required();
    anti->add_option("--colors", gargs->colors, "number of colors")->required();
    anti->callback([&, gargs] {
        action = [&, gargs] {
            auto g = io::graph_from_json(io::load_json_file(gargs->graph_file));
            auto fam = parse_family(gargs->forbid);
            Integer v = simpchrom::anti_ramsey_count(g, fam, Integer(gargs->colors));
            out.result = json{{"count", io::integer_to_json(v)}};
            out.lines.push_back(v.str());
        };
    });

    auto* ramsey = graph->add_subcommand(
        "ramsey", "smallest complete graph with no valid coloring");
    ramsey->add_option("--forbid", gargs->forbid, "pattern spec (repeatable)")->required();
    ramsey->add_option("--colors", gargs->colors, "number of colors")->required();
    ramsey->add_option("--max-n", gargs->max_n, "largest complete graph to try")->required();
    ramsey->callback([&, gargs] {
        action = [&, gargs] {
            auto fam = parse_family(gargs->forbid);
            std::optional<int> hit;
            for (int n = 1; n <= gargs->max_n && !hit; ++n) {
                auto s = simpchrom::edge_complex(Graph::complete(n), fam);
                if (!simpchrom::exists_coloring(s, Integer(gargs->colors))) hit = n;
            }
            out.result["ramsey"] = hit ? json(*hit) : json(nullptr);
            out.result["max_n"] = gargs->max_n;
            out.lines.push_back(hit ? std::to_string(*hit) : std::string("none"));
        };
    });

    // polytope ehrhart|delta|dual|count
    auto* poly = app.add_subcommand("polytope", "lattice-point counting");
    poly->require_subcommand(1);
    struct PolyArgs {
        std::string file;
        std::int64_t m = 0;
        bool interior = false;
    };
    auto pargs = std::make_shared<PolyArgs>();
    auto add_poly_sub = [&](const char* name, const char* desc, bool with_m) {
        auto* sub = poly->add_subcommand(name, desc);
        sub->add_option("--polytope", pargs->file, "polytope JSON file")->required();
        if (with_m) {
            sub->add_option("--m", pargs->m, "dilation factor")->required();
            sub->add_flag("--interior", pargs->interior, "count interior points only");
        }
        return sub;
    };
    add_poly_sub("ehrhart", "counting polynomial in the dilation factor", false)
        ->callback([&, pargs] {
            action = [&, pargs] {
                auto p = io::polytope_from_json(io::load_json_file(pargs->file));
                auto e = simpchrom::ehrhart_polynomial(p);
                out.result = json{{"ehrhart", io::qpolynomial_to_json(e)}};
                out.lines.push_back(io::qpolynomial_to_json(e).dump());
            };
        });
    add_poly_sub("delta", "numerator coefficients of the counting series", false)
        ->callback([&, pargs] {
            action = [&, pargs] {
                auto p = io::polytope_from_json(io::load_json_file(pargs->file));
                auto d = simpchrom::delta_vector(p);
                out.result = json{{"delta", io::integers_to_json(d)}};
                out.lines.push_back(io::integers_to_json(d).dump());
            };
        });
    add_poly_sub("dual", "polar dual of a standard-type polytope", false)
        ->callback([&, pargs] {
            action = [&, pargs] {
                auto p = io::polytope_from_json(io::load_json_file(pargs->file));
                auto r = simpchrom::polar_dual(p);
                out.result = io::polar_dual_to_json(r);
                out.lines.push_back(out.result.dump());
            };
        });
    add_poly_sub("count", "lattice points of a dilation", true)->callback([&, pargs] {
        action = [&, pargs] {
            auto p = io::polytope_from_json(io::load_json_file(pargs->file));
            Integer v = simpchrom::count_points(p, Integer(pargs->m), pargs->interior);
            out.result = json{{"count", io::integer_to_json(v)},
                              {"m", pargs->m},
                              {"interior", pargs->interior}};
            out.lines.push_back(v.str());
        };
    });

    // tri check --polytope F --tri F [--boundary]
    auto* tri = app.add_subcommand("tri", "triangulation checks");
    tri->require_subcommand(1);
    struct TriArgs {
        std::string poly_file, tri_file;
        bool boundary = false;
    };
    auto targs = std::make_shared<TriArgs>();
    auto* tric = tri->add_subcommand("check", "validate a (boundary) triangulation");
    tric->add_option("--polytope", targs->poly_file, "polytope JSON file")->required();
    tric->add_option("--tri", targs->tri_file, "triangulation JSON file")->required();
    tric->add_flag("--boundary", targs->boundary, "expect a boundary triangulation");
    tric->callback([&, targs] {
        action = [&, targs] {
            auto p = io::polytope_from_json(io::load_json_file(targs->poly_file));
            auto t = io::triangulation_from_json(io::load_json_file(targs->tri_file));
            auto rep = simpchrom::check_triangulation(p, t, targs->boundary);
            out.result = io::tri_report_to_json(rep);
            out.failed = !rep.valid;
            out.lines.push_back(out.result.dump());
        };
    });

    // hodge --polytope F
    auto* hodge = app.add_subcommand("hodge", "filtration dimensions from the delta vector");
    struct HodgeArgs {
        std::string file;
        bool assume_regular = true;
    };
    auto hargs = std::make_shared<HodgeArgs>();
    hodge->add_option("--polytope", hargs->file, "polytope JSON file")->required();
    hodge->add_flag("!--no-assume-regular", hargs->assume_regular,
                    "drop the regularity assumption flag from the report");
    hodge->callback([&, hargs] {
        action = [&, hargs] {
            auto p = io::polytope_from_json(io::load_json_file(hargs->file));
            auto delta = simpchrom::delta_vector(p);
            auto dims = simpchrom::hodge_dims_from_delta(delta, p.dim());
            out.result = io::hodge_dims_to_json(dims);
            out.result["delta"] = io::integers_to_json(delta);
            out.result["regular_assumed"] = hargs->assume_regular;
            out.lines.push_back(out.result.dump());
        };
    });

    // verify <identity> --bundle F
    auto* verify = app.add_subcommand("verify", "check an identity on a bundled input");
    verify->require_subcommand(1);
    auto vargs = std::make_shared<VerifyArgs>();
    auto add_verify = [&](const char* name, const char* desc,
                          void (*fn)(const VerifyArgs&, CmdOut&)) {
        auto* sub = verify->add_subcommand(name, desc);
        sub->add_option("--bundle", vargs->bundle_path, "bundle JSON file")->required();
        sub->callback([&, fn] { action = [&, fn] { fn(*vargs, out); }; });
        return sub;
    };
    add_verify("part1", "reciprocal h-polynomial identity", run_verify_part1);
    add_verify("part2", "apex factorization identity", run_verify_part2);
    add_verify("compressed-chain", "chain of identities for a compressed boundary",
               run_verify_chain);
    add_verify("lattice-coh", "counting-series identity for a unimodular triangulation",
               run_verify_latcoh);
    add_verify("reciprocity", "Ehrhart reciprocity", run_verify_reciprocity);

    // suite
    auto* suite = app.add_subcommand("suite", "run every shipped fixture");
    auto suite_dir = std::make_shared<std::string>("fixtures");
    suite->add_option("--fixtures", *suite_dir, "fixture directory (default: fixtures)");
    suite->callback([&, suite_dir] { action = [&, suite_dir] { run_suite(*suite_dir, out); }; });

    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        app.exit(e);
        return 1;
    }

    std::vector<std::string> path;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        path.push_back(sub->get_name());
    }
    std::string command;
    for (const auto& part : path) command += (command.empty() ? "" : " ") + part;
    out.command = command;

    try {
        if (action) action();
    } catch (const simpchrom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (json_mode) {
        json env{{"command", out.command},
                 {"result", out.result},
                 {"reports", json(out.reports)}};
        std::cout << env.dump() << "\n";
    } else {
        for (const auto& line : out.lines) std::cout << line << "\n";
    }
    return (strict && out.failed) ? 2 : 0;
}
