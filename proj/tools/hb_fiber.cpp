// hb-fiber: Hilbert-Burch syzygy data, saturated-fiber multiplicity,
// j-multiplicity, and rational-map degree reports for equigenerated
// height-two perfect ideals.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <hbfiber/hbfiber.hpp>

using json = nlohmann::ordered_json;
using namespace hbf;

namespace {

struct Options {
    std::string file;
    int n_max = 6;
    std::uint64_t seed = 0;
    int trials = 5;
    bool json_only = false;
    bool text_only = false;
    int r_max = 3;
    int s_max = 5;
    int mu_max = 4;
};

int exit_code_for(const std::string& code) {
    if (code == "SyntaxError" || code == "UnknownVariable" || code == "NotEquigenerated" ||
        code == "NotPrime" || code == "IoError")
        return 2;
    if (code == "NotHeightTwo" || code == "MinorMismatch" || code == "TooFewSyzygies" ||
        code == "GConditionFailed" || code == "NotMinimal")
        return 3;
    if (code == "VerifyDisagreement") return 4;
    return 5;  // DimensionAnomaly, NonIntegralDegree, internal anomalies
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IoError", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const json& report, const Options& opt) {
    if (!opt.text_only) std::cout << report.dump(2) << "\n";
    if (opt.json_only) return;
    // human summary
    std::cout << "== " << report["command"].get<std::string>() << " ==\n";
    if (report.contains("hypotheses")) {
        const auto& h = report["hypotheses"];
        std::cout << "  r=" << h["r"] << " s=" << h["s"] << " d=" << h["d"]
                  << " mu=" << h["mu"].dump();
        if (h.contains("g_condition"))
            std::cout << "  G_{r+1}: " << (h["g_condition"]["pass"].get<bool>() ? "pass" : "FAIL");
        std::cout << "\n";
    }
    if (report.contains("result")) {
        for (const auto& [key, val] : report["result"].items())
            std::cout << "  " << key << ": " << val.dump() << "\n";
    }
    for (const auto& w : report["warnings"])
        std::cout << "  warning: " << w.get<std::string>() << "\n";
}

template <class K>
json hypothesis_block(const HilbertBurchData<K>& hb) {
    json h;
    h["r"] = hb.r;
    h["s"] = hb.s;
    h["d"] = hb.d;
    h["mu"] = hb.mu;
    h["height"] = 2;
    json rows = json::array();
    for (const auto& row : hb.phi.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    h["phi"] = rows;
    return h;
}

json gcond_block(const GCondReport& rep) {
    json g;
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r;
        r["i"] = row.i;
        r["minor_size"] = row.t;
        r["height"] = row.height == kHeightInfinity ? json("infinity") : json(row.height);
        r["threshold"] = row.threshold;
        r["pass"] = row.pass;
        rows.push_back(r);
    }
    g["rows"] = rows;
    g["pass"] = rep.pass;
    return g;
}

json int_str(const Int& v) { return json(v.str()); }

template <class K>
struct Pipeline {
    IdealFile<K> file;
    HilbertBurchData<K> hb;
    GCondReport gcond;
    json report;

    Pipeline(const std::string& command, const std::string& text) {
        file = parse_ideal_file<K>(text);
        report["schema"] = "hb-fiber/1";
        report["command"] = command;
        report["input_digest"] = fnv1a_hex(text);
        report["warnings"] = json::array();
        hb = hilbert_burch(file.ideal);
        gcond = g_condition(hb);
        report["hypotheses"] = hypothesis_block(hb);
        report["hypotheses"]["g_condition"] = gcond_block(gcond);
        if (!gcond.pass)
            warn("condition G_{r+1} fails: formula outputs are not certified");
    }

    void warn(const std::string& msg) { report["warnings"].push_back(msg); }
    MuVector mu_vector() const { return MuVector{hb.r, hb.mu}; }
};

template <class K>
int cmd_resolve(const std::string& text, const Options& opt) {
    Pipeline<K> p("resolve", text);
    emit(p.report, opt);
    return 0;
}

template <class K>
int cmd_gcheck(const std::string& text, const Options& opt) {
    Pipeline<K> p("gcheck", text);
    emit(p.report, opt);
    return p.gcond.pass ? 0 : 3;
}

template <class K>
int cmd_mult(const std::string& text, const Options& opt) {
    Pipeline<K> p("mult", text);
    auto rep = multiplicity_report(p.hb.d, p.mu_vector());
    json r;
    r["e_r"] = int_str(rep.e_r);
    r["e_r_provenance"] = "formula";
    json ms = json::array();
    for (const auto& m : rep.m) ms.push_back(m.str());
    r["m"] = ms;
    r["alt_sum"] = int_str(rep.alt_sum);
    r["alt_sum_provenance"] = "formula";
    r["j"] = int_str(rep.j);
    r["j_provenance"] = "formula";
    r["consistent"] = rep.consistent;
    p.report["result"] = r;
    emit(p.report, opt);
    return 0;
}

template <class K>
int cmd_jmult(const std::string& text, const Options& opt) {
    Pipeline<K> p("jmult", text);
    Int formula = j_multiplicity_formula(p.hb.d, p.mu_vector());
    json r;
    r["j_formula"] = int_str(formula);
    r["j_formula_provenance"] = "formula";
    auto js = j_mult_sample(p.file.ideal, opt.n_max);
    json lengths = json::array();
    for (const auto& [n, l] : js.samples) lengths.push_back({{"n", n}, {"length", l.str()}});
    r["oracle_lengths"] = lengths;
    if (js.inferred_j) {
        r["j_oracle"] = int_str(*js.inferred_j);
        r["j_oracle_provenance"] = "oracle";
        r["agree"] = (*js.inferred_j == formula);
    } else {
        r["j_oracle"] = "unstable";
        p.warn("oracle did not stabilize; raise --n-max");
    }
    p.report["result"] = r;
    emit(p.report, opt);
    return 0;
}

template <class K>
int cmd_mapdeg(const std::string& text, const Options& opt) {
    Pipeline<K> p("mapdeg", text);
    auto rep = map_degree_report(p.file.ideal.gens, p.hb, p.gcond.pass);
    json r;
    r["dimY"] = rep.dimY;
    r["degY"] = int_str(rep.degY);
    r["e_r"] = int_str(rep.e_r);
    r["degF"] = int_str(rep.degF);
    r["birational"] = rep.birational;
    r["provenance"] = "formula";
    json kg = json::array();
    for (const auto& g : rep.kernel_gens) kg.push_back(g.str());
    r["kernel_gens"] = kg;
    if constexpr (std::is_same_v<K, Fp>) {
        try {
            int fd = generic_fiber_degree(p.file.ideal.gens, opt.trials, opt.seed);
            r["fiber_degree_heuristic"] = fd;
            r["fiber_degree_provenance"] = "HEURISTIC";
        } catch (const error& e) {
            p.warn(std::string("fiber heuristic failed: ") + e.what());
        }
    }
    p.report["result"] = r;
    emit(p.report, opt);
    return 0;
}

template <class K>
int cmd_verify(const std::string& text, const Options& opt) {
    Pipeline<K> p("verify", text);
    auto mrep = multiplicity_report(p.hb.d, p.mu_vector());
    json r;
    bool agree = mrep.consistent;
    r["e_r_formula"] = int_str(mrep.e_r);
    r["alt_sum_formula"] = int_str(mrep.alt_sum);

    auto sat = saturated_fiber_sample(p.file.ideal, p.hb.d, opt.n_max);
    json dims = json::array();
    for (const auto& [n, d] : sat.samples) dims.push_back({{"n", n}, {"dim", d.str()}});
    r["saturated_fiber_dims"] = dims;
    if (sat.inferred_multiplicity) {
        r["e_oracle"] = int_str(*sat.inferred_multiplicity);
        agree = agree && (*sat.inferred_multiplicity == mrep.e_r);
    } else {
        r["e_oracle"] = "unstable";
        p.warn("saturated fiber oracle did not stabilize; raise --n-max");
        agree = false;
    }

    auto js = j_mult_sample(p.file.ideal, opt.n_max);
    if (js.inferred_j) {
        r["j_formula"] = int_str(mrep.j);
        r["j_oracle"] = int_str(*js.inferred_j);
        agree = agree && (*js.inferred_j == mrep.j);
    } else {
        r["j_oracle"] = "unstable";
        p.warn("j-multiplicity oracle did not stabilize; raise --n-max");
        agree = false;
    }

    auto deg = map_degree_report(p.file.ideal.gens, p.hb, p.gcond.pass);
    r["degY"] = int_str(deg.degY);
    r["degF"] = int_str(deg.degF);
    r["birational"] = deg.birational;
    agree = agree && (deg.degF * deg.degY == mrep.e_r);

    if constexpr (std::is_same_v<K, Fp>) {
        try {
            int fd = generic_fiber_degree(p.file.ideal.gens, opt.trials, opt.seed);
            r["fiber_degree_heuristic"] = fd;  // informational only
            if (Int(fd) != deg.degF)
                p.warn("fiber heuristic disagrees with degF (not a failure)");
        } catch (const error& e) {
            p.warn(std::string("fiber heuristic failed: ") + e.what());
        }
    }

    r["agree"] = agree;
    p.report["result"] = r;
    emit(p.report, opt);
    return agree ? 0 : 4;
}

int cmd_identities(const Options& opt) {
    json report;
    report["schema"] = "hb-fiber/1";
    report["command"] = "identities";
    report["warnings"] = json::array();
    long long checked = 0;
    bool all = true;
    for (int r = 1; r <= opt.r_max; ++r) {
        for (int s = r; s <= opt.s_max; ++s) {
            for (int k = 0; k <= r; ++k) {
                all = all && lemma_identity(LemmaPart::i, LemmaParams{r, s, k, 1, {}});
                ++checked;
            }
            std::vector<int> mu(s, 1);
            for (;;) {
                for (int ell = 1; ell <= r; ++ell) {
                    all = all && lemma_identity(LemmaPart::ii, LemmaParams{r, s, 0, ell, mu});
                    ++checked;
                }
                if (s > r) {
                    all = all && lemma_identity(LemmaPart::iii, LemmaParams{r, s, 0, 1, mu});
                    ++checked;
                } else {
                    all = all && lemma_identity(LemmaPart::iv, LemmaParams{r, s, 0, 1, mu});
                    ++checked;
                }
                MuVector mv{r, mu};
                all = all && (multiplicity_from_m(mv) == elementary_symmetric(r, mu));
                ++checked;
                int i = s - 1;
                while (i >= 0 && mu[i] == opt.mu_max) { mu[i] = 1; --i; }
                if (i < 0) break;
                ++mu[i];
            }
        }
    }
    json res;
    res["instances_checked"] = checked;
    res["all_hold"] = all;
    report["result"] = res;
    emit(report, opt);
    return all ? 0 : 4;
}

template <class K>
int dispatch(const std::string& command, const std::string& text, const Options& opt) {
    if (command == "resolve") return cmd_resolve<K>(text, opt);
    if (command == "gcheck") return cmd_gcheck<K>(text, opt);
    if (command == "mult") return cmd_mult<K>(text, opt);
    if (command == "jmult") return cmd_jmult<K>(text, opt);
    if (command == "mapdeg") return cmd_mapdeg<K>(text, opt);
    if (command == "verify") return cmd_verify<K>(text, opt);
    fail("BadCommand", "unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"saturated special fiber multiplicity toolkit"};
    app.require_subcommand(1);
    Options opt;

    std::vector<CLI::App*> subs;
    for (const char* name : {"resolve", "gcheck", "mult", "jmult", "mapdeg", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("file", opt.file, "ideal file")->required();
        sub->add_option("--n-max", opt.n_max, "oracle sweep bound");
        sub->add_option("--seed", opt.seed, "fiber heuristic seed");
        sub->add_option("--trials", opt.trials, "fiber heuristic trials");
        sub->add_flag("--json", opt.json_only, "JSON output only");
        sub->add_flag("--text", opt.text_only, "text output only");
        subs.push_back(sub);
    }
    auto* ident = app.add_subcommand("identities");
    ident->add_option("--r-max", opt.r_max, "max r");
    ident->add_option("--s-max", opt.s_max, "max s");
    ident->add_option("--mu-max", opt.mu_max, "max mu entry");
    ident->add_flag("--json", opt.json_only, "JSON output only");
    ident->add_flag("--text", opt.text_only, "text output only");

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands()[0]->get_name();

    try {
        if (command == "identities") return cmd_identities(opt);
        std::string text = read_file(opt.file);
        auto parsed = parse_ideal_file_text(text);
        if (parsed.field.kind == FieldDesc::Kind::rational)
            return dispatch<Rat>(command, text, opt);
        return dispatch<Fp>(command, text, opt);
    } catch (const error& e) {
        json err;
        err["schema"] = "hb-fiber/1";
        err["command"] = command;
        err["error"] = {{"code", e.code}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
        return exit_code_for(e.code);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
