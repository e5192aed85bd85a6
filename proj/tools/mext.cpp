// mext - multisequence extension toolkit CLI.
//
// JSON-first and deterministic: identical arguments (plus an identical seed
// or choice script) produce byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mext/hankel.hpp"
#include "mext/json_io.hpp"

namespace {

using mext::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitMismatch = 3;

struct Output {
    bool pretty = false;
    std::string path;  // empty = stdout

    void emit(const json& j) const {
        const std::string text = pretty ? j.dump(2) : j.dump();
        if (path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(path);
            if (!out) throw mext::Error("cannot open output file: " + path);
            out << text << "\n";
        }
    }
};

std::vector<uint32_t> parse_uint_list(const std::string& text) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw mext::ParseError("empty entry in list: " + text);
        out.push_back(static_cast<uint32_t>(std::stoul(item)));
    }
    if (out.empty()) throw mext::ParseError("empty list");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mext::Error("cannot open file: " + path);
    return json::parse(in);
}

std::optional<std::pair<uint64_t, uint64_t>> parse_range(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw mext::ParseError("range must be BEGIN:END");
    return std::make_pair(std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1)));
}

json base_output(const std::string& command) {
    return {{"version", mext::kVersion}, {"command", command}};
}

int emit_count_report(const Output& out, const std::string& command, mext::CountReport report) {
    json j = base_output(command);
    j.update(count_report_to_json(report));
    out.emit(j);
    const auto match = report.match();
    return (match.has_value() && !*match) ? kExitMismatch : kExitOk;
}

// Ladder for a synthesis run over degrees [lo, hi]; entries from the file
// when given, find_primitive otherwise, with the top degree pinned to the
// target polynomial when one is supplied.
mext::PolyLadder make_ladder(mext::PrimeField f, size_t lo, size_t hi,
                             const std::string& ladder_path,
                             const std::optional<mext::Poly>& top) {
    mext::PolyLadder ladder;
    if (!ladder_path.empty()) {
        ladder = mext::ladder_from_json(f, load_json_file(ladder_path));
    } else {
        for (size_t d = lo; d + 1 <= hi; ++d) ladder.set(mext::find_primitive(f, d));
        if (!top) ladder.set(mext::find_primitive(f, hi));
    }
    if (top) {
        if (ladder.covers(hi, hi) && !(ladder.at(hi) == *top)) {
            throw mext::BadLadder("ladder top entry conflicts with --poly");
        }
        ladder.set(*top);
    }
    if (!ladder.covers(lo, hi)) throw mext::BadLadder("ladder must cover degrees " +
                                                      std::to_string(lo) + ".." + std::to_string(hi));
    return ladder;
}

struct SynthInputs {
    uint32_t q = 2;
    std::string choices_path;
    std::optional<uint64_t> seed;
    std::string ladder_path;

    mext::ChoiceScript materialize(mext::PrimeField f, const mext::RVector& r, size_t n) const {
        if (seed) return mext::random_choices(f, r, n, *seed);
        return mext::choices_from_json(load_json_file(choices_path));
    }
};

void add_choice_flags(CLI::App* cmd, SynthInputs& in) {
    auto* choices = cmd->add_option("--choices", in.choices_path, "choice script JSON file");
    auto* seed = cmd->add_option("--seed", in.seed, "64-bit seed for random choices");
    choices->excludes(seed);
    seed->excludes(choices);
    cmd->add_option("--ladder", in.ladder_path, "primitive polynomial ladder JSON file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multisequence R-extensions, word LFSR synthesis, and exact counts over F_p"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_option("-o,--output", out.path, "write JSON to a file instead of stdout");

    uint32_t q = 2;
    size_t n = 0, m = 0, b = 0, l = 0, r = 0;
    std::string r_list, poly_text, spec_path, range_text;
    unsigned jobs = 1;
    bool oracle_flag = false, period_flag = false;
    SynthInputs synth_in;

    // --- primpoly ------------------------------------------------------
    auto* primpoly = app.add_subcommand("primpoly", "smallest primitive polynomial of a degree");
    primpoly->add_option("--q", q, "field modulus (prime)")->required();
    primpoly->add_option("--n", n, "degree")->required();

    // --- road ----------------------------------------------------------
    auto* road_cmd = app.add_subcommand("road", "road of a profile and its backward walk");
    road_cmd->add_option("--R", r_list, "profile, e.g. 3,2,5,4,1")->required();

    // --- count ---------------------------------------------------------
    auto* count = app.add_subcommand("count", "evaluate counting formulas");
    count->require_subcommand(1);
    count->fallthrough();
    count->add_option("--q", q, "field modulus (prime)")->required();
    count->add_flag("--oracle", oracle_flag, "run the exhaustive brute-force check");
    count->add_option("--jobs", jobs, "shard oracle enumeration across N threads");
    count->add_option("--poly", poly_text, "polynomial for the oracle (text or coeffs=[...])");

    auto* count_multiseq = count->add_subcommand("multiseq", "multisequences of a given dimension");
    count_multiseq->add_option("--m", m)->required();
    count_multiseq->add_option("--n", n)->required();
    count_multiseq->add_option("--l", l)->required();

    auto* count_ext = count->add_subcommand("extension", "multisequences with full-dimension R-extension");
    count_ext->add_option("--R", r_list, "profile, e.g. 2,2,2")->required();
    count_ext->add_option("--n", n)->required();

    auto* count_total = count->add_subcommand("extension-total", "extended multisequences over all profiles");
    count_total->add_option("--m", m)->required();
    count_total->add_option("--r", r)->required();
    count_total->add_option("--n", n)->required();

    auto* count_lfsr_cmd = count->add_subcommand("lfsr", "word-LFSR realizations of a primitive polynomial");
    count_lfsr_cmd->add_option("--m", m)->required();
    count_lfsr_cmd->add_option("--b", b)->required();

    auto* count_hankel = count->add_subcommand("hankel", "full-rank Hankel matrices");
    count_hankel->add_option("--n", n)->required();

    // --- synth ---------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "synthesize multisequences and word LFSRs");
    synth->require_subcommand(1);
    synth->fallthrough();
    synth->add_option("--q", synth_in.q, "field modulus (prime)")->required();

    auto* synth_multiseq = synth->add_subcommand("multiseq", "multisequence with full-dimension R-extension");
    synth_multiseq->add_option("--R", r_list, "profile, e.g. 2,2,2")->required();
    synth_multiseq->add_option("--n", n, "minimal polynomial degree")->required();
    add_choice_flags(synth_multiseq, synth_in);

    auto* synth_lfsr = synth->add_subcommand("lfsr", "word LFSR for a primitive characteristic polynomial");
    synth_lfsr->add_option("--m", m, "word width")->required();
    synth_lfsr->add_option("--b", b, "delay block count")->required();
    synth_lfsr->add_option("--poly", poly_text, "target characteristic polynomial");
    add_choice_flags(synth_lfsr, synth_in);

    // --- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check artifacts");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* verify_lfsr_cmd = verify->add_subcommand("lfsr", "verify an LFSR spec against a polynomial");
    verify_lfsr_cmd->add_option("--spec", spec_path, "LFSR spec JSON file")->required();
    verify_lfsr_cmd->add_option("--poly", poly_text, "expected characteristic polynomial")->required();
    verify_lfsr_cmd->add_option("--q", q, "field modulus (prime)")->required();
    verify_lfsr_cmd->add_flag("--period", period_flag, "also measure the period from a unit state");

    // --- oracle --------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "run brute-force enumerations directly");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    oracle->add_option("--q", q, "field modulus (prime)")->required();
    oracle->add_option("--jobs", jobs, "shard across N threads");
    oracle->add_option("--range", range_text, "raw count over index range BEGIN:END");
    oracle->add_option("--poly", poly_text, "polynomial context (text or coeffs=[...])");

    auto* oracle_multiseq = oracle->add_subcommand("multiseq", "count states by dimension");
    oracle_multiseq->add_option("--m", m)->required();
    oracle_multiseq->add_option("--n", n)->required();
    oracle_multiseq->add_option("--l", l)->required();

    auto* oracle_ext = oracle->add_subcommand("extension", "count states with full-dimension extension");
    oracle_ext->add_option("--R", r_list)->required();
    oracle_ext->add_option("--n", n)->required();

    auto* oracle_lfsr_cmd = oracle->add_subcommand("lfsr", "count m-companion matrices by charpoly");
    oracle_lfsr_cmd->add_option("--m", m)->required();
    oracle_lfsr_cmd->add_option("--b", b)->required();

    auto* oracle_hankel = oracle->add_subcommand("hankel", "count full-rank Hankel matrices");
    oracle_hankel->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const mext::PrimeField field(q);

        if (primpoly->parsed()) {
            const mext::Poly p = mext::find_primitive(field, n);
            json j = base_output("primpoly");
            j.update({{"q", q}, {"degree", n}, {"poly", mext::format_poly(p)},
                      {"coeffs", mext::poly_to_json(p)}});
            out.emit(j);
            return kExitOk;
        }

        if (road_cmd->parsed()) {
            const mext::RVector target{parse_uint_list(r_list)};
            json points = json::array();
            for (const mext::RVector& g : mext::road(target)) points.push_back(g.parts());
            json actives = json::array();
            for (const auto& [g, c] : mext::backward_traverse(target)) actives.push_back(c);
            json j = base_output("road");
            j.update({{"R", target.parts()}, {"road", points}, {"active_coordinates", actives}});
            out.emit(j);
            return kExitOk;
        }

        if (count_multiseq->parsed()) {
            mext::CountReport report;
            report.formula_value = mext::count_by_dimension(l, m, n, q);
            report.parameters = {{"q", std::to_string(q)}, {"m", std::to_string(m)},
                                 {"n", std::to_string(n)}, {"l", std::to_string(l)}};
            if (oracle_flag) report.oracle_value = mext::oracle_by_dimension(l, m, n, field, jobs);
            return emit_count_report(out, "count multiseq", std::move(report));
        }

        if (count_ext->parsed()) {
            const mext::RVector profile{parse_uint_list(r_list)};
            mext::CountReport report;
            report.formula_value = mext::count_max_extension(profile, n, q);
            report.parameters = {{"q", std::to_string(q)}, {"R", r_list}, {"n", std::to_string(n)}};
            if (oracle_flag) {
                const mext::Poly p = poly_text.empty() ? mext::find_primitive(field, n)
                                                       : mext::parse_poly(field, poly_text);
                report.parameters["poly"] = mext::format_poly(p);
                report.oracle_value = mext::oracle_max_extension(profile, p, jobs);
            }
            return emit_count_report(out, "count extension", std::move(report));
        }

        if (count_total->parsed()) {
            mext::CountReport report;
            report.formula_value = mext::count_nr(m, r, n, q);
            report.parameters = {{"q", std::to_string(q)}, {"m", std::to_string(m)},
                                 {"r", std::to_string(r)}, {"n", std::to_string(n)}};
            if (oracle_flag) {
                const mext::Poly p = poly_text.empty() ? mext::find_primitive(field, n)
                                                       : mext::parse_poly(field, poly_text);
                report.parameters["poly"] = mext::format_poly(p);
                report.oracle_value = mext::oracle_nr(m, r, p, jobs);
            }
            return emit_count_report(out, "count extension-total", std::move(report));
        }

        if (count_lfsr_cmd->parsed()) {
            mext::CountReport report;
            report.formula_value = mext::count_lfsr(m, b, q);
            report.parameters = {{"q", std::to_string(q)}, {"m", std::to_string(m)},
                                 {"b", std::to_string(b)}};
            if (oracle_flag) {
                const mext::Poly p = poly_text.empty() ? mext::find_primitive(field, m * b)
                                                       : mext::parse_poly(field, poly_text);
                report.parameters["poly"] = mext::format_poly(p);
                report.oracle_value = mext::oracle_lfsr(m, b, p, jobs);
            }
            return emit_count_report(out, "count lfsr", std::move(report));
        }

        if (count_hankel->parsed()) {
            mext::CountReport report;
            report.formula_value = mext::count_fullrank_hankel(q, n);
            report.parameters = {{"q", std::to_string(q)}, {"n", std::to_string(n)}};
            if (oracle_flag) report.oracle_value = mext::enumerate_fullrank_hankel(field, n);
            return emit_count_report(out, "count hankel", std::move(report));
        }

        if (synth_multiseq->parsed() || synth_lfsr->parsed()) {
            const mext::PrimeField sf(synth_in.q);
            if (!synth_in.seed && synth_in.choices_path.empty()) {
                std::cerr << "exactly one of --choices / --seed is required\n";
                return kExitUsage;
            }
            std::optional<mext::Poly> target;
            mext::RVector profile{{1}};
            if (synth_lfsr->parsed()) {
                n = m * b;
                profile = mext::RVector{std::vector<uint32_t>(m, static_cast<uint32_t>(b))};
                if (!poly_text.empty()) target = mext::parse_poly(sf, poly_text);
            } else {
                profile = mext::RVector{parse_uint_list(r_list)};
            }
            const size_t base = n - profile.sum() + profile.size();
            const mext::PolyLadder ladder =
                make_ladder(sf, base, n, synth_in.ladder_path, target);
            const mext::ChoiceScript choices = synth_in.materialize(sf, profile, n);
            const mext::MultiseqState result = mext::synthesize(profile, n, ladder, choices);

            json j = base_output(synth_lfsr->parsed() ? "synth lfsr" : "synth multiseq");
            j["q"] = synth_in.q;
            j["R"] = profile.parts();
            j["n"] = n;
            j["ladder"] = mext::ladder_to_json(ladder);
            j["seed"] = nullptr;
            if (synth_in.seed) j["seed"] = *synth_in.seed;
            j["choices"] = mext::choices_to_json(choices);
            j["result"] = mext::multiseq_to_json(result);

            const size_t ext_dim = mext::extension_dimension(result, profile);
            json verification{{"extension_dimension", ext_dim},
                              {"target_dimension", profile.sum()},
                              {"minpoly", mext::format_poly(result.minpoly())}};
            bool ok = (ext_dim == profile.sum()) && (result.minpoly() == ladder.at(n));

            if (synth_lfsr->parsed()) {
                const mext::MCompanion transition = mext::transition_from_multiseq(result);
                const mext::LfsrSpec spec = mext::feedback_blocks(transition);
                const mext::Poly expected = target ? *target : ladder.at(n);
                const mext::LfsrReport report = mext::verify_lfsr(spec, expected);
                j["m"] = m;
                j["b"] = b;
                j["poly"] = mext::format_poly(expected);
                j["transition"] = mext::mat_to_json(transition.mat());
                j["lfsr"] = mext::lfsr_to_json(spec);
                verification["lfsr"] = mext::lfsr_report_to_json(report);
                ok = ok && report.passed();
            }
            verification["ok"] = ok;
            j["verification"] = verification;
            out.emit(j);
            return ok ? kExitOk : kExitVerifyFailed;
        }

        if (verify_lfsr_cmd->parsed()) {
            const mext::LfsrSpec spec = mext::lfsr_from_json(load_json_file(spec_path));
            const mext::Poly p = mext::parse_poly(spec.field(), poly_text);
            const mext::LfsrReport report = mext::verify_lfsr(spec, p, period_flag);
            json j = base_output("verify lfsr");
            j.update(mext::lfsr_report_to_json(report));
            out.emit(j);
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }

        if (oracle_multiseq->parsed() || oracle_ext->parsed() || oracle_lfsr_cmd->parsed() ||
            oracle_hankel->parsed()) {
            const auto range = parse_range(range_text);
            json j = base_output("oracle");
            j["raw"] = range.has_value();
            j["range"] = nullptr;
            uint64_t value = 0;
            uint64_t space = 0;
            if (oracle_multiseq->parsed()) {
                space = mext::oracle_space_matrices(m, n, q);
                value = range ? mext::oracle_raw_by_dimension(l, m, n, field, range->first, range->second)
                              : mext::oracle_by_dimension(l, m, n, field, jobs);
            } else if (oracle_ext->parsed()) {
                const mext::RVector profile{parse_uint_list(r_list)};
                const mext::Poly p = poly_text.empty() ? mext::find_primitive(field, n)
                                                       : mext::parse_poly(field, poly_text);
                j["poly"] = mext::format_poly(p);
                space = mext::oracle_space_matrices(profile.size(), n, q);
                value = range ? mext::oracle_raw_max_extension(profile, p, range->first, range->second)
                              : mext::oracle_max_extension(profile, p, jobs);
            } else if (oracle_lfsr_cmd->parsed()) {
                const mext::Poly p = poly_text.empty() ? mext::find_primitive(field, m * b)
                                                       : mext::parse_poly(field, poly_text);
                j["poly"] = mext::format_poly(p);
                space = mext::oracle_space_lfsr(m, b, q);
                value = range ? mext::oracle_raw_lfsr(m, b, p, range->first, range->second)
                              : mext::oracle_lfsr(m, b, p, jobs);
            } else {
                space = mext::hankel_space(field, n);
                value = range ? mext::enumerate_fullrank_hankel_range(field, n, range->first, range->second)
                              : mext::enumerate_fullrank_hankel(field, n);
            }
            if (range) j["range"] = {range->first, range->second};
            j["space"] = space;
            j["value"] = value;
            out.emit(j);
            return kExitOk;
        }

        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const mext::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    }
}
