#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grain/abelian.hpp"
#include "grain/bitword.hpp"
#include "grain/bounds.hpp"
#include "grain/caps.hpp"
#include "grain/cardinality.hpp"
#include "grain/codebook.hpp"
#include "grain/coloring.hpp"
#include "grain/constructions.hpp"
#include "grain/error_model.hpp"
#include "grain/gfp.hpp"
#include "grain/group_code.hpp"
#include "grain/rational.hpp"

namespace {

using grain::BigInt;
using Json = nlohmann::ordered_json;

// JSON numbers are exact only up to 2^53; anything larger goes out as a
// decimal string so downstream consumers never round it.
Json json_count(const BigInt& v) {
    static const BigInt kSafe = grain::pow2(53);
    if (v < kSafe && v > -kSafe) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(grain::to_decimal(v));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: \"" + text + "\"");
    }
}

// Comma-separated field elements; empty means the zero vector.
grain::GfVec parse_residue(const std::string& text, int rows, int p) {
    grain::GfVec r;
    if (!text.empty())
        for (const std::string& part : split(text, ','))
            r.push_back(parse_int(part, "residue"));
    if (r.empty()) r.assign(static_cast<std::size_t>(rows), 0);
    if (static_cast<int>(r.size()) != rows)
        throw std::invalid_argument("residue needs " + std::to_string(rows) + " entries, got " +
                                    std::to_string(r.size()));
    for (int v : r)
        if (v < 0 || v >= p)
            throw std::invalid_argument("residue entries must lie in [0, " + std::to_string(p) +
                                        ")");
    return r;
}

std::string residue_string(const grain::GfVec& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r[i]);
    }
    return s;
}

// Outer code specs are "hamming:p:r" or "rep:p:l"; t is the radius the caller
// composes at, so repetition codes are built to reach it and Hamming codes
// insist on t = 1.
grain::PrimeLinearCode parse_outer(const std::string& spec, int t) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("outer spec must look like hamming:3:2 or rep:3:5, got \"" +
                                    spec + "\"");
    int p = parse_int(parts[1], "outer field");
    int k = parse_int(parts[2], "outer parameter");
    if (parts[0] == "hamming") {
        if (t != 1)
            throw std::invalid_argument("hamming outer codes correct one symbol error; use --t 1");
        return grain::hamming_code(p, k);
    }
    if (parts[0] == "rep") return grain::repetition_code(p, k, t);
    throw std::invalid_argument("unknown outer code kind \"" + parts[0] +
                                "\" (hamming or rep)");
}

// Class sizes folded onto field symbols through the spec's symbol map; the
// dual-sum counter wants them indexed by symbol.
std::vector<BigInt> sizes_by_symbol(const grain::ColoredCodeSpec& spec) {
    std::vector<BigInt> sizes(static_cast<std::size_t>(spec.outer.p), 0);
    std::vector<std::size_t> class_sizes = spec.coloring.class_sizes();
    for (std::size_t k = 0; k < class_sizes.size(); ++k)
        sizes[static_cast<std::size_t>(spec.symbol_map[k])] += BigInt(static_cast<unsigned long>(class_sizes[k]));
    return sizes;
}

Json class_sizes_json(const grain::Coloring& col) {
    Json arr = Json::array();
    for (std::size_t s : col.class_sizes()) arr.push_back(s);
    return arr;
}

// --- subcommand bodies ----------------------------------------------------

int run_bound(int n, int t, bool want_closed_form) {
    grain::BoundReport report = grain::bound_report(n, t);
    if (want_closed_form && !report.closed_form)
        throw std::invalid_argument("no closed form applies at n=" + std::to_string(n) +
                                    ", t=" + std::to_string(t));
    Json out;
    out["command"] = "bound";
    out["n"] = report.n;
    out["t"] = report.t;
    out["exact_sum"] = grain::to_decimal(report.exact_sum);
    out["even_floor"] = json_count(report.even_floor);
    out["bound"] = json_count(report.bound);
    if (report.closed_form) out["closed_form"] = json_count(*report.closed_form);
    emit(out);
    return 0;
}

// Lower bounds come from the best group construction at each length, beaten
// at length 9 by the doubled ternary Hamming code plus the free first bit.
BigInt construction_lower(int n) {
    BigInt best = grain::best_group_code(n).cardinality;
    for (int r = 2;; ++r) {
        int l = (grain::ipow(3, static_cast<unsigned long>(r)).get_si() - 1) / 2;
        if (2 * l + 1 > 26) break;
        if (2 * l + 1 != n) continue;
        grain::PrimeLinearCode outer = grain::hamming_code(3, r);
        BigInt lifted =
            2 * grain::doubled_zero_count(grain::hwe_direct(outer, grain::GfVec(outer.check.size(), 0)));
        if (lifted > best) best = lifted;
    }
    return best;
}

int run_table1(int n_min, int n_max) {
    if (n_min < 3 || n_max < n_min || n_max > 26)
        throw std::invalid_argument("table range must satisfy 3 <= n_min <= n_max <= 26");
    std::cout << "# table1 n_min=" << n_min << " n_max=" << n_max << '\n';
    std::cout << "n,lower,upper\n";
    for (int n = n_min; n <= n_max; ++n)
        std::cout << n << ',' << grain::to_decimal(construction_lower(n)) << ','
                  << grain::to_decimal(grain::upper_bound(n, 1)) << '\n';
    return 0;
}

int run_best_group(int n) {
    grain::BestGroup best = grain::best_group_code(n);
    Json out;
    out["command"] = "best-group";
    out["n"] = n;
    out["group"] = best.group.spec();
    out["cardinality"] = json_count(best.cardinality);
    Json candidates = Json::array();
    for (const auto& [spec, size] : best.candidates) {
        Json row;
        row["group"] = spec;
        row["cardinality"] = json_count(size);
        candidates.push_back(row);
    }
    out["candidates"] = candidates;
    emit(out);
    return 0;
}

int run_construct_group(const std::string& group_spec, int residue, const std::string& out_path,
                        std::uint64_t cap) {
    grain::FiniteAbelianGroup g = grain::parse_group(group_spec);
    if (residue < 0 || residue >= g.order)
        throw std::invalid_argument("residue must be a group element index in [0, " +
                                    std::to_string(g.order) + ")");
    grain::CodeBook code = grain::enumerate_group_code(g, residue, cap);
    Json out;
    out["command"] = "construct group";
    out["group"] = g.spec();
    out["residue"] = residue;
    out["cap"] = cap;
    out["length"] = code.length;
    out["size"] = json_count(BigInt(static_cast<unsigned long>(code.size())));
    if (!out_path.empty()) {
        grain::write_codebook_file(out_path, code);
        out["out"] = out_path;
    }
    emit(out);
    return 0;
}

int run_construct_gamma(const std::string& outer_spec, int t, const std::string& residue_text,
                        bool lift, const std::string& out_path, std::uint64_t cap) {
    grain::PrimeLinearCode outer = parse_outer(outer_spec, t);
    grain::GfVec residue = parse_residue(residue_text, outer.rows(), outer.p);
    grain::ColoredCodeSpec spec = grain::make_pair_ternary_spec(outer, residue);
    grain::CodeBook code = grain::colored_enumerate(spec, cap);
    if (lift) code = grain::prepend_bit_lift(code);
    Json out;
    out["command"] = "construct gamma";
    out["outer"] = outer_spec;
    out["t"] = t;
    out["residue"] = residue_string(residue);
    out["lift"] = lift;
    out["cap"] = cap;
    out["length"] = code.length;
    out["correction_radius"] = spec.correction_radius();
    out["size"] = json_count(BigInt(static_cast<unsigned long>(code.size())));
    if (!out_path.empty()) {
        grain::write_codebook_file(out_path, code);
        out["out"] = out_path;
    }
    emit(out);
    return 0;
}

int run_construct_colored(const std::string& coloring_path, const std::string& outer_spec, int t,
                          const std::string& residue_text, bool lift, const std::string& out_path,
                          std::uint64_t cap) {
    grain::Coloring col = grain::read_coloring_file(coloring_path);
    grain::PrimeLinearCode outer = parse_outer(outer_spec, t);
    grain::GfVec residue = parse_residue(residue_text, outer.rows(), outer.p);
    grain::ColoredCodeSpec spec = grain::make_colored_spec(col, outer, residue);

    Json out;
    out["command"] = "construct colored";
    out["coloring"] = coloring_path;
    out["m"] = spec.coloring.m;
    out["outer"] = outer_spec;
    out["t"] = t;
    out["residue"] = residue_string(residue);
    out["lift"] = lift;
    out["cap"] = cap;
    out["length"] = spec.length() + (lift ? 1 : 0);
    out["correction_radius"] = spec.correction_radius();

    bool enumerable = spec.length() + (lift ? 1 : 0) <= grain::kMaxWordLength &&
                      (spec.length() >= 64 ? false : (std::uint64_t{1} << spec.length()) <= cap);
    if (enumerable) {
        grain::CodeBook code = grain::colored_enumerate(spec, cap);
        if (lift) code = grain::prepend_bit_lift(code);
        out["enumerated"] = true;
        out["size"] = json_count(BigInt(static_cast<unsigned long>(code.size())));
        if (!out_path.empty()) {
            grain::write_codebook_file(out_path, code);
            out["out"] = out_path;
        }
        emit(out);
        return 0;
    }
    if (!out_path.empty())
        throw grain::cap_exceeded("length " + std::to_string(spec.length()) +
                                  " exceeds the enumeration range; no codebook written");
    BigInt count = grain::count_from_partition_dual(spec.outer, spec.residue, sizes_by_symbol(spec));
    if (lift) count *= 2;
    out["enumerated"] = false;
    out["size"] = json_count(count);
    emit(out);
    return 0;
}

int run_construct_lifted(const std::string& matrix_path, int t, const std::string& residue_text,
                         const std::string& out_path, std::uint64_t cap) {
    grain::PrimeLinearCode base = grain::read_check_matrix_file(matrix_path, t);
    grain::GfVec residue = parse_residue(residue_text, base.rows(), base.p);
    grain::CodeBook code = grain::lifted_enumerate(base, residue, cap);
    Json out;
    out["command"] = "construct lifted";
    out["matrix"] = matrix_path;
    out["t"] = t;
    out["residue"] = residue_string(residue);
    out["cap"] = cap;
    out["length"] = code.length;
    out["size"] = json_count(BigInt(static_cast<unsigned long>(code.size())));
    if (!out_path.empty()) {
        grain::write_codebook_file(out_path, code);
        out["out"] = out_path;
    }
    emit(out);
    return 0;
}

int run_verify(const std::string& code_path, int t, const std::string& model_name) {
    grain::CodeBook code = grain::read_codebook_file(code_path);
    grain::ErrorModel model{grain::error_kind_from_string(model_name), t};
    grain::VerifyResult result = grain::is_t_correcting(code, model);
    Json out;
    out["command"] = "verify";
    out["code"] = code_path;
    out["model"] = model.name();
    out["t"] = t;
    out["length"] = code.length;
    out["size"] = json_count(BigInt(static_cast<unsigned long>(code.size())));
    out["verdict"] = result.ok ? "PASS" : "FAIL";
    if (!result.ok) {
        Json witness;
        witness["first"] = grain::word_to_string(result.first, code.length);
        witness["second"] = grain::word_to_string(result.second, code.length);
        witness["common"] = grain::word_to_string(result.common, code.length);
        out["witness"] = witness;
    }
    emit(out);
    return result.ok ? 0 : 1;
}

int run_color_search(int m, int t, std::uint64_t seed, int restarts, int threads,
                     const std::string& out_path, std::uint64_t cap) {
    grain::ConfusabilityGraph graph = grain::build_confusability_graph(m, t, cap);
    grain::Coloring col = grain::greedy_coloring(graph, seed, restarts, threads);
    Json out;
    out["command"] = "color search";
    out["m"] = m;
    out["t"] = t;
    out["seed"] = seed;
    out["restarts"] = restarts;
    out["threads"] = threads;
    out["cap"] = cap;
    out["colors"] = col.color_count();
    out["class_sizes"] = class_sizes_json(col);
    if (!out_path.empty()) {
        grain::write_coloring_file(out_path, col);
        out["out"] = out_path;
    }
    emit(out);
    return 0;
}

int run_color_verify(const std::string& path, std::uint64_t cap) {
    grain::Coloring col = grain::read_coloring_file(path);
    grain::ConfusabilityGraph graph = grain::build_confusability_graph(col.m, col.t, cap);
    bool valid = grain::coloring_valid(col, graph);
    Json out;
    out["command"] = "color verify";
    out["file"] = path;
    out["m"] = col.m;
    out["t"] = col.t;
    out["colors"] = col.color_count();
    out["class_sizes"] = class_sizes_json(col);
    out["verdict"] = valid ? "PASS" : "FAIL";
    emit(out);
    return valid ? 0 : 1;
}

int run_cardinality_gamma(const std::string& outer_spec, int t, const std::string& residue_text,
                          bool lift, std::uint64_t cap) {
    grain::PrimeLinearCode outer = parse_outer(outer_spec, t);
    grain::GfVec residue = parse_residue(residue_text, outer.rows(), outer.p);
    BigInt mineral = grain::doubled_zero_count(grain::hwe_direct(outer, residue, cap));
    Json out;
    out["command"] = "cardinality gamma";
    out["outer"] = outer_spec;
    out["t"] = t;
    out["residue"] = residue_string(residue);
    out["cap"] = cap;
    out["mineral"] = json_count(mineral);
    if (lift) out["grain"] = json_count(2 * mineral);
    emit(out);
    return 0;
}

int run_cardinality_colored(const std::string& coloring_path, const std::string& outer_spec,
                            int t, const std::string& residue_text) {
    grain::Coloring col = grain::read_coloring_file(coloring_path);
    grain::PrimeLinearCode outer = parse_outer(outer_spec, t);
    grain::GfVec residue = parse_residue(residue_text, outer.rows(), outer.p);
    grain::ColoredCodeSpec spec = grain::make_colored_spec(col, outer, residue);
    BigInt count = grain::count_from_partition_dual(spec.outer, spec.residue, sizes_by_symbol(spec));
    Json out;
    out["command"] = "cardinality colored";
    out["coloring"] = coloring_path;
    out["m"] = spec.coloring.m;
    out["outer"] = outer_spec;
    out["t"] = t;
    out["residue"] = residue_string(residue);
    out["length"] = spec.length();
    out["count"] = json_count(count);
    emit(out);
    return 0;
}

int run_cardinality_fourier(const std::string& matrix_path, int t,
                            const std::string& residue_text) {
    grain::PrimeLinearCode base = grain::read_check_matrix_file(matrix_path, t);
    if (base.p != 3)
        throw std::invalid_argument("doubled syndrome counts need a ternary base matrix, got p=" +
                                    std::to_string(base.p));
    Json out;
    out["command"] = "cardinality fourier";
    out["matrix"] = matrix_path;
    out["p"] = base.p;
    out["rows"] = base.rows();
    out["length"] = 2 * base.length;
    out["residue"] = residue_text.empty() ? "all" : residue_text;
    Json counts;
    if (residue_text.empty() || residue_text == "all") {
        std::vector<BigInt> all = grain::doubled_syndrome_counts_all(base);
        for (long id = 0; id < static_cast<long>(all.size()); ++id) {
            grain::GfVec b = grain::syndrome_from_id(id, base.p, base.rows());
            counts[residue_string(b)] = json_count(all[static_cast<std::size_t>(id)]);
        }
    } else {
        grain::GfVec b = parse_residue(residue_text, base.rows(), base.p);
        counts[residue_string(b)] = json_count(grain::doubled_syndrome_count(base, b));
    }
    out["counts"] = counts;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grain-error and mineral-error correcting codes: bounds, constructions, "
                 "verification, colorings, and exact cardinalities"};
    app.require_subcommand(1);

    std::uint64_t cap = grain::kDefaultEnumerationCap;
    app.add_option("--cap", cap, "enumeration budget in loop iterations")
        ->capture_default_str();

    int rc = 0;

    // bound
    auto* bound = app.add_subcommand("bound", "certified upper bound on t-grain code size");
    bound->fallthrough();
    int bound_n = 0, bound_t = 1;
    bool bound_closed = false;
    bound->add_option("--n", bound_n, "word length")->required();
    bound->add_option("--t", bound_t, "error radius")->required();
    bound->add_flag("--closed-form", bound_closed, "require the closed-form value");
    bound->callback([&] { rc = run_bound(bound_n, bound_t, bound_closed); });

    // table1
    auto* table1 = app.add_subcommand("table1", "construction lower vs certified upper bounds, CSV");
    table1->fallthrough();
    int t1_min = 3, t1_max = 20;
    table1->add_option("--n-min", t1_min, "first length")->capture_default_str();
    table1->add_option("--n-max", t1_max, "last length (at most 26)")->capture_default_str();
    table1->callback([&] { rc = run_table1(t1_min, t1_max); });

    // best-group
    auto* bestg = app.add_subcommand("best-group", "largest zero-residue group code of order n");
    bestg->fallthrough();
    int bg_n = 0;
    bestg->add_option("--n", bg_n, "group order = code length")->required();
    bestg->callback([&] { rc = run_best_group(bg_n); });

    // construct
    auto* construct = app.add_subcommand("construct", "build codebooks");
    construct->require_subcommand(1);
    construct->fallthrough();

    auto* cg = construct->add_subcommand("group", "group-sum code over a finite abelian group");
    cg->fallthrough();
    std::string cg_group;
    int cg_residue = 0;
    std::string cg_out;
    cg->add_option("--group", cg_group, "group spec, e.g. Z3xZ6")->required();
    cg->add_option("--residue", cg_residue, "group element index")->capture_default_str();
    cg->add_option("--out", cg_out, "codebook output path");
    cg->callback([&] { rc = run_construct_group(cg_group, cg_residue, cg_out, cap); });

    auto* cgam = construct->add_subcommand("gamma", "pair coloring composed with a ternary outer code");
    cgam->fallthrough();
    std::string cgam_outer, cgam_residue, cgam_out;
    int cgam_t = 1;
    bool cgam_lift = false;
    cgam->add_option("--outer", cgam_outer, "outer code, hamming:3:2 or rep:3:5")->required();
    cgam->add_option("--t", cgam_t, "error radius")->capture_default_str();
    cgam->add_option("--residue", cgam_residue, "outer syndrome, comma separated");
    cgam->add_flag("--lift", cgam_lift, "prepend the free first bit (grain code)");
    cgam->add_option("--out", cgam_out, "codebook output path");
    cgam->callback(
        [&] { rc = run_construct_gamma(cgam_outer, cgam_t, cgam_residue, cgam_lift, cgam_out, cap); });

    auto* ccol = construct->add_subcommand("colored", "stored coloring composed with an outer code");
    ccol->fallthrough();
    std::string ccol_coloring, ccol_outer, ccol_residue, ccol_out;
    int ccol_t = 1;
    bool ccol_lift = false;
    ccol->add_option("--coloring", ccol_coloring, "coloring file")->required();
    ccol->add_option("--outer", ccol_outer, "outer code, e.g. hamming:7:2")->required();
    ccol->add_option("--t", ccol_t, "error radius")->capture_default_str();
    ccol->add_option("--residue", ccol_residue, "outer syndrome, comma separated");
    ccol->add_flag("--lift", ccol_lift, "prepend the free first bit (grain code)");
    ccol->add_option("--out", ccol_out, "codebook output path (enumerable lengths only)");
    ccol->callback([&] {
        rc = run_construct_colored(ccol_coloring, ccol_outer, ccol_t, ccol_residue, ccol_lift,
                                   ccol_out, cap);
    });

    auto* clif = construct->add_subcommand("lifted", "doubled ternary check matrix acting on bits");
    clif->fallthrough();
    std::string clif_matrix, clif_residue, clif_out;
    int clif_t = 1;
    clif->add_option("--matrix", clif_matrix, "ternary check matrix file")->required();
    clif->add_option("--t", clif_t, "designed radius of the base code")->capture_default_str();
    clif->add_option("--residue", clif_residue, "syndrome, comma separated");
    clif->add_option("--out", clif_out, "codebook output path");
    clif->callback(
        [&] { rc = run_construct_lifted(clif_matrix, clif_t, clif_residue, clif_out, cap); });

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive pairwise ball-disjointness check");
    verify->fallthrough();
    std::string v_code, v_model = "grain";
    int v_t = 1;
    verify->add_option("--code", v_code, "codebook file")->required();
    verify->add_option("--t", v_t, "error radius")->required();
    verify->add_option("--model", v_model, "grain|anchored|mineral|random")->required();
    verify->callback([&] { rc = run_verify(v_code, v_t, v_model); });

    // color
    auto* color = app.add_subcommand("color", "confusability-graph colorings");
    color->require_subcommand(1);
    color->fallthrough();

    auto* csearch = color->add_subcommand("search", "randomized greedy coloring search");
    csearch->fallthrough();
    int cs_m = 0, cs_t = 1, cs_restarts = 32, cs_threads = 1;
    std::uint64_t cs_seed = 1;
    std::string cs_out;
    csearch->add_option("--m", cs_m, "block length")->required();
    csearch->add_option("--t", cs_t, "error radius")->capture_default_str();
    csearch->add_option("--seed", cs_seed, "search seed")->capture_default_str();
    csearch->add_option("--restarts", cs_restarts, "greedy restarts")->capture_default_str();
    csearch->add_option("--threads", cs_threads, "worker thread cap")->capture_default_str();
    csearch->add_option("--out", cs_out, "coloring output path");
    csearch->callback(
        [&] { rc = run_color_search(cs_m, cs_t, cs_seed, cs_restarts, cs_threads, cs_out, cap); });

    auto* cverify = color->add_subcommand("verify", "validity check for a stored coloring");
    cverify->fallthrough();
    std::string cv_file;
    cverify->add_option("--file", cv_file, "coloring file")->required();
    cverify->callback([&] { rc = run_color_verify(cv_file, cap); });

    // cardinality
    auto* card = app.add_subcommand("cardinality", "exact code sizes without enumeration");
    card->require_subcommand(1);
    card->fallthrough();

    auto* kgam = card->add_subcommand("gamma", "pair-coloring code size from the outer weight enumerator");
    kgam->fallthrough();
    std::string kgam_outer, kgam_residue;
    int kgam_t = 1;
    bool kgam_lift = false;
    kgam->add_option("--outer", kgam_outer, "outer code, hamming:3:2 or rep:3:5")->required();
    kgam->add_option("--t", kgam_t, "error radius")->capture_default_str();
    kgam->add_option("--residue", kgam_residue, "outer syndrome, comma separated");
    kgam->add_flag("--lift", kgam_lift, "also report the doubled grain-code size");
    kgam->callback(
        [&] { rc = run_cardinality_gamma(kgam_outer, kgam_t, kgam_residue, kgam_lift, cap); });

    auto* kcol = card->add_subcommand("colored", "colored-code size through the dual sum");
    kcol->fallthrough();
    std::string kcol_coloring, kcol_outer, kcol_residue;
    int kcol_t = 1;
    kcol->add_option("--coloring", kcol_coloring, "coloring file")->required();
    kcol->add_option("--outer", kcol_outer, "outer code, e.g. hamming:7:2")->required();
    kcol->add_option("--t", kcol_t, "error radius")->capture_default_str();
    kcol->add_option("--residue", kcol_residue, "outer syndrome, comma separated");
    kcol->callback(
        [&] { rc = run_cardinality_colored(kcol_coloring, kcol_outer, kcol_t, kcol_residue); });

    auto* kfou = card->add_subcommand("fourier", "doubled-matrix syndrome counts via character sums");
    kfou->fallthrough();
    std::string kfou_matrix, kfou_residue = "all";
    int kfou_t = 1;
    kfou->add_option("--matrix", kfou_matrix, "ternary check matrix file")->required();
    kfou->add_option("--t", kfou_t, "designed radius of the base code")->capture_default_str();
    kfou->add_option("--residue", kfou_residue, "all, or one syndrome comma separated")
        ->capture_default_str();
    kfou->callback([&] { rc = run_cardinality_fourier(kfou_matrix, kfou_t, kfou_residue); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const grain::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
