#include "latq/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>

#include "latq/charvec.hpp"
#include "latq/glue.hpp"
#include "latq/io.hpp"
#include "latq/linking.hpp"
#include "latq/surgery.hpp"

namespace latq {

namespace {

using nlohmann::json;

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

json covector_json(const Covector& c) {
    json j;
    j["coords"] = c.coords;
    j["square"] = rat_str(c.square);
    return j;
}

Knot parse_knot(const std::string& spec) {
    if (spec == "unknot") return Knot::unknot();
    auto split_nums = [](const std::string& s) {
        std::vector<long long> out;
        std::string tok;
        std::istringstream in(s);
        while (std::getline(in, tok, ',')) {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad number in knot spec: " + tok);
            out.push_back(v);
        }
        return out;
    };
    if (spec.rfind("torus:", 0) == 0) {
        auto nums = split_nums(spec.substr(6));
        if (nums.size() != 2) throw std::invalid_argument("torus knot spec needs two parameters");
        return Knot::torus(nums[0], nums[1]);
    }
    if (spec.rfind("exponents:", 0) == 0) {
        std::string rest = spec.substr(10);
        if (rest.empty()) return Knot::unknot();
        return Knot::from_exponents(split_nums(rest));
    }
    throw std::invalid_argument("knot spec must be torus:p,q or exponents:n1,n2,... or unknot");
}

json obstruction_json(const ObstructionReport& rep) {
    json j;
    j["knot"] = rep.knot;
    j["n"] = rep.n;
    j["delta"] = rep.delta;
    j["bound"] = rat_str(rep.bound);
    j["max4d"] = rat_str(rep.max_four_d);
    j["verdict"] = rep.obstructed ? "obstructed" : "not_obstructed";
    j["hypothesis"] = rep.hypothesis;
    if (!rep.note.empty()) j["note"] = rep.note;
    if (rep.squarefree_r > 0) j["squarefree_r"] = rep.squarefree_r;
    if (rep.obstructed) j["extends_to_smaller_n"] = true;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["i"] = r.i;
        row["t_i"] = r.t;
        row["d"] = rat_str(r.d);
        row["4d"] = rat_str(r.four_d);
        rows.push_back(std::move(row));
    }
    j["witnesses"] = std::move(rows);
    return j;
}

json chain_json(const GlueChain& chain) {
    json steps = json::array();
    for (const auto& s : chain.steps) {
        json st;
        st["prime"] = s.prime.get_str();
        st["index"] = s.index.get_str();
        json vecs = json::array();
        for (const auto& v : s.vectors) {
            json vec = json::array();
            for (const auto& c : v) vec.push_back(rat_str(c));
            vecs.push_back(std::move(vec));
        }
        st["vectors"] = std::move(vecs);
        steps.push_back(std::move(st));
    }
    return steps;
}

struct Options {
    std::string gram_file;
    std::string knot_spec;
    long long n = 0;
    std::string range;
    std::string format = "text";
    long long cap = 100000;
    long long nmax = 0;
    std::string pq;
};

std::pair<long long, long long> parse_range(const std::string& r) {
    auto pos = r.find("..");
    if (pos == std::string::npos) throw std::invalid_argument("range must look like A..B");
    size_t p1 = 0, p2 = 0;
    long long a = std::stoll(r.substr(0, pos), &p1);
    long long b = std::stoll(r.substr(pos + 2), &p2);
    if (p1 != pos || p2 != r.size() - pos - 2 || a > b) throw std::invalid_argument("range must look like A..B");
    return {a, b};
}

std::pair<long long, long long> parse_pq(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) throw std::invalid_argument("--pq must look like p,q");
    size_t p1 = 0, p2 = 0;
    long long p = std::stoll(s.substr(0, pos), &p1);
    long long q = std::stoll(s.substr(pos + 1), &p2);
    if (p1 != pos || p2 != s.size() - pos - 1) throw std::invalid_argument("--pq must look like p,q");
    return {p, q};
}

json run_min_char(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    Covector c = min_characteristic(g);
    json j;
    j["command"] = "min-char";
    j["n"] = g.rank();
    j["gram"] = gram_to_json(g);
    j["minimizer"] = covector_json(c);
    j["square"] = rat_str(c.square);
    return j;
}

json run_check_bound(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    BoundReport r = check_main_bound(g);
    json j;
    j["command"] = "check-bound";
    j["n"] = g.rank();
    j["gram"] = gram_to_json(g);
    j["min_square"] = rat_str(r.min_square);
    j["bound"] = rat_str(r.bound);
    j["delta"] = r.delta.get_str();
    j["delta_parity"] = r.delta_odd ? "odd" : "even";
    j["extremal"] = r.extremal;
    j["minimizer"] = covector_json(r.minimizer);
    return j;
}

json run_congruence(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    json j;
    j["command"] = "congruence";
    j["n"] = g.rank();
    j["gram"] = gram_to_json(g);
    j["sigma"] = g.signature_diff();
    Int delta = g.abs_det();
    j["delta"] = delta.get_str();
    j["mod4_residue"] = rat_str(congruence_mod4(g));
    j["mod4_modulus"] = rat_str(make_rat(4, delta));
    if (delta % 2 != 0) {
        j["mod8_residue"] = rat_str(congruence_mod8(g));
        j["mod8_modulus"] = rat_str(make_rat(8, delta));
    }
    return j;
}

json run_linking(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    DiscriminantGroup dg = discriminant_group(g);
    json j;
    j["command"] = "linking";
    j["n"] = g.rank();
    j["gram"] = gram_to_json(g);
    json orders = json::array();
    for (const auto& o : dg.orders) orders.push_back(o.get_str());
    j["orders"] = std::move(orders);
    json blocks = json::array();
    for (const auto& b : decompose(g)) {
        json bj;
        bj["kind"] = block_kind_name(b.kind);
        bj["prime"] = b.prime.get_str();
        bj["exponent"] = b.exponent;
        bj["gen_square"] = rat_str(b.gen_square);
        if (b.is_rank2()) bj["gen_square2"] = rat_str(b.gen_square2);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

json run_gauss(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    GaussSumResult r = gauss_sum_milgram(g, opt.cap);
    json j;
    j["command"] = "gauss";
    j["n"] = g.rank();
    j["gram"] = gram_to_json(g);
    j["delta"] = g.abs_det().get_str();
    j["sigma"] = g.signature_diff();
    j["value_re"] = fixed12(r.value.real());
    j["value_im"] = fixed12(r.value.imag());
    j["predicted_re"] = fixed12(r.predicted.real());
    j["predicted_im"] = fixed12(r.predicted.imag());
    j["milgram_ok"] = r.milgram_ok;
    return j;
}

json run_glue4(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    EmbedFourResult r = embed_four_copies(g);
    json j;
    j["command"] = "glue4";
    j["gram"] = gram_to_json(g);
    j["rank"] = r.unimodular.rank();
    j["det"] = r.unimodular.determinant().get_si();
    j["index"] = r.index.get_si();
    j["group_index"] = r.group_index.get_str();
    j["quaternionic"] = verify_quaternionic(r.unimodular, r.action);
    j["even"] = r.unimodular.is_even();
    j["chain"] = {{"stage1", chain_json(r.stage1)}, {"stage2", chain_json(r.stage2)}, {"stage3", chain_json(r.stage3)}};
    return j;
}

json run_glue2(const Options& opt) {
    SymGram g = load_gram_file(opt.gram_file);
    EmbedTwoResult r = embed_two_copies(g);
    json j;
    j["command"] = "glue2";
    j["gram"] = gram_to_json(g);
    j["ok"] = r.ok;
    if (r.ok) {
        j["rank"] = r.lattice->gram.rank();
        j["det"] = r.lattice->gram.determinant().get_si();
        j["index"] = r.lattice->index.get_str();
    } else {
        j["certificate_prime"] = r.certificate_prime.get_str();
    }
    return j;
}

json run_surgery_d(const Options& opt) {
    if (opt.n == 0) throw std::invalid_argument("--n is required and must be nonzero");
    Knot k = parse_knot(opt.knot_spec);
    json j;
    j["command"] = "surgery-d";
    j["knot"] = k.name;
    j["n"] = opt.n;
    json rows = json::array();
    long long absn = std::llabs(opt.n);
    for (long long i = 0; 2 * i <= absn; ++i) {
        json row;
        row["i"] = i;
        row["t_i"] = torsion_from_poly(k.poly, i);
        row["d"] = rat_str(d_surgery(k, opt.n, i));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j;
}

json run_obstruct(const Options& opt) {
    Knot k = parse_knot(opt.knot_spec);
    if (!opt.range.empty()) {
        auto [a, b] = parse_range(opt.range);
        if (a < 1) throw std::invalid_argument("range must start at 1 or above");
        json j;
        j["command"] = "obstruct";
        j["knot"] = k.name;
        j["range"] = opt.range;
        json rows = json::array();
        for (long long n = a; n <= b; ++n) {
            ObstructionReport rep = obstruct_integer_surgery(k, n);
            ObstructionReport sf = obstruct_squarefree(k, n);
            json row;
            row["n"] = n;
            row["bound"] = rat_str(rep.bound);
            row["max4d"] = rat_str(rep.max_four_d);
            row["verdict"] = rep.obstructed ? "obstructed" : "not_obstructed";
            row["squarefree_verdict"] = sf.obstructed ? "obstructed" : "not_obstructed";
            rows.push_back(std::move(row));
        }
        j["results"] = std::move(rows);
        return j;
    }
    if (opt.n < 1) throw std::invalid_argument("--n must be at least 1 (or use --range)");
    ObstructionReport rep = obstruct_integer_surgery(k, opt.n);
    json j = obstruction_json(rep);
    j["command"] = "obstruct";
    ObstructionReport sf = obstruct_squarefree(k, opt.n);
    j["squarefree"] = {{"r", sf.squarefree_r},
                       {"bound", rat_str(sf.bound)},
                       {"verdict", sf.obstructed ? "obstructed" : "not_obstructed"}};
    return j;
}

json run_torus_table(const Options& opt) {
    auto [p, q] = parse_pq(opt.pq);
    Knot k = Knot::torus(p, q);
    TorusRange range = torus_obstruction_range(p, q);
    long long nmax = opt.nmax > 0 ? opt.nmax : p * q - 1;
    json j;
    j["command"] = "torus-table";
    j["p"] = p;
    j["q"] = q;
    json rows = json::array();
    for (long long n = 1; n <= nmax; ++n) {
        ObstructionReport rep = obstruct_integer_surgery(k, n);
        json row;
        row["n"] = n;
        row["bound"] = rat_str(rep.bound);
        row["max4d"] = rat_str(rep.max_four_d);
        row["verdict"] = rep.obstructed ? "obstructed" : "not_obstructed";
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    j["exact_max_n"] = range.exact_max_n;
    j["closed_form_max_n"] = range.closed_form_max_n;
    j["headline_max_n"] = range.headline_max_n;
    j["obstructed_range"] = "1.." + std::to_string(range.exact_max_n);
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice invariants: characteristic covectors, linking pairings, "
                 "unimodular glueing and surgery obstructions"};
    app.require_subcommand(1);
    Options opt;

    auto add_gram = [&](CLI::App* sub) { sub->add_option("--gram", opt.gram_file, "Gram matrix file")->required(); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    json (*handler)(const Options&) = nullptr;
    auto reg = [&](const char* name, const char* desc, json (*fn)(const Options&), bool gram) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (gram) add_gram(sub);
        add_format(sub);
        sub->callback([&handler, fn]() { handler = fn; });
        return sub;
    };

    reg("min-char", "minimal characteristic covector of a positive-definite form", run_min_char, true);
    reg("check-bound", "minimal square against the rank/determinant bound", run_check_bound, true);
    reg("congruence", "residue class of characteristic squares", run_congruence, true);
    reg("linking", "discriminant group and linking-pairing blocks", run_linking, true);
    CLI::App* gauss = reg("gauss", "discriminant Gauss sum and signature check", run_gauss, true);
    gauss->add_option("--cap", opt.cap, "largest allowed discriminant-group size");
    reg("glue4", "embed four copies into a unimodular lattice", run_glue4, true);
    reg("glue2", "embed two copies into a unimodular lattice if possible", run_glue2, true);
    CLI::App* sd = reg("surgery-d", "d-invariants of +-n surgery on an L-space knot", run_surgery_d, false);
    sd->add_option("--knot", opt.knot_spec, "torus:p,q | exponents:n1,n2,... | unknot")->required();
    sd->add_option("--n", opt.n, "surgery coefficient (signed)")->required();
    CLI::App* ob = reg("obstruct", "negative-definite bounding obstruction", run_obstruct, false);
    ob->add_option("--knot", opt.knot_spec, "torus:p,q | exponents:n1,n2,... | unknot")->required();
    ob->add_option("--n", opt.n, "surgery coefficient");
    ob->add_option("--range", opt.range, "surgery coefficients A..B");
    CLI::App* tt = reg("torus-table", "obstruction table and range bounds for a torus knot", run_torus_table, false);
    tt->add_option("--pq", opt.pq, "torus parameters p,q")->required();
    tt->add_option("--nmax", opt.nmax, "largest surgery coefficient in the table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        json report = handler(opt);
        out << emit(report, opt.format);
        return 0;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace latq
