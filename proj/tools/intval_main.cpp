/*
   Copyright 2026 The intval authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "intval/intval.hpp"
#include "intval/serialize.hpp"

using namespace intval;
using nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
    std::uint64_t max_enum = kDefaultEnumBound;
    std::uint64_t seed = 0;  // reserved for randomized sweeps; all commands are deterministic
};

class Timer {
   public:
    std::int64_t ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json make_report(const std::string& op, json inputs, const std::string& verdict,
                 std::optional<std::string> certificate_poly, std::optional<std::string> counterexample,
                 std::uint64_t enum_count, std::int64_t wall_time_ms) {
    json j;
    j["op"] = op;
    j["inputs"] = std::move(inputs);
    j["verdict"] = verdict;
    j["certificate_poly"] = certificate_poly ? json(*certificate_poly) : json(nullptr);
    j["counterexample"] = counterexample ? json(*counterexample) : json(nullptr);
    j["enum_count"] = enum_count;
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

std::pair<std::string, std::string> split_builtin(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return {name, ""};
    return {name.substr(0, colon), name.substr(colon + 1)};
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t next = s.find(',', i);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoull(s.substr(i, next - i)));
        i = next + 1;
    }
    if (out.empty()) fail(ErrorCode::InvalidInput, "expected a comma-separated list of integers");
    return out;
}

// Builtin algebras over a caller-chosen coefficient ring. The centralizer
// exists only over a field; the quotient constructions come from Z and are
// mapped across.
template <Ring R>
StructAlgebra<R> builtin_algebra(const std::string& name, const R& ring, std::uint64_t max_enum) {
    auto [kind, args] = split_builtin(name);
    if (kind == "z") return alg_matrix(ring, 1);
    if (kind == "zi") {
        auto zi = alg_quotient_ring(parse_int_poly("X^2+1"));
        if constexpr (std::same_as<R, IntegerRing>)
            return zi;
        else
            return map_algebra(zi, ring);
    }
    if (kind == "matrix") {
        std::size_t n = std::stoull(args);
        return alg_matrix(ring, n);
    }
    if (kind == "quaternion") return alg_quaternion(ring);
    if (kind == "dsum") {
        std::size_t k = std::stoull(args);
        if (k < 1) fail(ErrorCode::InvalidInput, "dsum needs at least one summand");
        auto acc = alg_matrix(ring, 1);
        for (std::size_t i = 1; i < k; ++i) acc = alg_direct_sum(acc, alg_matrix(ring, 1));
        return acc;
    }
    if (kind == "stabilizer") {
        auto nm = parse_u64_list(args);
        if (nm.size() != 2) fail(ErrorCode::InvalidInput, "stabilizer:n,m");
        return alg_stabilizer(ring, nm[0], nm[1]);
    }
    if (kind == "centralizer") {
        if constexpr (FiniteRing<R>) {
            auto nl = parse_u64_list(args);
            if (nl.size() != 2) fail(ErrorCode::InvalidInput, "centralizer:n,l");
            if (!ring.is_field()) fail(ErrorCode::NotAField, "centralizer requires a field coefficient ring");
            return alg_centralizer(ring, nl[0], nl[1], max_enum);
        } else {
            fail(ErrorCode::InvalidInput, "centralizer is only defined over a finite field; use it with --fq");
        }
    }
    if (kind == "quotient") {
        if (args.empty()) fail(ErrorCode::InvalidInput, "quotient:POLY needs a monic polynomial");
        auto q = alg_quotient_ring(parse_int_poly(args));
        if constexpr (std::same_as<R, IntegerRing>)
            return q;
        else
            return map_algebra(q, ring);
    }
    fail(ErrorCode::InvalidInput, "unknown builtin algebra '" + name + "'");
}

ZAlgebra load_z_algebra(const std::string& builtin, const std::string& file, std::uint64_t max_enum) {
    if (!builtin.empty() && !file.empty()) fail(ErrorCode::InvalidInput, "give either --builtin or --algebra");
    if (!builtin.empty()) return builtin_algebra(builtin, IntegerRing{}, max_enum);
    if (file.empty()) fail(ErrorCode::InvalidInput, "an algebra is required (--builtin or --algebra)");
    std::ifstream in(file);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open algebra file " + file);
    json j = json::parse(in);
    auto any = algebra_from_json(j);
    if (auto* z = std::get_if<ZAlgebra>(&any)) return std::move(*z);
    fail(ErrorCode::InvalidInput, "this command needs an algebra over Z");
}

std::pair<std::uint64_t, unsigned> parse_fq(const std::string& s) {
    auto parts = parse_u64_list(s);
    if (parts.size() == 1) return {parts[0], 1};
    if (parts.size() == 2) return {parts[0], static_cast<unsigned>(parts[1])};
    fail(ErrorCode::InvalidInput, "--fq expects p or p,e");
}

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_phi(const Options& opt, std::uint64_t q, unsigned n) {
    Timer timer;
    IntPoly f = phi(q, n);
    std::string pretty = format_poly(f);
    emit(opt, make_report("phi", {{"q", q}, {"n", n}}, "ok", pretty, std::nullopt, 0, timer.ms()), pretty + "\n");
    return 0;
}

int cmd_nullideal(const Options& opt, const std::string& builtin, const std::string& file, const std::string& fq) {
    Timer timer;
    std::string pretty;
    std::uint64_t count = 0;
    std::string algebra_name;
    if (!fq.empty()) {
        auto [p, e] = parse_fq(fq);
        FqCtx field = make_fq(p, e, opt.max_enum);
        StructAlgebra<FqCtx> A = [&] {
            if (!builtin.empty()) return builtin_algebra(builtin, field, opt.max_enum);
            auto Az = load_z_algebra("", file, opt.max_enum);
            return map_algebra(Az, field);
        }();
        auto gen = null_ideal_field(A, opt.max_enum);
        pretty = format_poly(gen.generator);
        count = gen.enum_count;
        algebra_name = A.describe();
    } else {
        if (file.empty()) fail(ErrorCode::InvalidInput, "nullideal needs --fq p,e (or an algebra file over a field)");
        std::ifstream in(file);
        if (!in) fail(ErrorCode::InvalidInput, "cannot open algebra file " + file);
        auto any = algebra_from_json(json::parse(in));
        if (auto* am = std::get_if<StructAlgebra<ModRing>>(&any)) {
            auto gen = null_ideal_field(*am, opt.max_enum);
            pretty = format_poly(gen.generator);
            count = gen.enum_count;
            algebra_name = am->describe();
        } else if (auto* af = std::get_if<StructAlgebra<FqCtx>>(&any)) {
            auto gen = null_ideal_field(*af, opt.max_enum);
            pretty = format_poly(gen.generator);
            count = gen.enum_count;
            algebra_name = af->describe();
        } else {
            fail(ErrorCode::InvalidInput, "an algebra over Z needs --fq to pick the residue field");
        }
    }
    emit(opt,
         make_report("nullideal", {{"algebra", algebra_name}, {"fq", fq}}, "ok", pretty, std::nullopt, count,
                     timer.ms()),
         pretty + "\n");
    return 0;
}

int cmd_member(const Options& opt, const std::string& g_text, const std::string& phi_qn, const ZZ& d,
               const std::string& builtin, const std::string& file) {
    Timer timer;
    IntPoly g = [&] {
        if (!phi_qn.empty()) {
            auto qn = parse_u64_list(phi_qn);
            if (qn.size() != 2) fail(ErrorCode::InvalidInput, "--phi expects q,n");
            return phi(qn[0], static_cast<unsigned>(qn[1]));
        }
        if (g_text.empty()) fail(ErrorCode::InvalidInput, "a numerator is required (--g or --phi)");
        return parse_int_poly(g_text);
    }();
    auto A = load_z_algebra(builtin, file, opt.max_enum);
    RatPoly f(g, d);
    auto verdict = int_member(f, A, opt.max_enum);
    std::optional<std::string> counter;
    std::string text;
    if (verdict.member) {
        text = "MEMBER\n";
    } else {
        std::string elem = A.elem_str(*verdict.counterexample);
        counter = elem;
        text = "NOT MEMBER, counterexample " + elem + "\n";
    }
    emit(opt,
         make_report("member", {{"f", f.str()}, {"algebra", A.describe()}}, verdict.member ? "member" : "not_member",
                     f.str(), counter, verdict.enum_count, timer.ms()),
         text);
    return verdict.member ? 0 : 1;
}

int cmd_witness(const Options& opt, std::uint64_t p, unsigned e, unsigned n) {
    Timer timer;
    auto result = witness(WitnessSpec(p, e, n), opt.max_enum);
    std::string pretty = result.certificate.str();
    std::string text = pretty + "\nVERIFIED over " + std::to_string(result.enum_count) + " elements\n";
    emit(opt,
         make_report("witness", {{"p", p}, {"e", e}, {"n", n}}, "verified", pretty, std::nullopt, result.enum_count,
                     timer.ms()),
         text);
    return 0;
}

int cmd_split(const Options& opt, const std::string& builtin, const std::string& file, std::uint64_t p) {
    Timer timer;
    auto A = load_z_algebra(builtin, file, opt.max_enum);
    auto verdict = is_split_at(A, p, opt.max_enum);
    std::optional<std::string> counter;
    if (verdict.witness_elem) {
        std::string s;
        for (std::size_t i = 0; i < verdict.witness_elem->size(); ++i) {
            if (i) s += ",";
            s += (*verdict.witness_elem)[i].str();
        }
        counter = s;
    }
    std::string text = verdict.split ? "SPLIT\n" : "NOT SPLIT (" + verdict.reason + ")\n";
    emit(opt,
         make_report("split", {{"algebra", A.describe()}, {"p", p}}, verdict.split ? "split" : "not_split",
                     std::nullopt, counter, verdict.enum_count, timer.ms()),
         text);
    return verdict.split ? 0 : 1;
}

int cmd_compare(const Options& opt, const std::string& a_spec, const std::string& b_spec, const std::string& ds,
                std::optional<unsigned> bound) {
    Timer timer;
    auto load = [&](const std::string& spec) {
        if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_z_algebra("", spec, opt.max_enum);
        return load_z_algebra(spec, "", opt.max_enum);
    };
    auto A = load(a_spec);
    auto B = load(b_spec);
    auto moduli = parse_u64_list(ds);
    auto report = compare_null_ideals(A, B, moduli, bound, opt.max_enum);
    std::string text;
    json details = json::array();
    std::optional<std::string> first_sep;
    for (const auto& per : report.per_modulus) {
        std::string line = "d=" + std::to_string(per.d) + ": ";
        if (per.equal) {
            line += "EQUAL (degree bound " + std::to_string(per.degree_bound) + ")";
        } else {
            line += "UNEQUAL, separator " + format_poly(*per.separator) + " kills " + per.separator_side + " only";
            if (!first_sep) first_sep = format_poly(*per.separator);
        }
        text += line + "\n";
        details.push_back({{"d", per.d},
                           {"equal", per.equal},
                           {"degree_bound", per.degree_bound},
                           {"separator", per.separator ? json(format_poly(*per.separator)) : json(nullptr)}});
    }
    json j = make_report("compare", {{"a", A.describe()}, {"b", B.describe()}, {"ds", ds}},
                         report.all_equal ? "equal" : "unequal", first_sep, std::nullopt, 0, timer.ms());
    j["details"] = details;
    emit(opt, j, text);
    return report.all_equal ? 0 : 1;
}

int cmd_quatsplit(const Options& opt, std::uint64_t p, unsigned k) {
    Timer timer;
    auto split = hensel_split_quaternion(p, k);
    std::string text = "a=" + std::to_string(split.a) + ", b=" + std::to_string(split.b) + "\n";
    text += "i -> " + format_matrix(split.images[1]) + "\n";
    text += "j -> " + format_matrix(split.images[2]) + "\n";
    text += "k -> " + format_matrix(split.images[3]) + "\n";
    text += "ISOMORPHISM VERIFIED\n";
    json j = make_report("quatsplit", {{"p", p}, {"k", k}}, "verified", std::nullopt, std::nullopt,
                         split.checked_products, timer.ms());
    j["details"] = {{"a", split.a},
                    {"b", split.b},
                    {"modulus", split.modulus},
                    {"image_i", format_matrix(split.images[1])},
                    {"image_j", format_matrix(split.images[2])},
                    {"image_k", format_matrix(split.images[3])}};
    emit(opt, j, text);
    return 0;
}

int cmd_nontrivial(const Options& opt, const std::string& builtin, const std::string& file, std::uint64_t p) {
    Timer timer;
    auto A = load_z_algebra(builtin, file, opt.max_enum);
    auto cert = nontriviality_check(A, p, opt.max_enum);
    std::string pretty = cert.certificate.str();
    std::string text = "NONTRIVIAL\ncertificate " + pretty + "\nVERIFIED over " + std::to_string(cert.enum_count) +
                       " elements\n";
    emit(opt,
         make_report("nontrivial", {{"algebra", A.describe()}, {"p", p}}, "nontrivial", pretty, std::nullopt,
                     cert.enum_count, timer.ms()),
         text);
    return 0;
}

int cmd_algebra(const Options& opt, const std::string& builtin, const std::string& fq) {
    Timer timer;
    json j;
    if (!fq.empty()) {
        auto [p, e] = parse_fq(fq);
        FqCtx field = make_fq(p, e, opt.max_enum);
        j = algebra_to_json(builtin_algebra(builtin, field, opt.max_enum));
    } else {
        j = algebra_to_json(builtin_algebra(builtin, IntegerRing{}, opt.max_enum));
    }
    (void)timer;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with integer-valued polynomials on finite-rank algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON report instead of text");
    app.add_option("--max-enum", opt.max_enum, "cap on exhaustive enumerations")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized sweeps")->capture_default_str();

    std::uint64_t q = 0, p = 0;
    unsigned n = 0, e = 0, k = 0;
    std::string builtin, file, fq, g_text, phi_qn, ds, a_spec, b_spec, d_text = "1";
    std::optional<unsigned> bound;

    auto* sc_phi = app.add_subcommand("phi", "expand the annihilating product polynomial");
    sc_phi->add_option("q", q, "prime power")->required();
    sc_phi->add_option("n", n, "matrix size")->required();

    auto* sc_null = app.add_subcommand("nullideal", "monic generator of the null ideal over a finite field");
    sc_null->add_option("--builtin", builtin, "builtin algebra name");
    sc_null->add_option("--algebra", file, "algebra-spec JSON file");
    sc_null->add_option("--fq", fq, "field as p or p,e");

    auto* sc_member = app.add_subcommand("member", "is g/d integer-valued on the algebra?");
    sc_member->add_option("--g", g_text, "numerator polynomial");
    sc_member->add_option("--phi", phi_qn, "use phi(q,n) as numerator, q,n");
    sc_member->add_option("--d", d_text, "denominator")->required();
    sc_member->add_option("--builtin", builtin, "builtin algebra name");
    sc_member->add_option("--algebra", file, "algebra-spec JSON file");

    auto* sc_witness = app.add_subcommand("witness", "nontriviality witness for n x n integer matrices");
    sc_witness->add_option("p", p, "prime")->required();
    sc_witness->add_option("e", e, "prime-power exponent")->required();
    sc_witness->add_option("n", n, "matrix size")->required();

    auto* sc_split = app.add_subcommand("split", "does A/pA split into copies of the prime field?");
    sc_split->add_option("--builtin", builtin, "builtin algebra name");
    sc_split->add_option("--algebra", file, "algebra-spec JSON file");
    sc_split->add_option("--p", p, "prime")->required();

    auto* sc_compare = app.add_subcommand("compare", "compare null sets of two algebras at given moduli");
    sc_compare->add_option("--a", a_spec, "first algebra (builtin or .json file)")->required();
    sc_compare->add_option("--b", b_spec, "second algebra (builtin or .json file)")->required();
    sc_compare->add_option("--ds", ds, "comma-separated moduli")->required();
    sc_compare->add_option("--bound", bound, "degree bound for prime-power moduli");

    auto* sc_quat = app.add_subcommand("quatsplit", "explicit quaternion/matrix isomorphism mod p^k");
    sc_quat->add_option("p", p, "odd prime")->required();
    sc_quat->add_option("k", k, "power")->required();

    auto* sc_nontriv = app.add_subcommand("nontrivial", "certificate that denominators p appear on the algebra");
    sc_nontriv->add_option("--builtin", builtin, "builtin algebra name");
    sc_nontriv->add_option("--algebra", file, "algebra-spec JSON file");
    sc_nontriv->add_option("--p", p, "prime")->required();

    auto* sc_algebra = app.add_subcommand("algebra", "emit a builtin algebra as spec JSON");
    sc_algebra->add_option("--builtin", builtin, "builtin algebra name")->required();
    sc_algebra->add_option("--fq", fq, "field as p or p,e");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sc_phi->parsed()) return cmd_phi(opt, q, n);
        if (sc_null->parsed()) return cmd_nullideal(opt, builtin, file, fq);
        if (sc_member->parsed()) return cmd_member(opt, g_text, phi_qn, ZZ(d_text), builtin, file);
        if (sc_witness->parsed()) return cmd_witness(opt, p, e, n);
        if (sc_split->parsed()) return cmd_split(opt, builtin, file, p);
        if (sc_compare->parsed()) return cmd_compare(opt, a_spec, b_spec, ds, bound);
        if (sc_quat->parsed()) return cmd_quatsplit(opt, p, k);
        if (sc_nontriv->parsed()) return cmd_nontrivial(opt, builtin, file, p);
        if (sc_algebra->parsed()) return cmd_algebra(opt, builtin, fq);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return err.code() == ErrorCode::EnumerationTooLarge ? 3 : 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
