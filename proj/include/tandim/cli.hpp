#pragma once

/// @file cli.hpp
/// @brief Command execution for the `tandim` tool: configuration, JSON inputs, report documents.

#include "tandim/suites.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace tandim {

inline constexpr const char* report_schema = "tandim.report/1";
inline constexpr const char* input_schema = "tandim.input/1";

struct RunConfig {
    std::string command;
    std::string category;
    std::string structure;
    std::string endofunctor;
    std::string dimension;
    std::string monoid;
    std::uint64_t seed = default_seed;
    std::size_t budget = 150;
    std::size_t depth = 2;
    std::size_t max_card = 2;
    std::vector<std::string> inputs;
    std::string out;
    std::string format = "json";

    Json to_json() const {
        Json j{{"command", command}};
        if (!category.empty()) j["category"] = category;
        if (!structure.empty()) j["structure"] = structure;
        if (!endofunctor.empty()) j["endofunctor"] = endofunctor;
        if (!dimension.empty()) j["dim"] = dimension;
        if (!monoid.empty()) j["monoid"] = monoid;
        j["seed"] = seed;
        j["budget"] = budget;
        j["depth"] = depth;
        j["max-card"] = max_card;
        if (!inputs.empty()) j["in"] = inputs;
        return j;
    }
};

struct RunResult {
    int exit_code = 0;
    Json document;
    std::string summary;
};

namespace detail {

inline std::string where_in(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + where_in(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
    }
}

/// Field accessors that name the offending path.
class Fields {
public:
    Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail("expected an object");
    }
    [[noreturn]] void fail(const std::string& what) const { throw UsageError("field '" + path_ + "': " + what); }

    const Json& at(const std::string& key) const {
        if (!j_.contains(key)) throw UsageError("field '" + sub(key) + "': missing");
        return j_.at(key);
    }
    bool has(const std::string& key) const { return j_.contains(key); }
    std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    std::string str(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_string()) throw UsageError("field '" + sub(key) + "': expected a string");
        return v.get<std::string>();
    }
    std::size_t count(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_number_unsigned()) throw UsageError("field '" + sub(key) + "': expected a non-negative integer");
        return v.get<std::size_t>();
    }
    std::vector<std::string> strings(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_array()) throw UsageError("field '" + sub(key) + "': expected an array of strings");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string())
                throw UsageError("field '" + sub(key) + "[" + std::to_string(i) + "]': expected a string");
            out.push_back(v[i].get<std::string>());
        }
        return out;
    }
    std::vector<std::vector<std::string>> string_rows(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_array()) throw UsageError("field '" + sub(key) + "': expected an array of rows");
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string p = sub(key) + "[" + std::to_string(i) + "]";
            if (!v[i].is_array()) throw UsageError("field '" + p + "': expected an array of strings");
            std::vector<std::string> row;
            for (std::size_t k = 0; k < v[i].size(); ++k) {
                if (!v[i][k].is_string())
                    throw UsageError("field '" + p + "[" + std::to_string(k) + "]': expected a string");
                row.push_back(v[i][k].get<std::string>());
            }
            out.push_back(std::move(row));
        }
        return out;
    }
    std::vector<std::vector<long long>> int_rows(const std::string& key) const {
        const auto& v = at(key);
        if (!v.is_array()) throw UsageError("field '" + sub(key) + "': expected an array of rows");
        std::vector<std::vector<long long>> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string p = sub(key) + "[" + std::to_string(i) + "]";
            if (!v[i].is_array()) throw UsageError("field '" + p + "': expected an array of integers");
            std::vector<long long> row;
            for (std::size_t k = 0; k < v[i].size(); ++k) {
                if (!v[i][k].is_number_integer())
                    throw UsageError("field '" + p + "[" + std::to_string(k) + "]': expected an integer");
                row.push_back(v[i][k].get<long long>());
            }
            out.push_back(std::move(row));
        }
        return out;
    }
    Fields object(const std::string& key) const { return Fields(at(key), sub(key)); }

private:
    const Json& j_;
    std::string path_;
};

inline void require_schema(const Json& j, const std::string& path) {
    Fields f(j, "");
    if (!f.has("schema")) throw UsageError(path + ": field 'schema': missing (expected \"" + input_schema + "\")");
    if (f.str("schema") != input_schema)
        throw UsageError(path + ": field 'schema': expected \"" + std::string(input_schema) + "\"");
}

inline IntMatrix matrix_from(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    for (const auto& r : rows)
        if (r.size() != cols) throw UsageError("matrix rows have different lengths");
    return IntMatrix::from_rows(rows, cols);
}

inline std::string big_list(const std::vector<BigInt>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

inline Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline FinSetObj finset_from(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return FinSetObj::range(j.get<std::size_t>());
    if (j.is_array()) {
        std::vector<std::string> l;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_string())
                throw UsageError("field '" + path + "[" + std::to_string(i) + "]': expected a string");
            l.push_back(j[i].get<std::string>());
        }
        return FinSetObj(std::move(l));
    }
    throw UsageError("field '" + path + "': expected a size or an array of labels");
}

inline FinFn function_from(const Fields& f) {
    auto dom = finset_from(f.at("dom"), f.sub("dom"));
    auto cod = finset_from(f.at("cod"), f.sub("cod"));
    const auto& t = f.at("table");
    if (!t.is_array()) f.fail("'table' must be an array");
    std::vector<std::size_t> tab;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_number_unsigned())
            throw UsageError("field '" + f.sub("table") + "[" + std::to_string(i) + "]': expected an index");
        tab.push_back(t[i].get<std::size_t>());
    }
    FinFn fn{dom, cod, tab};
    if (auto e = FinSet{}.validate(fn)) f.fail(*e);
    return fn;
}

inline Json fn_json(const FinFn& f) {
    return Json{{"dom", f.dom.labels()}, {"cod", f.cod.labels()}, {"table", f.table}};
}

inline SimplicialComplex complex_from(const Fields& f) {
    auto labels = f.strings("labels");
    const auto& facets = f.at("facets");
    if (!facets.is_array()) f.fail("'facets' must be an array");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string p = f.sub("facets") + "[" + std::to_string(i) + "]";
        if (!facets[i].is_array()) throw UsageError("field '" + p + "': expected an array");
        Simplex s;
        for (std::size_t k = 0; k < facets[i].size(); ++k) {
            const auto& v = facets[i][k];
            const std::string q = p + "[" + std::to_string(k) + "]";
            if (v.is_number_unsigned()) {
                if (v.get<std::size_t>() >= labels.size()) throw UsageError("field '" + q + "': vertex out of range");
                s.push_back(v.get<std::size_t>());
            } else if (v.is_string()) {
                auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
                if (it == labels.end()) throw UsageError("field '" + q + "': unknown vertex label");
                s.push_back(static_cast<std::size_t>(it - labels.begin()));
            } else {
                throw UsageError("field '" + q + "': expected a vertex index or label");
            }
        }
        out.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(labels), std::move(out));
}

inline ViolationReport run_betti(const Json& j) {
    Fields f(j, "");
    auto K = complex_from(f.object("complex"));
    ViolationReport rep("betti numbers");
    auto b = betti(K);
    Json seq = b;
    auto [chi_b, chi_s] = euler_characteristics(K);
    rep.add("betti", Status::pass, Json{{"betti", seq}, {"dimension", K.dimension()}, {"vertices", K.vertex_count()}});
    rep.expect("euler-characteristic", chi_b == chi_s, Json::object(), "alternating betti sum = " + std::to_string(chi_b),
               "alternating face count = " + std::to_string(chi_s));
    if (f.has("expect")) {
        const auto& e = f.at("expect");
        if (!e.is_array()) throw UsageError("field 'expect': expected an array of integers");
        std::vector<std::size_t> want;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i].is_number_unsigned())
                throw UsageError("field 'expect[" + std::to_string(i) + "]': expected a non-negative integer");
            want.push_back(e[i].get<std::size_t>());
        }
        auto got = betti(K, want.empty() ? 0 : want.size() - 1);
        got.resize(want.size());
        rep.expect("matches-expected", got == want, Json{{"expected", want}, {"computed", got}});
    }
    return rep;
}

inline ViolationReport run_compute(const Json& j) {
    Fields f(j, "");
    const std::string op = f.str("op");
    ViolationReport rep("compute " + op);
    if (op == "snf") {
        auto rows = f.int_rows("matrix");
        const std::size_t cols = rows.empty() ? 0 : rows[0].size();
        auto M = matrix_from(rows, cols);
        auto snf = smith_normal_form(M);
        rep.add("smith-normal-form", Status::pass,
                Json{{"invariant-factors", big_list(snf.invariant_factors)},
                     {"rank", snf.rank},
                     {"left", matrix_json(snf.left)},
                     {"right", matrix_json(snf.right)}});
        rep.expect("left-times-matrix-times-right", snf.left * M * snf.right == snf.diagonal);
        rep.expect("left-unimodular", abs_big(determinant(snf.left)) == 1);
        rep.expect("right-unimodular", abs_big(determinant(snf.right)) == 1);
    } else if (op == "rank") {
        auto mf = f.object("module");
        const std::size_t gens = mf.count("generators");
        auto rels = mf.has("relations") ? mf.int_rows("relations") : std::vector<std::vector<long long>>{};
        IntMatrix R(gens, rels.size());
        for (std::size_t k = 0; k < rels.size(); ++k) {
            if (rels[k].size() != gens)
                throw UsageError("field 'module.relations[" + std::to_string(k) + "]': needs one entry per generator");
            for (std::size_t i = 0; i < gens; ++i) R(i, k) = rels[k][i];
        }
        long long p = 0;
        if (f.has("modulus")) {
            const auto& m = f.at("modulus");
            if (!m.is_number_unsigned()) throw UsageError("field 'modulus': expected 0 or a prime");
            p = m.get<long long>();
        }
        ModCategory cat(p == 0 ? 0 : module_modulus("mod-" + std::to_string(p)));
        FGModule M(gens, R);
        rep.add("rank", Status::pass, Json{{"rank", cat.rank(M)}, {"structure", M.structure()}});
    } else if (op == "char") {
        auto rf = f.object("ring");
        std::optional<std::string> one;
        if (rf.has("one")) one = rf.str("one");
        auto r = ring_from_tables(rf.strings("labels"), rf.string_rows("add"), rf.str("zero"), rf.string_rows("mul"), one);
        rep.add("characteristic", Status::pass,
                Json{{"characteristic", to_string(DimValue(characteristic(*r)))}, {"order", r->order()}});
    } else if (op == "abelianization") {
        auto gf = f.object("group");
        auto g = group_from_table(gf.strings("labels"), gf.string_rows("table"), gf.str("identity"));
        auto ab = abelianization(g);
        rep.add("abelianization", Status::pass,
                Json{{"order", g->order()},
                     {"abelianization-order", ab.ab->order()},
                     {"commutator-order", g->order() / ab.ab->order()}});
        rep.expect("projection-is-homomorphism", !FinGrp{}.validate(ab.proj).has_value());
    } else if (op == "pullback" || op == "pushout") {
        const std::string cat = f.has("category") ? f.str("category") : "finset";
        if (cat != "finset") throw UsageError("field 'category': only 'finset' is supported by compute");
        FinSet S;
        if (op == "pullback") {
            auto r = function_from(f.object("r")), g = function_from(f.object("f"));
            if (!(r.cod == g.cod)) throw UsageError("fields 'r.cod' and 'f.cod' must agree");
            auto sq = *S.pullback(r, g);
            rep.add("pullback", Status::pass,
                    Json{{"apex", sq.apex.labels()}, {"pi0", fn_json(sq.pi0)}, {"pi1", fn_json(sq.pi1)}});
            rep.expect("is-pullback", is_pullback(S, sq));
        } else {
            auto s = function_from(f.object("s")), g = function_from(f.object("g"));
            if (!(s.dom == g.dom)) throw UsageError("fields 's.dom' and 'g.dom' must agree");
            auto co = *S.pushout(s, g);
            rep.add("pushout", Status::pass,
                    Json{{"apex", co.apex.labels()}, {"in0", fn_json(co.in0)}, {"in1", fn_json(co.in1)}});
            rep.expect("commutes", S.equal(S.compose(co.in0, s), S.compose(co.in1, g)));
        }
    } else {
        throw UsageError("field 'op': unknown operation '" + op + "' (snf, rank, char, abelianization, pullback, pushout)");
    }
    return rep;
}

inline ViolationReport run_obstruct(const RunConfig& cfg) {
    if (!cfg.endofunctor.empty()) {
        const std::string cat = cfg.category.empty() ? "mod" : cfg.category;
        auto rep = obstruct_suite(cat, cfg.endofunctor, cfg.dimension.empty() ? "rank" : cfg.dimension);
        const long long p = module_modulus(cat);
        if (p != 0) {
            ModCategory m(p);
            auto F = mod_endofunctor(m, cfg.endofunctor);
            StrongDimension<FGModule> sd{rank_dimension(m, int_rig()), BigInt(m.rank(F.on_object(m.free(1))))};
            for (std::size_t n = 0; n <= 3; ++n) {
                auto d = check_strong_dichotomy(sd, m.free(n));
                rep.add("strong-dichotomy[dim " + std::to_string(n) + "]",
                        d.branch == Branch::violation ? Status::fail : Status::pass,
                        Json{{"a", sd.a.str()}, {"branch", branch_name(d.branch)}},
                        "(a-1)(a-2)·dim = " + d.value.str(), "0");
            }
        }
        return rep;
    }
    ViolationReport rep("dimension obstructions");
    rep.merge(weak_equation_suite(), "weak");
    rep.merge(strong_dichotomy_suite(false), "strong");
    return rep;
}

}  // namespace detail

/// Runs one command. Usage errors yield exit code 2 and an error document.
inline RunResult execute(const RunConfig& cfg) {
    RunResult out;
    ViolationReport rep;
    try {
        if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
        if (cfg.command == "verify-dim") {
            if (cfg.category.empty()) throw UsageError("verify-dim needs --category");
            const std::string dim = cfg.dimension.empty() ? default_dimension(cfg.category) : cfg.dimension;
            rep = dimension_suite(cfg.category, dim, cfg.budget, cfg.seed, cfg.monoid);
        } else if (cfg.command == "check-tangent") {
            if (cfg.category.empty() || cfg.structure.empty())
                throw UsageError("check-tangent needs --category and --structure");
            rep = tangent_suite(cfg.category, cfg.structure, cfg.depth);
        } else if (cfg.command == "obstruct") {
            rep = detail::run_obstruct(cfg);
        } else if (cfg.command == "search-finsetop") {
            if (cfg.max_card < 1) throw UsageError("--max-card must be at least 1");
            rep = search_cartesian_tangent_finsetop(cfg.max_card).report;
        } else if (cfg.command == "betti" || cfg.command == "compute") {
            if (cfg.inputs.empty()) throw UsageError(cfg.command + " needs --in");
            rep = ViolationReport(cfg.command);
            for (const auto& path : cfg.inputs) {
                auto j = detail::parse_input(path);
                try {
                    detail::require_schema(j, path);
                    rep.merge(cfg.command == "betti" ? detail::run_betti(j) : detail::run_compute(j), path);
                } catch (const UsageError& e) {
                    const std::string msg = e.what();
                    throw UsageError(msg.rfind(path, 0) == 0 ? msg : path + ": " + msg);
                }
            }
        } else {
            throw UsageError("unknown command '" + cfg.command + "'");
        }
    } catch (const UsageError& e) {
        out.exit_code = 2;
        out.document = Json{{"schema", report_schema}, {"config", cfg.to_json()}, {"error", e.what()}};
        out.summary = std::string("usage error: ") + e.what();
        return out;
    }
    out.exit_code = rep.passed() ? 0 : 1;
    out.document = Json{{"schema", report_schema}, {"config", cfg.to_json()}, {"report", rep.to_json()}};
    std::ostringstream s;
    s << cfg.command << ": " << rep.subject() << "\n  pass " << rep.count(Status::pass) << ", fail "
      << rep.count(Status::fail) << ", not-applicable " << rep.count(Status::not_applicable);
    if (auto f = rep.first_failure()) {
        s << "\n  first failure: " << f->check;
        if (!f->lhs.empty() || !f->rhs.empty()) s << "  " << f->lhs << " ≠ " << f->rhs;
    }
    out.summary = s.str();
    if (cfg.format == "text") out.summary += "\n" + rep.to_text();
    return out;
}

inline std::string render(const RunResult& r, const std::string& format) {
    if (format == "text" && r.document.contains("report")) {
        std::ostringstream os;
        os << r.summary << "\n";
        return os.str();
    }
    return r.document.dump(2) + "\n";
}

}  // namespace tandim
