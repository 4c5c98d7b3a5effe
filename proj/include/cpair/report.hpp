#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/adapted.hpp"
#include "cpair/chern.hpp"
#include "cpair/covers.hpp"
#include "cpair/curves.hpp"
#include "cpair/dsl.hpp"
#include "cpair/morphisms.hpp"
#include "cpair/sweeps.hpp"

namespace cpair::report {

struct Options {
    bool strict = false;
    long max_tensors = 100000;
    unsigned long seed = 0;
};

struct CheckResult {
    std::string kind;
    std::string title;
    std::string status;  // pass | fail | error
    std::vector<std::string> lines;
    std::string error;
};

struct Report {
    std::vector<CheckResult> checks;

    int count(const std::string& status) const {
        int n = 0;
        for (const auto& c : checks)
            if (c.status == status)
                ++n;
        return n;
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << "[" << c.status << "] check " << c.title << "\n";
            for (const auto& l : c.lines)
                os << "    " << l << "\n";
            if (!c.error.empty())
                os << "    error: " << c.error << "\n";
        }
        os << "summary: " << count("pass") << " pass, " << count("fail") << " fail, "
           << count("error") << " error\n";
        return os.str();
    }

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json jc;
            jc["kind"] = c.kind;
            jc["title"] = c.title;
            jc["status"] = c.status;
            jc["detail"] = c.lines;
            if (!c.error.empty())
                jc["error"] = c.error;
            j["checks"].push_back(jc);
        }
        j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")},
                        {"error", count("error")}};
        return j;
    }

    /// 0 all pass, 1 any fail, 2 any error.
    int exit_code() const {
        if (count("error"))
            return 2;
        if (count("fail"))
            return 1;
        return 0;
    }
};

namespace detail {

/// Cursor over the raw argument tokens of a check statement.
class Args {
public:
    Args(const std::vector<std::string>& tokens, int line) : toks_(tokens), line_(line) {}

    bool done() const { return pos_ >= toks_.size(); }
    const std::string& peek() const {
        static const std::string empty;
        return done() ? empty : toks_[pos_];
    }
    std::string next(const std::string& what) {
        if (done())
            throw ParseError(line_, 1, "missing " + what);
        return toks_[pos_++];
    }
    bool accept(const std::string& tok) {
        if (!done() && toks_[pos_] == tok) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!accept(tok))
            throw ParseError(line_, 1, "expected '" + tok + "', got '" + peek() + "'");
    }

    Int integer(const std::string& what) {
        bool neg = accept("-");
        std::string t = next(what);
        for (char c : t)
            if (!std::isdigit((unsigned char)c))
                throw ParseError(line_, 1, what + " must be an integer, got '" + t + "'");
        Int v(t);
        return neg ? -v : v;
    }

    /// key=value integer with ∞ spelled inf
    ExtRational ext_value(const std::string& what) {
        if (accept("inf"))
            return ExtRational::infinity();
        return ExtRational(Rational(integer(what)));
    }

    /// comma-separated list of integers / inf; empty allowed
    std::vector<ExtRational> ext_list(const std::string& what) {
        std::vector<ExtRational> v;
        if (done() || peek() == "=" || !looks_like_value())
            return v;
        v.push_back(ext_value(what));
        while (accept(","))
            v.push_back(ext_value(what));
        return v;
    }

    std::vector<Int> int_list(const std::string& what) {
        std::vector<Int> v;
        if (done() || !looks_like_value())
            return v;
        v.push_back(integer(what));
        while (accept(","))
            v.push_back(integer(what));
        return v;
    }

    /// (a,b,..)(c,..).. profile groups
    std::vector<std::vector<Int>> profile_groups(const std::string& what) {
        std::vector<std::vector<Int>> groups;
        while (accept("(")) {
            std::vector<Int> g;
            g.push_back(integer(what));
            while (accept(","))
                g.push_back(integer(what));
            expect(")");
            groups.push_back(std::move(g));
        }
        return groups;
    }

    void key(const std::string& k) {
        expect(k);
        expect("=");
    }

    bool accept_key(const std::string& k) {
        if (pos_ + 1 < toks_.size() && toks_[pos_] == k && toks_[pos_ + 1] == "=") {
            pos_ += 2;
            return true;
        }
        return false;
    }

    int line() const { return line_; }

private:
    bool looks_like_value() const {
        if (done())
            return false;
        const std::string& t = toks_[pos_];
        return t == "inf" || t == "-" || std::isdigit((unsigned char)t[0]);
    }

    const std::vector<std::string>& toks_;
    size_t pos_ = 0;
    int line_;
};

struct MorphismEntry {
    std::optional<DivisorialMorphism> morphism;
    std::optional<QDivisor> k_source;
    std::optional<QDivisor> k_target;
    bool image_outside_boundary = false;
};

struct PairEntryResolved {
    std::string chart;  // empty for abstract pairs
    CPairBoundary boundary;
};

/// Symbol tables built while walking the document.
struct Scope {
    std::map<std::string, Chart> charts;
    std::map<std::string, PairEntryResolved> pairs;
    std::map<std::string, MonomialCover> monomials;
    std::map<std::string, MorphismEntry> morphisms;

    const Chart& chart(const std::string& name, int line) const {
        auto it = charts.find(name);
        if (it == charts.end())
            throw ParseError(line, 1, "unknown chart '" + name + "'");
        return it->second;
    }
    const PairEntryResolved& pair(const std::string& name, int line) const {
        auto it = pairs.find(name);
        if (it == pairs.end())
            throw ParseError(line, 1, "unknown pair '" + name + "'");
        return it->second;
    }
    const MonomialCover& monomial(const std::string& name, int line) const {
        auto it = monomials.find(name);
        if (it == monomials.end())
            throw ParseError(line, 1, "unknown monomial '" + name + "'");
        return it->second;
    }
    const MorphismEntry& morphism(const std::string& name, int line) const {
        auto it = morphisms.find(name);
        if (it == morphisms.end())
            throw ParseError(line, 1, "unknown morphism '" + name + "'");
        return it->second;
    }
};

inline void declare_chart(Scope& sc, const dsl::ChartDecl& d) {
    sc.charts.insert_or_assign(d.name, Chart(d.name, d.dim));
}

inline void declare_pair(Scope& sc, const dsl::PairDecl& d) {
    PairEntryResolved e;
    e.chart = d.chart;
    const Chart* chart = nullptr;
    if (!d.chart.empty())
        chart = &sc.chart(d.chart, 0);
    for (const dsl::PairEntry& pe : d.entries) {
        PrimeDivisor prime = pe.is_coord
                                 ? (chart ? chart->hyperplane(pe.axis)
                                          : throw ParseError(pe.line, 1,
                                                             "coord entry in a chartless pair"))
                                 : PrimeDivisor::abstract(pe.prime_name);
        ExtRational m(0);
        if (pe.by_multiplicity) {
            m = pe.multiplicity;
        } else if (pe.coefficient == Rational(1)) {
            m = ExtRational::infinity();
        } else {
            // (m−1)/m pattern, validated with the statement's location
            try {
                CPairBoundary probe = as_cpair(QDivisor::term(prime, pe.coefficient));
                m = probe.terms().begin()->second;
            } catch (const NotStandardCoefficient& err) {
                throw ParseError(pe.line, 1, std::string(err.what()));
            }
        }
        e.boundary.set(prime, m);
    }
    sc.pairs.insert_or_assign(d.name, std::move(e));
}

inline void declare_monomial(Scope& sc, const dsl::MonomialDecl& d) {
    const Chart& src = sc.chart(d.source_chart, 0);
    const Chart& tgt = sc.chart(d.target_chart, 0);
    sc.monomials.insert_or_assign(d.name, MonomialCover(src, tgt, d.matrix));
}

inline void declare_morphism(Scope& sc, const dsl::MorphismDecl& d) {
    std::map<PrimeDivisor, QDivisor> table;
    for (const auto& row : d.rows) {
        QDivisor pb;
        for (const auto& [mult, src] : row.terms)
            pb.add(PrimeDivisor::abstract(src), Rational(mult));
        table.emplace(PrimeDivisor::abstract(row.target_prime), std::move(pb));
    }
    std::set<PrimeDivisor> exc;
    for (const auto& name : d.exceptional)
        exc.insert(PrimeDivisor::abstract(name));
    MorphismEntry entry;
    entry.morphism.emplace(d.name, std::move(table), std::move(exc));
    auto to_div = [](const std::vector<std::pair<Rational, std::string>>& terms) {
        QDivisor q;
        for (const auto& [c, name] : terms)
            q.add(PrimeDivisor::abstract(name), c);
        return q;
    };
    if (d.k_source)
        entry.k_source = to_div(*d.k_source);
    if (d.k_target)
        entry.k_target = to_div(*d.k_target);
    entry.image_outside_boundary = d.image_outside_boundary;
    sc.morphisms.insert_or_assign(d.name, std::move(entry));
}

inline std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

/// "x1^2 x2^-1 · t" — the generator monomial of a tensor with the given
/// allowance vector (exponent −allowance per axis).
inline std::string generator_str(const BasisTensor& t, const std::vector<Int>& allowance) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < allowance.size(); ++i) {
        if (allowance[i] == 0)
            continue;
        if (any)
            os << " ";
        os << "x" << (i + 1) << "^" << -allowance[i];
        any = true;
    }
    if (!any)
        os << "1";
    os << " * " << t.str();
    return os.str();
}

/// Diagonal cover setup from a declared monomial + pair; rejects
/// non-diagonal matrices (only quasi-diagonal data has closed-form
/// allowances; see README).
inline CoverSetup setup_from(const Scope& sc, const std::string& mono_name,
                             const std::string& pair_name, int line) {
    const MonomialCover& g = sc.monomial(mono_name, line);
    const PairEntryResolved& pe = sc.pair(pair_name, line);
    if (pe.chart != g.target().name)
        throw ParseError(line, 1, "pair '" + pair_name + "' is not on the target chart of '" +
                                      mono_name + "'");
    if (!g.is_diagonal())
        throw ParseError(line, 1,
                         "adapted-sheaf checks require a diagonal monomial cover; '" + mono_name +
                             "' has off-diagonal exponents");
    std::vector<Int> c(g.dim());
    for (int i = 1; i <= g.dim(); ++i)
        c[i - 1] = g.exponent(i, i);
    return CoverSetup(g.target(), pe.boundary, c);
}

/// GradedClass expression: TERM (+ TERM)*, TERM = coefficient factors
/// separated by '*', factor = rational | symbol[^k].
inline GradedClass parse_class_expr(Args& a, int dim) {
    GradedClass g(dim);
    while (true) {
        Rational coeff(1);
        GradedClass::Monomial mono;
        bool saw_factor = false;
        while (true) {
            if (!a.done() && (std::isdigit((unsigned char)a.peek()[0]) || a.peek() == "-")) {
                bool neg = a.accept("-");
                Int num = a.integer("coefficient");
                Rational c{num};
                if (a.accept("/"))
                    c = Rational(num, a.integer("denominator"));
                coeff *= neg ? -c : c;
            } else if (!a.done() && std::isalpha((unsigned char)a.peek()[0]) &&
                       a.peek() != "comp") {
                std::string sym = a.next("symbol");
                int power = 1;
                if (a.accept("^"))
                    power = (int)a.integer("power");
                mono[sym] += power;
            } else {
                break;
            }
            saw_factor = true;
            if (!a.accept("*"))
                break;
        }
        if (!saw_factor)
            throw ParseError(a.line(), 1, "empty term in class expression");
        g.add(mono, coeff);
        if (!a.accept("+"))
            break;
    }
    return g;
}

} // namespace detail

/// Executes all checks of a parsed document, in order.  Per-check errors
/// are embedded in the report unless opt.strict rethrows them.
inline Report run(const dsl::Document& doc, const Options& opt = {}) {
    using namespace detail;
    Report rep;
    Scope sc;

    for (const dsl::Decl& decl : doc.decls) {
        if (const auto* c = std::get_if<dsl::ChartDecl>(&decl)) {
            declare_chart(sc, *c);
            continue;
        }
        if (const auto* p = std::get_if<dsl::PairDecl>(&decl)) {
            declare_pair(sc, *p);
            continue;
        }
        if (const auto* m = std::get_if<dsl::MonomialDecl>(&decl)) {
            declare_monomial(sc, *m);
            continue;
        }
        if (const auto* f = std::get_if<dsl::MorphismDecl>(&decl)) {
            declare_morphism(sc, *f);
            continue;
        }

        const auto& ck = std::get<dsl::CheckDecl>(decl);
        CheckResult res;
        res.kind = ck.kind;
        res.title = ck.kind;
        for (const auto& a : ck.args)
            res.title += " " + a;
        res.status = "pass";
        try {
            Args args(ck.args, ck.line);

            if (ck.kind == "classify") {
                std::string mono = args.next("monomial name");
                std::string pair = args.next("pair name");
                CoverClassification c =
                    classify_cover(sc.monomial(mono, ck.line), sc.pair(pair, ck.line).boundary);
                res.lines.push_back(std::string("adapted: ") + (c.is_adapted ? "yes" : "no"));
                res.lines.push_back(std::string("strongly_adapted: ") +
                                    (c.is_strongly_adapted ? "yes" : "no"));
                res.lines.push_back(std::string("branch_in_support: ") +
                                    (c.branch_in_support ? "yes" : "no"));
                res.lines.push_back(std::string("uniformization: ") +
                                    (c.is_uniformization ? "yes" : "no"));

            } else if (ck.kind == "adapted-sheaf") {
                std::string mono = args.next("monomial name");
                std::string pair = args.next("pair name");
                int n = (int)args.integer("n");
                int p = (int)args.integer("p");
                CoverSetup s = setup_from(sc, mono, pair, ck.line);
                PoleAllowanceSheaf sheaf = compute_adapted(s, n, p, opt.max_tensors);
                for (const auto& [t, a] : sheaf.allowance) {
                    res.lines.push_back(t.str() + ": allowance=" + vec_str(a) +
                                        " A=" + vec_str(sheaf.a_bound.at(t)) +
                                        " B=" + vec_str(sheaf.b_bound.at(t)) +
                                        "  gen: " + generator_str(t, a));
                }

            } else if (ck.kind == "inclusions") {
                std::string mono = args.next("monomial name");
                std::string pair = args.next("pair name");
                int n = (int)args.integer("n");
                int p = (int)args.integer("p");
                InclusionReport ir =
                    check_inclusions(setup_from(sc, mono, pair, ck.line), n, p, opt.max_tensors);
                if (!ir.chain_ok)
                    res.status = "fail";
                res.lines.push_back(std::string("chain_ok: ") + (ir.chain_ok ? "yes" : "no"));
                res.lines.push_back(std::string("pull_sym_equals_adapted: ") +
                                    (ir.eq_pull_sym ? "yes" : "no"));
                res.lines.push_back(std::string("adapted_equals_pull_log: ") +
                                    (ir.eq_pull_log ? "yes" : "no"));
                res.lines.push_back(std::string("pull_log_equals_log_pull: ") +
                                    (ir.eq_log_pull ? "yes" : "no"));
                res.lines.push_back(std::string("log_floor_equals_log_full: ") +
                                    (ir.eq_floor_full ? "yes" : "no"));
                res.lines.push_back(std::string("iota_equality: ") +
                                    (ir.iota_equality ? "yes" : "no"));

            } else if (ck.kind == "functoriality") {
                std::string pair = args.next("pair name");
                args.key("alpha");
                std::vector<Int> alpha = args.int_list("alpha exponents");
                args.key("beta");
                std::vector<Int> beta = args.int_list("beta exponents");
                args.key("n");
                int n = (int)args.integer("n");
                args.key("p");
                int p = (int)args.integer("p");
                const PairEntryResolved& pe = sc.pair(pair, ck.line);
                if (pe.chart.empty())
                    throw ParseError(ck.line, 1, "functoriality needs a chart-based pair");
                FunctorialityReport fr = functoriality_check(sc.chart(pe.chart, ck.line),
                                                             pe.boundary, alpha, beta, n, p,
                                                             opt.max_tensors);
                if (!fr.inclusion_ok || (fr.beta_adapted && !fr.equality))
                    res.status = "fail";
                res.lines.push_back(std::string("inclusion_ok: ") +
                                    (fr.inclusion_ok ? "yes" : "no"));
                res.lines.push_back(std::string("equality: ") + (fr.equality ? "yes" : "no"));
                res.lines.push_back(std::string("beta_adapted: ") +
                                    (fr.beta_adapted ? "yes" : "no"));

            } else if (ck.kind == "sym-product") {
                std::string mono = args.next("monomial name");
                std::string pair = args.next("pair name");
                int n1 = (int)args.integer("n1");
                int n2 = (int)args.integer("n2");
                int p = (int)args.integer("p");
                SymProductReport sr =
                    sym_product_degree(setup_from(sc, mono, pair, ck.line), n1, n2, p,
                                       opt.max_tensors);
                if (!sr.superadditive_ok || (sr.cover_adapted && !sr.sym_equals_adapted))
                    res.status = "fail";
                res.lines.push_back(std::string("superadditive: ") +
                                    (sr.superadditive_ok ? "yes" : "no"));
                res.lines.push_back(std::string("cover_adapted: ") +
                                    (sr.cover_adapted ? "yes" : "no"));
                res.lines.push_back(std::string("sym_equals_adapted: ") +
                                    (sr.sym_equals_adapted ? "yes" : "no"));

            } else if (ck.kind == "orbifold") {
                std::string morph = args.next("morphism name");
                const MorphismEntry& me = sc.morphism(morph, ck.line);
                if (!me.image_outside_boundary)
                    throw ParseError(ck.line, 1,
                                     "orbifold check requires the morphism to declare "
                                     "image_outside_boundary");
                const CPairBoundary& bx = sc.pair(args.next("source pair"), ck.line).boundary;
                const CPairBoundary& by = sc.pair(args.next("target pair"), ck.line).boundary;
                MorphismVerdict v = orbifold_morphism(*me.morphism, bx, by);
                res.status = v.pass ? "pass" : "fail";
                for (const auto& w : v.witnesses)
                    res.lines.push_back("witness " + w.str());

            } else if (ck.kind == "nc-cmorphism") {
                args.key("n");
                ExtRational n = args.ext_value("source multiplicity");
                args.key("a");
                std::vector<Int> a = args.int_list("exponents");
                args.key("targets");
                std::vector<ExtRational> targets = args.ext_list("target multiplicities");
                MorphismVerdict v = nc_cmorphism(a, n, targets);
                res.status = v.pass ? "pass" : "fail";
                for (const auto& w : v.witnesses)
                    res.lines.push_back("witness " + w.str());

            } else if (ck.kind == "pluricanonical") {
                std::string morph = args.next("morphism name");
                const MorphismEntry& me = sc.morphism(morph, ck.line);
                if (!me.k_source || !me.k_target)
                    throw MissingCanonicalData("pluricanonical check needs K_source and K_target "
                                               "in morphism '" + morph + "'");
                const CPairBoundary& bx = sc.pair(args.next("source pair"), ck.line).boundary;
                const CPairBoundary& by = sc.pair(args.next("target pair"), ck.line).boundary;
                Int m = args.integer("m");
                PluricanonicalResult pr = pluricanonical_pullback(*me.morphism, *me.k_source, bx,
                                                                  *me.k_target, by, m);
                res.status = pr.pass ? "pass" : "fail";
                res.lines.push_back("defect: " + pr.defect.str());

            } else if (ck.kind == "compare") {
                const CPairBoundary& b1 = sc.pair(args.next("first pair"), ck.line).boundary;
                const CPairBoundary& b2 = sc.pair(args.next("second pair"), ck.line).boundary;
                MorphismVerdict v = compare_boundaries(b1, b2);
                res.status = v.pass ? "pass" : "fail";
                for (const auto& w : v.witnesses)
                    res.lines.push_back("witness " + w.str());

            } else if (ck.kind == "log-canonical") {
                std::string morph = args.next("morphism name");
                const MorphismEntry& me = sc.morphism(morph, ck.line);
                if (!me.k_source || !me.k_target)
                    throw MissingCanonicalData("log-canonical check needs K_source and K_target "
                                               "in morphism '" + morph + "'");
                const CPairBoundary& b = sc.pair(args.next("pair"), ck.line).boundary;
                LogCanonicalResult lr =
                    log_canonical_check(*me.morphism, *me.k_source, *me.k_target, b);
                res.status = lr.pass ? "pass" : "fail";
                for (const auto& [e, a] : lr.discrepancies)
                    res.lines.push_back("a(" + e.id + ") = " + a.str());

            } else if (ck.kind == "b-birational") {
                const MorphismEntry& alpha = sc.morphism(args.next("alpha"), ck.line);
                const MorphismEntry& beta = sc.morphism(args.next("beta"), ck.line);
                if (!alpha.k_source)
                    throw MissingCanonicalData("b-birational needs K_source on the first "
                                               "morphism (the common model)");
                const CPairBoundary& bx = sc.pair(args.next("source pair"), ck.line).boundary;
                const CPairBoundary& by = sc.pair(args.next("target pair"), ck.line).boundary;
                BBirationalResult br =
                    b_birational(*alpha.morphism, *beta.morphism, *alpha.k_source, bx, by);
                res.status = br.pass ? "pass" : "fail";
                res.lines.push_back("alpha side: " + br.lhs.str());
                res.lines.push_back("beta  side: " + br.rhs.str());

            } else if (ck.kind == "quotient") {
                const MorphismEntry& me = sc.morphism(args.next("quotient morphism"), ck.line);
                const CPairBoundary& bx = sc.pair(args.next("upstairs pair"), ck.line).boundary;
                auto [dq, data] = quotient_pair(bx, *me.morphism);
                res.lines.push_back("quotient boundary: " + dq.str());
                res.lines.push_back("as divisor: " + dq.induced_qdivisor().str());
                for (const auto& row : data.rows)
                    res.lines.push_back("m_H(" + row.quotient_prime.id + " via " +
                                        row.upstairs_prime.id + ") = " + row.ramification.str() +
                                        " * " + row.upstairs_mult.str() + " = " + row.m_H.str());
                res.lines.push_back(std::string("quotient map strongly adapted: ") +
                                    (data.quotient_map_strongly_adapted ? "yes" : "no"));

            } else if (ck.kind == "cyclic-cover") {
                const PairEntryResolved& pe = sc.pair(args.next("pair"), ck.line);
                CyclicCoverSpec spec = cyclic_adapted_cover(pe.boundary);
                res.lines.push_back("degree: " + spec.degree.str());
                for (const auto& [p, e] : spec.exponents)
                    res.lines.push_back("exponent at " + p.id + ": " + e.str());
                if (!pe.chart.empty()) {
                    MonomialCover model =
                        cyclic_cover_model(sc.chart(pe.chart, ck.line), pe.boundary);
                    CoverClassification c = classify_cover(model, pe.boundary);
                    res.lines.push_back(std::string("model strongly adapted: ") +
                                        (c.is_strongly_adapted ? "yes" : "no"));
                    if (!c.is_strongly_adapted)
                        res.status = "fail";
                }

            } else if (ck.kind == "restrict") {
                const PairEntryResolved& pe = sc.pair(args.next("pair"), ck.line);
                if (pe.chart.empty())
                    throw ParseError(ck.line, 1, "restrict needs a chart-based pair");
                int axis = (int)args.integer("axis");
                auto [sub, rb] = restrict_pair(sc.chart(pe.chart, ck.line), pe.boundary, axis);
                res.lines.push_back("chart: " + sub.name + " dim " + std::to_string(sub.dim));
                res.lines.push_back("boundary: " + rb.str());

            } else if (ck.kind == "chern") {
                args.key("dim");
                int dim = (int)args.integer("dim");
                args.key("c");
                GradedClass c_omega = parse_class_expr(args, dim);
                std::vector<ChernComponent> comps;
                while (args.accept("comp")) {
                    args.expect("=");
                    args.expect("(");
                    std::string sym = args.next("component symbol");
                    args.expect(",");
                    ExtRational m = args.ext_value("multiplicity");
                    args.expect(")");
                    comps.push_back({sym, m, std::nullopt});
                }
                GradedClass total = total_c_chern(c_omega, comps);
                res.lines.push_back("total: " + total.str());
                res.lines.push_back("c1: " + total.degree_part(1).str());
                GradedClass expect = c_omega.degree_part(1);
                for (const auto& comp : comps) {
                    Rational w = comp.multiplicity.is_infinite()
                                     ? Rational(1)
                                     : (comp.multiplicity.value() - 1) / comp.multiplicity.value();
                    expect = expect + w * GradedClass::symbol(dim, comp.symbol);
                }
                if (total.degree_part(1) != expect)
                    res.status = "fail";

            } else if (ck.kind == "curve-degree" || ck.kind == "curve-kappa" ||
                       ck.kind == "curve-special") {
                args.key("g");
                Int g = args.integer("genus");
                std::vector<ExtRational> mults;
                if (args.accept_key("m"))
                    mults = args.ext_list("multiplicities");
                OrbifoldCurve curve(g, mults);
                Rational deg = curve_degree(curve);
                res.lines.push_back("deg(K+D) = " + deg.str());
                if (ck.kind != "curve-degree") {
                    CurveKappa k = curve_kappa(curve);
                    res.lines.push_back("kappa = " + kappa_str(k));
                    // m-scan oracle over one full period of the floor degrees
                    Int bound = kappa_scan_bound(curve);
                    bool all_neg = true, some_zero = false, some_section = false;
                    Int last_deg = 0;
                    for (Int m = 1; m <= bound; ++m) {
                        Int dm = kappa_floor_degree(curve, m);
                        if (dm >= 0)
                            all_neg = false;
                        if (dm == 0)
                            some_zero = true;
                        auto h0 = kappa_section_count(curve, m);
                        if (h0 && *h0 > 0)
                            some_section = true;
                        last_deg = dm;
                    }
                    bool scan_ok = false;
                    switch (k) {
                    case CurveKappa::MinusInfinity:
                        scan_ok = all_neg && !some_section;
                        break;
                    case CurveKappa::Zero:
                        scan_ok = some_zero && some_section && last_deg <= 0;
                        break;
                    case CurveKappa::One:
                        scan_ok = last_deg > 0;
                        break;
                    }
                    res.lines.push_back(std::string("m-scan confirms: ") +
                                        (scan_ok ? "yes" : "no"));
                    if (!scan_ok)
                        res.status = "fail";
                    if (ck.kind == "curve-special")
                        res.lines.push_back(std::string("special: ") +
                                            (curve_is_special(curve) ? "yes" : "no"));
                }

            } else if (ck.kind == "rh-genus") {
                args.key("g");
                Int g = args.integer("genus");
                args.key("d");
                Int d = args.integer("degree");
                CurveCover cover = CurveCover::etale(d, 0);
                if (args.accept_key("ram"))
                    cover.profiles_elsewhere = args.profile_groups("ramification index");
                res.lines.push_back("genus of total space: " +
                                    riemann_hurwitz_genus(g, cover).str());

            } else if (ck.kind == "curve-irregularity") {
                args.key("g");
                Int g = args.integer("genus");
                args.key("d");
                Int d = args.integer("degree");
                std::vector<ExtRational> mults;
                if (args.accept_key("m"))
                    mults = args.ext_list("multiplicities");
                OrbifoldCurve curve(g, mults);
                CurveCover cover = CurveCover::etale(d, mults.size());
                if (args.accept_key("prof"))
                    cover.profiles_at_marked = args.profile_groups("profile");
                if (args.accept_key("ram"))
                    cover.profiles_elsewhere = args.profile_groups("ramification index");
                IrregularityResult ir = curve_irregularity(curve, cover);
                res.lines.push_back("q = " + ir.value.str() +
                                    (ir.exact ? "" : " (Riemann-Roch lower bound)"));

            } else if (ck.kind == "sweep") {
                std::string name = args.next("sweep name");
                long n = 200;
                if (args.accept_key("count"))
                    n = (long)args.integer("count");
                sweeps::SweepResult sr = sweeps::run_sweep(name, opt.seed, n);
                res.status = sr.ok() ? "pass" : "fail";
                res.lines.push_back("instances: " + std::to_string(sr.instances));
                res.lines.push_back("failures: " + std::to_string(sr.failures));
                if (!sr.first_failure.empty())
                    res.lines.push_back("first failure: " + sr.first_failure);

            } else {
                throw ParseError(ck.line, 1, "unknown check kind '" + ck.kind + "'");
            }
        } catch (const Error& e) {
            if (opt.strict)
                throw;
            res.status = "error";
            res.error = e.what();
        }
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

} // namespace cpair::report
