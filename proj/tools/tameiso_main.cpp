#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tameiso/commutant.hpp"
#include "tameiso/cyclotomic.hpp"
#include "tameiso/format.hpp"
#include "tameiso/maps.hpp"
#include "tameiso/parse.hpp"
#include "tameiso/polynomial.hpp"
#include "tameiso/simplicity.hpp"
#include "tameiso/verify.hpp"

using nlohmann::ordered_json;
using namespace tameiso;

namespace {

struct Session {
    std::string vars_arg;
    unsigned cyclotomic = 1;
    bool json = false;

    std::string derivation_arg, poly_arg, endo_arg, cofactor_arg, theorem_arg, axis_arg;
    std::vector<std::string> elem_args;
    std::optional<unsigned> degree;
    unsigned max_degree = 0;

    RingPtr ring;
    ordered_json inputs = ordered_json::object();
    ordered_json diagnostics = ordered_json::object();
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void build_ring(Session& s) {
    if (s.cyclotomic < 1) throw PreconditionError("cyclotomic order must be >= 1");
    FieldPtr field = CyclotomicField::make(s.cyclotomic);
    std::vector<std::string> names = split(s.vars_arg, ',');
    for (auto& n : names) {
        while (!n.empty() && n.front() == ' ') n.erase(n.begin());
        while (!n.empty() && n.back() == ' ') n.pop_back();
    }
    s.ring = PolyRing::make(field, names);
    if (s.cyclotomic > 1 && s.ring->var_index("z"))
        throw PreconditionError("variable name z collides with the root of unity");
    s.inputs["vars"] = s.vars_arg;
    s.inputs["cyclotomic"] = s.cyclotomic;
}

Derivation parse_derivation(Session& s) {
    if (s.derivation_arg.empty()) throw PreconditionError("--derivation is required");
    Derivation d(s.ring, parse_image_list(s.derivation_arg, s.ring));
    s.inputs["derivation"] = to_string(d);
    return d;
}

MultiPoly parse_poly_arg(Session& s, const std::string& key) {
    if (s.poly_arg.empty()) throw PreconditionError("--poly is required");
    MultiPoly p = parse_poly(s.poly_arg, s.ring);
    s.inputs[key] = to_string(p);
    return p;
}

// axis: a declared variable name or a 1-based position.
std::size_t parse_axis(const Session& s) {
    if (s.axis_arg.empty()) throw PreconditionError("--axis is required");
    if (auto idx = s.ring->var_index(s.axis_arg)) return *idx;
    bool digits = !s.axis_arg.empty();
    for (char c : s.axis_arg) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) {
        unsigned long v = std::stoul(s.axis_arg);
        if (v >= 1 && v <= s.ring->var_count()) return static_cast<std::size_t>(v - 1);
    }
    throw PreconditionError("unknown axis '" + s.axis_arg + "'");
}

// --elem axis=<name-or-index>,scale=<const expr>,offset=<poly>
ElementaryAuto parse_elem(const Session& s, const std::string& arg) {
    std::string axis_str;
    FieldScalar scale = FieldScalar::one(s.ring->field());
    MultiPoly offset = MultiPoly::zero(s.ring);
    for (const std::string& part : split(arg, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw ParseError("--elem expects key=value parts", 1, 1);
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "axis")
            axis_str = val;
        else if (key == "scale")
            scale = parse_scalar(val, s.ring);
        else if (key == "offset")
            offset = parse_poly(val, s.ring);
        else
            throw ParseError("unknown --elem key '" + key + "'", 1, 1);
    }
    if (axis_str.empty()) throw PreconditionError("--elem needs axis=...");
    Session tmp = s;
    tmp.axis_arg = axis_str;
    return ElementaryAuto(s.ring, parse_axis(tmp), scale, offset);
}

TameWord parse_word(Session& s) {
    if (s.elem_args.empty()) throw PreconditionError("at least one --elem is required");
    std::vector<ElementaryAuto> fs;
    ordered_json echoed = ordered_json::array();
    for (const auto& a : s.elem_args) {
        fs.push_back(parse_elem(s, a));
        echoed.push_back(to_string(fs.back()));
    }
    s.inputs["elems"] = echoed;
    return TameWord(s.ring, std::move(fs));
}

Endomorphism parse_endo(Session& s) {
    if (s.endo_arg.empty()) throw PreconditionError("--endo is required");
    Endomorphism e(s.ring, parse_image_list(s.endo_arg, s.ring));
    s.inputs["endo"] = to_string(e);
    return e;
}

ordered_json poly_list_json(const std::vector<MultiPoly>& ps) {
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(to_string(p));
    return a;
}

ordered_json vector_json(const Vector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string monomial_text(const RingPtr& ring, const Monomial& m) {
    std::string s = detail::monomial_body(ring, m);
    return s.empty() ? "1" : s;
}

ordered_json affine_family_json(const RingPtr& ring, const AffineFamily& f) {
    ordered_json o = ordered_json::object();
    o["type"] = "affine_family";
    o["axis"] = ring->vars()[f.axis];
    o["degree_bound"] = f.degree_bound;
    ordered_json monos = ordered_json::array();
    for (const auto& m : f.offset_monomials) monos.push_back(monomial_text(ring, m));
    o["parameters"] = monos;  // order: scale a, then offset coefficients
    o["particular"] = vector_json(f.particular);
    ordered_json dirs = ordered_json::array();
    for (const auto& d : f.directions) dirs.push_back(vector_json(d));
    o["directions"] = dirs;
    return o;
}

std::string describe(const GeneratorFamily& g) {
    const std::string x = g.ring->vars()[g.axis];
    if (g.is_identity_only()) return x + " -> " + x + " (identity only)";
    std::string head, tail;
    switch (g.scale_kind) {
        case GeneratorFamily::ScaleKind::Fixed:
            head = g.scale_value.is_one() ? x : to_string(g.scale_value) + "*" + x;
            break;
        case GeneratorFamily::ScaleKind::RootOfUnity:
            head = "a*" + x;
            tail = ", a^" + std::to_string(g.scale_order) + " = 1";
            break;
        case GeneratorFamily::ScaleKind::FreeNonzero:
            head = "a*" + x;
            tail = ", a nonzero";
            break;
    }
    std::string off;
    if (!g.offset_fixed.is_zero()) off += " + (" + to_string(g.offset_fixed) + ")";
    if (!g.offset_scale_tied.is_zero())
        off += " + (1-a)*(" + to_string(g.offset_scale_tied) + ")";
    if (g.offset_free_constant) tail += ", plus any constant";
    if (g.offset_free_poly) {
        std::string vars;
        for (std::size_t v : g.offset_free_vars)
            vars += (vars.empty() ? "" : ",") + g.ring->vars()[v];
        tail += ", plus any polynomial in " + vars;
    }
    return x + " -> " + head + off + tail;
}

ordered_json generator_family_json(const GeneratorFamily& g) {
    ordered_json o = ordered_json::object();
    o["type"] = "generator_family";
    o["axis"] = g.ring->vars()[g.axis];
    switch (g.scale_kind) {
        case GeneratorFamily::ScaleKind::Fixed:
            o["scale"] = {{"kind", "fixed"}, {"value", to_string(g.scale_value)}};
            break;
        case GeneratorFamily::ScaleKind::RootOfUnity:
            o["scale"] = {{"kind", "root_of_unity"}, {"order", g.scale_order}};
            break;
        case GeneratorFamily::ScaleKind::FreeNonzero:
            o["scale"] = {{"kind", "free_nonzero"}};
            break;
    }
    o["offset_fixed"] = to_string(g.offset_fixed);
    o["offset_scale_tied"] = to_string(g.offset_scale_tied);
    o["offset_free_constant"] = g.offset_free_constant;
    ordered_json vars = ordered_json::array();
    for (std::size_t v : g.offset_free_vars) vars.push_back(g.ring->vars()[v]);
    o["offset_free_vars"] = vars;
    o["description"] = describe(g);
    return o;
}

ordered_json explicit_generators_json(const ExplicitGenerators& eg) {
    ordered_json o = ordered_json::object();
    o["type"] = "generators";
    ordered_json fams = ordered_json::array();
    for (const auto& g : eg.families) fams.push_back(generator_family_json(g));
    o["families"] = fams;
    o["note"] = eg.note;
    return o;
}

ordered_json family_json(const RingPtr& ring, const CommutantFamily& fam) {
    if (const auto* t = std::get_if<Translations>(&fam)) {
        ordered_json o = ordered_json::object();
        o["type"] = "translations";
        o["axis"] = ring->vars()[t->axis];
        o["extent"] =
            t->extent == TranslationExtent::AllShifts ? "all_shifts" : "only_identity";
        return o;
    }
    if (const auto* a = std::get_if<AffineFamily>(&fam))
        return affine_family_json(ring, *a);
    if (const auto* sc = std::get_if<ScalingFamily>(&fam)) {
        ordered_json o = ordered_json::object();
        o["type"] = "scalings";
        o["axis"] = ring->vars()[sc->axis];
        o["order"] = sc->order;
        return o;
    }
    return explicit_generators_json(std::get<ExplicitGenerators>(fam));
}

ordered_json hypotheses_json(const std::vector<HypothesisCheck>& hs) {
    ordered_json a = ordered_json::array();
    for (const auto& h : hs) {
        ordered_json o = ordered_json::object();
        o["name"] = h.name;
        o["pass"] = h.pass;
        o["witness"] = h.witness;
        a.push_back(o);
    }
    return a;
}

std::string witness_text(const RingPtr& ring, const NonSimplicityWitness& w) {
    if (const auto* si = std::get_if<StableIdealWitness>(&w))
        return "stable ideal <" + to_string(si->u) + "> with cofactor " +
               to_string(si->cofactor);
    if (const auto* fi = std::get_if<FirstIntegralWitness>(&w))
        return "first integral " + to_string(fi->h);
    if (const auto* os = std::get_if<OdeSolutionWitness>(&w))
        return "ODE solution h = " + to_string(os->h) + " at " +
               ring->vars()[os->index];
    const auto& rp = std::get<RepeatedPairWitness>(w);
    return "repeated coefficient pair at " + ring->vars()[rp.i] + " and " +
           ring->vars()[rp.j];
}

ordered_json witness_json(const RingPtr& ring, const NonSimplicityWitness& w) {
    ordered_json o = ordered_json::object();
    if (const auto* si = std::get_if<StableIdealWitness>(&w)) {
        o["kind"] = "stable_ideal";
        o["generator"] = to_string(si->u);
        o["cofactor"] = to_string(si->cofactor);
    } else if (const auto* fi = std::get_if<FirstIntegralWitness>(&w)) {
        o["kind"] = "first_integral";
        o["polynomial"] = to_string(fi->h);
    } else if (const auto* os = std::get_if<OdeSolutionWitness>(&w)) {
        o["kind"] = "ode_solution";
        o["variable"] = ring->vars()[os->index];
        o["solution"] = to_string(os->h);
    } else {
        const auto& rp = std::get<RepeatedPairWitness>(w);
        o["kind"] = "repeated_pair";
        o["first"] = ring->vars()[rp.i];
        o["second"] = ring->vars()[rp.j];
    }
    return o;
}

int finish(Session& s, const std::string& command, const ordered_json& result,
           const std::string& text) {
    if (s.json) {
        ordered_json top = ordered_json::object();
        top["format_version"] = 1;
        top["command"] = command;
        top["inputs"] = s.inputs;
        top["result"] = result;
        top["diagnostics"] = s.diagnostics;
        top["status"] = "ok";
        std::cout << top.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int run_apply(Session& s) {
    MultiPoly p = parse_poly_arg(s, "poly");
    MultiPoly image(s.ring);
    if (!s.derivation_arg.empty()) {
        image = derive(parse_derivation(s), p);
    } else if (!s.endo_arg.empty()) {
        image = apply(parse_endo(s), p);
    } else if (!s.elem_args.empty()) {
        image = apply(parse_word(s), p);
    } else {
        throw PreconditionError("apply needs --derivation, --endo, or --elem");
    }
    return finish(s, "apply", ordered_json{{"image", to_string(image)}},
                  to_string(image));
}

int run_derive(Session& s) {
    Derivation d = parse_derivation(s);
    MultiPoly p = parse_poly_arg(s, "poly");
    MultiPoly image = derive(d, p);
    return finish(s, "derive", ordered_json{{"image", to_string(image)}},
                  to_string(image));
}

int run_commutes(Session& s) {
    Derivation d = parse_derivation(s);
    bool ok;
    if (!s.endo_arg.empty()) {
        ok = commutes(parse_endo(s), d);
    } else if (!s.elem_args.empty()) {
        ok = commutes(parse_word(s), d);
    } else {
        throw PreconditionError("commutes needs --endo or --elem");
    }
    return finish(s, "commutes", ordered_json{{"commutes", ok}},
                  ok ? "true" : "false");
}

int run_conjugate(Session& s) {
    Derivation d = parse_derivation(s);
    TameWord w = parse_word(s);
    Derivation c = conjugate(d, w);
    return finish(s, "conjugate", ordered_json{{"derivation", to_string(c)}},
                  to_string(c));
}

int run_translations(Session& s) {
    Derivation d = parse_derivation(s);
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& t : translation_commutant(d)) {
        arr.push_back(family_json(s.ring, CommutantFamily(t)));
        if (!text.empty()) text += "\n";
        text += s.ring->vars()[t.axis] + ": " +
                (t.extent == TranslationExtent::AllShifts ? "all shifts"
                                                          : "only identity");
    }
    return finish(s, "translations", ordered_json{{"axes", arr}}, text);
}

int run_affine_commutant(Session& s) {
    Derivation d = parse_derivation(s);
    std::size_t axis = parse_axis(s);
    s.inputs["axis"] = s.ring->vars()[axis];
    if (s.degree) s.inputs["degree"] = *s.degree;
    AffineFamily f = affine_axis_commutant(d, axis, s.degree);
    s.diagnostics["degree_bound"] = f.degree_bound;
    std::string text = "axis " + s.ring->vars()[axis] + ", degree bound " +
                       std::to_string(f.degree_bound) + "\nparameters: a";
    for (const auto& m : f.offset_monomials) text += ", " + monomial_text(s.ring, m);
    text += "\nparticular:";
    for (const auto& x : f.particular) text += " " + to_string(x);
    text += "\ndirections: " + std::to_string(f.directions.size());
    for (const auto& dir : f.directions) {
        text += "\n ";
        for (const auto& x : dir) text += " " + to_string(x);
    }
    return finish(s, "affine-commutant", affine_family_json(s.ring, f), text);
}

int run_scalar_commutant(Session& s) {
    Derivation d = parse_derivation(s);
    std::size_t axis = parse_axis(s);
    s.inputs["axis"] = s.ring->vars()[axis];
    ScalarCommutantResult r = scalar_axis_commutant(d, axis);
    s.diagnostics["detail"] = r.detail;
    ordered_json o = ordered_json::object();
    bool ok = r.status == ScalarCommutantResult::Status::Ok;
    o["status"] = ok ? "ok" : "inconclusive";
    std::string text;
    if (ok) {
        o["generators"] = explicit_generators_json(r.generators);
        for (const auto& g : r.generators.families) {
            if (!text.empty()) text += "\n";
            text += describe(g);
        }
    } else {
        text = "inconclusive: " + r.detail;
    }
    return finish(s, "scalar-commutant", o, text);
}

int run_group(Session& s) {
    Derivation d = parse_derivation(s);
    ClosedFormResult r = closed_form_tame_group(d);
    ordered_json o = ordered_json::object();
    o["template"] = r.template_name;
    switch (r.status) {
        case ClosedFormResult::Status::Ok: o["status"] = "ok"; break;
        case ClosedFormResult::Status::TemplateMismatch:
            o["status"] = "template_mismatch";
            break;
        case ClosedFormResult::Status::HypothesisFailure:
            o["status"] = "hypothesis_failure";
            break;
    }
    o["hypotheses"] = hypotheses_json(r.hypotheses);
    std::string text;
    if (r.status == ClosedFormResult::Status::Ok) {
        o["generators"] = explicit_generators_json(r.generators);
        text = r.template_name;
        for (const auto& g : r.generators.families) text += "\n" + describe(g);
        if (!r.generators.note.empty()) text += "\nnote: " + r.generators.note;
    } else {
        o["detail"] = r.detail;
        text = r.template_name + ": " +
               (r.status == ClosedFormResult::Status::TemplateMismatch
                    ? "template mismatch: " + r.detail
                    : "hypothesis failure");
        for (const auto& h : r.hypotheses)
            if (!h.pass) text += "\nfailed: " + h.name +
                                 (h.witness.empty() ? "" : " (" + h.witness + ")");
    }
    return finish(s, "group", o, text);
}

int run_stable(Session& s) {
    Derivation d = parse_derivation(s);
    MultiPoly u = parse_poly_arg(s, "poly");
    auto cof = principal_stable(d, u);
    ordered_json o = ordered_json::object();
    o["stable"] = cof.has_value();
    std::string text;
    if (cof) {
        o["cofactor"] = to_string(*cof);
        text = "stable with cofactor " + to_string(*cof);
    } else {
        text = "not stable";
    }
    return finish(s, "stable", o, text);
}

int run_first_integrals(Session& s) {
    Derivation d = parse_derivation(s);
    s.inputs["max_degree"] = s.max_degree;
    std::vector<MultiPoly> basis = first_integrals(d, s.max_degree);
    std::string text;
    for (const auto& p : basis) {
        if (!text.empty()) text += "\n";
        text += to_string(p);
    }
    if (basis.empty()) text = "none";
    return finish(s, "first-integrals", ordered_json{{"basis", poly_list_json(basis)}},
                  text);
}

int run_darboux(Session& s) {
    Derivation d = parse_derivation(s);
    s.inputs["max_degree"] = s.max_degree;
    if (s.cofactor_arg.empty()) throw PreconditionError("--cofactor is required");
    FieldScalar c = parse_scalar(s.cofactor_arg, s.ring);
    s.inputs["cofactor"] = to_string(c);
    std::vector<MultiPoly> basis = darboux_fixed_cofactor(d, c, s.max_degree);
    std::string text;
    for (const auto& p : basis) {
        if (!text.empty()) text += "\n";
        text += to_string(p);
    }
    if (basis.empty()) text = "none";
    return finish(s, "darboux", ordered_json{{"basis", poly_list_json(basis)}}, text);
}

int run_prefilter2(Session& s) {
    Derivation d = parse_derivation(s);
    PrefilterResult r = two_var_prefilter(d);
    s.diagnostics["degrees"] = r.diagnostics;
    ordered_json o = ordered_json::object();
    o["found"] = r.witness.has_value();
    std::string text;
    if (r.witness) {
        o["witness"] = witness_json(s.ring, *r.witness);
        text = witness_text(s.ring, *r.witness);
    } else {
        text = "no witness found";
    }
    text += "\n" + r.diagnostics;
    return finish(s, "prefilter2", o, text);
}

int run_shamsuddin(Session& s) {
    Derivation d = parse_derivation(s);
    SimplicityVerdict v = shamsuddin_decide(d);
    ordered_json o = ordered_json::object();
    std::string text;
    switch (v.kind) {
        case SimplicityVerdict::Kind::Simple:
            o["verdict"] = "Simple";
            text = "Simple";
            break;
        case SimplicityVerdict::Kind::NotSimple:
            o["verdict"] = "NotSimple";
            text = "NotSimple";
            break;
        case SimplicityVerdict::Kind::Unknown:
            o["verdict"] = "Unknown";
            text = "Unknown";
            break;
    }
    o["reason"] = v.reason;
    if (v.witness) {
        o["witness"] = witness_json(s.ring, *v.witness);
        text += "\n" + witness_text(s.ring, *v.witness);
    }
    if (v.stable_ideal && v.witness &&
        !std::holds_alternative<StableIdealWitness>(*v.witness)) {
        o["stable_ideal"] = witness_json(s.ring, NonSimplicityWitness(*v.stable_ideal));
        text += "\n" + witness_text(s.ring, NonSimplicityWitness(*v.stable_ideal));
    }
    if (v.automorphism) {
        o["automorphism"] = to_string(*v.automorphism);
        text += "\ncommuting automorphism: " + to_string(*v.automorphism);
    }
    s.diagnostics["reason"] = v.reason;
    return finish(s, "shamsuddin", o, text);
}

int run_verify(Session& s) {
    Derivation d = parse_derivation(s);
    auto id = theorem_id_from(s.theorem_arg);
    if (!id) throw PreconditionError("unknown theorem id '" + s.theorem_arg + "'");
    s.inputs["theorem"] = s.theorem_arg;
    VerifyOptions opts;
    opts.degree_bound = s.degree;
    if (!s.axis_arg.empty()) opts.axis = parse_axis(s);
    TheoremReport rep = verify_theorem(*id, d, opts);
    ordered_json o = ordered_json::object();
    o["theorem"] = to_string(rep.id);
    switch (rep.verdict) {
        case Verdict::Match: o["verdict"] = "Match"; break;
        case Verdict::Mismatch: o["verdict"] = "Mismatch"; break;
        case Verdict::HypothesesNotMet: o["verdict"] = "HypothesesNotMet"; break;
    }
    o["hypotheses"] = hypotheses_json(rep.hypotheses);
    ordered_json comp = ordered_json::array();
    for (const auto& f : rep.computed) comp.push_back(family_json(s.ring, f));
    o["computed"] = comp;
    ordered_json exp = ordered_json::array();
    for (const auto& f : rep.expected) exp.push_back(family_json(s.ring, f));
    o["expected"] = exp;
    o["detail"] = rep.detail;
    std::string text = std::string(o["verdict"].get<std::string>());
    for (const auto& h : rep.hypotheses)
        text += "\n" + std::string(h.pass ? "[pass] " : "[fail] ") + h.name +
                (h.witness.empty() ? "" : " (" + h.witness + ")");
    if (!rep.detail.empty()) text += "\n" + rep.detail;
    return finish(s, "verify", o, text);
}

int report_error(const Session& s, const std::string& command, const std::string& type,
                 const std::string& message, int code,
                 std::optional<std::size_t> line = {},
                 std::optional<std::size_t> col = {}) {
    if (s.json) {
        ordered_json top = ordered_json::object();
        top["format_version"] = 1;
        top["command"] = command;
        ordered_json err = ordered_json::object();
        err["type"] = type;
        err["message"] = message;
        if (line) err["line"] = *line;
        if (col) err["column"] = *col;
        top["error"] = err;
        top["status"] = "error";
        std::cout << top.dump(2) << "\n";
    } else {
        // ParseError messages already carry their position.
        std::cerr << "error: " << message << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Session s;
    CLI::App app{"exact tame isotropy computations for polynomial derivations"};
    app.require_subcommand(1);
    app.add_option("--vars", s.vars_arg, "comma-separated variable names")->required();
    app.add_option("--cyclotomic", s.cyclotomic,
                   "order m of the coefficient field Q(zeta_m)");
    app.add_flag("--json", s.json, "machine-readable output");

    std::string command;
    int (*runner)(Session&) = nullptr;

    auto add = [&](const std::string& name, const std::string& desc,
                   int (*fn)(Session&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->callback([&command, &runner, name, fn] {
            command = name;
            runner = fn;
        });
        return sub;
    };

    auto with_derivation = [&](CLI::App* sub) {
        sub->add_option("--derivation", s.derivation_arg,
                        "semicolon-separated images f1;...;fn");
        return sub;
    };
    auto with_maps = [&](CLI::App* sub) {
        sub->add_option("--endo", s.endo_arg, "endomorphism images g1;...;gn");
        sub->add_option("--elem", s.elem_args,
                        "elementary automorphism axis=j,scale=a,offset=h (repeatable, "
                        "applied left to right)");
        return sub;
    };

    with_maps(with_derivation(add("apply", "apply a map to --poly", run_apply)))
        ->add_option("--poly", s.poly_arg, "polynomial");
    with_derivation(add("derive", "apply the derivation to --poly", run_derive))
        ->add_option("--poly", s.poly_arg, "polynomial");
    with_maps(with_derivation(
        add("commutes", "does the map commute with the derivation?", run_commutes)));
    with_maps(with_derivation(
        add("conjugate", "conjugate the derivation by a tame word", run_conjugate)));
    with_derivation(
        add("translations", "which axis shifts commute", run_translations));
    {
        CLI::App* sub = with_derivation(add(
            "affine-commutant", "solve for commuting axis maps a*X_j + h", run_affine_commutant));
        sub->add_option("--axis", s.axis_arg, "variable name or 1-based index");
        sub->add_option("--degree", [&s](const std::vector<std::string>& vals) {
            s.degree = static_cast<unsigned>(std::stoul(vals[0]));
            return true;
        }, "offset degree bound");
    }
    {
        CLI::App* sub = with_derivation(add(
            "scalar-commutant", "commuting maps a*X_j + constant", run_scalar_commutant));
        sub->add_option("--axis", s.axis_arg, "variable name or 1-based index");
    }
    with_derivation(add("group", "closed-form tame isotropy templates", run_group));
    with_derivation(add("stable", "is <u> a stable ideal?", run_stable))
        ->add_option("--poly", s.poly_arg, "ideal generator u");
    with_derivation(add("first-integrals", "kernel basis up to a degree",
                        run_first_integrals))
        ->add_option("--max-degree", s.max_degree, "total degree bound")
        ->required();
    {
        CLI::App* sub = with_derivation(
            add("darboux", "solutions of D(u) = c*u up to a degree", run_darboux));
        sub->add_option("--cofactor", s.cofactor_arg, "constant cofactor c")->required();
        sub->add_option("--max-degree", s.max_degree, "total degree bound")->required();
    }
    with_derivation(add("prefilter2", "two-variable non-simplicity screens",
                        run_prefilter2));
    with_derivation(
        add("shamsuddin", "decide simplicity of a Shamsuddin derivation", run_shamsuddin));
    {
        CLI::App* sub = with_derivation(
            add("verify", "check a named result on this instance", run_verify));
        sub->add_option("--theorem", s.theorem_arg,
                        "T1VAR|TIGTC|TIGT0|TAUT|GENTRANS|NOTRANS|SIMPLE2V|SHAM")
            ->required();
        sub->add_option("--axis", s.axis_arg, "variable name or 1-based index");
        sub->add_option("--degree", [&s](const std::vector<std::string>& vals) {
            s.degree = static_cast<unsigned>(std::stoul(vals[0]));
            return true;
        }, "degree bound override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        build_ring(s);
        return runner(s);
    } catch (const ParseError& e) {
        return report_error(s, command, "parse_error", e.what(), 2, e.line(), e.column());
    } catch (const RingMismatchError& e) {
        return report_error(s, command, "ring_mismatch", e.what(), 1);
    } catch (const PreconditionError& e) {
        return report_error(s, command, "precondition", e.what(), 1);
    } catch (const Error& e) {
        return report_error(s, command, "domain_error", e.what(), 1);
    }
}
