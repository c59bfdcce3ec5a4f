#include "hopf/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "hopf/constructors.hpp"
#include "hopf/dim5.hpp"
#include "hopf/io.hpp"

namespace hopf {

namespace {

const std::vector<std::string> families{"group_algebra", "sweedler",      "taft",        "a_tau_mu",
                                        "taft_tensor_group", "unit_braided", "group_braided", "nichols_h4"};

struct Options {
    std::string family;
    unsigned p = 3, q = 2, n = 2;
    long long tau = 1;
    int mu = 0;
    std::string input, input2, output;
    std::string dim5_case;
};

FieldElement tau_of(const Options& o) { return make_field(o.q).zeta_pow(o.tau); }

Manifest construct(const Options& o) {
    const std::string& f = o.family;
    if (f == "group_algebra") return {"1", group_algebra(o.n)};
    if (f == "sweedler") return {"1", sweedler()};
    if (f == "taft") return {"1", taft(o.q, tau_of(o))};
    if (f == "a_tau_mu") return {"1", a_tau_mu(o.p, o.q, tau_of(o), o.mu)};
    if (f == "taft_tensor_group") return {"1", taft_tensor_group(o.q, tau_of(o), o.p)};
    auto h4 = std::make_shared<const HopfAlgebra>(sweedler());
    if (f == "unit_braided") return {"1", unit_braided(h4)};
    if (f == "group_braided") return {"1", trivial_braided(group_algebra(o.n, h4->field()), h4)};
    return {"1", nichols_h4(h4)};
}

std::string vector_text(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + "]";
}

std::string prefixed(const std::string& prefix, const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        out += prefix + text.substr(start, end - start) + "\n";
        start = end + 1;
    }
    return out;
}

HopfAlgebra with_antipode(HopfAlgebra h) {
    if (!h.antipode) h.antipode = solve_antipode(h);
    return h;
}

const HopfAlgebra& need_hopf(const Manifest& m, const std::string& path) {
    if (m.kind() != ObjectKind::hopf)
        throw ParseError(path + ": expected object_kind \"hopf\", got \"" + to_string(m.kind()) + "\"");
    return std::get<HopfAlgebra>(m.payload);
}

int verify(const Options& o, std::ostream& out) {
    Manifest m = read_manifest(o.input);
    bool ok = true;
    auto emit = [&](const std::string& prefix, const Report& r) {
        out << prefixed(prefix, r.to_text());
        ok = ok && r.ok();
    };
    switch (m.kind()) {
        case ObjectKind::hopf: emit("", verify_hopf(std::get<HopfAlgebra>(m.payload))); break;
        case ObjectKind::yd: {
            const auto& v = std::get<YDModule>(m.payload);
            emit("base ", verify_hopf(*v.base));
            emit("", verify_yd(v));
            break;
        }
        case ObjectKind::braided: {
            const auto& r = std::get<BraidedHopf>(m.payload);
            emit("base ", verify_hopf(r.base()));
            emit("", verify_yd(r.yd));
            emit("", verify_braided_hopf(r));
            break;
        }
    }
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int invariants(const Options& o, std::ostream& out) {
    HopfAlgebra h = with_antipode(need_hopf(read_manifest(o.input), o.input));
    out << fingerprint(h).to_text();
    IntegralData data = integrals(h);
    out << "left_integral: " << vector_text(data.left_integral) << "\n";
    out << "right_integral_dual: " << vector_text(data.right_integral_dual) << "\n";
    out << "distinguished_a: " << vector_text(data.distinguished_a) << "\n";
    out << "distinguished_alpha: " << vector_text(data.distinguished_alpha) << "\n";
    out << "radford_s4: " << (check_radford_s4(h, data) ? "ok" : "FAIL") << "\n";
    out << "semisimple: " << (is_semisimple_LR(h) ? "yes" : "no") << "\n";
    return 0;
}

int dualize(const Options& o) {
    Manifest m = read_manifest(o.input);
    switch (m.kind()) {
        case ObjectKind::hopf:
            write_manifest(o.output, {"1", dual(with_antipode(std::get<HopfAlgebra>(m.payload)))});
            return 0;
        case ObjectKind::braided: {
            const auto& r = std::get<BraidedHopf>(m.payload);
            auto base = std::make_shared<const HopfAlgebra>(dual(r.base()));
            write_manifest(o.output, {"1", dual_braided(r, base)});
            return 0;
        }
        default: throw ParseError(o.input + ": cannot dualize a bare YD module");
    }
}

int bosonize_files(const Options& o, std::ostream& out) {
    Manifest rm = read_manifest(o.input);
    if (rm.kind() != ObjectKind::braided) throw ParseError(o.input + ": expected object_kind \"braided\"");
    const auto& r = std::get<BraidedHopf>(rm.payload);
    Manifest bm = read_manifest(o.input2);
    const HopfAlgebra& b = need_hopf(bm, o.input2);
    const HopfAlgebra& base = r.base();
    if (!same_field(&b.field(), &base.field()) || !(b.algebra.mult == base.algebra.mult) ||
        !(b.comult == base.comult) || !(b.unit() == base.unit()) || !(b.counit == base.counit))
        throw BaseMismatch("the braided Hopf algebra lives over a different base");
    HopfAlgebra h = bosonize(r);
    write_manifest(o.output, {"1", h});
    out << "dim: " << h.dim() << "\n";
    return 0;
}

int exit_code(const Error& e) {
    if (dynamic_cast<const VerificationFailure*>(&e) || dynamic_cast<const NoAntipode*>(&e) ||
        dynamic_cast<const DegenerateIntegral*>(&e) || dynamic_cast<const NotGroupLike*>(&e) ||
        dynamic_cast<const AntipodeOrderOverflow*>(&e))
        return 1;
    return 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with finite-dimensional Hopf algebras over cyclotomic fields", "hopfctl"};
    app.require_subcommand(1);
    Options o;

    auto* c = app.add_subcommand("construct", "Write a named family to a manifest file");
    c->add_option("family", o.family, "Family name")->required()->check(CLI::IsMember(families));
    c->add_option("--p", o.p, "Odd prime p");
    c->add_option("--q", o.q, "Prime q (order of tau)");
    c->add_option("--n", o.n, "Group order for group algebras");
    c->add_option("--tau", o.tau, "tau = zeta_q^k, given as k");
    c->add_option("--mu", o.mu, "mu in {0, 1}")->check(CLI::IsMember({0, 1}));
    c->add_option("-o,--output", o.output, "Output file")->required();

    auto* v = app.add_subcommand("verify", "Check all axioms of the object in FILE");
    v->add_option("file", o.input)->required();
    auto* inv = app.add_subcommand("invariants", "Print the fingerprint and integral data");
    inv->add_option("file", o.input)->required();
    auto* cl = app.add_subcommand("classify", "Label a non-semisimple Hopf algebra of dimension 4p");
    cl->add_option("file", o.input)->required();
    auto* du = app.add_subcommand("dualize", "Write the dual");
    du->add_option("file", o.input)->required();
    du->add_option("-o,--output", o.output)->required();
    auto* bo = app.add_subcommand("bosonize", "Write the biproduct R x B");
    bo->add_option("r_file", o.input)->required();
    bo->add_option("b_file", o.input2)->required();
    bo->add_option("-o,--output", o.output)->required();
    auto* d5 = app.add_subcommand("dim5-check", "Run the five-dimensional constraint chain");
    d5->add_option("--case", o.dim5_case)->required()->check(CLI::IsMember({"A", "B", "C"}));

    std::vector<const char*> argv{"hopfctl"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (c->parsed()) {
            write_manifest(o.output, construct(o));
            out << "wrote " << o.family << " to " << o.output << "\n";
            return 0;
        }
        if (v->parsed()) return verify(o, out);
        if (inv->parsed()) return invariants(o, out);
        if (cl->parsed()) {
            out << classify_4p(need_hopf(read_manifest(o.input), o.input)) << "\n";
            return 0;
        }
        if (du->parsed()) return dualize(o);
        if (bo->parsed()) return bosonize_files(o, out);
        Dim5Report rep = dim5_check(parse_dim5_case(o.dim5_case));
        out << rep.to_text();
        return rep.inconsistent ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e);
    }
}

}  // namespace hopf
