#include "ppav/commands.hpp"

#include <fstream>
#include <ostream>
#include <regex>

namespace ppav {

namespace {

std::string label_of(long a, long b) { return "(" + std::to_string(a) + ":" + std::to_string(b) + ")"; }

Json type_json(const PolarizedLattice& p) { return to_json(polarization_type(p).chain); }

Json header(const std::string& command) { return Json{{"schema", schema_version}, {"command", command}}; }

IntMatrix power(const IntMatrix& a, long k)
{
    IntMatrix r = IntMatrix::identity(a.rows());
    for (long i = 0; i < k; ++i)
        r = r * a;
    return r;
}

Json cover_identities(const CoverHomology& cov, std::vector<std::string>& failed)
{
    const long m = cov.m;
    IntMatrix s = to_integer(cov.sigma.matrix());
    IntMatrix e = cov.total_homology.intersection_form();
    IntMatrix push = to_integer(cov.pushforward.matrix()), pull = to_integer(cov.transfer.matrix());
    IntMatrix sum(s.rows(), s.cols());
    for (long i = 0; i < m; ++i)
        sum = sum + power(s, i);
    const std::size_t g = cov.base_genus();
    std::vector<std::pair<std::string, bool>> ids{
        {"g' = mg - m + 1", g == 0 || cov.total_genus() == static_cast<std::size_t>(m) * (g - 1) + 1},
        {"sigma symplectic", s.transpose() * e * s == e},
        {"sigma^m = id", power(s, m) == IntMatrix::identity(s.rows())},
        {"pi_* pi^* = m", push * pull == Integer(m) * IntMatrix::identity(push.rows())},
        {"pi^* pi_* = sum sigma^i", pull * push == sum}};
    Json out = Json::array();
    for (const auto& [name, ok] : ids) {
        out.push_back(Json{{"identity", name}, {"holds", ok}});
        if (!ok)
            failed.push_back(name);
    }
    return out;
}

ValidationError validation(const std::string& what) { return ValidationError(what); }

} // namespace

std::pair<long, long> parse_k_label(const std::string& s)
{
    static const std::regex re(R"(\(?\s*(-?\d+)\s*:\s*(-?\d+)\s*\)?)");
    std::smatch mt;
    if (!std::regex_match(s, mt, re))
        throw ValidationError("malformed K label '" + s + "', expected a:b");
    return {std::stol(mt[1]), std::stol(mt[2])};
}

CommandReport cmd_quotient(long g, long m, bool all, const Integer& budget)
{
    if (g < 1 || m < 1)
        throw ValidationError("quotient needs g >= 1 and m >= 1");
    PolarizedLattice p = standard_principal(static_cast<std::size_t>(g));
    PairedQuotient t = torsion_subgroup(p, m);
    std::vector<FiniteQuotient> ks = enumerate_mti(t.group, t.pairing, budget);
    if (!all)
        ks.erase(ks.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(ks.size()), 1), ks.end());
    CommandReport rep{header("quotient"), {}};
    Json list = Json::array();
    bool all_principal = true;
    for (const auto& k : ks) {
        PolarizedLattice x = quotient_by_isotropic(p, k, Rational(m));
        bool principal = polarization_type(x).is_principal();
        all_principal = all_principal && principal;
        list.push_back(Json{{"K", to_json(k.upper())}, {"type", type_json(x)}, {"principal", principal}});
    }
    if (!all_principal)
        rep.failed.push_back("X principal");
    rep.payload["g"] = g;
    rep.payload["m"] = m;
    rep.payload["mode"] = all ? "all" : "one";
    rep.payload["count"] = ks.size();
    rep.payload["all_principal"] = all_principal;
    rep.payload["subgroups"] = std::move(list);
    return rep;
}

CommandReport cmd_cover(long g, long m)
{
    if (g < 1 || m < 1)
        throw ValidationError("cover needs g >= 1 and m >= 1");
    CoverHomology cov = standard_cover(static_cast<std::size_t>(g), m);
    CommandReport rep{header("cover"), {}};
    Json cert{{"g", g}, {"m", m}, {"total_genus", cov.total_genus()}};
    cert["identities"] = cover_identities(cov, rep.failed);
    PrymSublattices subs = prym_sublattice(cov);
    cert["prym_rank"] = subs.sub_A.rank();
    cert["pullback_rank"] = subs.sub_B.rank();
    cert["component_group_order"] = to_json(norm_component_group(cov).group.order());
    if (m == 1 || g < 2) {
        cert["degenerate"] = true;
    } else {
        cert["degenerate"] = false;
        KerMuData d = ker_mu_basis(cov);
        cert["ker_pullback_order"] = to_json(eta_class(cov).order());
        cert["ker_mu_B_invariants"] = to_json(d.group->invariants());
        cert["ker_mu_B_order"] = to_json(d.group->order());
        Json ks = Json::array();
        for (const auto& k : classify_mti_K(cov)) {
            KernelIdentification ki = kernel_identification(cov, k.K);
            std::string label = label_of(k.a, k.b);
            ks.push_back(Json{{"label", label},
                              {"K", to_json(k.K.upper())},
                              {"birational", birational_predicate(k.K, d.p1)},
                              {"kernel_identification",
                               {{"composite_order", to_json(ki.composite_order)},
                                {"norm_preimage_order", to_json(ki.norm_preimage_order)},
                                {"agrees", ki.agrees}}}});
            if (!ki.agrees)
                rep.failed.push_back("kernel identification for K = " + label);
        }
        cert["subgroups"] = std::move(ks);
    }
    rep.payload["fixture"] = cover_fixture(cov);
    rep.payload["certificate"] = std::move(cert);
    return rep;
}

CommandReport cmd_welters(const Json& fixture, const std::string& k_label, Preset preset)
{
    const Json& fx = fixture.is_object() && fixture.contains("fixture") ? fixture.at("fixture") : fixture;
    CoverHomology cov = cover_from_fixture(fx);
    const long m = cov.m;
    Lattice sub_B = preset_sub_B(preset, cov);
    std::optional<FiniteQuotient> K;
    std::string label;
    std::optional<bool> birational;
    if (preset == Preset::pullback_quotient && m > 1 && cov.base_genus() >= 2) {
        auto [a, b] = k_label.empty() ? std::pair<long, long>{-1, -1} : parse_k_label(k_label);
        KerMuData d = ker_mu_basis(cov);
        for (const auto& k : classify_mti_K(cov))
            if (k_label.empty() || (k.a == a && k.b == b)) {
                K = k.K;
                label = label_of(k.a, k.b);
                birational = birational_predicate(k.K, d.p1);
                break;
            }
        if (!K)
            throw ValidationError("no subgroup with label " + k_label);
    } else {
        if (!k_label.empty())
            throw ValidationError("K labels apply to the pullback_quotient preset only");
        auto ks = mti_of_ker_mu(complement(cov.total(), sub_B), m);
        K = ks.front();
    }

    WeltersOutput w = welters_construct(cov.total(), sub_B, *K, m);
    CommandReport rep{header("welters"), {}};
    Json checks = Json::array();
    for (const auto& c : w.checks) {
        checks.push_back(Json{{"identity", c.name}, {"holds", c.holds}});
        if (!c.holds)
            rep.failed.push_back(c.name);
    }
    const std::size_t n = w.j.matrix().rows();
    rep.payload["preset"] = preset_name(preset);
    rep.payload["m"] = m;
    rep.payload["K_label"] = label.empty() ? Json(nullptr) : Json(label);
    rep.payload["birational"] = birational ? Json(*birational) : Json(nullptr);
    rep.payload["inputs"] = Json{{"ambient", to_json(cov.total())}, {"sub_B", to_json(sub_B)}, {"K", to_json(K->upper())}};
    rep.payload["types"] = Json{{"A", type_json(w.pair.polarized_A())},
                                {"B", type_json(w.pair.polarized_B())},
                                {"B_hat", type_json(w.B_hat)},
                                {"X", type_json(w.X)}};
    rep.payload["A_cap_B_order"] = to_json(w.pair.intersection.order());
    rep.payload["checks"] = std::move(checks);
    rep.payload["stated_identity"] =
        Json{{"identity", "(j-1)(j-m+1) = 0"}, {"holds", j_polynomial(w.j, Rational(1 - m)) == RatMatrix(n, n)}};
    rep.payload["j"] = to_json(w.j.matrix());
    rep.payload["X"] = to_json(w.X);
    return rep;
}

CommandReport cmd_dims(long g, long m, long r)
{
    LocusReport l = [&] {
        try {
            return locus_dimensions(g, m, r);
        } catch (const DomainError& e) {
            throw ValidationError(e.what());
        }
    }();
    CommandReport rep{header("dims"), {}};
    rep.payload["report"] = to_json(l);
    if (m == 2)
        rep.payload["m2_locus_dimension"] = m2_locus_dimension(g);
    return rep;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.format != "json" && cfg.format != "text")
            throw validation("format must be json or text");
        if (cfg.format == "text" && cfg.command != "dims")
            throw validation("text output is available for dims only");
        CommandReport rep;
        if (cfg.command == "quotient") {
            if (cfg.mode != "one" && cfg.mode != "all")
                throw validation("mode must be one or all");
            rep = cmd_quotient(cfg.g, cfg.m, cfg.mode == "all", cfg.budget);
        } else if (cfg.command == "cover") {
            rep = cmd_cover(cfg.g, cfg.m);
        } else if (cfg.command == "welters") {
            auto preset = parse_preset(cfg.preset);
            if (!preset)
                throw validation("unknown preset '" + cfg.preset + "'");
            std::ifstream in(cfg.fixture_path);
            if (!in)
                throw validation("cannot read fixture '" + cfg.fixture_path + "'");
            Json fx = Json::parse(in, nullptr, false);
            if (fx.is_discarded())
                throw validation("fixture is not valid JSON");
            rep = cmd_welters(fx, cfg.k_label, *preset);
        } else if (cfg.command == "dims") {
            rep = cmd_dims(cfg.g, cfg.m, cfg.r);
        } else {
            throw validation("unknown command '" + cfg.command + "'");
        }

        std::string text;
        if (cfg.format == "text")
            text = locus_table(locus_dimensions(cfg.g, cfg.m, cfg.r));
        else
            text = rep.payload.dump(2) + "\n";
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!f)
                throw validation("cannot write '" + cfg.out_path + "'");
            f << text;
        }
        for (const auto& id : rep.failed)
            err << "certification failed: " << id << '\n';
        return rep.failed.empty() ? exit_ok : exit_certification;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const CertificationError& e) {
        err << "certification failed: " << e.identity() << " (" << e.what() << ")\n";
        return exit_certification;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const NotAbelianSubvarietyError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const IsotropyError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_certification;
    }
}

} // namespace ppav
