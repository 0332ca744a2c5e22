#include "prym/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace prym {

namespace {

using nlohmann::json;

class StageTimer {
  public:
    explicit StageTimer(json& sink) : sink_(sink) {}
    template <class F>
    auto time(const std::string& name, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, t0);
        } else {
            auto r = f();
            record(name, t0);
            return r;
        }
    }

  private:
    void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        sink_[name] = s;
    }
    json& sink_;
};

json config_to_json(const RunConfig& cfg) {
    return json{{"command", cfg.command},   {"stage", cfg.stage},          {"prime", cfg.prime},
                {"seed", cfg.seed},         {"max_tries", cfg.max_tries},  {"convention", cfg.convention},
                {"input", cfg.input_path},  {"output", cfg.output_path},   {"version", kToolVersion}};
}

json point_to_json(const ProjPoint& q) {
    json a = json::array();
    for (const Fp& c : q.coords) a.push_back(c.value());
    return a;
}

}  // namespace

json cert_report_to_json(const CertReport& rep) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return json{{"checks", checks}, {"verdict", rep.verdict() ? "pass" : "fail"}};
}

json model_to_json(const QuarticModel& model) {
    json nodes = json::array();
    for (const ProjPoint& q : model.nodes) nodes.push_back(point_to_json(q));
    json sextic_nodes = json::array();
    for (const ProjPoint& q : model.sextic_nodes) sextic_nodes.push_back(point_to_json(q));
    return json{{"prime", model.prime},
                {"nodes", nodes},
                {"u2", to_string(model.u2)},
                {"u3", to_string(model.u3)},
                {"u4", to_string(model.u4)},
                {"convention", "half"},
                {"f", to_string(model.sextic)},
                {"sextic_nodes", sextic_nodes},
                {"seed", model.seed},
                {"tries", model.tries}};
}

json canonical_curve_to_json(const CanonicalCurve& curve) {
    json quadrics = json::array();
    for (const Poly& h : curve.quadrics) quadrics.push_back(to_string(h));
    json cubics = json::array();
    for (const Poly& c : curve.cubics.basis) cubics.push_back(to_string(c));
    json lambdas = json::array();
    for (const Fp& l : curve.lambdas) lambdas.push_back(l.value());
    return json{{"quadrics", quadrics}, {"cubics", cubics}, {"lambdas", lambdas}};
}

json ks_certificate_to_json(const KSCertificate& cert, const QuarticModel& model) {
    json prov = json::array();
    for (const std::string& s : cert.matrix.provenance) prov.push_back(s);
    return json{{"n_family", cert.n_family},
                {"rank", cert.rank},
                {"max_rank", 45},
                {"rows", cert.matrix.m.rows()},
                {"cols", cert.matrix.m.cols()},
                {"verdict", cert.pass ? "pass" : "fail"},
                {"row_provenance", prov},
                {"convention",
                 json{{"u3_reading", model.u3_reading},
                      {"P1P2", json::array({point_to_json(model.nodes[1]), point_to_json(model.nodes[2])})}}}};
}

IngestResult ingest_model(std::uint32_t prime, const std::vector<std::vector<std::int64_t>>& node_ints,
                          const std::string& u2s, const std::string& u3s, const std::string& u4s,
                          const std::string& convention) {
    IngestResult result;
    result.convention.requested = convention;

    if (node_ints.size() != 6) throw ParseError("a model needs exactly 6 nodes");
    std::vector<ProjPoint> nodes;
    for (const auto& v : node_ints) {
        if (v.size() != 4) throw ParseError("each node needs 4 coordinates");
        nodes.push_back(ProjPoint::make(v, prime));
    }
    VarSetPtr v3 = proj2_vars();
    Poly u2 = parse_poly(u2s, v3, prime);
    Poly u3 = parse_poly(u3s, v3, prime);
    Poly u4 = parse_poly(u4s, v3, prime);

    auto attempt = [&](const std::string& reading) -> std::optional<QuarticModel> {
        try {
            Poly u3_half = reading == "half" ? u3 : u3.scaled(Fp(2, prime).inv());
            QuarticModel m = make_model(prime, nodes, u2, u3_half, u4);
            // gate: the discriminant must be singular at all five projections
            for (const ProjPoint& q : m.sextic_nodes) {
                std::span<const Fp> pt(q.coords);
                if (!evaluate(m.sextic, pt).is_zero()) return std::nullopt;
                for (std::size_t k = 0; k < 3; ++k)
                    if (!evaluate(partial_derivative(m.sextic, k), pt).is_zero()) return std::nullopt;
            }
            m.u3_reading = reading;
            return m;
        } catch (const PrymError&) {
            return std::nullopt;
        }
    };

    if (convention == "half" || convention == "full") {
        result.model = attempt(convention);
        result.convention.resolved = result.model ? convention : "";
        if (!result.model)
            result.error = "the '" + convention + "' reading does not make the listed nodes singular";
        return result;
    }
    if (convention != "auto") {
        result.error = "unknown convention '" + convention + "'";
        return result;
    }
    std::optional<QuarticModel> half = attempt("half");
    std::optional<QuarticModel> full = attempt("full");
    result.convention.ambiguous = half.has_value() && full.has_value();
    if (half) {
        result.model = std::move(half);
        result.convention.resolved = "half";
    } else if (full) {
        result.model = std::move(full);
        result.convention.resolved = "full";
    } else {
        result.error = "neither u3 reading makes the listed nodes singular";
    }
    return result;
}

namespace {

/// Certifications, canonical curve, and rank for an ingested model.
/// Returns the exit code and fills the report.
int full_pipeline(const QuarticModel& model, const RunConfig& cfg, json& out) {
    SplitMix64 rng(cfg.seed ^ 0x5eedc0de);
    json timings;
    StageTimer timer(timings);
    json checks;

    CertReport bundle = timer.time("conic_bundle", [&] {
        return conic_bundle_fiber_check(model.u2, model.u3, model.u4, model.sextic);
    });
    checks["conic_bundle"] = cert_report_to_json(bundle);
    CertReport sextic = timer.time("sextic_nodes", [&] {
        return certify_sextic_nodes(model.sextic, model.sextic_nodes, model.u2, model.u3, model.u4, rng);
    });
    checks["sextic_nodes"] = cert_report_to_json(sextic);
    CertReport contact = timer.time("contact_conic", [&] {
        return certify_contact_conic(model.u2, model.u3, model.sextic, rng);
    });
    checks["contact_conic"] = cert_report_to_json(contact);
    CertReport locus = timer.time("singular_locus", [&] {
        return certify_singular_locus(model.quartic, model.nodes, rng);
    });
    checks["singular_locus"] = cert_report_to_json(locus);

    bool geometry_ok = bundle.verdict() && sextic.verdict() && contact.verdict() && locus.verdict();
    out["model"] = model_to_json(model);
    out["checks"] = checks;
    out["timings"] = timings;
    if (!geometry_ok) {
        out["verdict"] = "fail";
        return kExitCheckFailed;
    }

    try {
        CanonicalCurve curve = timer.time("canonical_curve", [&] {
            return canonical_quadrics(model.sextic, cubic_system(model.sextic_nodes));
        });
        CertReport smooth = timer.time("smooth_ci", [&] { return certify_smooth_ci(curve); });
        checks["smooth_ci"] = cert_report_to_json(smooth);
        out["canonical_curve"] = canonical_curve_to_json(curve);

        KSCertificate cert = timer.time("kodaira_spencer", [&] {
            return rank_certificate(assemble_matrix(family_rows(model, curve), curve));
        });
        out["ks"] = ks_certificate_to_json(cert, model);
        out["checks"] = checks;
        out["timings"] = timings;
        bool pass = smooth.verdict() && cert.pass;
        out["verdict"] = pass ? "pass" : "fail";
        return pass ? kExitPass : kExitCheckFailed;
    } catch (const PrymError& e) {
        // dimension anomalies surface as failed checks, not crashes
        checks["pipeline_error"] =
            json{{"checks", json::array({json{{"name", "pipeline"}, {"status", "fail"}, {"detail", e.what()}}})},
                 {"verdict", "fail"}};
        out["checks"] = checks;
        out["timings"] = timings;
        out["verdict"] = "fail";
        return kExitCheckFailed;
    }
}

int ingest_and_run(std::uint32_t prime, const std::vector<std::vector<std::int64_t>>& nodes,
                   const std::string& u2, const std::string& u3, const std::string& u4, const RunConfig& cfg,
                   json& out) {
    IngestResult ing = ingest_model(prime, nodes, u2, u3, u4, cfg.convention);
    out["convention"] = json{{"u3_reading", ing.convention.resolved},
                             {"requested", ing.convention.requested},
                             {"ambiguous", ing.convention.ambiguous}};
    if (!ing.model) {
        out["checks"] = json{{"convention_resolution",
                              json{{"checks", json::array({json{{"name", "convention_resolution"},
                                                                {"status", "fail"},
                                                                {"detail", ing.error}}})},
                                   {"verdict", "fail"}}}};
        out["verdict"] = "fail";
        return kExitCheckFailed;
    }
    out["convention"]["P1P2"] =
        json::array({point_to_json(ing.model->nodes[1]), point_to_json(ing.model->nodes[2])});
    return full_pipeline(*ing.model, cfg, out);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

struct ModelFileData {
    std::uint32_t prime;
    std::vector<std::vector<std::int64_t>> nodes;
    std::string u2, u3, u4;
    std::string convention = "auto";
};

ModelFileData parse_model_file(const json& j) {
    try {
        ModelFileData d;
        d.prime = j.at("prime").get<std::uint32_t>();
        for (const auto& row : j.at("nodes")) d.nodes.push_back(row.get<std::vector<std::int64_t>>());
        d.u2 = j.at("u2").get<std::string>();
        d.u3 = j.at("u3").get<std::string>();
        d.u4 = j.at("u4").get<std::string>();
        if (j.contains("convention")) d.convention = j.at("convention").get<std::string>();
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model JSON is missing or mistypes a field: ") + e.what());
    }
}

}  // namespace

int run_verify_paper(const RunConfig& cfg, json& out) {
    out["config"] = config_to_json(cfg);
    const Fixture& fx = reference_fixture();
    if (cfg.prime != fx.prime)
        throw ParseError("the reference data is mod-" + std::to_string(fx.prime) + "; --prime " +
                         std::to_string(cfg.prime) + " cannot apply to it");
    return ingest_and_run(fx.prime, fx.nodes, fx.u2, fx.u3, fx.u4, cfg, out);
}

int run_certify(const RunConfig& cfg, json& out) {
    out["config"] = config_to_json(cfg);
    ModelFileData d = parse_model_file(read_json_file(cfg.input_path));
    RunConfig local = cfg;
    if (cfg.convention == "auto" && d.convention != "auto") local.convention = d.convention;
    Prime check(d.prime);
    return ingest_and_run(d.prime, d.nodes, d.u2, d.u3, d.u4, local, out);
}

int run_random(const RunConfig& cfg, json& out) {
    out["config"] = config_to_json(cfg);
    try {
        QuarticModel model = random_quartic(cfg.prime, cfg.seed, cfg.max_tries);
        model.u3_reading = "half";
        return full_pipeline(model, cfg, out);
    } catch (const NoGeneralMemberFound& e) {
        out["checks"] = json{{"random_search",
                              json{{"checks", json::array({json{{"name", "random_search"},
                                                                {"status", "fail"},
                                                                {"detail", e.what()}}})},
                                   {"verdict", "fail"}}}};
        out["verdict"] = "fail";
        return kExitCheckFailed;
    }
}

namespace {

int stage_discriminant(const QuarticModel& model, json& out) {
    out["f"] = to_string(model.sextic);
    json nodes = json::array();
    bool all_nodes = true;
    for (const ProjPoint& q : model.sextic_nodes) {
        std::string cls;
        try {
            switch (classify_singular_point(model.sextic, q)) {
                case SingularityType::smooth: cls = "smooth"; break;
                case SingularityType::ordinary_node: cls = "ordinary_node"; break;
                case SingularityType::worse: cls = "worse"; break;
            }
        } catch (const PointNotOnVariety&) {
            cls = "not_on_curve";
        }
        if (cls != "ordinary_node") all_nodes = false;
        nodes.push_back(json{{"point", point_to_json(q)}, {"class", cls}});
    }
    out["sextic_nodes"] = nodes;
    out["verdict"] = all_nodes ? "pass" : "fail";
    return all_nodes ? kExitPass : kExitCheckFailed;
}

int stage_canonical(const QuarticModel& model, json& out) {
    CanonicalCurve curve = canonical_quadrics(model.sextic, cubic_system(model.sextic_nodes));
    out["canonical_curve"] = canonical_curve_to_json(curve);
    CertReport smooth = certify_smooth_ci(curve);
    out["checks"] = json{{"smooth_ci", cert_report_to_json(smooth)}};
    out["verdict"] = smooth.verdict() ? "pass" : "fail";
    return smooth.verdict() ? kExitPass : kExitCheckFailed;
}

int stage_ks_rank_from_parts(const json& j, json& out) {
    std::uint32_t prime;
    try {
        prime = j.at("prime").get<std::uint32_t>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("ks-rank input needs a prime: ") + e.what());
    }
    Prime check(prime);
    VarSetPtr y = quadric_vars();
    std::vector<Poly> quadrics;
    try {
        for (const auto& s : j.at("quadrics")) quadrics.push_back(parse_poly(s.get<std::string>(), y, prime));
    } catch (const json::exception& e) {
        throw ParseError(std::string("ks-rank input needs quadrics: ") + e.what());
    }
    if (quadrics.size() != 3) throw ParseError("ks-rank input needs exactly 3 quadrics");
    std::vector<std::vector<Fp>> fam;
    if (j.contains("family")) {
        for (const auto& triple : j.at("family")) {
            std::vector<Fp> row;
            for (const auto& s : triple) {
                Poly h = parse_poly(s.get<std::string>(), y, prime);
                if (!h.is_zero() && h.homogeneous_degree() != std::optional<int>(2))
                    throw ParseError("family entries must be quadrics");
                std::vector<Fp> v = coeff_vector(h, 2);
                row.insert(row.end(), v.begin(), v.end());
            }
            if (row.size() != 45) throw ParseError("family rows must hold 3 quadrics");
            fam.push_back(std::move(row));
        }
    }
    CanonicalCurve shell{quadrics,
                         {},
                         {},
                         CubicSystem{},
                         Poly(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(prime))};
    KSCertificate cert = rank_certificate(assemble_matrix(fam, shell));
    out["ks"] = json{{"n_family", cert.n_family}, {"rank", cert.rank},     {"max_rank", 45},
                     {"rows", cert.matrix.m.rows()}, {"cols", cert.matrix.m.cols()},
                     {"verdict", cert.pass ? "pass" : "fail"}};
    out["verdict"] = cert.pass ? "pass" : "fail";
    return cert.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run_stage(const RunConfig& cfg, json& out) {
    out["config"] = config_to_json(cfg);
    json j = read_json_file(cfg.input_path);

    if (cfg.stage == "ks-rank" && j.contains("quadrics")) return stage_ks_rank_from_parts(j, out);

    ModelFileData d = parse_model_file(j);
    RunConfig local = cfg;
    if (cfg.convention == "auto" && d.convention != "auto") local.convention = d.convention;
    Prime check(d.prime);
    IngestResult ing = ingest_model(d.prime, d.nodes, d.u2, d.u3, d.u4, local.convention);
    out["convention"] = json{{"u3_reading", ing.convention.resolved},
                             {"requested", ing.convention.requested},
                             {"ambiguous", ing.convention.ambiguous}};
    if (!ing.model) {
        out["verdict"] = "fail";
        out["error"] = ing.error;
        return kExitCheckFailed;
    }
    const QuarticModel& model = *ing.model;
    try {
        if (cfg.stage == "discriminant") return stage_discriminant(model, out);
        if (cfg.stage == "canonical") return stage_canonical(model, out);
        if (cfg.stage == "ks-rank") {
            CanonicalCurve curve = canonical_quadrics(model.sextic, cubic_system(model.sextic_nodes));
            KSCertificate cert = rank_certificate(assemble_matrix(family_rows(model, curve), curve));
            out["ks"] = ks_certificate_to_json(cert, model);
            out["verdict"] = cert.pass ? "pass" : "fail";
            return cert.pass ? kExitPass : kExitCheckFailed;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const PrymError& e) {
        // dimension anomalies on degenerate inputs are failed checks
        out["verdict"] = "fail";
        out["error"] = e.what();
        return kExitCheckFailed;
    }
    throw ParseError("unknown stage '" + cfg.stage + "' (expected discriminant, canonical or ks-rank)");
}

int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string convention_flag;

    CLI::App app{"exact certification pipeline for 6-nodal quartic surfaces over F_p"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output_path, "also write the JSON report to this file");
        sub->add_option("--convention", convention_flag, "u3 reading: u3=half or u3=full");
    };

    CLI::App* verify = app.add_subcommand("verify-paper", "run the reference computation over F_101");
    verify->add_option("--prime", cfg.prime, "prime field (the reference data is mod 101)");
    add_common(verify);

    CLI::App* certify = app.add_subcommand("certify", "run the full pipeline on a model file");
    certify->add_option("--input", cfg.input_path, "model JSON")->required();
    add_common(certify);

    CLI::App* random = app.add_subcommand("random", "draw and certify a random nodal quartic");
    random->add_option("--prime", cfg.prime, "prime field");
    random->add_option("--seed", cfg.seed, "deterministic seed");
    random->add_option("--max-tries", cfg.max_tries, "draw budget");
    add_common(random);

    CLI::App* stage = app.add_subcommand("stage", "run a single stage for inspection");
    stage->add_option("name", cfg.stage, "discriminant | canonical | ks-rank")->required();
    stage->add_option("--input", cfg.input_path, "input JSON")->required();
    add_common(stage);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    nlohmann::json out;
    int code = kExitUsage;
    try {
        if (!convention_flag.empty()) {
            if (convention_flag == "u3=half") cfg.convention = "half";
            else if (convention_flag == "u3=full") cfg.convention = "full";
            else throw ParseError("--convention expects u3=half or u3=full");
        }
        if (verify->parsed()) {
            cfg.command = "verify-paper";
            code = run_verify_paper(cfg, out);
        } else if (certify->parsed()) {
            cfg.command = "certify";
            code = run_certify(cfg, out);
        } else if (random->parsed()) {
            cfg.command = "random";
            code = run_random(cfg, out);
        } else if (stage->parsed()) {
            cfg.command = "stage";
            code = run_stage(cfg, out);
        }
    } catch (const PrymError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text = out.dump(2);
    std::cout << text << "\n";
    if (!cfg.output_path.empty()) {
        std::ofstream f(cfg.output_path);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.output_path << "\n";
            return kExitUsage;
        }
        f << text << "\n";
    }
    return code;
}

}  // namespace prym
