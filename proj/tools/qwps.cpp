// Batch front end: classify weight vectors, verify relations, compute
// pairing tables, build strong connections, emit spectral reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "qwps/connection.hpp"
#include "qwps/fredholm.hpp"
#include "qwps/projective.hpp"
#include "qwps/relations.hpp"
#include "qwps/spectral.hpp"

using json = nlohmann::json;
using namespace qwps;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

struct RunConfig {
    std::string q_text = "1/2";
    double q = 0.5;
    int cutoff = 16;
    double tol_relations = 1e-10;
    double tol_traces = 1e-6;
    int max_cutoff = 256;
    std::string format = "text";

    void validate() const {
        if (!(q > 0.0 && q < 1.0)) throw precondition_error("config: need 0 < q < 1");
        if (cutoff < 4) throw precondition_error("config: need cutoff >= 4");
        if (!(tol_relations > 0.0 && tol_traces > 0.0))
            throw precondition_error("config: tolerances must be positive");
        if (max_cutoff < cutoff) throw precondition_error("config: max_cutoff < cutoff");
        if (format != "text" && format != "json" && format != "csv")
            throw precondition_error("config: format must be text, json or csv");
    }
};

double parse_q(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r(text);
        r.canonicalize();
        return r.get_d();
    }
    return std::stod(text);
}

WeightVector to_weights(const std::vector<long>& raw) {
    std::vector<Int> entries;
    for (long v : raw) entries.emplace_back(v);
    return WeightVector(std::move(entries));
}

PairwiseCoprimeVector to_pcv(const std::vector<long>& raw) {
    std::vector<Int> entries;
    for (long v : raw) entries.emplace_back(v);
    return make_pairwise_coprime(std::move(entries));
}

int thread_cap() {
    if (const char* env = std::getenv("QWPS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename Item, typename Fn>
void parallel_for(const std::vector<Item>& items, const Fn& fn) {
    const int workers = std::min<int>(thread_cap(), static_cast<int>(items.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < items.size(); ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

int cmd_classify(const RunConfig& cfg, const std::vector<long>& raw) {
    WeightVector l = to_weights(raw);
    bool coprime = is_coprime(l);
    WeightVector norm = coprime_normalize(l);
    auto p = factor_sharp(norm);
    auto path = path_to_unit(norm);

    json out{{"schema", "qwps/1"},
             {"weights", l.str()},
             {"coprime", coprime},
             {"normalized", is_normalized(l)},
             {"pairwise_coprime", is_pairwise_coprime(l)},
             {"is_cpn", p.has_value()}};
    if (!coprime) out["coprime_normalization"] = norm.str();
    if (p) out["p"] = p->as_weights().str();
    if (path) {
        std::vector<std::string> moves;
        for (const auto& mv : *path) moves.push_back(mv.str());
        out["path_to_unit"] = moves;
    }
    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "weights:          " << l.str() << "\n"
                  << "coprime:          " << (coprime ? "yes" : "no") << "\n"
                  << "normalized:       " << (is_normalized(l) ? "yes" : "no") << "\n"
                  << "pairwise coprime: " << (is_pairwise_coprime(l) ? "yes" : "no") << "\n";
        if (!coprime) std::cout << "normalization:    " << norm.str() << "\n";
        std::cout << "is CP^n:          " << (p ? "true" : "false") << "\n";
        if (p) std::cout << "p (sharp root):   " << p->as_weights().str() << "\n";
        if (path) {
            std::cout << "path to (1,...,1):";
            for (const auto& mv : *path) std::cout << " " << mv.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_generators(const RunConfig& cfg, const std::vector<long>& raw) {
    WeightVector l = to_weights(raw);
    GenerationResult res = generation_test(l);

    json gens = json::array();
    std::vector<std::string> gen_strs;
    for (int i = 0; i <= l.n(); ++i)
        for (int j = 0; j <= l.n(); ++j) {
            std::string s = "xi(" + std::to_string(i) + "," + std::to_string(j) +
                            ") = " + xi_elem(l, i, j).str();
            gens.push_back(s);
            gen_strs.push_back(std::move(s));
        }
    json out{{"schema", "qwps/1"},
             {"weights", l.str()},
             {"generators", gens},
             {"verdict", res.generated ? "GENERATED" : "NOT_GENERATED"}};
    if (res.certificate) out["certificate"] = res.certificate->str();

    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& s : gen_strs) std::cout << s << "\n";
        std::cout << "verdict: " << (res.generated ? "GENERATED" : "NOT_GENERATED") << "\n";
        if (res.certificate)
            std::cout << "certificate (grade 0, length 3): " << res.certificate->str() << "\n";
    }
    return 0;
}

int cmd_relations(const RunConfig& cfg, const std::vector<long>& raw, bool numeric) {
    PairwiseCoprimeVector p = to_pcv(raw);
    std::vector<RelationCheck> checks;
    if (numeric) {
        SphereRep sphere(p, cfg.q);
        checks = relation_suite_numeric(p, sphere, cfg.cutoff, cfg.tol_relations);
        LensIrrep lens(p, std::vector<int>(p.n(), 0), cfg.q);
        auto more = relation_suite_numeric(p, lens, cfg.cutoff, cfg.tol_relations);
        checks.insert(checks.end(), more.begin(), more.end());
    } else {
        checks = relation_suite_symbolic(p);
    }
    int failures = 0;
    for (const auto& c : checks)
        if (!c.ok) ++failures;

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"name", c.name}, {"ok", c.ok}});
        std::cout << json{{"schema", "qwps/1"},
                          {"p", p.as_weights().str()},
                          {"mode", numeric ? "numeric" : "symbolic"},
                          {"checks", arr},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
        std::cout << checks.size() << " relations, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : kExitVerification;
}

int cmd_pairing(const RunConfig& cfg, const std::vector<long>& raw, const std::string& grid) {
    PairwiseCoprimeVector p = to_pcv(raw);
    int hmax = p.n(), mmax = p.n(), amax = 4;
    if (!grid.empty()) {
        if (std::sscanf(grid.c_str(), "%d,%d,%d", &hmax, &mmax, &amax) != 3)
            throw precondition_error("pairing: --grid expects h,m,amax");
    }

    std::vector<std::pair<FredholmLabel, ProjectionLabel>> jobs;
    for (const FredholmLabel& label : all_fredholm_labels(p)) {
        if (label.h > hmax) continue;
        for (int m = 1; m <= std::min(mmax, p.n()); ++m) {
            std::vector<int> alpha(m, 0);
            while (true) {
                jobs.push_back({label, ProjectionLabel{m, alpha}});
                int pos = m - 1;
                while (pos >= 0 && ++alpha[pos] > amax) alpha[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }

    std::vector<PairingReport> reports(jobs.size());
    parallel_for(jobs, [&](size_t i) {
        reports[i] = make_pairing_report(jobs[i].first, jobs[i].second, p, cfg.q, cfg.cutoff);
    });

    int disagreements = 0;
    for (const auto& r : reports)
        if (!r.agrees) ++disagreements;

    if (cfg.format == "json") {
        for (const auto& r : reports) std::cout << r.json_line() << "\n";
    } else {
        std::cout << PairingReport::csv_header() << "\n";
        for (const auto& r : reports) std::cout << r.csv_row() << "\n";
        if (cfg.format == "text")
            std::cout << reports.size() << " pairings, " << disagreements
                      << " disagreements\n";
    }
    return disagreements == 0 ? 0 : kExitVerification;
}

int cmd_connection(const RunConfig& cfg, const std::vector<long>& raw, int k,
                   bool show_entries) {
    PairwiseCoprimeVector p = to_pcv(raw);
    StrongConnection conn(p);  // throws verification_error if the identity fails

    TensorElement w = conn.omega(k);
    bool graded = conn.check_grading(k);
    Idempotent e = conn.idempotent(k);
    bool idem = e.is_idempotent();
    WeightVector l = sharp(p.as_weights());
    bool coinv = true;
    for (const auto& entry : e.entries)
        if (!is_invariant(entry, l)) coinv = false;

    Idempotent e1 = (k == 1) ? e : conn.idempotent(1);
    AlgebraElement tr = e1.trace();
    std::vector<std::pair<int, TraceResult>> pairings;
    for (int r0 = 0; r0 < p.at(0); ++r0) {
        TraceResult t = trace_difference_auto(tr, FredholmLabel{1, {r0}}, p, cfg.q,
                                              2 * cfg.cutoff, cfg.max_cutoff);
        pairings.push_back({r0, t});
    }

    if (cfg.format == "json") {
        json jp = json::array();
        for (const auto& [r0, t] : pairings)
            jp.push_back({{"r0", r0}, {"value", t.value}, {"tail_bound", t.tail_bound}});
        std::cout << json{{"schema", "qwps/1"},
                          {"p", p.as_weights().str()},
                          {"k", k},
                          {"omega_terms", w.size()},
                          {"omega_identity", true},
                          {"omega_graded", graded},
                          {"idempotent_size", e.size},
                          {"idempotent_verified", idem},
                          {"entries_coinvariant", coinv},
                          {"pairings_E1", jp},
                          {"entries", [&] {
                               json arr = json::array();
                               if (show_entries)
                                   for (const auto& entry : e.entries) arr.push_back(entry.str());
                               return arr;
                           }()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "p = " << p.as_weights().str() << ", l = " << l.str() << "\n"
                  << "omega(u^" << k << "): " << w.size()
                  << " terms, multiplication identity verified, grading "
                  << (graded ? "ok" : "FAILED") << "\n"
                  << "E_" << k << ": size " << e.size << ", E^2 = E "
                  << (idem ? "verified" : "FAILED") << ", entries coinvariant "
                  << (coinv ? "yes" : "NO") << "\n";
        for (const auto& [r0, t] : pairings)
            std::cout << "<F_{1," << r0 << "}, [E_1]> = " << t.value
                      << "  (tail bound " << t.tail_bound << ")\n";
        if (show_entries)
            for (size_t i = 0; i < e.size; ++i)
                for (size_t j = 0; j < e.size; ++j)
                    std::cout << "E[" << i << "][" << j << "] = " << e.at(i, j).str() << "\n";
    }
    bool pairing_ok = true;
    for (const auto& [r0, t] : pairings)
        if (!(std::abs(t.value + 1.0) < cfg.tol_traces && t.tail_bound < 0.25))
            pairing_ok = false;
    return (graded && idem && coinv && pairing_ok) ? 0 : kExitVerification;
}

int cmd_spectrum(const RunConfig& cfg, int n, const std::string& lambda,
                 const std::vector<long>& praw) {
    DiracSpec spec = DiracSpec::identity(n);
    if (lambda.rfind("power:", 0) == 0) {
        double d = std::stod(lambda.substr(6));
        if (d <= 0) throw precondition_error("spectrum: power dimension must be positive");
        spec = DiracSpec::power(n, d);
    } else if (lambda != "identity") {
        throw precondition_error("spectrum: --lambda expects identity or power:<d>");
    }

    PairwiseCoprimeVector p = praw.empty()
                                  ? make_pairwise_coprime(std::vector<Int>(n + 1, 1))
                                  : to_pcv(praw);
    if (p.n() != n) throw precondition_error("spectrum: p has the wrong length");
    WeightVector l = sharp(p.as_weights());
    std::vector<int> r(n, 0);
    std::vector<int> cutoffs{8, 12, 16};

    std::cout << "# multiplicities\nlambda,multiplicity\n";
    for (int lam = 0; lam <= cfg.cutoff; ++lam)
        std::cout << lam << "," << multiplicity(n, lam).get_str() << "\n";

    std::cout << "# commutator profiles (largest column norm per cutoff)\n";
    std::cout << "generator";
    for (int c : cutoffs) std::cout << ",cutoff" << c;
    std::cout << ",envelope_max\n";
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            CommutatorProfile prof =
                commutator_profile(xi_elem(l, i, j), spec, p, r, cfg.q, cutoffs);
            std::cout << "xi(" << i << "," << j << ")";
            for (double v : prof.column_norms) std::cout << "," << v;
            std::cout << "," << prof.envelope_max << "\n";
        }

    std::cout << "# zeta partial sums (s = n+1)\nterms,partial_sum\n";
    ZetaDiagnostic z = zeta_partial(spec, n + 1.0, 200);
    for (size_t t = 19; t < z.partial_sums.size(); t += 20)
        std::cout << (t + 1) << "," << z.partial_sums[t] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum weighted projective space toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--q", cfg.q_text, "deformation parameter, rational (1/2) or decimal");
    app.add_option("--cutoff", cfg.cutoff, "basis truncation degree (>= 4)");
    app.add_option("--tol-relations", cfg.tol_relations, "numeric relation tolerance");
    app.add_option("--tol-traces", cfg.tol_traces, "trace tolerance");
    app.add_option("--max-cutoff", cfg.max_cutoff, "cutoff growth limit");
    app.add_option("--format", cfg.format, "text, json or csv");

    std::vector<long> weights, pvec, spec_p;
    bool numeric = false, symbolic = false;
    std::string grid, lambda = "identity";
    int conn_k = 1, spec_n = 1;

    auto sub = [&app](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* classify = sub("classify", "weight-vector classification");
    classify->add_option("weights", weights, "weight vector entries")->required();

    CLI::App* generators = sub("generators", "length-2 generator verdict");
    generators->add_option("weights", weights, "weight vector entries")->required();

    CLI::App* relations = sub("relations", "lens relation suite");
    relations->add_option("p", pvec, "pairwise coprime vector")->required();
    relations->add_flag("--numeric", numeric, "check in representations");
    relations->add_flag("--symbolic", symbolic, "check in the normal-form engine (default)");

    CLI::App* pairing = sub("pairing", "pairing table: formula vs oracle");
    pairing->add_option("p", pvec, "pairwise coprime vector")->required();
    pairing->add_option("--grid", grid, "h,m,alphamax");

    CLI::App* connection = sub("connection", "strong connection and idempotent");
    connection->add_option("p", pvec, "pairwise coprime vector")->required();
    connection->add_option("--k", conn_k, "power of the group-like generator");
    bool show_entries = false;
    connection->add_flag("--show-entries", show_entries, "print the idempotent entries");

    CLI::App* spectrum = sub("spectrum", "Dirac spectrum diagnostics");
    spectrum->add_option("n", spec_n, "complex dimension")->required();
    spectrum->add_option("--lambda", lambda, "identity or power:<d>");
    spectrum->add_option("--p", spec_p, "pairwise coprime vector (default all ones)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        cfg.q = parse_q(cfg.q_text);
        cfg.validate();
        if (classify->parsed()) return cmd_classify(cfg, weights);
        if (generators->parsed()) return cmd_generators(cfg, weights);
        if (relations->parsed()) return cmd_relations(cfg, pvec, numeric && !symbolic);
        if (pairing->parsed()) return cmd_pairing(cfg, pvec, grid);
        if (connection->parsed()) return cmd_connection(cfg, pvec, conn_k, show_entries);
        if (spectrum->parsed()) return cmd_spectrum(cfg, spec_n, lambda, spec_p);
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
