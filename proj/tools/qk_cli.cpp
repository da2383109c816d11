#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quintic/flow.hpp"
#include "quintic/serialize.hpp"
#include "quintic/verify.hpp"

using namespace qk;

namespace {

struct RunConfig {
    std::string command;
    int order = 0;
    std::string gv_file;  // empty: built-in table
    std::string format = "json";
    std::string suite = "all";
    std::string method = "flow";
    bool q_one = false;
};

GVTable table_for(const RunConfig& cfg) {
    return cfg.gv_file.empty() ? GVTable::quintic() : load_gv_file(cfg.gv_file);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_series(const QSeries& s) {
    for (int n = 0; n <= s.order(); ++n)
        std::cout << "Q^" << n << ": " << ratfun_text(s.coeff(n)) << "\n";
}

void print_kseries(const KSeries& s) {
    bool any = false;
    for (int n = 0; n <= s.order(); ++n)
        for (int a = 0; a < 4; ++a) {
            const QRatFun& c = s.coeff(n).coords[static_cast<size_t>(a)];
            if (c.is_zero()) continue;
            any = true;
            std::cout << "Q^" << n << " x^" << a << ": " << ratfun_text(c) << "\n";
        }
    if (!any) std::cout << "0\n";
}

void print_matrix(const char* label, const Matrix4Series& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int n = 0; n <= m.order(); ++n) {
                const QRatFun& c = m.at(i, j).coeff(n);
                if (c.is_zero()) continue;
                std::cout << label << "[" << i << "][" << j << "] Q^" << n << ": "
                          << ratfun_text(c) << "\n";
            }
}

int run_small_j(const RunConfig& cfg) {
    KSeries j = cfg.method == "flow" ? solve_epsilon(cfg.order).second
                                     : conjectural_small_j(table_for(cfg), cfg.order);
    if (cfg.format == "json") {
        emit(Json{{"command", "small-j"},
                  {"method", cfg.method},
                  {"order", cfg.order},
                  {"j", kseries_to_json(j)}});
    } else {
        print_kseries(j);
    }
    return 0;
}

int run_epsilon(const RunConfig& cfg) {
    EpsilonTable eps = solve_epsilon(cfg.order).first;
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& [kl, value] : eps.entries)
            list.push_back(Json{{"k", kl.first},
                                {"l", kl.second},
                                {"value", ratfun_to_json(QRatFun(value))}});
        emit(Json{{"command", "epsilon"}, {"order", cfg.order}, {"epsilon", list}});
    } else {
        for (const auto& [kl, value] : eps.entries)
            std::cout << "eps[" << kl.first << "," << kl.second << "] = " << value.str()
                      << "\n";
    }
    return 0;
}

int run_matrices(const RunConfig& cfg) {
    GVTable gv = table_for(cfg);
    BirkhoffFactors f = birkhoff(shifted_matrix(conjectural_small_j(gv, cfg.order)));
    Matrix4Series d = d_matrix_closed(gv, cfg.order);
    Matrix4Series a = a_matrix_closed(gv, cfg.order);
    if (cfg.format == "json") {
        emit(Json{{"command", "matrices"},
                  {"order", cfg.order},
                  {"t", matrix_to_json(f.t)},
                  {"u", matrix_to_json(f.u)},
                  {"d", matrix_to_json(d)},
                  {"a", matrix_to_json(a)}});
    } else {
        print_matrix("T", f.t);
        print_matrix("U", f.u);
        print_matrix("D", d);
        print_matrix("A", a);
    }
    return 0;
}

int run_invariants(const RunConfig& cfg) {
    KSeries j = conjectural_small_j(table_for(cfg), cfg.order);
    std::vector<std::vector<Integer>> inv;
    for (int alpha = 0; alpha < 4; ++alpha) inv.push_back(qk_invariants(j, alpha));
    if (cfg.format == "json") {
        Json out{{"command", "invariants"}, {"order", cfg.order}};
        for (int alpha = 0; alpha < 4; ++alpha) {
            Json list = Json::array();
            for (const Integer& v : inv[static_cast<size_t>(alpha)])
                list.push_back(v.get_str(10));
            out["alpha" + std::to_string(alpha)] = list;
        }
        emit(out);
    } else {
        for (int alpha = 0; alpha < 4; ++alpha) {
            std::cout << "alpha " << alpha << ":";
            const auto& list = inv[static_cast<size_t>(alpha)];
            for (size_t n = 0; n < list.size(); ++n)
                std::cout << (n == 0 ? " " : ", ") << list[n].get_str(10);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_cttt(const RunConfig& cfg) {
    YukawaSeries y = yukawa(table_for(cfg), cfg.order);
    const QSeries& chosen = cfg.q_one ? y.classical : y.quantum;
    if (cfg.format == "json") {
        emit(Json{{"command", "cttt"},
                  {"order", cfg.order},
                  {"q_one", cfg.q_one},
                  {"cttt", series_to_json(chosen)}});
    } else {
        print_series(chosen);
    }
    return 0;
}

int run_frobenius(const RunConfig& cfg) {
    FrobeniusData data = frobenius_data(cfg.order);
    if (cfg.format == "json") {
        Json out{{"command", "frobenius"}, {"q_order", cfg.order}};
        for (int k = 0; k < 4; ++k)
            out["j" + std::to_string(k)] = series_to_json(data.j[static_cast<size_t>(k)]);
        emit(out);
    } else {
        for (int k = 0; k < 4; ++k) {
            const QSeries& s = data.j[static_cast<size_t>(k)];
            for (int n = 0; n <= s.order(); ++n)
                std::cout << "J" << k << " Q^" << n << ": " << ratfun_text(s.coeff(n))
                          << "\n";
        }
    }
    return 0;
}

int run_verify(const RunConfig& cfg) {
    std::vector<CheckResult> results;
    if (cfg.suite == "all")
        results = verify_all(table_for(cfg), cfg.order);
    else if (cfg.suite == "conjecture")
        results = verify_conjecture(table_for(cfg), cfg.order);
    else if (cfg.suite == "birkhoff")
        results = verify_birkhoff(table_for(cfg), cfg.order);
    else if (cfg.suite == "frobenius")
        results = verify_frobenius(cfg.order);
    else
        results = verify_kernels(cfg.order);
    int failures = 0;
    for (const CheckResult& c : results)
        if (!c.pass) ++failures;
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const CheckResult& c : results)
            list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(Json{{"command", "verify"},
                  {"suite", cfg.suite},
                  {"order", cfg.order},
                  {"results", list},
                  {"failures", failures}});
    } else {
        for (const CheckResult& c : results) {
            if (c.pass)
                std::cout << "PASS " << c.name << "\n";
            else
                std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
        std::cout << results.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

int run(const RunConfig& cfg) {
    bool flow_based = cfg.command == "epsilon" ||
                      (cfg.command == "small-j" && cfg.method == "flow") ||
                      (cfg.command == "verify" &&
                       (cfg.suite == "all" || cfg.suite == "conjecture"));
    if (flow_based && cfg.order > 6)
        std::cerr << "warning: the fixed-point flow above order 6 takes a long time\n";
    if (cfg.command == "small-j") return run_small_j(cfg);
    if (cfg.command == "epsilon") return run_epsilon(cfg);
    if (cfg.command == "matrices") return run_matrices(cfg);
    if (cfg.command == "invariants") return run_invariants(cfg);
    if (cfg.command == "cttt") return run_cttt(cfg);
    if (cfg.command == "frobenius") return run_frobenius(cfg);
    return run_verify(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-zero quantum K-theory of the quintic threefold"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format (json or text)")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_gv = [&cfg](CLI::App* sub) {
        sub->add_option("--gv-file", cfg.gv_file,
                        "curve-count table file (built-in table when omitted)");
    };
    auto add_order = [&cfg](CLI::App* sub) {
        sub->add_option("--order", cfg.order, "Novikov truncation order")
            ->required()
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* sj = app.add_subcommand("small-j", "small J-function coordinates");
    add_order(sj);
    sj->add_option("--method", cfg.method, "flow or conjecture")
        ->check(CLI::IsMember({"flow", "conjecture"}));
    add_gv(sj);
    add_format(sj);

    CLI::App* ep = app.add_subcommand("epsilon", "solved deformation coefficients");
    add_order(ep);
    add_format(ep);

    CLI::App* mx = app.add_subcommand("matrices",
                                      "fundamental and connection matrices T, U, D, A");
    add_order(mx);
    add_gv(mx);
    add_format(mx);

    CLI::App* iv = app.add_subcommand("invariants", "integer invariants extracted at q = 0");
    add_order(iv);
    add_gv(iv);
    add_format(iv);

    CLI::App* ct = app.add_subcommand("cttt", "q-deformed yukawa coupling");
    add_order(ct);
    ct->add_flag("--q-one", cfg.q_one, "print the q = 1 limit instead");
    add_gv(ct);
    add_format(ct);

    CLI::App* fr = app.add_subcommand("frobenius", "x-expansion of the hypergeometric datum");
    fr->add_option("--q-order", cfg.order, "Novikov truncation order of the datum")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(fr);

    CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", cfg.suite, "all, conjecture, birkhoff, frobenius, or kernels")
        ->check(CLI::IsMember({"all", "conjecture", "birkhoff", "frobenius", "kernels"}));
    add_order(vf);
    add_gv(vf);
    add_format(vf);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        return run(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
