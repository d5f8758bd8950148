#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/hilbert.hpp"
#include "motivic/json_io.hpp"
#include "motivic/localization.hpp"
#include "motivic/parser.hpp"
#include "motivic/ring.hpp"
#include "motivic/snc.hpp"

namespace {

using motivic::MotivicClass;
using ojson = nlohmann::ordered_json;

struct Options {
    std::string atoms_path;
    std::string model_path;
    std::string expr;
    std::string strata_path;
    std::string weights_text;
    long long degree = 1; // --m
    int order = 4;
    int n_boxes = 0;
    bool json = false;
    bool mu2_rewrite = false;
};

motivic::AtomTable make_table(const Options& opt) {
    if (opt.atoms_path.empty()) return motivic::AtomTable();
    return motivic::load_atom_table_file(opt.atoms_path);
}

MotivicClass post(const Options& opt, MotivicClass x) {
    return opt.mu2_rewrite ? motivic::rewrite_mu2(x) : x;
}

std::array<long long, 3> parse_weights(const std::string& text) {
    std::array<long long, 3> w{};
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> w[0] >> c1 >> w[1] >> c2 >> w[2]) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
        throw motivic::ModelError("--weights expects three comma-separated integers, got '" + text + "'");
    return w;
}

void emit(const Options& opt, const std::string& text, const ojson& doc) {
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_ring_eval(const Options& opt) {
    motivic::AtomTable table = make_table(opt);
    MotivicClass result = post(opt, motivic::parse(opt.expr, table));
    std::string canonical = motivic::print_canonical(result);
    emit(opt, canonical + "\n", ojson{{"result", canonical}});
    return 0;
}

int run_snc(const Options& opt, const std::string& action) {
    motivic::AtomTable table = make_table(opt);
    motivic::SncModel model = motivic::load_snc_model_file(opt.model_path, table);

    if (action == "integrate") {
        std::string canonical = motivic::print_canonical(post(opt, motivic::integral(model, opt.degree)));
        emit(opt, canonical + "\n", ojson{{"m", opt.degree}, {"result", canonical}});
        return 0;
    }
    if (action == "series") {
        motivic::VolumeSeries series = motivic::volume_series(model);
        std::vector<MotivicClass> coeffs = motivic::expand(series, opt.order);
        std::ostringstream os;
        ojson jsummands = ojson::array();
        if (series.summands.empty()) os << "S(T) = 0 (no summands)\n";
        for (const auto& s : series.summands) {
            os << "summand J={";
            for (std::size_t i = 0; i < s.subset.size(); ++i) os << (i ? "," : "") << s.subset[i];
            os << "}: coeff = " << motivic::print_canonical(s.coeff) << "; factors =";
            ojson jfactors = ojson::array();
            for (const auto& [mu, n] : s.factors) {
                os << " (mu=" << mu << ", N=" << n << ")";
                jfactors.push_back(ojson{{"mu", mu}, {"N", n}});
            }
            os << "\n";
            ojson js;
            js["J"] = s.subset;
            js["coeff"] = motivic::print_canonical(s.coeff);
            js["factors"] = jfactors;
            jsummands.push_back(js);
        }
        ojson jexp = ojson::array();
        for (int m = 1; m <= opt.order; ++m) {
            std::string canonical = motivic::print_canonical(post(opt, coeffs[m]));
            os << "T^" << m << ": " << canonical << "\n";
            jexp.push_back(canonical);
        }
        emit(opt, os.str(),
             ojson{{"reldim", series.reldim}, {"summands", jsummands}, {"order", opt.order}, {"expansion", jexp}});
        return 0;
    }

    MotivicClass result;
    if (action == "volume")
        result = motivic::motivic_volume(model);
    else if (action == "nearby")
        result = motivic::nearby_cycle(model);
    else // vanishing
        result = motivic::vanishing_cycle(model);
    std::string canonical = motivic::print_canonical(post(opt, result));
    emit(opt, canonical + "\n", ojson{{"result", canonical}});
    return 0;
}

int run_localize(const Options& opt) {
    motivic::AtomTable table = make_table(opt);
    std::vector<motivic::FixedStratum> strata = motivic::load_strata_file(opt.strata_path, table);
    MotivicClass sum = post(opt, motivic::localize(strata));
    std::string canonical = motivic::print_canonical(sum);
    std::string euler = motivic::euler_specialize(sum, table).str();
    emit(opt, canonical + "\neuler: " + euler + "\n", ojson{{"result", canonical}, {"euler", euler}});
    return 0;
}

int run_dt(const Options& opt, const std::string& action) {
    if (action == "zseries") {
        std::vector<MotivicClass> z = motivic::bbs_series(opt.order);
        std::ostringstream os;
        ojson jcoeffs = ojson::array();
        for (int n = 0; n <= opt.order; ++n) {
            std::string canonical = motivic::print_canonical(z[n]);
            os << "T^" << n << ": " << canonical << "\n";
            jcoeffs.push_back(canonical);
        }
        emit(opt, os.str(), ojson{{"order", opt.order}, {"coefficients", jcoeffs}});
        return 0;
    }
    if (action == "count") {
        std::vector<motivic::Int> counts = motivic::macmahon_counts(opt.order);
        std::ostringstream os;
        ojson jcounts = ojson::array();
        for (std::size_t i = 0; i < counts.size(); ++i) {
            os << (i ? " " : "") << counts[i];
            jcounts.push_back(counts[i].str());
        }
        os << "\n";
        emit(opt, os.str(), ojson{{"order", opt.order}, {"counts", jcounts}});
        return 0;
    }
    if (action == "index") {
        auto w = parse_weights(opt.weights_text);
        std::vector<motivic::PlanePartition> parts = motivic::enumerate_plane_partitions(opt.n_boxes);
        std::ostringstream os;
        ojson jindices = ojson::array();
        for (const auto& p : parts) {
            long long index = motivic::index_of(p, w[0], w[1], w[2]);
            os << index << "\n";
            jindices.push_back(index);
        }
        emit(opt, os.str(), ojson{{"n", opt.n_boxes}, {"weights", {w[0], w[1], w[2]}}, {"indices", jindices}});
        return 0;
    }

    // compare
    auto w = parse_weights(opt.weights_text);
    motivic::CompareReport report = motivic::compare_series(opt.order, w[0], w[1], w[2]);
    std::ostringstream os;
    ojson jrows = ojson::array();
    for (const auto& row : report.rows) {
        ojson jr;
        jr["n"] = row.n;
        jr["bbs"] = motivic::print_canonical(row.bbs);
        jr["euler_bbs"] = row.euler_bbs.str();
        jr["generic"] = row.generic;
        os << "n=" << row.n << ": bbs=" << motivic::print_canonical(row.bbs)
           << " euler_bbs=" << row.euler_bbs;
        if (row.generic) {
            os << " conjecture=" << motivic::print_canonical(row.conjecture)
               << " refined_equal=" << (row.refined_equal ? "yes" : "no")
               << " euler_conjecture=" << row.euler_conjecture
               << " signed_index_sum=" << row.signed_index_sum
               << " consistent=" << (row.euler_consistent ? "yes" : "no") << "\n";
            jr["conjecture"] = motivic::print_canonical(row.conjecture);
            jr["refined_equal"] = row.refined_equal;
            jr["euler_conjecture"] = row.euler_conjecture.str();
            jr["signed_index_sum"] = row.signed_index_sum.str();
            jr["euler_consistent"] = row.euler_consistent;
        } else {
            os << " non-generic: " << row.failure << "\n";
            jr["failure"] = row.failure;
        }
        jrows.push_back(jr);
    }
    const char* verdict = report.status == 0    ? "refined-equal"
                          : report.status == 10 ? "euler-equal-only"
                          : report.status == 11 ? "differs"
                                                : "non-generic";
    os << "status: " << verdict << "\n";
    emit(opt, os.str(), ojson{{"order", opt.order}, {"rows", jrows}, {"status", report.status}, {"verdict", verdict}});
    return report.status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the localized equivariant Grothendieck ring of varieties:\n"
                 "ring arithmetic with L^{1/2}, volume series over SNC resolution data, nearby and\n"
                 "vanishing cycles, torus localization, and the refined DT series of points in A^3.\n"
                 "Environment: MOTIVIC_MAX_BOXES caps partition sizes (default 12); MOTIVIC_THREADS\n"
                 "sets the worker count (output is identical for any value)."};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--atoms", opt.atoms_path, "Atom/bundle table JSON (extends the built-ins)");
    app.add_flag("--json", opt.json, "Emit JSON instead of text");
    app.add_flag("--enable-mu2-rewrite", opt.mu2_rewrite, "Rewrite [MU2] as 1 - L^{1/2} in results");

    CLI::App* ring = app.add_subcommand("ring", "Ring arithmetic");
    CLI::App* ring_eval = ring->add_subcommand("eval", "Evaluate an expression to canonical form");
    ring_eval->add_option("expr", opt.expr, "Expression, e.g. \"L^{1/2}*L^{1/2} - [MU2]\"")->required();

    CLI::App* snc = app.add_subcommand("snc", "Motivic integration over SNC resolution data");
    snc->require_subcommand(1);
    snc->add_option("--model", opt.model_path, "SNC model JSON")->required();
    CLI::App* snc_int = snc->add_subcommand("integrate", "Degree-m motivic integral");
    snc_int->add_option("--m", opt.degree, "Ramification degree m")->required();
    CLI::App* snc_series = snc->add_subcommand("series", "Volume Poincare series: closed form and expansion");
    snc_series->add_option("--order", opt.order, "Expansion order")->required();
    snc->add_subcommand("volume", "Motivic volume (minus the T->infinity limit)");
    snc->add_subcommand("nearby", "Motivic nearby cycle");
    snc->add_subcommand("vanishing", "Motivic vanishing cycle (needs ambient data)");

    CLI::App* localize = app.add_subcommand("localize", "Localization sum over fixed strata");
    localize->add_option("strata", opt.strata_path, "Strata JSON file")->required();

    CLI::App* dt = app.add_subcommand("dt", "Hilbert scheme of points on A^3");
    dt->require_subcommand(1);
    CLI::App* dt_z = dt->add_subcommand("zseries", "Refined degree-zero DT series");
    dt_z->add_option("--order", opt.order, "Truncation order")->required();
    CLI::App* dt_count = dt->add_subcommand("count", "Plane partition counts (MacMahon series)");
    dt_count->add_option("--order", opt.order, "Truncation order")->required();
    CLI::App* dt_index = dt->add_subcommand("index", "Virtual indices of all size-n partitions");
    dt_index->add_option("--n", opt.n_boxes, "Partition size")->required();
    dt_index->add_option("--weights", opt.weights_text, "Torus weights a,b,c")->required();
    CLI::App* dt_compare = dt->add_subcommand("compare", "Product formula vs localization sum");
    dt_compare->add_option("--order", opt.order, "Truncation order")->required();
    dt_compare->add_option("--weights", opt.weights_text, "Torus weights a,b,c")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ring_eval->parsed()) return run_ring_eval(opt);
        if (snc->parsed()) {
            for (const char* action : {"integrate", "series", "volume", "nearby", "vanishing"})
                if (snc->get_subcommand(action)->parsed()) return run_snc(opt, action);
        }
        if (localize->parsed()) return run_localize(opt);
        if (dt->parsed()) {
            for (const char* action : {"zseries", "count", "index", "compare"})
                if (dt->get_subcommand(action)->parsed()) return run_dt(opt, action);
        }
        std::cerr << "error: no command\n";
        return 2;
    } catch (const motivic::UnsupportedSmash& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
