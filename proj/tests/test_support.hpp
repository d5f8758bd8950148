#pragma once

// Deterministic random generators and golden-file helpers shared by the unit
// and acceptance suites.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/hilbert.hpp"
#include "motivic/parser.hpp"
#include "motivic/ring.hpp"
#include "motivic/snc.hpp"

namespace testsupport {

using motivic::AtomTable;
using motivic::HalfInt;
using motivic::MotivicClass;
using motivic::SncModel;
using motivic::Term;
using motivic::TermAtom;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Built-ins plus two trivial-monodromy atoms and two bundle generators.
inline AtomTable test_table() {
    AtomTable table;
    table.add_atom({"A", 2, 1, motivic::parse_laurent("q + 1"), 1});
    table.add_atom({"B", -3, 1, motivic::parse_laurent("q^{2} - 2"), 2});
    table.add_bundle({"g", -1});
    table.add_bundle({"h", +1});
    return table;
}

// Random normal-form class with at most `max_terms` terms.
inline MotivicClass random_class(Rng& rng, int max_terms, bool allow_monodromy, bool allow_units) {
    MotivicClass x;
    int nterms = pick(rng, 0, max_terms);
    for (int t = 0; t < nterms; ++t) {
        Term term;
        term.lpow = HalfInt::halves(pick(rng, -4, 4));
        int natoms = pick(rng, 0, 2);
        std::vector<TermAtom> atoms;
        for (int i = 0; i < natoms; ++i)
            atoms.push_back(pick(rng, 0, 1) ? TermAtom{"A", 1} : TermAtom{"B", 1});
        if (allow_monodromy && pick(rng, 0, 2) == 0)
            atoms.push_back(pick(rng, 0, 1) ? TermAtom{"MU2", 2} : TermAtom{"MU3", 3});
        std::sort(atoms.begin(), atoms.end());
        term.atoms = std::move(atoms);
        if (allow_units) {
            if (pick(rng, 0, 2) == 0) term.units.push_back("g");
            if (pick(rng, 0, 2) == 0) term.units.push_back("h");
        }
        int coeff = pick(rng, -5, 5);
        if (coeff == 0) coeff = 1;
        x += MotivicClass::from_term(std::move(term), coeff);
    }
    return x;
}

// Random stratum class over {PT, MU2, MU3, L-powers}.
inline MotivicClass random_stratum_class(Rng& rng) {
    switch (pick(rng, 0, 3)) {
    case 0: return MotivicClass::one();
    case 1: return MotivicClass::atom_class({"MU2", 2, 2, {}, {}});
    case 2: return MotivicClass::atom_class({"MU3", 3, 3, {}, {}});
    default: return MotivicClass::lefschetz(HalfInt::whole(pick(rng, -2, 2)));
    }
}

// Random SNC model: up to 3 components, N <= 4, |mu| <= 3, reldim 1..3.
inline SncModel random_model(Rng& rng) {
    SncModel model;
    model.reldim = pick(rng, 1, 3);
    int ncomp = pick(rng, 1, 3);
    for (int i = 0; i < ncomp; ++i)
        model.components.push_back({"E" + std::to_string(i + 1), pick(rng, 1, 4), pick(rng, -3, 3)});
    for (int mask = 1; mask < (1 << ncomp); ++mask) {
        if (pick(rng, 0, 3) == 0) continue; // leave some strata empty
        std::vector<std::string> subset;
        for (int i = 0; i < ncomp; ++i)
            if (mask & (1 << i)) subset.push_back(model.components[i].id);
        model.strata[subset] = random_stratum_class(rng);
    }
    return model;
}

// --- golden files -----------------------------------------------------------

// Tangent dimensions at every monomial ideal for n <= 3 plus the square-ideal
// point at n = 4, one line per partition.
inline std::string tangent_dims_text() {
    std::ostringstream os;
    for (int n = 1; n <= 3; ++n) {
        auto parts = motivic::enumerate_plane_partitions(n);
        for (const auto& p : parts)
            os << "n=" << n << " " << p.str() << " dim=" << motivic::tangent_character(p).dimension()
               << "\n";
    }
    motivic::PlanePartition square;
    square.boxes = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    os << "n=4 " << square.str() << " dim=" << motivic::tangent_character(square).dimension() << "\n";
    return os.str();
}

// Refined series coefficients in canonical text, one line per degree.
inline std::string zseries_text(int order) {
    std::ostringstream os;
    auto z = motivic::bbs_series(order);
    for (int n = 0; n <= order; ++n) os << "T^" << n << ": " << motivic::print_canonical(z[n]) << "\n";
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Byte-exact golden comparison; MOTIVIC_REGEN_GOLDEN=1 rewrites the file.
inline bool check_golden(const std::string& path, const std::string& computed) {
    const char* regen = std::getenv("MOTIVIC_REGEN_GOLDEN");
    if (regen && *regen == '1') {
        std::ofstream out(path, std::ios::binary);
        out << computed;
        return true;
    }
    return read_file(path) == computed;
}

} // namespace testsupport
