#include "motivic/ring.hpp"

#include <algorithm>
#include <sstream>

namespace motivic {

// ---------------------------------------------------------------------------
// LaurentQ

LaurentQ LaurentQ::constant(Int c) {
    LaurentQ p;
    if (c != 0) p.coeffs_[0] = std::move(c);
    return p;
}

LaurentQ LaurentQ::q_power(long long twice_exponent) {
    LaurentQ p;
    p.coeffs_[twice_exponent] = 1;
    return p;
}

void LaurentQ::strip_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ p = *this;
    for (auto& [e, c] : p.coeffs_) c = -c;
    return p;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
    strip_zeros();
    return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
    LaurentQ p = *this;
    p += o;
    return p;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const { return *this + (-o); }

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
    LaurentQ p;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) p.coeffs_[ea + eb] += ca * cb;
    p.strip_zeros();
    return p;
}

namespace {

// "q", "q^{3}", "q^{-1/2}" for a twice-exponent.
std::string power_string(const char* symbol, long long twice) {
    std::ostringstream os;
    os << symbol;
    if (twice == 2) return os.str();
    os << "^{";
    if (twice % 2 == 0)
        os << twice / 2;
    else
        os << twice << "/2";
    os << "}";
    return os.str();
}

void append_signed(std::ostringstream& os, bool first, bool negative, const std::string& piece) {
    if (first)
        os << (negative ? "-" : "") << piece;
    else
        os << (negative ? " - " : " + ") << piece;
}

} // namespace

std::string LaurentQ::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponents.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        std::string piece;
        if (e == 0)
            piece = mag.str();
        else if (mag == 1)
            piece = power_string("q", e);
        else
            piece = mag.str() + "*" + power_string("q", e);
        append_signed(os, first, c < 0, piece);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// AtomTable

AtomTable::AtomTable() {
    add_atom({"PT", 1, 1, LaurentQ::constant(1), 0});
    for (int n = 1; n <= 12; ++n)
        add_atom({"MU" + std::to_string(n), n, n, std::nullopt, 0});
    // GM is parser sugar for L - 1; the table entry documents its realizations.
    add_atom({"GM", 0, 1, LaurentQ::q_power(2) - LaurentQ::constant(1), 1});
}

void AtomTable::add_atom(Atom a) {
    if (a.name.empty()) throw ModelError("atom name must be nonempty");
    if (a.mu_order < 1) throw ModelError("atom '" + a.name + "': mu_order must be >= 1");
    if (!atoms_.emplace(a.name, a).second)
        throw ModelError("duplicate atom name '" + a.name + "'");
}

void AtomTable::add_bundle(BundleGenerator g) {
    if (g.name.empty()) throw ModelError("bundle name must be nonempty");
    if (g.euler_sign != 1 && g.euler_sign != -1)
        throw ModelError("bundle '" + g.name + "': euler_sign must be +1 or -1");
    if (!bundles_.emplace(g.name, g).second)
        throw ModelError("duplicate bundle name '" + g.name + "'");
}

const Atom* AtomTable::find_atom(std::string_view name) const {
    auto it = atoms_.find(name);
    return it == atoms_.end() ? nullptr : &it->second;
}

const BundleGenerator* AtomTable::find_bundle(std::string_view name) const {
    auto it = bundles_.find(name);
    return it == bundles_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Term

bool Term::monodromic() const {
    for (const auto& a : atoms)
        if (a.mu_order > 1) return true;
    return false;
}

bool Term::operator==(const Term& o) const {
    return atoms == o.atoms && lpow == o.lpow && units == o.units;
}

bool Term::operator<(const Term& o) const {
    if (atoms != o.atoms) return atoms < o.atoms;
    if (lpow.twice != o.lpow.twice) return lpow.twice > o.lpow.twice; // higher powers first
    return units < o.units;
}

// ---------------------------------------------------------------------------
// MotivicClass

void MotivicClass::insert(Term t, Int c) {
    if (c == 0) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(std::move(t), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MotivicClass MotivicClass::integer(Int n) {
    MotivicClass x;
    x.insert(Term{}, std::move(n));
    return x;
}

MotivicClass MotivicClass::lefschetz(HalfInt exponent) {
    MotivicClass x;
    x.insert(Term{{}, exponent, {}}, 1);
    return x;
}

MotivicClass MotivicClass::atom_class(const Atom& a) {
    // The point class and the trivial one-point cover are the identity.
    if (a.name == "PT" || a.name == "MU1") return one();
    MotivicClass x;
    x.insert(Term{{TermAtom{a.name, a.mu_order}}, HalfInt{}, {}}, 1);
    return x;
}

MotivicClass MotivicClass::unit_class(const std::string& generator_name) {
    MotivicClass x;
    x.insert(Term{{}, HalfInt{}, {generator_name}}, 1);
    return x;
}

MotivicClass MotivicClass::from_term(Term t, Int coefficient) {
    if (!std::is_sorted(t.atoms.begin(), t.atoms.end()))
        throw std::invalid_argument("from_term: atoms must be sorted");
    if (!std::is_sorted(t.units.begin(), t.units.end()) ||
        std::adjacent_find(t.units.begin(), t.units.end()) != t.units.end())
        throw std::invalid_argument("from_term: units must be sorted and duplicate-free");
    int monodromic = 0;
    for (const auto& a : t.atoms)
        if (a.mu_order > 1) ++monodromic;
    if (monodromic > 1)
        throw std::invalid_argument("from_term: at most one monodromic atom per term");
    MotivicClass x;
    x.insert(std::move(t), std::move(coefficient));
    return x;
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass x = *this;
    for (auto& [t, c] : x.terms_) c = -c;
    return x;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
    for (const auto& [t, c] : o.terms_) insert(t, c);
    return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
    for (const auto& [t, c] : o.terms_) insert(t, -c);
    return *this;
}

MotivicClass MotivicClass::operator+(const MotivicClass& o) const {
    MotivicClass x = *this;
    x += o;
    return x;
}

MotivicClass MotivicClass::operator-(const MotivicClass& o) const {
    MotivicClass x = *this;
    x -= o;
    return x;
}

namespace {

std::vector<TermAtom> merge_atoms(const std::vector<TermAtom>& a, const std::vector<TermAtom>& b) {
    std::vector<TermAtom> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::string> xor_units(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

MotivicClass MotivicClass::smash(const MotivicClass& o) const {
    MotivicClass x;
    for (const auto& [ta, ca] : terms_) {
        for (const auto& [tb, cb] : o.terms_) {
            if (ta.monodromic() && tb.monodromic())
                throw UnsupportedSmash("cannot smash two classes with nontrivial monodromy");
            Term t;
            t.atoms = merge_atoms(ta.atoms, tb.atoms);
            t.lpow = ta.lpow + tb.lpow;
            t.units = xor_units(ta.units, tb.units);
            x.insert(std::move(t), ca * cb);
        }
    }
    return x;
}

MotivicClass pow_class(const MotivicClass& x, long long e) {
    MotivicClass out = MotivicClass::one();
    for (long long i = 0; i < e; ++i) out = out.smash(x);
    return out;
}

// ---------------------------------------------------------------------------
// Specializations

MotivicClass upsilon(const BundleGenerator& g, const MotivicClass& base) {
    for (const auto& [t, c] : base.terms())
        if (!t.units.empty())
            throw std::invalid_argument("upsilon: base class must carry no units");
    return base.smash(MotivicClass::unit_class(g.name));
}

Int euler_specialize(const MotivicClass& x, const AtomTable& table) {
    Int total = 0;
    for (const auto& [t, c] : x.terms()) {
        Int v = c;
        if (t.lpow.twice % 2 != 0) v = -v; // L^{p/2} -> (-1)^p
        for (const auto& a : t.atoms) {
            const Atom* atom = table.find_atom(a.name);
            if (!atom)
                throw SpecializationError("euler: atom '" + a.name + "' not in table");
            v *= atom->euler;
        }
        for (const auto& u : t.units) {
            const BundleGenerator* g = table.find_bundle(u);
            if (!g)
                throw SpecializationError("euler: bundle '" + u + "' not in table");
            v *= g->euler_sign;
        }
        total += v;
    }
    return total;
}

LaurentQ weight_specialize(const MotivicClass& x, const AtomTable& table) {
    LaurentQ total;
    for (const auto& [t, c] : x.terms()) {
        if (!t.units.empty())
            throw SpecializationError("weight: class carries a Z2-bundle unit");
        LaurentQ v = LaurentQ::constant(c) * LaurentQ::q_power(t.lpow.twice);
        for (const auto& a : t.atoms) {
            const Atom* atom = table.find_atom(a.name);
            if (!atom)
                throw SpecializationError("weight: atom '" + a.name + "' not in table");
            if (atom->mu_order > 1)
                throw SpecializationError("weight: atom '" + a.name + "' carries monodromy");
            if (!atom->poincare)
                throw SpecializationError("weight: atom '" + a.name + "' has no poincare polynomial");
            v = v * *atom->poincare;
        }
        total += v;
    }
    return total;
}

MotivicClass rewrite_mu2(const MotivicClass& x) {
    MotivicClass out;
    const MotivicClass root = MotivicClass::one() - MotivicClass::lefschetz(HalfInt::halves(1));
    for (const auto& [t, c] : x.terms()) {
        auto it = std::find_if(t.atoms.begin(), t.atoms.end(),
                               [](const TermAtom& a) { return a.name == "MU2"; });
        if (it == t.atoms.end()) {
            out += MotivicClass::from_term(t, c);
            continue;
        }
        Term rest = t;
        rest.atoms.erase(rest.atoms.begin() + (it - t.atoms.begin()));
        out += MotivicClass::from_term(rest, c).smash(root);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string print_canonical(const MotivicClass& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : x.terms()) {
        std::vector<std::string> parts;
        if (t.lpow.twice != 0) parts.push_back(power_string("L", t.lpow.twice));
        for (const auto& a : t.atoms) parts.push_back("[" + a.name + "]");
        for (const auto& u : t.units) parts.push_back("U(" + u + ")");

        Int mag = c < 0 ? Int(-c) : c;
        std::string body;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) body += "*";
            body += parts[i];
        }
        std::string piece;
        if (body.empty())
            piece = mag.str();
        else if (mag == 1)
            piece = body;
        else
            piece = mag.str() + "*" + body;
        append_signed(os, first, c < 0, piece);
        first = false;
    }
    return os.str();
}

} // namespace motivic
